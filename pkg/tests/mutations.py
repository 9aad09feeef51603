"""Tampered certificates for the audit mutation suites.

Each builder returns (label, formula to audit against, certificate).  Where a
mutation must provably break the certified fact, the tamper is found by search
and checked against the exact cover or isolation test before it is returned.
"""

import dataclasses
import itertools
import json

import numpy as np

from auditcount.counters import Estimate, equal_cells_count, write_certificate
from auditcount.formula import CnfFormula, enumerate_solutions, make_copies
from auditcount.gf2hash import HashFunction, HashTuple, sample_tuple
from auditcount.oracle import cells_holds, holes_holds, stock_holds

import pipeline


def reshape(h: HashFunction, m: int) -> HashFunction:
    return HashFunction(h.n, m, h.k, h.coeffs)


def flips(t: HashTuple):
    """Every tuple that differs from t in exactly one coefficient bit."""
    for i, h in enumerate(t):
        for j in range(h.k):
            for b in range(h.w):
                coeffs = list(h.coeffs)
                coeffs[j] ^= 1 << b
                new = list(t)
                new[i] = HashFunction(h.n, h.m, h.k, tuple(coeffs))
                yield HashTuple(tuple(new))


def sols_prime(name: str):
    e = pipeline.corpus_by_name()[name]
    cert = pipeline.af_result(name).certificate
    return e.formula, enumerate_solutions(make_copies(e.formula, cert.copies)).solutions


def edited(f: CnfFormula) -> CnfFormula:
    clauses = list(f.clauses) or [(1,)]
    first = clauses[0]
    clauses[0] = (-first[0],) + first[1:]
    return CnfFormula(f.num_vars, tuple(clauses))


def largest_refuted(count: int) -> int:
    """Largest m >= 1 with m * 2^m < count: phi_stock(m) is false for every hash tuple."""
    m = 1
    while (m + 1) * 2 ** (m + 1) < count:
        m += 1
    return m


def af_mutations():
    out = []
    get = lambda name: (pipeline.corpus_by_name()[name].formula, pipeline.af_result(name).certificate)  # noqa: E731
    rep = dataclasses.replace

    # gap breaks: c_low lowered by 8, holes hashes cut down to the smaller cube
    for name in ("r3_n05_22", "r3_n10_20"):
        f, c = get(name)
        lo = c.c_low - 8
        holes = HashTuple(tuple(reshape(h, lo) for h in c.hashes_holes[:lo + 1]))
        out.append((f"gap: c_low lowered by 8 ({name})", f, rep(c, c_low=lo, hashes_holes=holes)))

    # c_high inflated by 8: refined hashes still isolate, so only the gap rule can object
    for name in ("chain_n06", "amo_n07"):
        f, c = get(name)
        hi = c.c_high + 8
        stock = [reshape(h, hi) for h in c.hashes_stock] + [HashFunction(c.hashes_stock[0].n, hi, 2, (0, 0))] * 8
        out.append((f"c_high inflated by 8 ({name})", f,
                    rep(c, c_high=hi, hashes_stock=HashTuple(tuple(stock)), estimate=Estimate.pow2(hi, c.copies))))

    # c_high lowered until c_high * 2^c_high < |sol(F')|: no tuple can pass the poscheck
    for name in ("taut_n04", "parity_n06"):
        f, c = get(name)
        _, sols = sols_prime(name)
        hi = largest_refuted(len(sols))
        stock = HashTuple(tuple(reshape(h, hi) for h in c.hashes_stock[:hi]))
        out.append((f"c_high below the isolation bound ({name})", f,
                    rep(c, c_high=hi, hashes_stock=stock, estimate=Estimate.pow2(hi, c.copies))))

    # one-bit flips in a holes hash that leave a cell uncovered (the tautology's tuple
    # is redundant enough that no single flip breaks it, so it is not used here)
    for name in ("chain_n06", "amo_n07"):
        f, c = get(name)
        _, sols = sols_prime(name)
        bad = next(t for t in flips(c.hashes_holes) if not holes_holds(t, sols, c.c_low))
        out.append((f"holes bit flip breaks cover ({name})", f, rep(c, hashes_holes=bad)))

    # a one-bit flip in a stock hash that un-isolates some solution
    f, c = get("r3_n10_20")
    _, sols = sols_prime("r3_n10_20")
    bad = next(t for t in flips(c.hashes_stock) if not stock_holds(t, sols))
    out.append(("stock bit flip breaks isolation (r3_n10_20)", f, rep(c, hashes_stock=bad)))

    # holes hashes replaced by a fresh random tuple that misses a cell
    f, c = get("amo_n07")
    _, sols = sols_prime("amo_n07")
    n_prime = c.hashes_holes[0].n
    fresh = next(t for s in itertools.count()
                 for t in [sample_tuple(c.c_low + 1, n_prime, c.c_low, 2, np.random.default_rng([99, s]))]
                 if not holes_holds(t, sols, c.c_low))
    out.append(("holes hashes replaced by a fresh tuple (amo_n07)", f, rep(c, hashes_holes=fresh)))

    # digest mismatches
    f, c = get("units_n05")
    out.append(("formula edited after counting (units_n05)", edited(f), c))
    f, c = get("r3_n10_20")
    out.append(("digest field altered (r3_n10_20)", f, rep(c, formula_digest="sha256:" + "0" * 64)))

    # arity breaks
    f, c = get("taut_n04")
    out.append(("arity: one holes hash dropped (taut_n04)", f,
                rep(c, hashes_holes=HashTuple(tuple(c.hashes_holes[:-1])))))
    f, c = get("chain_n06")
    out.append(("arity: one stock hash dropped (chain_n06)", f,
                rep(c, hashes_stock=HashTuple(tuple(c.hashes_stock[:-1])))))

    # estimate that does not follow from c_high
    f, c = get("amo_n07")
    out.append(("estimate inconsistent with c_high (amo_n07)", f,
                rep(c, estimate=Estimate.pow2(c.c_high - 3, c.copies))))
    assert len(out) == 15
    return out


def stock_mutations():
    out = []
    rep = dataclasses.replace
    get = lambda name: (pipeline.corpus_by_name()[name].formula, pipeline.stock_result(name).certificate)  # noqa: E731

    f, c = get("taut_n04")
    v = c.v - 1
    out.append(("v decremented, hashes truncated", f,
                rep(c, v=v, hashes=HashTuple(tuple(reshape(h, v) for h in c.hashes[:v])),
                    estimate=Estimate.pow2(v, c.copies))))
    f, c = get("r3_n05_08")
    out.append(("hashes truncated", f, rep(c, hashes=HashTuple(tuple(c.hashes[:-1])))))
    out.append(("formula edited", edited(f), c))
    out.append(("estimate inconsistent with v", f, rep(c, estimate=Estimate.pow2(c.v + 1, c.copies))))
    sols = enumerate_solutions(make_copies(f, c.copies)).solutions
    bad = next(t for t in flips(c.hashes) if not stock_holds(t, sols))
    out.append(("bit flip breaks isolation", f, rep(c, hashes=bad)))
    # one step later phi_stock still holds, so the negcheck at the old v must object
    f, c = get("chain_n06")
    v = c.v + 1
    longer = [reshape(h, v) for h in c.hashes] + [HashFunction(c.hashes[0].n, v, 2, (0, 0))]
    out.append(("v incremented, hashes extended", f,
                rep(c, v=v, hashes=HashTuple(tuple(longer)), estimate=Estimate.pow2(v, c.copies))))
    return out


def cells_base():
    f = CnfFormula.from_clauses(5, [], name="taut5")
    return f, equal_cells_count(f, ell_base=2).certificate


def cells_mutations():
    out = []
    rep = dataclasses.replace
    f, c = cells_base()
    sols = enumerate_solutions(f).solutions
    # every single flip of the tautology's hash stays balanced, so zero it instead:
    # all solutions then land in one cell and the others fall below ell
    h = c.hashes[0]
    zero = HashTuple((HashFunction(h.n, h.m, h.k, (0,) * h.k),))
    assert not cells_holds(zero[0], sols, c.m, c.ell, c.u)
    out.append(("hash zeroed breaks balance", f, rep(c, hashes=zero)))
    out.append(("formula edited", edited(f), c))
    m = c.m + 1
    out.append(("m moved with the hash", f,
                rep(c, m=m, hashes=HashTuple((reshape(c.hashes[0], m),)))))
    out.append(("estimate doubled", f, rep(c, estimate=Estimate.exact(c.ell << (c.m + 1)))))
    out.append(("ell raised", f, rep(c, ell=c.ell + 1)))
    out.append(("u below the fullest cell", f, rep(c, u=c.ell + 1, ell=1,
                                                      estimate=Estimate.exact(1 << c.m))))
    out.append(("hash removed", f, rep(c, hashes=None)))
    return out


def malformed_bytes():
    """Certificates that should not even load."""
    data = json.loads(write_certificate(pipeline.af_result("taut_n04").certificate))
    data["hashes"][0]["modulus_hex"] = "3"
    bad_modulus = json.dumps(data).encode()
    return [("modulus altered", bad_modulus),
            ("truncated", write_certificate(pipeline.af_result("taut_n04").certificate)[:40])]
