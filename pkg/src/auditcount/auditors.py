"""Auditors for the three counters, and audit-complexity measurement.

An audit rebuilds F' from F, checks the certificate's bookkeeping (digest,
arities, estimate), substitutes the certified hashes and decides what remains.
``query_vars`` is the budget of the existential-shaped part of the audit query,
the part that needs a Sigma_2 oracle; the universal-only poscheck is reported
separately as ``conp_vars`` and the single combined query as ``combined_vars``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .counters import (MAX_GAP, AFCert, CellsCert, Certificate, Estimate, StockCert,
                       default_cells_params)
from .encoder import (VarBudget, build_cells, build_count_audit, build_holes, build_stock,
                      build_stock_audit, build_stock_neg)
from .formula import CnfFormula, copies_for, make_copies
from .gf2hash import HashFunction, HashTuple
from .oracle import EXACT, EXTERNAL, RANDOMIZED, CallLedger, Oracle, OracleConfig

VERIFIED = "Verified"
REJECTED = "Rejected"


@dataclass
class AuditReport:
    algorithm: str
    verdict: str
    reason: Optional[str] = None
    checks: dict = field(default_factory=dict)
    query_vars: Optional[VarBudget] = None
    conp_vars: int = 0
    combined_vars: int = 0
    mode: str = EXACT
    implied_bounds: Optional[tuple[Fraction, Fraction]] = None
    copies: int = 1
    ledger: CallLedger = field(default_factory=CallLedger)
    elapsed: float = 0.0

    @property
    def verified(self) -> bool:
        return self.verdict == VERIFIED

    def to_dict(self) -> dict:
        qv = self.query_vars
        return {
            "algorithm": self.algorithm,
            "verdict": self.verdict,
            "reason": self.reason,
            "checks": self.checks,
            "query_vars": None if qv is None else {
                "family": qv.family, "m": qv.m, "n": qv.n, "hash_vars": qv.hash_vars,
                "cell_vars": qv.cell_vars, "assign_vars": qv.assign_vars, "total": qv.total},
            "conp_vars": self.conp_vars,
            "combined_vars": self.combined_vars,
            "mode": self.mode,
            "copies": self.copies,
            "implied_bounds": None if self.implied_bounds is None
            else [str(b) for b in self.implied_bounds],
            "oracle_calls": self.ledger.to_list(),
        }

    def to_json(self) -> bytes:
        # elapsed time stays out so reports are reproducible byte for byte
        return (json.dumps(self.to_dict(), indent=2) + "\n").encode()


class _Reject(Exception):
    def __init__(self, reason: str):
        self.reason = reason


def _bookkeeping(f: CnfFormula, cert: Certificate, kind: type, copies: Optional[int]):
    if not isinstance(cert, kind):
        raise _Reject(f"variant mismatch: expected {kind.__name__}, got {type(cert).__name__}")
    if cert.formula_digest != f.digest():
        raise _Reject("digest mismatch")
    if cert.n != f.num_vars:
        raise _Reject(f"certificate n={cert.n} but formula has {f.num_vars} variables")
    if copies is not None and cert.copies != copies:
        raise _Reject(f"copies={cert.copies}, expected {copies}")
    errs = cert.arity_errors()
    if errs:
        raise _Reject("arity: " + "; ".join(errs))


def _shape(hashes: Optional[HashTuple], n: int, m: int, k: int, what: str):
    for h in hashes or ():
        if (h.n, h.m, h.k) != (n, m, k):
            raise _Reject(f"{what} hash shape {(h.n, h.m, h.k)} != {(n, m, k)}")


def _mode(oracle: Oracle, start: int) -> str:
    modes = {c.mode for c in oracle.ledger.calls[start:]}
    if EXTERNAL in modes:
        return EXTERNAL
    return RANDOMIZED if RANDOMIZED in modes else EXACT


def _finish(report: AuditReport, oracle: Oracle, start: int, t0: float) -> AuditReport:
    report.ledger = CallLedger(oracle.ledger.calls[start:])
    report.mode = _mode(oracle, start)
    report.elapsed = time.perf_counter() - t0
    return report


def _oracle(config, oracle) -> Oracle:
    return oracle or Oracle(config)


def stock_audit_bounds(v: int) -> tuple[Fraction, Fraction]:
    """Bounds on |sol(F')| from phi_stock(v) true and phi_stock(v-1) false."""
    # false at v-1 rules out |sol| <= 2^(v-3); true at v gives |sol| <= v * 2^v
    low = (1 << (v - 3)) + 1 if v >= 3 else 1
    return Fraction(low), Fraction(v * (1 << v))


def af_audit_bounds(c_low: int, c_high: int) -> tuple[Fraction, Fraction]:
    return Fraction(1 << c_low, c_low + 1), Fraction(c_high * (1 << c_high))


def stock_audit(f: CnfFormula, cert: Certificate, config: Optional[OracleConfig] = None,
                oracle: Optional[Oracle] = None) -> AuditReport:
    t0 = time.perf_counter()
    oracle = _oracle(config, oracle)
    start = len(oracle.ledger.calls)
    report = AuditReport("stock", REJECTED)
    try:
        c = copies_for(f.num_vars)
        report.copies = c
        _bookkeeping(f, cert, StockCert, c)
        fp = make_copies(f, c)
        v = cert.v
        if not 1 <= v <= fp.num_vars:
            raise _Reject(f"v={v} outside [1, {fp.num_vars}]")
        if cert.estimate != Estimate.pow2(v, c):
            raise _Reject("inconsistent-estimate")
        _shape(cert.hashes, fp.num_vars, v, 2, "stock")
        pos_q = build_stock(fp, v, cert.hashes)
        neg_q = build_stock_neg(fp, v - 1)
        report.query_vars = neg_q.budget
        report.conp_vars = pos_q.budget.total
        report.combined_vars = build_stock_audit(fp, v, cert.hashes).budget.total
        if oracle.config.backend == "external":
            ok = oracle.two_qbf_check(build_stock_audit(fp, v, cert.hashes)).ret
            report.checks["combined"] = ok
            if not ok:
                raise _Reject("combined query false")
        else:
            pos = oracle.conp_check(pos_q)
            report.checks["poscheck"] = pos
            if not pos:
                raise _Reject("poscheck failed: some solution is not isolated")
            neg = oracle.two_qbf_check(neg_q).ret
            report.checks["negcheck"] = neg
            if not neg:
                raise _Reject(f"negcheck failed: phi_stock holds at v-1={v - 1}")
        report.implied_bounds = stock_audit_bounds(v)
        report.verdict = VERIFIED
    except _Reject as r:
        report.reason = r.reason
    return _finish(report, oracle, start, t0)


def _floor_log2(x: Fraction) -> int:
    """Largest k with 2^k <= x, for x > 0."""
    k = x.numerator.bit_length() - x.denominator.bit_length()
    while Fraction(2) ** k > x:
        k -= 1
    while Fraction(2) ** (k + 1) <= x:
        k += 1
    return k


def cells_exit_m(estimate: Estimate, n: int, ell: int, u: int) -> Optional[int]:
    """Recover m from the estimate; None when the estimate is not of the form ell * 2^m."""
    if estimate.form != "exact" or estimate.num <= 0:
        return None
    value = Fraction(estimate.num, estimate.den)
    if (ell, u) == default_cells_params(n):
        return _floor_log2(value / n) - 10
    ratio = value / ell
    if ratio.denominator != 1 or ratio.numerator & (ratio.numerator - 1):
        return None
    return ratio.numerator.bit_length() - 1


def equal_cells_audit(f: CnfFormula, cert: Certificate, config: Optional[OracleConfig] = None,
                      oracle: Optional[Oracle] = None) -> AuditReport:
    t0 = time.perf_counter()
    oracle = _oracle(config, oracle)
    start = len(oracle.ledger.calls)
    report = AuditReport("cells", REJECTED)
    try:
        _bookkeeping(f, cert, CellsCert, None)
        n = f.num_vars
        ell, u = cert.ell, cert.u
        if not 1 <= ell < u:
            raise _Reject(f"need 1 <= ell < u, got ell={ell}, u={u}")
        m = cells_exit_m(cert.estimate, n, ell, u)
        report.checks["m_recomputed"] = m
        if m is None or m != cert.m or cert.estimate != Estimate.exact(ell << m):
            raise _Reject("inconsistent-estimate")
        if not 1 <= m <= n:
            raise _Reject(f"m={m} outside [1, {n}]")
        _shape(cert.hashes, n, m, n, "cells")
        q = build_cells(f, m, ell, u, cert.hashes)
        report.query_vars = q.budget
        report.combined_vars = q.budget.total
        ok = oracle.two_qbf_check(q).ret
        report.checks["cellcheck"] = ok
        if not ok:
            raise _Reject("some cell holds fewer than ell or more than u solutions")
        report.implied_bounds = (Fraction(ell << m), Fraction(u << m))
        report.verdict = VERIFIED
    except _Reject as r:
        report.reason = r.reason
    return _finish(report, oracle, start, t0)


def count_audit(f: CnfFormula, cert: Certificate, config: Optional[OracleConfig] = None,
                oracle: Optional[Oracle] = None) -> AuditReport:
    t0 = time.perf_counter()
    oracle = _oracle(config, oracle)
    start = len(oracle.ledger.calls)
    report = AuditReport("af", REJECTED)
    try:
        c = copies_for(f.num_vars)
        report.copies = c
        _bookkeeping(f, cert, AFCert, c)
        fp = make_copies(f, c)
        n_prime = fp.num_vars
        c_low, c_high = cert.c_low, cert.c_high
        if not 1 <= c_high <= n_prime or not 0 <= c_low <= n_prime:
            raise _Reject(f"c_low={c_low}, c_high={c_high} outside [0, {n_prime}]")
        if cert.estimate != Estimate.pow2(c_high, c):
            raise _Reject("inconsistent-estimate")
        _shape(cert.hashes_stock, n_prime, c_high, 2, "stock")
        _shape(cert.hashes_holes, n_prime, c_low, 2, "holes")
        gap = c_high - c_low <= MAX_GAP
        report.checks["gap"] = gap
        pos_q = build_stock(fp, c_high, cert.hashes_stock)
        neg_q = build_holes(fp, c_low, cert.hashes_holes)
        report.query_vars = neg_q.budget
        report.conp_vars = pos_q.budget.total
        combined = build_count_audit(fp, c_low, c_high, cert.hashes_stock, cert.hashes_holes)
        report.combined_vars = combined.budget.total
        if not gap:
            raise _Reject(f"gap c_high - c_low = {c_high - c_low} > {MAX_GAP}")
        if oracle.config.backend == "external":
            ok = oracle.two_qbf_check(combined).ret
            report.checks["combined"] = ok
            if not ok:
                raise _Reject("combined query false")
        else:
            pos = oracle.conp_check(pos_q)
            report.checks["poscheck"] = pos
            if not pos:
                raise _Reject("poscheck failed: some solution is not isolated")
            neg = oracle.two_qbf_check(neg_q).ret
            report.checks["negcheck"] = neg
            if not neg:
                raise _Reject(f"negcheck failed: holes hashes miss a cell at c_low={c_low}")
        report.implied_bounds = af_audit_bounds(c_low, c_high)
        report.verdict = VERIFIED
    except _Reject as r:
        report.reason = r.reason
    return _finish(report, oracle, start, t0)


def audit(f: CnfFormula, cert: Certificate, config: Optional[OracleConfig] = None,
          oracle: Optional[Oracle] = None) -> AuditReport:
    fn = {"stock": stock_audit, "cells": equal_cells_audit, "af": count_audit}[cert.algorithm]
    return fn(f, cert, config, oracle)


# --- audit complexity -------------------------------------------------------------

CSV_HEADER = "algorithm,n,n_prime,exit_param,query_vars_total"


def closed_form(algorithm: str, n: int, exit_param: int, ell: int = 2, u: int = 32) -> int:
    """query_vars total of each audit as a function of n and the loop-exit parameter."""
    if algorithm == "stock":
        n_prime, v = copies_for(n) * n, exit_param
        return (v - 1) * 2 * max(n_prime, v - 1) + v * n_prime
    if algorithm == "cells":
        return exit_param + (u + 1 + ell) * n
    if algorithm == "af":
        return exit_param + copies_for(n) * n
    raise ValueError(f"unknown algorithm {algorithm!r}")


@dataclass(frozen=True)
class ComplexityRow:
    algorithm: str
    n: int
    n_prime: int
    exit_param: int
    query_vars_total: int

    def csv(self) -> str:
        return f"{self.algorithm},{self.n},{self.n_prime},{self.exit_param},{self.query_vars_total}"


def _zero_tuple(count: int, n: int, m: int) -> Optional[HashTuple]:
    if count == 0:
        return None
    return HashTuple(tuple(HashFunction(n, m, 2, (0, 0)) for _ in range(count)))


def measure_audit_complexity(formulas: Iterable[CnfFormula],
                             algorithms: Sequence[str] = ("af", "cells", "stock"),
                             ell_base: int = 2, exits: Optional[dict] = None) -> list[ComplexityRow]:
    """Budget of each audit's query, built from the actual encoder.

    By default every loop is taken to exit at its last iteration (v = c_low = n',
    m = n), the worst case for the audit.  ``exits`` maps (algorithm, n) to an
    explicit exit parameter instead.
    """
    ell, u = ell_base, 16 * ell_base
    rows = []
    for f in formulas:
        n = f.num_vars
        c = copies_for(n)
        fp = make_copies(f, c)
        n_prime = fp.num_vars
        for alg in algorithms:
            default = n if alg == "cells" else n_prime
            e = (exits or {}).get((alg, n), default)
            if alg == "stock":
                q = build_stock_neg(fp, e - 1)
            elif alg == "af":
                q = build_holes(fp, e, _zero_tuple(e + 1 if e else 0, n_prime, e))
            else:
                q = build_cells(f, e, ell, u, HashTuple((HashFunction(n, e, n, (0,) * n),)))
            rows.append(ComplexityRow(alg, n, n_prime, e, q.budget.total))
    return rows


def complexity_csv(rows: Iterable[ComplexityRow]) -> str:
    return "\n".join([CSV_HEADER] + [r.csv() for r in rows]) + "\n"


def complexity_violations(rows: Sequence[ComplexityRow], ell_base: int = 2) -> list[str]:
    """Closed-form mismatches, and ordering or ratio failures at n >= 8."""
    out = []
    for r in rows:
        want = closed_form(r.algorithm, r.n, r.exit_param, ell_base, 16 * ell_base)
        if r.query_vars_total != want:
            out.append(f"{r.algorithm} n={r.n}: measured {r.query_vars_total} != closed form {want}")
    by_n: dict[int, dict[str, int]] = {}
    for r in rows:
        by_n.setdefault(r.n, {})[r.algorithm] = r.query_vars_total
    for n, t in sorted(by_n.items()):
        if n < 8 or not {"af", "cells", "stock"} <= t.keys():
            continue
        if not t["af"] < t["cells"] < t["stock"]:
            out.append(f"n={n}: ordering af < cells < stock fails ({t['af']}, {t['cells']}, {t['stock']})")
        if t["stock"] * 4 < n * t["af"]:
            out.append(f"n={n}: stock/af ratio {t['stock'] / t['af']:.2f} < n/4")
    return out
