"""The three counters and their certificates.

* ``stock_count``       first m where phi_stock(F', m) holds, estimate 2^(v/c)
* ``equal_cells_count`` first m where phi_Cells(F, m) holds, estimate ell * 2^m
* ``af_count``          holes phase for c_low, stock phase for c_high, estimate 2^(c_high/c)

F' is c = ceil(log2 n) disjoint copies of F.  All loops stop at the first success.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional

from . import __version__
from .encoder import build_cells, build_holes, build_stock
from .formula import CnfFormula, copies_for, enumerate_solutions, make_copies
from .gf2hash import HashTuple, hash_from_dict, hash_to_dict
from .oracle import (EXACT, EXTERNAL, RANDOMIZED, CallLedger, Oracle, OracleAnswer,
                     OracleConfig, OracleIncomplete)

ALGORITHMS = ("stock", "cells", "af")
MAX_GAP = 7
RETRY_FACTOR = 4


class CertificateError(ValueError):
    pass


class RetryExhausted(OracleIncomplete):
    """AFCounter still saw c_high - c_low > 7 after retrying with more trials."""

    def __init__(self, message: str, result: "CountResult"):
        super().__init__(message)
        self.result = result


# --- estimates ------------------------------------------------------------------

@dataclass(frozen=True)
class Estimate:
    """Either 2^(num/den) (form "pow2") or the rational num/den (form "exact")."""

    num: int
    den: int
    form: str = "pow2"
    copies: int = 1

    def __post_init__(self):
        if self.den < 1:
            raise ValueError("denominator must be positive")
        if self.form not in ("pow2", "exact"):
            raise ValueError(f"unknown estimate form {self.form!r}")

    @classmethod
    def pow2(cls, num: int, copies: int) -> "Estimate":
        return cls(num, copies, "pow2", copies)

    @classmethod
    def exact(cls, value: int, copies: int = 1) -> "Estimate":
        return cls(value, 1, "exact", copies)

    @property
    def decimal(self) -> str:
        with localcontext() as ctx:
            ctx.prec = 60
            if self.form == "exact":
                val = Decimal(self.num) / Decimal(self.den)
            else:
                val = Decimal(2) ** (Decimal(self.num) / Decimal(self.den))
            return str(val.quantize(Decimal("0.000001")))

    def __float__(self):
        return self.num / self.den if self.form == "exact" else 2.0 ** (self.num / self.den)

    def compare(self, x) -> int:
        """Sign of (estimate - x) for a rational x, in exact integer arithmetic."""
        x = Fraction(x)
        if self.form == "exact":
            d = Fraction(self.num, self.den) - x
            return (d > 0) - (d < 0)
        if x <= 0:
            return 1
        # 2^(num/den) vs p/q  <=>  2^num * q^den vs p^den
        lhs = Fraction(2) ** self.num * x.denominator ** self.den
        rhs = Fraction(x.numerator) ** self.den
        return (lhs > rhs) - (lhs < rhs)

    def within(self, count: int, factor=16) -> bool:
        """count/factor <= estimate <= factor*count."""
        if count == 0:
            return self.form == "exact" and self.num == 0
        return self.compare(Fraction(count) / factor) >= 0 and self.compare(Fraction(count) * factor) <= 0

    def to_dict(self) -> dict:
        return {"num": self.num, "den": self.den, "decimal": self.decimal, "form": self.form}

    def __str__(self):
        if self.form == "exact":
            return self.decimal if self.den != 1 else str(self.num)
        return f"2^({self.num}/{self.den})"


# --- certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    algorithm: str
    n: int
    copies: int
    formula_digest: str
    estimate: Estimate
    oracle_mode: str
    seed: int
    trials: int
    version: str

    def params(self) -> dict:
        return {}

    def hash_entries(self) -> list[tuple[str, object]]:
        return []

    def arity_errors(self) -> list[str]:
        return []


@dataclass(frozen=True)
class StockCert(Certificate):
    v: int = 0
    hashes: Optional[HashTuple] = None

    def params(self):
        return {"v": self.v}

    def hash_entries(self):
        return [("stock", h) for h in (self.hashes or ())]

    def arity_errors(self):
        got = len(self.hashes or ())
        return [] if got == self.v else [f"{got} stock hashes for v={self.v}"]


@dataclass(frozen=True)
class CellsCert(Certificate):
    m: int = 0
    ell: int = 0
    u: int = 0
    hashes: Optional[HashTuple] = None

    def params(self):
        return {"m": self.m, "ell": self.ell, "u": self.u}

    def hash_entries(self):
        return [("cells", h) for h in (self.hashes or ())]

    def arity_errors(self):
        got = len(self.hashes or ())
        return [] if got == 1 else [f"{got} cell hashes, expected 1"]


@dataclass(frozen=True)
class AFCert(Certificate):
    c_low: int = 0
    c_high: int = 0
    hashes_stock: Optional[HashTuple] = None
    hashes_holes: Optional[HashTuple] = None

    def params(self):
        return {"c_low": self.c_low, "c_high": self.c_high}

    def hash_entries(self):
        return ([("stock", h) for h in (self.hashes_stock or ())]
                + [("holes", h) for h in (self.hashes_holes or ())])

    def arity_errors(self):
        errs = []
        got = len(self.hashes_stock or ())
        if got != self.c_high:
            errs.append(f"{got} stock hashes for c_high={self.c_high}")
        want = self.c_low + 1 if self.c_low > 0 else 0
        got = len(self.hashes_holes or ())
        if got != want:
            errs.append(f"{got} holes hashes for c_low={self.c_low}")
        return errs


def certificate_to_dict(cert: Certificate) -> dict:
    hashes = []
    for role, h in cert.hash_entries():
        d = hash_to_dict(h)
        d["role"] = role
        hashes.append(d)
    return {
        "algorithm": cert.algorithm,
        "n": cert.n,
        "copies": cert.copies,
        "formula_digest": cert.formula_digest,
        "estimate": cert.estimate.to_dict(),
        "params": cert.params(),
        "hashes": hashes,
        "oracle": {"mode": cert.oracle_mode, "seed": cert.seed, "trials": cert.trials},
        "version": cert.version,
    }


def write_certificate(cert: Certificate) -> bytes:
    return (json.dumps(certificate_to_dict(cert), indent=2) + "\n").encode()


def _req(d: dict, key: str, kind):
    if key not in d:
        raise CertificateError(f"missing field {key!r}")
    val = d[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise CertificateError(f"field {key!r} must be an integer")
    if kind is not int and not isinstance(val, kind):
        raise CertificateError(f"field {key!r} must be {kind.__name__}")
    return val


def _tuple(entries: list) -> Optional[HashTuple]:
    return HashTuple(tuple(entries)) if entries else None


def read_certificate(data, formula: Optional[CnfFormula] = None) -> Certificate:
    """Parse certificate JSON; with ``formula``, also require a matching digest.

    Arity is not enforced here so that auditors can reject malformed certificates
    with a reason instead of failing to load them.
    """
    try:
        d = json.loads(data.decode() if isinstance(data, (bytes, bytearray)) else data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise CertificateError(f"not valid JSON: {e}") from None
    if not isinstance(d, dict):
        raise CertificateError("certificate must be a JSON object")
    alg = _req(d, "algorithm", str)
    if alg not in ALGORITHMS:
        raise CertificateError(f"unknown algorithm {alg!r}")
    est = _req(d, "estimate", dict)
    try:
        estimate = Estimate(_req(est, "num", int), _req(est, "den", int), est.get("form", "pow2"),
                            _req(d, "copies", int))
    except ValueError as e:
        raise CertificateError(str(e)) from None
    params = _req(d, "params", dict)
    oracle = _req(d, "oracle", dict)
    by_role: dict[str, list] = {"stock": [], "holes": [], "cells": []}
    for entry in _req(d, "hashes", list):
        if not isinstance(entry, dict) or entry.get("role") not in by_role:
            raise CertificateError("hash entries need a role of stock, holes or cells")
        try:
            by_role[entry["role"]].append(hash_from_dict(entry))
        except (KeyError, ValueError, TypeError) as e:
            raise CertificateError(f"bad hash entry: {e}") from None
    common = dict(algorithm=alg, n=_req(d, "n", int), copies=_req(d, "copies", int),
                  formula_digest=_req(d, "formula_digest", str), estimate=estimate,
                  oracle_mode=_req(oracle, "mode", str), seed=_req(oracle, "seed", int),
                  trials=_req(oracle, "trials", int), version=_req(d, "version", str))
    try:
        if alg == "stock":
            cert = StockCert(**common, v=_req(params, "v", int), hashes=_tuple(by_role["stock"]))
        elif alg == "cells":
            cert = CellsCert(**common, m=_req(params, "m", int), ell=_req(params, "ell", int),
                             u=_req(params, "u", int), hashes=_tuple(by_role["cells"]))
        else:
            cert = AFCert(**common, c_low=_req(params, "c_low", int), c_high=_req(params, "c_high", int),
                          hashes_stock=_tuple(by_role["stock"]), hashes_holes=_tuple(by_role["holes"]))
    except ValueError as e:
        raise CertificateError(str(e)) from None
    if formula is not None and formula.digest() != cert.formula_digest:
        raise CertificateError("formula digest mismatch")
    return cert


# --- results --------------------------------------------------------------------

@dataclass
class CountResult:
    algorithm: str
    estimate: Estimate
    certificate: Optional[Certificate]
    path: str  # loop, direct or unsat
    mode: str
    ledger: CallLedger
    retries: int = 0
    elapsed: float = 0.0
    trace: list[tuple[str, int, bool]] = field(default_factory=list)

    @property
    def queries(self) -> int:
        return self.ledger.count()


def _worst_mode(answers: list[OracleAnswer]) -> str:
    modes = {a.mode for a in answers}
    if EXTERNAL in modes:
        return EXTERNAL
    return RANDOMIZED if RANDOMIZED in modes else EXACT


def _is_unsat(f: CnfFormula) -> bool:
    return f.unsat or len(enumerate_solutions(f, cap=1)) == 0


def _common(f: CnfFormula, alg: str, copies: int, estimate: Estimate, mode: str, cfg: OracleConfig) -> dict:
    return dict(algorithm=alg, n=f.num_vars, copies=copies, formula_digest=f.digest(),
                estimate=estimate, oracle_mode=mode, seed=cfg.seed, trials=cfg.trials,
                version=__version__)


def _zero(alg: str, f: CnfFormula, copies: int, ledger: CallLedger, t0: float) -> CountResult:
    return CountResult(alg, Estimate.exact(0, copies), None, "unsat", EXACT, ledger,
                       elapsed=time.perf_counter() - t0)


def stock_count(f: CnfFormula, config: Optional[OracleConfig] = None,
                oracle: Optional[Oracle] = None) -> CountResult:
    t0 = time.perf_counter()
    oracle = oracle or Oracle(config)
    cfg = oracle.config
    if f.num_vars < 2:
        raise ValueError("stock_count needs n >= 2")
    c = copies_for(f.num_vars)
    if _is_unsat(f):
        return _zero("stock", f, c, oracle.ledger, t0)
    fp = make_copies(f, c)
    answers, trace = [], []
    for m in range(1, fp.num_vars + 1):
        ans = oracle.two_qbf_check(build_stock(fp, m))
        answers.append(ans)
        trace.append(("stock", m, ans.ret))
        if ans.ret:
            break
    else:
        raise OracleIncomplete(f"phi_stock never held for m <= {fp.num_vars}")
    v = m
    est = Estimate.pow2(v, c)
    mode = _worst_mode(answers)
    cert = StockCert(**_common(f, "stock", c, est, mode, cfg), v=v, hashes=ans.witness)
    return CountResult("stock", est, cert, "loop", mode, oracle.ledger,
                       elapsed=time.perf_counter() - t0, trace=trace)


def default_cells_params(n: int) -> tuple[int, int]:
    return 1024 * n, 16384 * n


def equal_cells_count(f: CnfFormula, config: Optional[OracleConfig] = None,
                      ell_base: Optional[int] = None, oracle: Optional[Oracle] = None) -> CountResult:
    """``ell_base`` replaces ell = 1024n by the given value; u stays 16 * ell."""
    t0 = time.perf_counter()
    oracle = oracle or Oracle(config)
    cfg = oracle.config
    n = f.num_vars
    ell, u = default_cells_params(n) if ell_base is None else (ell_base, 16 * ell_base)
    if ell < 1:
        raise ValueError("ell must be positive")
    answers, trace = [], []
    for m in range(1, n + 1):
        ans = oracle.three_qbf_check(build_cells(f, m, ell, u))
        answers.append(ans)
        trace.append(("cells", m, ans.ret))
        if ans.ret:
            est = Estimate.exact(ell * (1 << m))
            mode = _worst_mode(answers)
            cert = CellsCert(**_common(f, "cells", 1, est, mode, cfg), m=m, ell=ell, u=u,
                             hashes=ans.witness)
            return CountResult("cells", est, cert, "loop", mode, oracle.ledger,
                               elapsed=time.perf_counter() - t0, trace=trace)
    sols = enumerate_solutions(f, cap=u + 1)
    if len(sols) > u:
        raise OracleIncomplete(f"no cells witness found and more than u={u} solutions")
    path = "direct" if len(sols) else "unsat"
    return CountResult("cells", Estimate.exact(len(sols)), None, path, EXACT, oracle.ledger,
                       elapsed=time.perf_counter() - t0, trace=trace)


def _af_attempt(fp: CnfFormula, oracle: Oracle, trace: list):
    n_prime = fp.num_vars
    answers = []
    c_low, holes_w = n_prime, None
    for m in range(1, n_prime + 1):
        ans = oracle.three_qbf_check(build_holes(fp, m))
        answers.append(ans)
        trace.append(("holes", m, ans.ret))
        if not ans.ret:
            c_low = m - 1
            break
        holes_w = ans.witness
    if c_low == 0:
        holes_w = None
    c_high, stock_w = None, None
    for m in range(1, n_prime + 1):
        ans = oracle.two_qbf_check(build_stock(fp, m))
        answers.append(ans)
        trace.append(("stock", m, ans.ret))
        if ans.ret:
            c_high, stock_w = m, ans.witness
            break
    if c_high is None:
        raise OracleIncomplete(f"phi_stock never held for m <= {n_prime}")
    return c_low, holes_w, c_high, stock_w, answers


def af_count(f: CnfFormula, config: Optional[OracleConfig] = None,
             oracle: Optional[Oracle] = None) -> CountResult:
    t0 = time.perf_counter()
    oracle = oracle or Oracle(config)
    if f.num_vars < 2:
        raise ValueError("af_count needs n >= 2")
    c = copies_for(f.num_vars)
    if _is_unsat(f):
        return _zero("af", f, c, oracle.ledger, t0)
    fp = make_copies(f, c)
    trace: list = []
    c_low, holes_w, c_high, stock_w, answers = _af_attempt(fp, oracle, trace)
    retries = 0
    if c_high - c_low > MAX_GAP:
        retries = 1
        oracle = oracle.with_config(oracle.config.with_trials(oracle.config.trials * RETRY_FACTOR))
        c_low, holes_w, c_high, stock_w, answers = _af_attempt(fp, oracle, trace)
    cfg = oracle.config
    est = Estimate.pow2(c_high, c)
    mode = _worst_mode(answers)
    cert = AFCert(**_common(f, "af", c, est, mode, cfg), c_low=c_low, c_high=c_high,
                  hashes_stock=stock_w, hashes_holes=holes_w)
    result = CountResult("af", est, cert, "loop", mode, oracle.ledger, retries,
                         time.perf_counter() - t0, trace)
    if c_high - c_low > MAX_GAP:
        raise RetryExhausted(f"c_high - c_low = {c_high - c_low} > {MAX_GAP} after retry", result)
    return result


def count(f: CnfFormula, algorithm: str, config: Optional[OracleConfig] = None, **kw) -> CountResult:
    if algorithm == "stock":
        return stock_count(f, config, **kw)
    if algorithm == "cells":
        return equal_cells_count(f, config, **kw)
    if algorithm == "af":
        return af_count(f, config, **kw)
    raise ValueError(f"unknown algorithm {algorithm!r}")
