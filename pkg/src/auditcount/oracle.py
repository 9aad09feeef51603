"""Deciding the quantified formulas.

The semantic backend works on the solution set of F.  Substituted formulas are
decided exactly by bucketing solutions into cells.  Formulas that quantify hash
coefficients existentially are decided by witness search: exhaustive when the
relevant coefficient space is tiny, otherwise seeded random sampling.  A "true"
always comes with a witness that was checked exactly; a "false" is exact only
when a counting shortcut or exhaustive search settles it, and is labelled
``randomized-sound`` otherwise.

The external backend writes QDIMACS and runs a QBF solver.
"""

from __future__ import annotations

import itertools
import os
import subprocess
import tempfile
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Union

import numpy as np

from . import circuit as C
from .encoder import QuantifiedFormula, build_cells, build_holes, build_stock, to_qdimacs
from .formula import DEFAULT_ENUM_BUDGET, CnfFormula, enumerate_solutions, product_solutions
from .gf2hash import HashFunction, HashTuple, eval_hash_many, sample_tuple
from .gf2hash import columns as gf_columns

EXACT = "exact"
RANDOMIZED = "randomized-sound"
EXTERNAL = "external"

COMPLETE_REQUIRED = "complete-required"
RANDOMIZED_ACCEPTED = "randomized-accepted"

# distinct seed streams per search family; audit searches never reuse counter streams
FAMILY_CODES = {"stock": 1, "holes": 2, "cells": 3, "stock_neg": 4, "stock_pairwise": 5}

SOLVER_ENV = "AUDITCOUNT_SOLVER"


class OracleError(RuntimeError):
    pass


class OracleIncomplete(OracleError):
    """A randomized search failed and the configuration forbids uncertified "false"."""


class OracleDefect(OracleError):
    """A returned witness failed exact re-verification."""


class SolverNotFound(OracleError):
    pass


class SolverTimeout(OracleError):
    pass


class SolverOutputError(OracleError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    backend: str = "semantic"
    solver_path: Optional[str] = None
    seed: int = 0
    trials: int = 64
    false_policy: str = RANDOMIZED_ACCEPTED
    enum_budget: int = DEFAULT_ENUM_BUDGET
    exhaustive_bits: int = 12
    timeout_s: float = 60.0

    def __post_init__(self):
        if self.backend not in ("semantic", "external"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.false_policy not in (COMPLETE_REQUIRED, RANDOMIZED_ACCEPTED):
            raise ValueError(f"unknown false policy {self.false_policy!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")

    def with_trials(self, trials: int) -> "OracleConfig":
        return OracleConfig(self.backend, self.solver_path, self.seed, trials, self.false_policy,
                            self.enum_budget, self.exhaustive_bits, self.timeout_s)


@dataclass(frozen=True)
class OracleAnswer:
    ret: bool
    witness: Optional[HashTuple] = None
    mode: str = EXACT
    trials_used: int = 0


@dataclass(frozen=True)
class CallRecord:
    kind: str  # conp, 2qbf, 3qbf
    family: str
    m: int
    num_vars: int
    ret: bool
    mode: str


@dataclass
class CallLedger:
    calls: list[CallRecord] = field(default_factory=list)

    def record(self, kind: str, q: QuantifiedFormula, ans: OracleAnswer):
        self.calls.append(CallRecord(kind, q.family, q.m, q.num_vars, ans.ret, ans.mode))

    def count(self, kind: Optional[str] = None) -> int:
        return sum(1 for c in self.calls if kind is None or c.kind == kind)

    def to_list(self) -> list[dict]:
        return [c.__dict__.copy() for c in self.calls]


def seed_stream(seed: int, family: str, m: int, j: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, FAMILY_CODES[family], m, j]))


# --- exact checks over a solution set -----------------------------------------

class SolutionView:
    """Solutions of F, or of F' = c copies of a base formula kept in factored form.

    For F' the solutions are listed copy 0 slowest, and an affine hash
    a1 + a2*y splits into per-copy terms combined by an outer XOR, so cells are
    computed from the base solutions without touching every product point.
    """

    def __init__(self, values: Optional[np.ndarray] = None, base: Optional[np.ndarray] = None,
                 base_n: int = 0, copies: int = 1):
        self._values = values
        self.base = base
        self.base_n = base_n
        self.copies = copies
        self._bits = None

    @classmethod
    def of(cls, f: CnfFormula, budget: int) -> "SolutionView":
        if f.copy_of is not None:
            base, c = f.copy_of
            return cls(base=enumerate_solutions(base, budget=budget).solutions, base_n=base.num_vars, copies=c)
        return cls(values=enumerate_solutions(f, budget=budget).solutions)

    @property
    def values(self) -> np.ndarray:
        if self._values is None:
            self._values = product_solutions(self.base, self.base_n, self.copies, sort=False)
        return self._values

    def __len__(self):
        if self._values is None:
            return len(self.base) ** self.copies
        return len(self._values)

    def cells(self, h: HashFunction) -> np.ndarray:
        if self.base is None or h.k != 2 or h.w > 64:
            return eval_hash_many(h, self.values)
        if self._bits is None:
            shifts = np.arange(self.base_n, dtype=np.uint64)
            self._bits = ((self.base[:, None] >> shifts[None, :]) & np.uint64(1)).astype(bool)
        mask = (1 << h.m) - 1
        # column b of y -> a2*y, already cut to the low m bits
        cols = np.array([c & mask for c in gf_columns(h.spec, h.coeffs[1])], dtype=np.uint64)
        out = None
        for j in range(self.copies):
            block = cols[j * self.base_n:(j + 1) * self.base_n]
            part = np.bitwise_xor.reduce(np.where(self._bits, block[None, :], np.uint64(0)), axis=1)
            out = part if out is None else (out[:, None] ^ part[None, :]).ravel()
        return out ^ np.uint64(h.coeffs[0] & mask)


Solutions = Union[np.ndarray, SolutionView]


def cells_of(h: HashFunction, sols: Solutions) -> np.ndarray:
    if isinstance(sols, SolutionView):
        return sols.cells(h)
    return eval_hash_many(h, sols)


def cell_counts(h: HashFunction, sols: Solutions) -> tuple[np.ndarray, np.ndarray]:
    """(occupied cells, their counts); memory follows |sols|, never 2^m."""
    return np.unique(cells_of(h, sols), return_counts=True)


def isolated(h: HashFunction, sols: Solutions) -> np.ndarray:
    """Mask of solutions that are alone in their cell under h."""
    cells = cells_of(h, sols)
    if h.m <= 62 and (1 << h.m) <= 4 * len(sols):
        idx = cells.view(np.int64)
        counts = np.bincount(idx, minlength=1 << h.m)
        return counts[idx] == 1
    _, inv, counts = np.unique(cells, return_inverse=True, return_counts=True)
    return counts[inv] == 1


def stock_holds(hashes, sols: Solutions) -> bool:
    """Every solution is isolated under some member of ``hashes``."""
    if len(sols) == 0:
        return True
    covered = np.zeros(len(sols), dtype=bool)
    for h in hashes:
        covered |= isolated(h, sols)
        if covered.all():
            return True
    return False


def pairwise_holds(hashes, sols: Solutions, guard: bool = True) -> bool:
    """Every pair of distinct solutions is split by some member (the two-vector reading)."""
    if not guard:
        return len(sols) == 0
    if len(sols) < 2:
        return True
    joint = np.stack([cells_of(h, sols) for h in hashes], axis=1)
    return len(np.unique(joint, axis=0)) == len(sols)


def holes_holds(hashes, sols: Solutions, m: int) -> bool:
    """The images of ``hashes`` on the solutions cover all 2^m cells."""
    if m == 0:
        return len(sols) > 0
    hashes = list(hashes)
    if len(hashes) * len(sols) < (1 << m):
        return False
    # the shortcut above bounds 2^m by len(hashes)*|sol|, so a bitmap over cells is affordable
    seen = np.zeros(1 << m, dtype=bool)
    hit = 0
    for h in hashes:
        cells = cells_of(h, sols).view(np.int64)
        seen[cells] = True
        hit = int(np.count_nonzero(seen))
        if hit == 1 << m:
            return True
    return False


def cells_holds(h: HashFunction, sols: Solutions, m: int, ell: int, u: int) -> bool:
    """Every one of the 2^m cells holds between ell and u solutions."""
    if len(sols) < ell * (1 << m) or len(sols) > u * (1 << m):
        return False
    occupied, counts = cell_counts(h, sols)
    return len(occupied) == 1 << m and counts.min() >= ell and counts.max() <= u


def not_many_holds(h: HashFunction, sols: Solutions, u: int) -> bool:
    if len(sols) == 0:
        return True
    return int(cell_counts(h, sols)[1].max()) <= u


def substituted_holds(q: QuantifiedFormula, sols: Solutions) -> bool:
    """Exact truth of a formula whose hashes are all substituted."""
    fam = q.family
    if fam == "stock":
        if q.param("variant") == "pairwise":
            return pairwise_holds(q.hashes, sols, q.param("guard"))
        return stock_holds(q.hashes, sols)
    if fam == "stock_neg":
        return len(sols) > 0 if q.m == 0 else not stock_holds(q.hashes, sols)
    if fam == "holes":
        return holes_holds(q.hashes, sols, q.m) if q.m else len(sols) > 0
    if fam == "cells":
        return cells_holds(q.hashes[0], sols, q.m, q.param("ell"), q.param("u"))
    raise OracleError(f"family {fam} has no substituted form")


# --- literal sweep --------------------------------------------------------------

def _lane_mask(bit: int, total_bits: int) -> int:
    """Lanes (0 .. 2^total_bits - 1) whose index has ``bit`` set."""
    half = 1 << bit
    unit = ((1 << half) - 1) << half
    period = half * 2
    reps = ((1 << (1 << total_bits)) - 1) // ((1 << period) - 1)
    return unit * reps


def literal_sweep(q: QuantifiedFormula, max_vars: int = 20) -> bool:
    """Decide q by evaluating its matrix on every assignment and folding the prefix.

    The first prefix variable is the most significant lane bit, so quantifiers
    fold from the least significant bit outward.
    """
    order = [v for b in q.prefix for v in b.vars]
    quants = [b.quant for b in q.prefix for _ in b.vars]
    nv = len(order)
    if nv > max_vars:
        raise OracleError(f"{nv} prefix variables exceed the sweep limit {max_vars}")
    c, root = q.matrix
    full = (1 << (1 << nv)) - 1
    masks = {v: _lane_mask(nv - 1 - p, nv) for p, v in enumerate(order)}
    val = C.evaluate(c, root, masks, full)
    for p in range(nv - 1, -1, -1):
        shift = 1 << (nv - 1 - p)
        val = (val & (val >> shift)) if quants[p] == "a" else (val | (val >> shift))
    return bool(val & 1)


# --- the oracle -----------------------------------------------------------------

class Oracle:
    def __init__(self, config: Optional[OracleConfig] = None, ledger: Optional[CallLedger] = None):
        self.config = config or OracleConfig()
        self.ledger = ledger if ledger is not None else CallLedger()
        self._sols: dict[str, SolutionView] = {}

    def with_config(self, config: OracleConfig) -> "Oracle":
        """Same ledger and solution cache, different settings."""
        other = Oracle(config, self.ledger)
        other._sols = self._sols
        return other

    def solutions(self, f: CnfFormula) -> SolutionView:
        key = f.digest()
        if key not in self._sols:
            self._sols[key] = SolutionView.of(f, self.config.enum_budget)
        return self._sols[key]

    # public checks, named after the oracle classes the algorithms call

    def conp_check(self, q: QuantifiedFormula) -> bool:
        if any(b.quant == "e" for b in q.prefix):
            raise OracleError(f"conp_check needs a universal-only prefix ({q.family})")
        ans = self._dispatch(q)
        self.ledger.record("conp", q, ans)
        return ans.ret

    def two_qbf_check(self, q: QuantifiedFormula) -> OracleAnswer:
        ans = self._dispatch(q)
        self.ledger.record("2qbf", q, ans)
        return ans

    def three_qbf_check(self, q: QuantifiedFormula) -> OracleAnswer:
        if q.family not in ("cells", "holes"):
            raise OracleError(f"three_qbf_check is for cells/holes, got {q.family}")
        ans = self._dispatch(q)
        self.ledger.record("3qbf", q, ans)
        return ans

    def _dispatch(self, q: QuantifiedFormula) -> OracleAnswer:
        if self.config.backend == "external":
            path = self.config.solver_path or os.environ.get(SOLVER_ENV)
            if not path:
                raise SolverNotFound(f"no solver path configured (set {SOLVER_ENV} or --oracle external:PATH)")
            ans = external_solve(q, path, self.config.timeout_s)
            if ans.witness is not None and self._verifiable(q):
                if not substituted_holds(_substitute(q, ans.witness), self.solutions(q.formula)):
                    raise OracleDefect("solver witness fails exact re-check")
            return ans
        return self.decide(q)

    def _verifiable(self, q: QuantifiedFormula) -> bool:
        try:
            self.solutions(q.formula)
            return True
        except Exception:
            return False

    def decide(self, q: QuantifiedFormula) -> OracleAnswer:
        sols = self.solutions(q.formula)
        if q.family == "stock_audit":
            pos = stock_holds(q.hashes, sols)
            neg = self._stock_neg(q.formula, q.m - 1, sols)
            mode = neg.mode if pos else EXACT
            return OracleAnswer(pos and neg.ret, None, mode, neg.trials_used)
        if q.family == "af_audit":
            c_low = q.param("c_low")
            ok = stock_holds(q.hashes, sols) and holes_holds(q.param("hashes_holes") or (), sols, c_low)
            return OracleAnswer(ok)
        if q.family == "stock_neg":
            if q.substituted:
                return OracleAnswer(substituted_holds(q, sols))
            return self._stock_neg(q.formula, q.m, sols)
        if q.substituted:
            return OracleAnswer(substituted_holds(q, sols))
        return self._search(q, sols)

    # witness search for exists-hash formulas

    def _shortcut_false(self, q: QuantifiedFormula, count: int) -> bool:
        m = q.m
        if q.family == "stock" and q.param("variant") == "isolation":
            return count > m * (1 << m)
        if q.family == "stock":
            return not q.param("guard") and count > 0
        if q.family == "holes":
            return (m + 1) * count < (1 << m)
        if q.family == "cells":
            return not q.param("ell") * (1 << m) <= count <= q.param("u") * (1 << m)
        return False

    def _candidates(self, q: QuantifiedFormula) -> tuple[Iterator[HashTuple], bool]:
        """(candidate tuples, exhaustive?) for an exists-hash family."""
        n, m = q.formula.num_vars, q.m
        shape = q.hash_vars[0]
        count, k, w = len(q.hash_vars), shape.k, shape.w
        cfg = self.config
        if q.family == "stock":
            # collisions ignore a1, so only the a2 coefficients matter; order is irrelevant too
            if count * w <= cfg.exhaustive_bits:
                combos = itertools.combinations_with_replacement(range(1 << w), count)
                return (HashTuple(tuple(HashFunction(n, m, 2, (0, a)) for a in cs)) for cs in combos), True
        elif count * k * w <= cfg.exhaustive_bits:
            def gen():
                for flat in itertools.product(range(1 << w), repeat=count * k):
                    yield HashTuple(tuple(HashFunction(n, m, k, tuple(flat[i * k:(i + 1) * k]))
                                          for i in range(count)))
            return gen(), True
        fam = "stock_pairwise" if q.family == "stock" and q.param("variant") == "pairwise" else q.family
        return (sample_tuple(count, n, m, k, seed_stream(cfg.seed, fam, m, j))
                            for j in range(cfg.trials)), False

    def _search(self, q: QuantifiedFormula, sols: Solutions) -> OracleAnswer:
        if self._shortcut_false(q, len(sols)):
            return OracleAnswer(False, None, EXACT, 0)
        check = _holds_fn(q)
        cands, exhaustive = self._candidates(q)
        used = 0
        for t in cands:
            used += 1
            if check(t, sols):
                return OracleAnswer(True, t, EXACT, used)
        if exhaustive:
            return OracleAnswer(False, None, EXACT, used)
        if self.config.false_policy == COMPLETE_REQUIRED:
            raise OracleIncomplete(f"{q.family}(m={q.m}): no witness in {used} trials")
        return OracleAnswer(False, None, RANDOMIZED, used)

    def _stock_neg(self, f: CnfFormula, m: int, sols: Solutions) -> OracleAnswer:
        count = len(sols)
        if m == 0:
            return OracleAnswer(count > 0)
        if count > m * (1 << m):
            return OracleAnswer(True)
        if 4 * count <= (1 << m):
            # an isolating tuple exists whenever |sol| <= 2^(m-2)
            return OracleAnswer(False)
        # search for an isolating tuple, on the audit's own seed stream
        probe = build_stock(f, m)
        cands, exhaustive = self._candidates(probe)
        if not exhaustive:
            cfg = self.config
            n = f.num_vars
            cands = (sample_tuple(m, n, m, 2, seed_stream(cfg.seed, "stock_neg", m, j))
                     for j in range(cfg.trials))
        used = 0
        for t in cands:
            used += 1
            if stock_holds(t, sols):
                return OracleAnswer(False, None, EXACT, used)
        if exhaustive:
            return OracleAnswer(True, None, EXACT, used)
        if self.config.false_policy == COMPLETE_REQUIRED:
            raise OracleIncomplete(f"stock_neg(m={m}): cannot certify without exhausting hashes")
        return OracleAnswer(True, None, RANDOMIZED, used)


def _holds_fn(q: QuantifiedFormula) -> Callable[[HashTuple, np.ndarray], bool]:
    if q.family == "stock":
        if q.param("variant") == "pairwise":
            guard = q.param("guard")
            return lambda t, s: pairwise_holds(t, s, guard)
        return stock_holds
    if q.family == "holes":
        return lambda t, s: holes_holds(t, s, q.m)
    if q.family == "cells":
        ell, u = q.param("ell"), q.param("u")
        return lambda t, s: cells_holds(t[0], s, q.m, ell, u)
    raise OracleError(f"no witness search for {q.family}")


def _substitute(q: QuantifiedFormula, hashes: HashTuple) -> QuantifiedFormula:
    if q.family == "stock":
        return build_stock(q.formula, q.m, hashes, q.param("variant"), q.param("guard"))
    if q.family == "holes":
        return build_holes(q.formula, q.m, hashes)
    if q.family == "cells":
        return build_cells(q.formula, q.m, q.param("ell"), q.param("u"), hashes)
    raise OracleError(f"cannot substitute into {q.family}")


# --- external solver ------------------------------------------------------------

def parse_solver_output(text: str) -> tuple[bool, dict[int, bool]]:
    verdict = None
    values: dict[int, bool] = {}
    for line in text.splitlines():
        toks = line.split()
        if not toks:
            continue
        if toks[0] == "s" and len(toks) >= 3 and toks[1] == "cnf" and toks[2] in ("0", "1"):
            verdict = toks[2] == "1"
        elif toks[0] in ("SAT", "SATISFIABLE"):
            verdict = True
        elif toks[0] in ("UNSAT", "UNSATISFIABLE"):
            verdict = False
        elif toks[0] == "V":
            for t in toks[1:]:
                lit = int(t)
                if lit:
                    values[abs(lit)] = lit > 0
    if verdict is None:
        raise SolverOutputError("no verdict line in solver output")
    return verdict, values


def external_solve(q: QuantifiedFormula, solver_path: str, timeout_s: float = 60.0) -> OracleAnswer:
    if timeout_s <= 0:
        raise SolverTimeout(f"timeout {timeout_s}s leaves no time to run the solver")
    if not os.path.exists(solver_path):
        raise SolverNotFound(f"solver not found: {solver_path}")
    with tempfile.NamedTemporaryFile("wb", suffix=".qdimacs", delete=False) as fh:
        fh.write(to_qdimacs(q))
        path = fh.name
    try:
        proc = subprocess.run([solver_path, path], capture_output=True, text=True, timeout=timeout_s)
    except subprocess.TimeoutExpired:
        raise SolverTimeout(f"solver exceeded {timeout_s}s") from None
    except (FileNotFoundError, PermissionError) as e:
        raise SolverNotFound(f"cannot run solver {solver_path}: {e}") from None
    finally:
        os.unlink(path)
    ret, values = parse_solver_output(proc.stdout)
    witness = None
    if ret and q.hash_vars and q.prefix and q.prefix[0].role == "hash-coeff" and q.prefix[0].quant == "e":
        if all(v in values for v in q.prefix[0].vars):
            witness = HashTuple(tuple(
                HashFunction(hv.n, hv.m, hv.k, tuple(
                    sum(1 << b for b, var in enumerate(bits) if values[var]) for bits in hv.coeffs))
                for hv in q.hash_vars))
    return OracleAnswer(ret, witness, EXTERNAL, 0)


# module-level conveniences

def conp_check(q: QuantifiedFormula, config: Optional[OracleConfig] = None) -> bool:
    return Oracle(config).conp_check(q)


def two_qbf_check(q: QuantifiedFormula, config: Optional[OracleConfig] = None) -> OracleAnswer:
    return Oracle(config).two_qbf_check(q)


def three_qbf_check(q: QuantifiedFormula, config: Optional[OracleConfig] = None) -> OracleAnswer:
    return Oracle(config).three_qbf_check(q)
