"""CNF formulas: DIMACS I/O, brute-force enumeration, exact counting and MakeCopies."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

DEFAULT_ENUM_BUDGET = 24  # log2 of the number of assignments a sweep may visit
_CHUNK_BITS = 20


class DimacsError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EnumerationBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """A CNF over variables 1..num_vars.

    ``unsat`` marks a formula that contained an empty clause; the empty clause
    itself is never stored in ``clauses``.
    """

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    name: Optional[str] = field(default=None, compare=False)
    unsat: bool = False
    comments: tuple[str, ...] = field(default=(), compare=False, repr=False)
    warnings: tuple[str, ...] = field(default=(), compare=False, repr=False)
    # (base formula, copy count) when built by make_copies
    copy_of: Optional[tuple["CnfFormula", int]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("num_vars must be positive")
        clean = []
        for clause in self.clauses:
            seen = []
            for lit in clause:
                lit = int(lit)
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range for {self.num_vars} variables")
                if lit not in seen:
                    seen.append(lit)
            if not seen:
                raise ValueError("empty clause; use unsat=True")
            clean.append(tuple(seen))
        object.__setattr__(self, "clauses", tuple(clean))

    @classmethod
    def from_clauses(cls, num_vars: int, clauses: Iterable[Sequence[int]], name=None) -> "CnfFormula":
        return cls(num_vars, tuple(tuple(c) for c in clauses), name=name)

    def canonical(self) -> "CnfFormula":
        """Literals sorted by (variable, sign) within clauses; clauses sorted."""
        clauses = sorted(tuple(sorted(c, key=lambda l: (abs(l), l < 0))) for c in self.clauses)
        return CnfFormula(self.num_vars, tuple(clauses), name=self.name, unsat=self.unsat)

    def digest(self) -> str:
        return "sha256:" + hashlib.sha256(to_dimacs(self.canonical()).encode()).hexdigest()


@dataclass(frozen=True)
class Assignment:
    bits: int
    width: int

    @classmethod
    def from_string(cls, s: str) -> "Assignment":
        """'10' means x1=1, x2=0."""
        return cls(sum(1 << i for i, ch in enumerate(s) if ch == "1"), len(s))

    def value(self, var: int) -> bool:
        return bool((self.bits >> (var - 1)) & 1)

    def __str__(self):
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.width))


@dataclass(frozen=True)
class SolutionSet:
    formula_digest: str
    num_vars: int
    solutions: np.ndarray = field(compare=False)  # sorted uint64 packed assignments
    exhaustive: bool = True
    cap: Optional[int] = None

    def __len__(self):
        return len(self.solutions)

    def assignments(self) -> list[Assignment]:
        return [Assignment(int(s), self.num_vars) for s in self.solutions]


# --- DIMACS -----------------------------------------------------------------

def parse_dimacs(text) -> CnfFormula:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode()
    header = None
    comments = []
    warnings = []
    clauses = []
    current: list[int] = []
    current_start = None
    saw_empty = False
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            comments.append(raw)
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise DimacsError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}", lineno)
            try:
                nv, nc = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"malformed header {line!r}", lineno) from None
            if nv <= 0:
                raise DimacsError(f"non-positive variable count {nv}", lineno, raw.index(parts[2]) + 1)
            if nc < 0:
                raise DimacsError(f"negative clause count {nc}", lineno)
            header = (nv, nc)
            continue
        if header is None:
            raise DimacsError("clause before 'p cnf' header", lineno)
        col = 0
        for tok in line.split():
            col = raw.index(tok, col) + 1
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"bad literal {tok!r}", lineno, col) from None
            if lit == 0:
                if current:
                    clauses.append(tuple(current))
                else:
                    saw_empty = True
                current = []
                current_start = None
                continue
            if abs(lit) > header[0]:
                raise DimacsError(f"literal {lit} out of range (n={header[0]})", lineno, col)
            if current_start is None:
                current_start = (lineno, col)
            current.append(lit)
            col += len(tok) - 1
    if header is None:
        raise DimacsError("missing 'p cnf' header", max(lineno, 1))
    if current:
        raise DimacsError("clause missing terminating 0", *current_start)
    total = len(clauses) + (1 if saw_empty else 0)
    if total > header[1]:
        warnings.append(f"{total} clauses found, header declares {header[1]}")
    return CnfFormula(header[0], tuple(clauses), unsat=saw_empty,
                      comments=tuple(comments), warnings=tuple(warnings))


def to_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses) + (1 if f.unsat else 0)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    if f.unsat:
        lines.append("0")
    return "\n".join(lines) + "\n"


def read_dimacs(path) -> CnfFormula:
    with open(path, "rb") as fh:
        f = parse_dimacs(fh.read())
    return CnfFormula(f.num_vars, f.clauses, name=str(path), unsat=f.unsat,
                      comments=f.comments, warnings=f.warnings)


# --- evaluation and enumeration -----------------------------------------------

def evaluate(f: CnfFormula, a: Assignment) -> bool:
    if a.width != f.num_vars:
        raise ValueError(f"assignment width {a.width} != {f.num_vars}")
    if f.unsat:
        return False
    return all(any(a.value(abs(l)) == (l > 0) for l in c) for c in f.clauses)


def satisfied_mask(f: CnfFormula, values: np.ndarray) -> np.ndarray:
    """Vectorised evaluate over packed assignments."""
    values = np.asarray(values, dtype=np.uint64)
    if f.unsat:
        return np.zeros(values.shape, dtype=bool)
    ok = np.ones(values.shape, dtype=bool)
    for clause in f.clauses:
        sat = np.zeros(values.shape, dtype=bool)
        for lit in clause:
            bit = (values >> np.uint64(abs(lit) - 1)) & np.uint64(1)
            sat |= bit.astype(bool) if lit > 0 else ~bit.astype(bool)
        ok &= sat
    return ok


def enumerate_solutions(f: CnfFormula, cap: Optional[int] = None,
                        budget: int = DEFAULT_ENUM_BUDGET) -> SolutionSet:
    digest = f.digest()
    if f.copy_of is not None and cap is None:
        base, c = f.copy_of
        inner = enumerate_solutions(base, budget=budget)
        return SolutionSet(digest, f.num_vars, product_solutions(inner.solutions, base.num_vars, c))
    n = f.num_vars
    if n > 64:
        raise EnumerationBudgetExceeded(f"{n} variables exceed the 64-bit packed representation")
    if n > budget and cap is None:
        raise EnumerationBudgetExceeded(f"2^{n} assignments exceed budget 2^{budget}")
    found = []
    total = 0
    chunk = 1 << min(n, _CHUNK_BITS)
    for start in range(0, 1 << n, chunk):
        vals = np.arange(start, start + chunk, dtype=np.uint64)
        hits = vals[satisfied_mask(f, vals)]
        if cap is not None and total + len(hits) >= cap:
            room = cap - total
            found.append(hits[:room])
            # a sweep that ends exactly at the cap still saw everything
            exhaustive = start + chunk >= (1 << n) and len(hits) == room
            return SolutionSet(digest, n, np.concatenate(found), exhaustive=exhaustive, cap=cap)
        found.append(hits)
        total += len(hits)
    sols = np.concatenate(found) if found else np.zeros(0, dtype=np.uint64)
    return SolutionSet(digest, n, sols, exhaustive=True, cap=cap)


def exact_count(f: CnfFormula, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    if f.copy_of is not None:
        base, c = f.copy_of
        return exact_count(base, budget) ** c
    return len(enumerate_solutions(f, budget=budget))


# --- MakeCopies ---------------------------------------------------------------

def copies_for(n: int) -> int:
    """Copy count used by the counters: ceil(log2 n), at least 1."""
    if n < 2:
        raise ValueError("need n >= 2")
    return max(1, math.ceil(math.log2(n)))


def make_copies(f: CnfFormula, c: int) -> CnfFormula:
    if c < 1:
        raise ValueError("copy count must be >= 1")
    n = f.num_vars
    clauses = []
    for j in range(c):
        off = j * n
        clauses += [tuple(l + off if l > 0 else l - off for l in cl) for cl in f.clauses]
    name = f"{f.name or 'F'}^{c}"
    return CnfFormula(c * n, tuple(clauses), name=name, unsat=f.unsat, copy_of=(f, c))


def product_solutions(sols: np.ndarray, n: int, c: int, sort: bool = True) -> np.ndarray:
    """Solutions of make_copies(F, c) from those of F; copy j occupies bits j*n..

    Unsorted output lists copy 0 slowest, copy c-1 fastest.
    """
    if c * n > 64:
        raise EnumerationBudgetExceeded(f"{c * n} variables exceed the 64-bit packed representation")
    sols = np.asarray(sols, dtype=np.uint64)
    out = sols.copy()
    for j in range(1, c):
        shifted = sols << np.uint64(j * n)
        out = (out[:, None] | shifted[None, :]).ravel()
    return np.sort(out) if sort else out
