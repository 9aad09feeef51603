"""Quantified formulas for the counters and auditors, with variable accounting and QDIMACS output.

Every builder allocates its prefix eagerly (so budgets are cheap even at large n)
and compiles the matrix circuit lazily on first access.

Stock semantics.  ``build_stock`` encodes "every solution is alone in its cell
under some h_i" with one collider vector per hash:

    exists h_1..h_m  forall z, y_1..y_m:
        F(z) -> OR_i ( F(y_i) -> (y_i = z  or  h_i(y_i) != h_i(z)) )

This is the reading under which "true at m" implies |sol| <= m * 2^m.  The
two-vector form ``forall z1 z2`` only asks every *pair* of solutions to be split
by some h_i, which allows far more solutions; it is kept as
``variant="pairwise"`` for comparison.
"""

from __future__ import annotations

import functools
import io
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import circuit as C
from .formula import CnfFormula
from .gf2hash import HashFunction, HashTuple, field as gf_field

FAMILIES = ("stock", "stock_neg", "holes", "cells", "stock_audit", "af_audit")
ROLES = ("hash-coeff", "cell", "assignment", "tseitin")


class EncodingError(ValueError):
    pass


@dataclass(frozen=True)
class Block:
    quant: str  # "e" or "a"
    vars: Sequence[int]  # a range when the block was allocated contiguously
    role: str


@dataclass(frozen=True)
class VarBudget:
    family: str
    m: int
    n: int
    hash_vars: int
    cell_vars: int
    assign_vars: int

    @property
    def total(self) -> int:
        return self.hash_vars + self.cell_vars + self.assign_vars

    def csv_row(self) -> str:
        return (f"{self.family},{self.m},{self.n},{self.hash_vars},"
                f"{self.cell_vars},{self.assign_vars},{self.total}")

    CSV_HEADER = "family,m,n,hash_vars,cell_vars,assign_vars,total"


@dataclass(frozen=True)
class HashVars:
    """Coefficient bit variables of one quantified hash: coeffs[j][b] is bit b of a_{j+1}."""
    n: int
    m: int
    k: int
    coeffs: tuple[tuple[int, ...], ...]

    @property
    def w(self) -> int:
        return max(self.n, self.m)


@dataclass(frozen=True)
class QuantifiedFormula:
    family: str
    formula: CnfFormula
    m: int
    prefix: tuple[Block, ...]
    # quantified hashes, and substituted ones; stock_audit carries both
    # (hash_vars for the v-1 universal hashes, hashes for the witness)
    hash_vars: tuple[HashVars, ...] = ()
    hashes: Optional[HashTuple] = None
    vectors: tuple[tuple[str, tuple[int, ...]], ...] = ()
    params: tuple[tuple[str, object], ...] = ()

    def param(self, name: str, default=None):
        return dict(self.params).get(name, default)

    def vector(self, name: str) -> tuple[int, ...]:
        return dict(self.vectors)[name]

    @property
    def num_vars(self) -> int:
        return sum(len(b.vars) for b in self.prefix)

    @property
    def substituted(self) -> bool:
        return not self.hash_vars

    @property
    def budget(self) -> VarBudget:
        counts = {r: 0 for r in ROLES}
        for b in self.prefix:
            counts[b.role] += len(b.vars)
        return VarBudget(self.family, self.m, self.formula.num_vars,
                         counts["hash-coeff"], counts["cell"], counts["assignment"])

    @functools.cached_property
    def matrix(self) -> tuple[C.Circuit, int]:
        return _MATRIX_BUILDERS[self.family](self)


class _Alloc:
    def __init__(self):
        self.next = 1
        self.blocks: list[Block] = []

    def take(self, count: int) -> range:
        out = range(self.next, self.next + count)
        self.next += count
        return out

    def block(self, quant: str, role: str, vars_: Sequence[int]):
        if vars_:
            self.blocks.append(Block(quant, vars_ if isinstance(vars_, range) else tuple(vars_), role))

    def hashes(self, count: int, n: int, m: int, k: int) -> tuple[HashVars, ...]:
        w = max(n, m)
        return tuple(HashVars(n, m, k, tuple(self.take(w) for _ in range(k))) for _ in range(count))


def _span(vecs) -> range:
    """Variables of consecutively allocated vectors, as one range."""
    return range(vecs[0][1].start, vecs[-1][1].stop) if vecs else range(0)


def _split(span: range, n: int) -> list[range]:
    return [span[i:i + n] for i in range(0, len(span), n)]


def _flat(hvs: Sequence[HashVars]) -> list[int]:
    return [v for h in hvs for c in h.coeffs for v in c]


def _check_m(f: CnfFormula, m: int, lo: int = 1):
    if not lo <= m <= f.num_vars:
        raise EncodingError(f"m={m} outside [{lo}, {f.num_vars}]")


def _check_hashes(hashes: HashTuple, count: int, n: int, m: int, k: int):
    if len(hashes) != count:
        raise EncodingError(f"expected {count} hash functions, got {len(hashes)}")
    h = hashes[0]
    if (h.n, h.m, h.k) != (n, m, k):
        raise EncodingError(f"hash shape {(h.n, h.m, h.k)} != {(n, m, k)}")


# --- builders -----------------------------------------------------------------

def build_stock(f: CnfFormula, m: int, hashes: Optional[HashTuple] = None,
                variant: str = "isolation", guard: bool = True) -> QuantifiedFormula:
    """phi_stock(m); ``hashes`` substitutes h_1..h_m and drops the hash block."""
    _check_m(f, m)
    if variant not in ("isolation", "pairwise"):
        raise EncodingError(f"unknown stock variant {variant!r}")
    n = f.num_vars
    a = _Alloc()
    hv: tuple[HashVars, ...] = ()
    if hashes is None:
        hv = a.hashes(m, n, m, 2)
        a.block("e", "hash-coeff", _flat(hv))
    else:
        _check_hashes(hashes, m, n, m, 2)
    if variant == "isolation":
        names = ["z"] + [f"y{i}" for i in range(1, m + 1)]
    else:
        names = ["z1", "z2"]
    vecs = tuple((nm, a.take(n)) for nm in names)
    a.block("a", "assignment", _span(vecs))
    return QuantifiedFormula("stock", f, m, tuple(a.blocks), hv, hashes, vecs,
                             (("variant", variant), ("guard", guard)))


def build_stock_neg(f: CnfFormula, m: int, hashes: Optional[HashTuple] = None) -> QuantifiedFormula:
    """not phi_stock(m): for all h_1..h_m some solution z collides with another solution under every h_i.

    At m = 0 this is plain satisfiability of F.
    """
    _check_m(f, m, lo=0)
    n = f.num_vars
    a = _Alloc()
    hv: tuple[HashVars, ...] = ()
    if m and hashes is None:
        hv = a.hashes(m, n, m, 2)
        a.block("a", "hash-coeff", _flat(hv))
    elif hashes is not None:
        _check_hashes(hashes, m, n, m, 2)
    vecs = tuple((nm, a.take(n)) for nm in ["z"] + [f"y{i}" for i in range(1, m + 1)])
    a.block("e", "assignment", _span(vecs))
    return QuantifiedFormula("stock_neg", f, m, tuple(a.blocks), hv, hashes, vecs)


def build_holes(f: CnfFormula, m: int, hashes: Optional[HashTuple] = None) -> QuantifiedFormula:
    """phi_holes(m): m+1 hashes whose images jointly cover every cell of {0,1}^m.

    m = 0 is accepted for the auditor's boundary case and means "F is satisfiable".
    """
    _check_m(f, m, lo=0)
    n = f.num_vars
    a = _Alloc()
    hv: tuple[HashVars, ...] = ()
    if m == 0:
        hashes = None
    elif hashes is None:
        hv = a.hashes(m + 1, n, m, 2)
        a.block("e", "hash-coeff", _flat(hv))
    else:
        _check_hashes(hashes, m + 1, n, m, 2)
    alpha = a.take(m)
    a.block("a", "cell", alpha)
    z = a.take(n)
    a.block("e", "assignment", z)
    return QuantifiedFormula("holes", f, m, tuple(a.blocks), hv, hashes,
                             (("alpha", alpha), ("z", z)))


def build_cells(f: CnfFormula, m: int, ell: int, u: int,
                hashes: Optional[HashTuple] = None) -> QuantifiedFormula:
    """phi_Cells(m) with explicit (ell, u); a single hash from H(n, m, n)."""
    _check_m(f, m)
    if not 1 <= ell < u:
        raise EncodingError(f"need 1 <= ell < u, got ell={ell}, u={u}")
    n = f.num_vars
    a = _Alloc()
    hv: tuple[HashVars, ...] = ()
    if hashes is None:
        hv = a.hashes(1, n, m, n)
        a.block("e", "hash-coeff", _flat(hv))
    else:
        _check_hashes(hashes, 1, n, m, n)
    alpha = a.take(m)
    a.block("a", "cell", alpha)
    # y_1..y_{u+1} and z_1..z_ell are kept as two spans; u is large at the default constants
    ys = a.take((u + 1) * n)
    a.block("a", "assignment", ys)
    zs = a.take(ell * n)
    a.block("e", "assignment", zs)
    return QuantifiedFormula("cells", f, m, tuple(a.blocks), hv, hashes,
                             (("alpha", alpha), ("ys", ys), ("zs", zs)), (("ell", ell), ("u", u)))


def build_stock_audit(f: CnfFormula, v: int, witness: HashTuple) -> QuantifiedFormula:
    """Single forall-exists query combining the substituted poscheck at v with not phi_stock(v-1).

        forall h_1..h_{v-1} forall (z, y_1..y_v) exists (z', y'_1..y'_{v-1}):
            poscheck(z, y) and collide-all(h, z', y')
    """
    _check_m(f, v)
    n = f.num_vars
    if witness is None or len(witness) != v:
        raise EncodingError(f"witness must hold {v} hash functions")
    _check_hashes(witness, v, n, v, 2)
    a = _Alloc()
    hv = a.hashes(v - 1, n, v - 1, 2) if v > 1 else ()
    a.block("a", "hash-coeff", _flat(hv))
    pos = [("z", a.take(n))] + [(f"y{i}", a.take(n)) for i in range(1, v + 1)]
    a.block("a", "assignment", _span(pos))
    neg = [("nz", a.take(n))] + [(f"ny{i}", a.take(n)) for i in range(1, v)]
    a.block("e", "assignment", _span(neg))
    return QuantifiedFormula("stock_audit", f, v, tuple(a.blocks), hv, witness, tuple(pos + neg))


def build_count_audit(f: CnfFormula, c_low: int, c_high: int, hashes_stock: HashTuple,
                      hashes_holes: Optional[HashTuple]) -> QuantifiedFormula:
    """Single forall-exists query for the AF audit: substituted poscheck at c_high and cover at c_low.

        forall (z, y_1..y_{c_high}) forall alpha exists z':
            poscheck(z, y) and F(z') and OR_i h_i(z') = alpha
    """
    _check_m(f, c_high)
    _check_m(f, c_low, lo=0)
    n = f.num_vars
    _check_hashes(hashes_stock, c_high, n, c_high, 2)
    if c_low:
        _check_hashes(hashes_holes, c_low + 1, n, c_low, 2)
    a = _Alloc()
    pos = [("z", a.take(n))] + [(f"y{i}", a.take(n)) for i in range(1, c_high + 1)]
    a.block("a", "assignment", _span(pos))
    alpha = a.take(c_low)
    a.block("a", "cell", alpha)
    z = a.take(n)
    a.block("e", "assignment", z)
    return QuantifiedFormula("af_audit", f, c_high, tuple(a.blocks), (), hashes_stock,
                             tuple(pos + [("alpha", alpha), ("nz", z)]),
                             (("c_low", c_low), ("hashes_holes", hashes_holes if c_low else None)))


def stock_budget(n: int, m: int, substituted: bool = False) -> VarBudget:
    w = max(n, m)
    return VarBudget("stock", m, n, 0 if substituted else 2 * m * w, 0, (m + 1) * n)


def stock_neg_budget(n: int, m: int) -> VarBudget:
    return VarBudget("stock_neg", m, n, 2 * m * max(n, m), 0, (m + 1) * n)


def holes_budget(n: int, m: int, substituted: bool = False) -> VarBudget:
    hashes = 0 if substituted or m == 0 else (m + 1) * 2 * max(n, m)
    return VarBudget("holes", m, n, hashes, m, n)


def cells_budget(n: int, m: int, ell: int, u: int, substituted: bool = False) -> VarBudget:
    return VarBudget("cells", m, n, 0 if substituted else n * max(n, m), m, (u + 1 + ell) * n)


def stock_audit_budget(n: int, v: int) -> VarBudget:
    return VarBudget("stock_audit", v, n, 2 * (v - 1) * max(n, v - 1), 0, (2 * v + 1) * n)


# --- matrix compilation -------------------------------------------------------

def cnf_circuit(c: C.Circuit, f: CnfFormula, xs: Sequence[int]) -> int:
    """F evaluated on the assignment vector whose bit i (variable i+1) is variable xs[i]."""
    if f.unsat:
        return C.FALSE
    bits = [c.var(v) for v in xs]
    return c.and_(*(c.or_(*(bits[l - 1] if l > 0 else c.not_(bits[-l - 1]) for l in cl))
                    for cl in f.clauses))


def hash_circuit(c: C.Circuit, h, xs: Sequence[int]) -> list[int]:
    """Output bits of h (a HashFunction or HashVars) applied to the variable vector xs."""
    spec = gf_field(h.w)
    x = [c.var(v) for v in xs] + [C.FALSE] * (h.w - len(xs))
    if isinstance(h, HashFunction):
        coeffs = [c.const_bits(a, h.w) for a in h.coeffs]
    else:
        coeffs = [[c.var(v) for v in bits] for bits in h.coeffs]
    out = C.gf_poly_eval(c, h.w, spec.modulus, coeffs, x)
    return out[:h.m]


def _members(q: QuantifiedFormula, hvs=None):
    return list(q.hashes) if hvs is None else list(hvs)


def _vec_eq(c: C.Circuit, xs, ys) -> int:
    return c.eq_bits([c.var(v) for v in xs], [c.var(v) for v in ys])


def _stock_matrix(q: QuantifiedFormula):
    c = C.Circuit()
    f = q.formula
    hs = _members(q, q.hash_vars or None)
    if q.param("variant") == "pairwise":
        z1, z2 = q.vector("z1"), q.vector("z2")
        fz1, fz2 = cnf_circuit(c, f, z1), cnf_circuit(c, f, z2)
        distinct = c.not_(_vec_eq(c, z1, z2)) if q.param("guard") else C.TRUE
        terms = []
        for h in hs:
            same = c.eq_bits(hash_circuit(c, h, z1), hash_circuit(c, h, z2))
            terms.append(c.implies(c.and_(fz1, same, distinct), c.not_(fz2)))
        return c, c.or_(*terms)
    return c, _isolation(c, f, hs, q.vector("z"), [q.vector(f"y{i}") for i in range(1, q.m + 1)])


def _isolation(c, f, hs, z, ys) -> int:
    hz = [hash_circuit(c, h, z) for h in hs]
    terms = []
    for h, y, hzi in zip(hs, ys, hz):
        ok = c.or_(c.not_(cnf_circuit(c, f, y)), _vec_eq(c, y, z),
                   c.not_(c.eq_bits(hash_circuit(c, h, y), hzi)))
        terms.append(ok)
    return c.implies(cnf_circuit(c, f, z), c.or_(*terms))


def _collide_all(c, f, hs, z, ys) -> int:
    parts = [cnf_circuit(c, f, z)]
    for h, y in zip(hs, ys):
        parts += [cnf_circuit(c, f, y), c.not_(_vec_eq(c, y, z)),
                  c.eq_bits(hash_circuit(c, h, y), hash_circuit(c, h, z))]
    return c.and_(*parts)


def _stock_neg_matrix(q: QuantifiedFormula):
    c = C.Circuit()
    hs = _members(q, q.hash_vars or None) if q.m else []
    ys = [q.vector(f"y{i}") for i in range(1, q.m + 1)]
    return c, _collide_all(c, q.formula, hs, q.vector("z"), ys)


def _holes_matrix(q: QuantifiedFormula):
    c = C.Circuit()
    z = q.vector("z")
    fz = cnf_circuit(c, q.formula, z)
    if q.m == 0:
        return c, fz
    alpha = [c.var(v) for v in q.vector("alpha")]
    hs = _members(q, q.hash_vars or None)
    hit = c.or_(*(c.eq_bits(hash_circuit(c, h, z), alpha) for h in hs))
    return c, c.and_(fz, hit)


def not_many(c: C.Circuit, f: CnfFormula, h, alpha: Sequence[int], ys: Sequence[Sequence[int]]) -> int:
    """At most len(ys)-1 solutions in cell alpha: if all ys are solutions in alpha, two coincide."""
    alpha_bits = [c.var(v) for v in alpha]
    inside = c.and_(*(c.and_(cnf_circuit(c, f, y), c.eq_bits(hash_circuit(c, h, y), alpha_bits))
                      for y in ys))
    dup = c.or_(*(_vec_eq(c, ys[i], ys[j]) for i in range(len(ys)) for j in range(i + 1, len(ys))))
    return c.implies(inside, dup)


def at_least_few(c: C.Circuit, f: CnfFormula, h, alpha: Sequence[int], zs: Sequence[Sequence[int]]) -> int:
    """The zs are pairwise-distinct solutions, all in cell alpha."""
    alpha_bits = [c.var(v) for v in alpha]
    parts = [c.and_(cnf_circuit(c, f, z), c.eq_bits(hash_circuit(c, h, z), alpha_bits)) for z in zs]
    parts += [c.not_(_vec_eq(c, zs[i], zs[j])) for i in range(len(zs)) for j in range(i + 1, len(zs))]
    return c.and_(*parts)


def _cells_matrix(q: QuantifiedFormula):
    c = C.Circuit()
    h = q.hash_vars[0] if q.hash_vars else q.hashes[0]
    alpha = q.vector("alpha")
    n = q.formula.num_vars
    ys = _split(q.vector("ys"), n)
    zs = _split(q.vector("zs"), n)
    return c, c.and_(not_many(c, q.formula, h, alpha, ys), at_least_few(c, q.formula, h, alpha, zs))


def _stock_audit_matrix(q: QuantifiedFormula):
    c = C.Circuit()
    f, v = q.formula, q.m
    pos = _isolation(c, f, list(q.hashes), q.vector("z"), [q.vector(f"y{i}") for i in range(1, v + 1)])
    neg = _collide_all(c, f, list(q.hash_vars), q.vector("nz"), [q.vector(f"ny{i}") for i in range(1, v)])
    return c, c.and_(pos, neg)


def _af_audit_matrix(q: QuantifiedFormula):
    c = C.Circuit()
    f, c_high, c_low = q.formula, q.m, q.param("c_low")
    pos = _isolation(c, f, list(q.hashes), q.vector("z"), [q.vector(f"y{i}") for i in range(1, c_high + 1)])
    z = q.vector("nz")
    cover = cnf_circuit(c, f, z)
    if c_low:
        alpha = [c.var(v) for v in q.vector("alpha")]
        cover = c.and_(cover, c.or_(*(c.eq_bits(hash_circuit(c, h, z), alpha)
                                      for h in q.param("hashes_holes"))))
    return c, c.and_(pos, cover)


_MATRIX_BUILDERS = {
    "stock": _stock_matrix,
    "stock_neg": _stock_neg_matrix,
    "holes": _holes_matrix,
    "cells": _cells_matrix,
    "stock_audit": _stock_audit_matrix,
    "af_audit": _af_audit_matrix,
}


# --- QDIMACS ------------------------------------------------------------------

def merged_prefix(q: QuantifiedFormula, tseitin_vars: Sequence[int] = ()) -> list[tuple[str, list[int]]]:
    out: list[tuple[str, list[int]]] = []
    for b in q.prefix:
        if out and out[-1][0] == b.quant:
            out[-1][1].extend(b.vars)
        else:
            out.append((b.quant, list(b.vars)))
    if tseitin_vars:
        if out and out[-1][0] == "e":
            out[-1][1].extend(tseitin_vars)
        else:
            out.append(("e", list(tseitin_vars)))
    return out


def to_clauses(q: QuantifiedFormula) -> tuple[int, list[tuple[str, list[int]]], list[list[int]]]:
    c, root = q.matrix
    first = q.num_vars + 1
    clauses, gates = C.tseitin(c, root, first)
    prefix = merged_prefix(q, range(first, first + gates))
    return q.num_vars + gates, prefix, clauses


def to_qdimacs(q: QuantifiedFormula) -> bytes:
    nv, prefix, clauses = to_clauses(q)
    out = io.StringIO()
    out.write(f"c family {q.family} m {q.m} n {q.formula.num_vars}\n")
    out.write(f"p cnf {nv} {len(clauses)}\n")
    for quant, vs in prefix:
        out.write(quant + " " + " ".join(map(str, vs)) + " 0\n")
    for cl in clauses:
        out.write(" ".join(map(str, cl)) + " 0\n")
    return out.getvalue().encode()


@dataclass
class ParsedQdimacs:
    num_vars: int
    prefix: list[tuple[str, list[int]]] = field(default_factory=list)
    clauses: list[list[int]] = field(default_factory=list)


def parse_qdimacs(data) -> ParsedQdimacs:
    text = data.decode() if isinstance(data, (bytes, bytearray)) else data
    parsed = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed header")
            parsed = ParsedQdimacs(int(toks[2]))
            continue
        if parsed is None:
            raise ValueError(f"line {lineno}: content before header")
        if toks[-1] != "0":
            raise ValueError(f"line {lineno}: missing terminating 0")
        if toks[0] in ("a", "e"):
            parsed.prefix.append((toks[0], [int(t) for t in toks[1:-1]]))
        else:
            parsed.clauses.append([int(t) for t in toks[:-1]])
    if parsed is None:
        raise ValueError("missing header")
    return parsed


def dump_circuit(q: QuantifiedFormula) -> str:
    """S-expression rendering of the matrix, for debugging."""
    c, root = q.matrix
    memo: dict[int, str] = {}
    for nid in C.reachable(c, root):
        node = c.nodes[nid]
        op = node[0]
        if op == "const":
            memo[nid] = "true" if node[1] else "false"
        elif op == "var":
            memo[nid] = f"x{node[1]}"
        elif op == "not":
            memo[nid] = f"(not {memo[node[1]]})"
        elif op == "xor":
            memo[nid] = f"(xor {memo[node[1]]} {memo[node[2]]})"
        else:
            memo[nid] = f"({op} " + " ".join(memo[k] for k in node[1]) + ")"
    return memo[root]
