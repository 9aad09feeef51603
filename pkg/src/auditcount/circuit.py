"""Hash-consed Boolean circuits with constant folding, Tseitin CNF and bit-parallel evaluation."""

from __future__ import annotations

from typing import Iterable, Sequence

FALSE = 0
TRUE = 1


class Circuit:
    """Gates are ('const', b), ('var', v), ('not', a), ('and', xs), ('or', xs), ('xor', a, b).

    Node ids are indices into ``nodes``; every gate's inputs have smaller ids.
    """

    def __init__(self):
        self.nodes: list[tuple] = [("const", False), ("const", True)]
        self._index: dict[tuple, int] = {}

    def _add(self, key: tuple) -> int:
        nid = self._index.get(key)
        if nid is None:
            nid = len(self.nodes)
            self.nodes.append(key)
            self._index[key] = nid
        return nid

    def const(self, b: bool) -> int:
        return TRUE if b else FALSE

    def var(self, v: int) -> int:
        return self._add(("var", v))

    def not_(self, a: int) -> int:
        if a <= TRUE:
            return 1 - a
        node = self.nodes[a]
        if node[0] == "not":
            return node[1]
        return self._add(("not", a))

    def and_(self, *xs: int) -> int:
        return self._nary("and", xs, absorbing=FALSE, neutral=TRUE)

    def or_(self, *xs: int) -> int:
        return self._nary("or", xs, absorbing=TRUE, neutral=FALSE)

    def _nary(self, op: str, xs: Iterable[int], absorbing: int, neutral: int) -> int:
        kept = set()
        for x in xs:
            if x == absorbing:
                return absorbing
            if x == neutral:
                continue
            kept.add(x)
        for x in kept:
            if self.nodes[x][0] == "not" and self.nodes[x][1] in kept:
                return absorbing
        if not kept:
            return neutral
        if len(kept) == 1:
            return next(iter(kept))
        return self._add((op, tuple(sorted(kept))))

    def xor(self, a: int, b: int) -> int:
        if a <= TRUE:
            return b if a == FALSE else self.not_(b)
        if b <= TRUE:
            return a if b == FALSE else self.not_(a)
        if a == b:
            return FALSE
        if self.not_(a) == b:
            return TRUE
        # push negations out so x ^ ~y and ~x ^ y share a node
        neg = False
        if self.nodes[a][0] == "not":
            a, neg = self.nodes[a][1], not neg
        if self.nodes[b][0] == "not":
            b, neg = self.nodes[b][1], not neg
        g = self._add(("xor",) + tuple(sorted((a, b))))
        return self.not_(g) if neg else g

    def implies(self, a: int, b: int) -> int:
        return self.or_(self.not_(a), b)

    def xor_all(self, xs: Sequence[int]) -> int:
        acc = FALSE
        for x in xs:
            acc = self.xor(acc, x)
        return acc

    # bit vectors, little-endian lists of node ids

    def const_bits(self, value: int, width: int) -> list[int]:
        return [TRUE if (value >> i) & 1 else FALSE for i in range(width)]

    def var_bits(self, vars_: Sequence[int]) -> list[int]:
        return [self.var(v) for v in vars_]

    def eq_bits(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        if len(xs) != len(ys):
            raise ValueError("bit-vector widths differ")
        return self.and_(*(self.not_(self.xor(x, y)) for x, y in zip(xs, ys)))

    def size(self, root: int) -> int:
        return len(reachable(self, root))


def reachable(c: Circuit, root: int) -> list[int]:
    """Ids of nodes feeding ``root``, ascending (a topological order)."""
    seen = {root}
    stack = [root]
    while stack:
        node = c.nodes[stack.pop()]
        op = node[0]
        if op == "not":
            kids = (node[1],)
        elif op in ("and", "or"):
            kids = node[1]
        elif op == "xor":
            kids = node[1:]
        else:
            kids = ()
        for k in kids:
            if k not in seen:
                seen.add(k)
                stack.append(k)
    return sorted(seen)


def evaluate(c: Circuit, root: int, values: dict[int, int], full: int) -> int:
    """Evaluate bit-parallel: ``values`` maps each variable to an int whose bits are lanes."""
    val: dict[int, int] = {FALSE: 0, TRUE: full}
    for nid in reachable(c, root):
        if nid in val:
            continue
        node = c.nodes[nid]
        op = node[0]
        if op == "var":
            val[nid] = values[node[1]]
        elif op == "not":
            val[nid] = full ^ val[node[1]]
        elif op == "and":
            acc = full
            for k in node[1]:
                acc &= val[k]
            val[nid] = acc
        elif op == "or":
            acc = 0
            for k in node[1]:
                acc |= val[k]
            val[nid] = acc
        elif op == "xor":
            val[nid] = val[node[1]] ^ val[node[2]]
        else:
            raise ValueError(f"unknown gate {op}")
    return val[root]


def tseitin(c: Circuit, root: int, next_var: int) -> tuple[list[list[int]], int]:
    """Clauses asserting ``root`` plus definitions of its gates; returns (clauses, gate var count).

    Gate variables are numbered from ``next_var``. Negations become negative literals.
    """
    lit: dict[int, int] = {}
    clauses: list[list[int]] = []
    fresh = next_var
    if root == TRUE:
        return [], 0
    if root == FALSE:
        return [[fresh], [-fresh]], 1
    for nid in reachable(c, root):
        node = c.nodes[nid]
        op = node[0]
        if op == "var":
            lit[nid] = node[1]
        elif op == "not":
            lit[nid] = -lit[node[1]]
        elif op in ("and", "or", "xor"):
            g = fresh
            fresh += 1
            lit[nid] = g
            if op == "and":
                ins = [lit[k] for k in node[1]]
                clauses += [[-g, x] for x in ins]
                clauses.append([g] + [-x for x in ins])
            elif op == "or":
                ins = [lit[k] for k in node[1]]
                clauses += [[g, -x] for x in ins]
                clauses.append([-g] + ins)
            else:
                a, b = lit[node[1]], lit[node[2]]
                clauses += [[-g, a, b], [-g, -a, -b], [g, -a, b], [g, a, -b]]
    clauses.append([lit[root]])
    return clauses, fresh - next_var


# --- GF(2^w) over symbolic bit vectors ------------------------------------------

def gf_mul(c: Circuit, w: int, modulus: int, xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    prod = [[] for _ in range(2 * w - 1)]
    for i, x in enumerate(xs):
        if x == FALSE:
            continue
        for j, y in enumerate(ys):
            t = c.and_(x, y)
            if t != FALSE:
                prod[i + j].append(t)
    bits = [c.xor_all(p) for p in prod]
    taps = [t for t in range(w) if (modulus >> t) & 1]
    for k in range(2 * w - 2, w - 1, -1):
        if bits[k] == FALSE:
            continue
        for t in taps:
            bits[k - w + t] = c.xor(bits[k - w + t], bits[k])
    return bits[:w]


def gf_poly_eval(c: Circuit, w: int, modulus: int, coeffs: Sequence[Sequence[int]],
                 xs: Sequence[int]) -> list[int]:
    """Horner evaluation of a1 + a2*x + ... at symbolic x; coefficients are bit vectors."""
    acc = [FALSE] * w
    for a in reversed(coeffs):
        acc = gf_mul(c, w, modulus, acc, xs)
        acc = [c.xor(p, q) for p, q in zip(acc, a)]
    return acc
