"""GF(2^w) arithmetic and the k-wise independent family H(n, m, k).

A member of H(n, m, k) is a tuple of k coefficients (a1..ak) in GF(2^w),
w = max(n, m).  It maps y in {0,1}^n to the low m bits of

    a1 + a2*x + ... + ak*x^(k-1)   at x = embed(y),

where embed zero-extends y (variable 1 = bit 0) into a field element.
Field elements are Python ints whose bit i is the coefficient of x^i.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._moduli import MODULI

MAX_DEGREE = 256


# --- polynomials over GF(2) ---------------------------------------------------

def clmul(a: int, b: int) -> int:
    """Carry-less product."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, p: int) -> int:
    dp = p.bit_length()
    while a.bit_length() >= dp:
        a ^= p << (a.bit_length() - dp)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def verify_irreducible(p: int) -> bool:
    """Ben-Or test: p of degree d is irreducible iff gcd(p, x^(2^i) - x) = 1 for i <= d/2."""
    d = p.bit_length() - 1
    if d < 1:
        raise ValueError("degree must be >= 1")
    u = 0b10
    for _ in range(d // 2):
        u = poly_mod(clmul(u, u), p)
        if poly_gcd(p, u ^ 0b10) != 1:
            return False
    return True


# --- the field ----------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    w: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.w <= MAX_DEGREE:
            raise ValueError(f"field degree {self.w} outside [1, {MAX_DEGREE}]")
        if self.modulus.bit_length() != self.w + 1:
            raise ValueError("modulus degree must equal w")

    @property
    def order_mask(self) -> int:
        return (1 << self.w) - 1


@functools.lru_cache(maxsize=None)
def field(w: int) -> FieldSpec:
    return FieldSpec(w, MODULI[w])


def gf2_mul(spec: FieldSpec, a: int, b: int) -> int:
    w, low = spec.w, spec.modulus ^ (1 << spec.w)
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> w:
            a ^= (1 << w) | low
    return out


def gf2_pow(spec: FieldSpec, a: int, e: int) -> int:
    out = 1
    while e:
        if e & 1:
            out = gf2_mul(spec, out, a)
        a = gf2_mul(spec, a, a)
        e >>= 1
    return out


def gf2_inv(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return gf2_pow(spec, a, (1 << spec.w) - 2)


# --- hash functions -----------------------------------------------------------

@dataclass(frozen=True)
class HashFunction:
    n: int
    m: int
    k: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 0 or self.k < 1:
            raise ValueError("need n >= 1, m >= 0, k >= 1")
        if len(self.coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(self.coeffs)}")
        bound = 1 << self.w
        if any(not 0 <= c < bound for c in self.coeffs):
            raise ValueError(f"coefficient outside GF(2^{self.w})")

    @property
    def w(self) -> int:
        return max(self.n, self.m)

    @property
    def spec(self) -> FieldSpec:
        return field(self.w)

    def __call__(self, y: int) -> int:
        return eval_hash(self, y)


@dataclass(frozen=True)
class HashTuple:
    members: tuple[HashFunction, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("empty hash tuple")
        first = self.members[0]
        if any((h.n, h.m, h.k) != (first.n, first.m, first.k) for h in self.members):
            raise ValueError("hash tuple members must share (n, m, k)")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


def eval_hash(h: HashFunction, y: int) -> int:
    if y < 0 or y >> h.n:
        raise ValueError(f"assignment does not fit in {h.n} bits")
    spec = h.spec
    acc = 0
    for a in reversed(h.coeffs):
        acc = gf2_mul(spec, acc, y) ^ a
    return acc & ((1 << h.m) - 1)


def columns(spec: FieldSpec, a: int) -> list[int]:
    """a * x^j for j < w; the matrix of y -> a*y over GF(2)."""
    cols = []
    low = spec.modulus ^ (1 << spec.w)
    for _ in range(spec.w):
        cols.append(a)
        a <<= 1
        if a >> spec.w:
            a ^= (1 << spec.w) | low
    return cols


def _byte_tables(cols: Sequence[int]) -> list[np.ndarray]:
    tables = []
    for b in range(0, len(cols), 8):
        tab = np.zeros(1, dtype=np.uint64)
        for c in cols[b:b + 8]:
            tab = np.concatenate([tab, tab ^ np.uint64(c)])
        tables.append(tab)
    return tables


def _mul_const_vec(spec: FieldSpec, a: int, ys: np.ndarray, nbits: int) -> np.ndarray:
    """a * y for packed y of at most nbits bits, by per-byte lookup tables."""
    cols = columns(spec, a)[:nbits]
    out = np.zeros(ys.shape, dtype=np.uint64)
    for b, tab in enumerate(_byte_tables(cols)):
        # ys < 2^nbits, so a short last table is never overrun
        idx = (ys >> np.uint64(8 * b)) & np.uint64(len(tab) - 1)
        out ^= tab[idx.view(np.int64)]
    return out


def _mul_vec_vec(spec: FieldSpec, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    w = spec.w
    low = np.uint64(spec.modulus ^ (1 << w))
    mask = np.uint64((1 << w) - 1) if w < 64 else np.uint64(0xFFFFFFFFFFFFFFFF)
    top = np.uint64(w - 1)
    one = np.uint64(1)
    out = np.zeros(xs.shape, dtype=np.uint64)
    a = xs.copy()
    for j in range(w):
        bit = (ys >> np.uint64(j)) & one
        out ^= a * bit
        carry = (a >> top) & one
        a = ((a << one) & mask) ^ (carry * low)
    return out


def eval_hash_many(h: HashFunction, ys: np.ndarray) -> np.ndarray:
    """Cells of packed assignments ys (uint64) under h."""
    ys = np.asarray(ys, dtype=np.uint64)
    spec = h.spec
    cell_mask = np.uint64((1 << h.m) - 1)
    if spec.w > 64:
        return np.array([eval_hash(h, int(y)) for y in ys], dtype=np.uint64)
    if h.k == 1:
        return np.full(ys.shape, h.coeffs[0] & int(cell_mask), dtype=np.uint64)
    if h.k == 2:
        return (np.uint64(h.coeffs[0]) ^ _mul_const_vec(spec, h.coeffs[1], ys, h.n)) & cell_mask
    acc = _mul_const_vec(spec, h.coeffs[-1], ys, h.n) ^ np.uint64(h.coeffs[-2])
    for a in reversed(h.coeffs[:-2]):
        acc = _mul_vec_vec(spec, acc, ys) ^ np.uint64(a)
    return acc & cell_mask


def random_element(w: int, rng: np.random.Generator) -> int:
    nbytes = (w + 7) // 8
    return int.from_bytes(rng.bytes(nbytes), "little") & ((1 << w) - 1)


def sample_hash(n: int, m: int, k: int, rng: np.random.Generator) -> HashFunction:
    w = max(n, m)
    return HashFunction(n, m, k, tuple(random_element(w, rng) for _ in range(k)))


def sample_tuple(count: int, n: int, m: int, k: int, rng: np.random.Generator) -> HashTuple:
    return HashTuple(tuple(sample_hash(n, m, k, rng) for _ in range(count)))


# --- serialisation ------------------------------------------------------------

def encode_coeffs(h: HashFunction) -> bytes:
    """k*w bits, coefficient i at bit offset i*w, little-endian, padded to bytes."""
    acc = 0
    for i, c in enumerate(h.coeffs):
        acc |= c << (i * h.w)
    return acc.to_bytes((h.k * h.w + 7) // 8, "little")


def decode_coeffs(data: bytes, n: int, m: int, k: int) -> HashFunction:
    w = max(n, m)
    if len(data) != (k * w + 7) // 8:
        raise ValueError("encoded length does not match (n, m, k)")
    acc = int.from_bytes(data, "little")
    if acc >> (k * w):
        raise ValueError("padding bits set")
    mask = (1 << w) - 1
    return HashFunction(n, m, k, tuple((acc >> (i * w)) & mask for i in range(k)))


def hash_to_dict(h: HashFunction) -> dict:
    hexw = (h.w + 3) // 4
    return {"n": h.n, "m": h.m, "k": h.k, "w": h.w,
            "modulus_hex": format(h.spec.modulus, "x"),
            "coeffs_hex": [format(c, f"0{hexw}x") for c in h.coeffs]}


def hash_from_dict(d: dict) -> HashFunction:
    h = HashFunction(int(d["n"]), int(d["m"]), int(d["k"]),
                     tuple(int(c, 16) for c in d["coeffs_hex"]))
    if int(d.get("w", h.w)) != h.w:
        raise ValueError("field degree does not match max(n, m)")
    if "modulus_hex" in d and int(d["modulus_hex"], 16) != h.spec.modulus:
        raise ValueError(f"modulus {d['modulus_hex']} differs from this build's GF(2^{h.w}) modulus")
    return h
