"""The GF(2^w) polynomial hash family, by hand and by sampling.

A hash h(y) = a_1 + a_2*y + ... + a_k*y^(k-1) over GF(2^w), w = max(n, m),
truncated to its low m bits.  Sampling the a_i uniformly gives a k-wise
independent family from n-bit inputs to m-bit cells.
"""

import numpy as np

from auditcount.gf2hash import (HashFunction, eval_hash, eval_hash_many, field, gf2_inv, gf2_mul,
                                sample_hash)

# GF(8): the modulus is x^3 + x + 1, so x^3 folds back to x + 1
spec = field(3)
print(f"GF(2^3) modulus: {spec.modulus:#b}")
print("x * x^2 =", gf2_mul(spec, 0b010, 0b100), "(x + 1)")
print("inverse of x:", gf2_inv(spec, 0b010))

# a hand-picked pairwise hash on 4-bit inputs with 2-bit output
h = HashFunction(n=4, m=2, k=2, coeffs=(0b0011, 0b0101))
print("cells of 0..15:", [eval_hash(h, y) for y in range(16)])

# sampled hashes spread a fixed pair of inputs evenly over the 4 x 4 joint cells
rng = np.random.default_rng(7)
pairs = np.zeros((4, 4), dtype=int)
for _ in range(20_000):
    g = sample_hash(4, 2, 2, rng)
    pairs[eval_hash(g, 3), eval_hash(g, 12)] += 1
print("joint cells of inputs 3 and 12 over 20000 draws (expect ~1250 each):")
print(pairs)

# the vectorized evaluator agrees with the scalar one
ys = np.arange(16, dtype=np.uint64)
print("vectorized matches:", list(eval_hash_many(h, ys)) == [eval_hash(h, int(y)) for y in ys])
