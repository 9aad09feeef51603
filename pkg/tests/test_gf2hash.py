import numpy as np
import pytest

from auditcount._moduli import MODULI
from auditcount.gf2hash import (HashFunction, HashTuple, clmul, decode_coeffs, encode_coeffs,
                                eval_hash, eval_hash_many, field, gf2_inv, gf2_mul, gf2_pow,
                                hash_from_dict, hash_to_dict, poly_mod, sample_hash, sample_tuple,
                                verify_irreducible)

import hashstats


def trial_division_irreducible(p: int) -> bool:
    """Independent check: no factor of degree 1..d/2 divides p."""
    d = p.bit_length() - 1
    for q in range(2, 1 << (d // 2 + 1)):
        if q.bit_length() - 1 > d // 2:
            break
        if poly_mod(p, q) == 0:
            return False
    return True


# --- field arithmetic ---------------------------------------------------------------

def test_mul_examples_w3():
    spec = field(3)
    assert spec.modulus == 0b1011
    assert gf2_mul(spec, 0b010, 0b010) == 0b100
    assert all(gf2_mul(spec, a, 1) == a for a in range(8))
    # (x^2+x)(x+1) = x^3+x = 1 mod x^3+x+1
    assert gf2_mul(spec, 0b110, 0b011) == 0b001


def test_mul_matches_clmul_then_reduce():
    for w in (5, 13, 64, 130):
        spec = field(w)
        rng = np.random.default_rng(w)
        for _ in range(200):
            a = int.from_bytes(rng.bytes(17), "little") & spec.order_mask
            b = int.from_bytes(rng.bytes(17), "little") & spec.order_mask
            assert gf2_mul(spec, a, b) == poly_mod(clmul(a, b), spec.modulus)


def test_verify_irreducible_examples():
    assert verify_irreducible(0b111)
    assert not verify_irreducible(0b101)
    assert verify_irreducible(0b1011)


def test_verify_irreducible_agrees_with_trial_division():
    for p in range(0b10, 1 << 11):
        assert verify_irreducible(p) == trial_division_irreducible(p), bin(p)


def test_modulus_table_irreducible_for_every_degree():
    assert sorted(MODULI) == list(range(1, 257))
    for w in range(1, 257):
        p = MODULI[w]
        assert p.bit_length() == w + 1
        assert verify_irreducible(p), w


@pytest.mark.parametrize("w", [3, 8, 16, 64])
def test_field_axioms(w):
    spec = field(w)
    rng = np.random.default_rng(1000 + w)

    def rand():
        return int.from_bytes(rng.bytes(8), "little") & spec.order_mask

    mul = lambda a, b: gf2_mul(spec, a, b)  # noqa: E731
    for _ in range(10_000):
        a, b, c = rand(), rand(), rand()
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, b) == mul(b, a)
        assert mul(a, b ^ c) == mul(a, b) ^ mul(a, c)
        assert mul(a, 1) == a
    for _ in range(300 if w == 64 else 2000):
        a = rand() or 1
        assert mul(a, gf2_pow(spec, a, (1 << w) - 2)) == 1
        assert mul(a, gf2_inv(spec, a)) == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        gf2_inv(field(4), 0)


# --- hash evaluation -----------------------------------------------------------------

def test_zero_coefficients_map_to_cell_zero():
    h = HashFunction(5, 3, 2, (0, 0))
    assert {eval_hash(h, y) for y in range(32)} == {0}


def test_identity_hash():
    h = HashFunction(4, 4, 2, (0, 1))
    assert [eval_hash(h, y) for y in range(16)] == list(range(16))


def test_eval_truncates_to_low_bits():
    spec = field(6)
    h = HashFunction(6, 2, 3, (5, 17, 40))
    for y in range(64):
        full = 5 ^ gf2_mul(spec, 17, y) ^ gf2_mul(spec, 40, gf2_mul(spec, y, y))
        assert eval_hash(h, y) == full & 0b11


def test_eval_width_mismatch():
    with pytest.raises(ValueError):
        eval_hash(HashFunction(3, 2, 2, (1, 1)), 8)


@pytest.mark.parametrize("n, m, k", [(4, 2, 2), (6, 3, 6), (9, 9, 2), (10, 3, 10), (20, 5, 2),
                                     (40, 17, 2), (33, 3, 4), (70, 3, 2)])
def test_vectorised_matches_scalar(n, m, k):
    rng = np.random.default_rng(n * 100 + m)
    ys = rng.integers(0, 1 << min(n, 63), size=300, dtype=np.uint64)
    for _ in range(5):
        h = sample_hash(n, m, k, rng)
        got = eval_hash_many(h, ys).tolist()
        assert got == [eval_hash(h, int(y)) for y in ys]


def test_pair_probability_within_four_standard_errors():
    # k=2, n=m=4, 10^4 draws, fixed distinct inputs and targets
    rng = np.random.default_rng(77)
    hits = 0
    draws = 10_000
    for _ in range(draws):
        h = sample_hash(4, 4, 2, rng)
        hits += eval_hash(h, 3) == 5 and eval_hash(h, 12) == 9
    p = 2.0 ** -8
    se = (p * (1 - p) / draws) ** 0.5
    assert abs(hits / draws - p) <= 4 * se


@pytest.mark.parametrize("n, m, k", hashstats.CONFIGS)
def test_chi_square_uniformity_and_joint(n, m, k):
    for label, stat, crit in hashstats.all_checks(n, m, k):
        assert stat < crit, f"{(n, m, k)} {label}: chi2 {stat:.1f} >= {crit:.1f}"


# --- sampling and serialisation ---------------------------------------------------------

def test_sampling_deterministic_and_structural():
    a = sample_tuple(3, 6, 2, 2, np.random.default_rng(9))
    b = sample_tuple(3, 6, 2, 2, np.random.default_rng(9))
    assert a == b
    for h in a:
        assert len(h.coeffs) == 2 and all(0 <= c < 1 << 6 for c in h.coeffs)


def test_distinct_seeds_give_distinct_tuples():
    for s in range(100):
        a = sample_hash(16, 4, 2, np.random.default_rng(2 * s))
        b = sample_hash(16, 4, 2, np.random.default_rng(2 * s + 1))
        assert a.coeffs != b.coeffs


def test_hash_validation():
    with pytest.raises(ValueError):
        HashFunction(3, 2, 2, (1,))
    with pytest.raises(ValueError):
        HashFunction(3, 2, 2, (1, 8))
    with pytest.raises(ValueError):
        HashTuple((HashFunction(3, 2, 2, (1, 1)), HashFunction(3, 1, 2, (1, 1))))
    with pytest.raises(ValueError):
        HashTuple(())


@pytest.mark.parametrize("n, m, k", [(3, 2, 2), (7, 7, 3), (10, 4, 10), (24, 24, 2), (100, 3, 2)])
def test_encode_round_trip(n, m, k):
    rng = np.random.default_rng(n + m + k)
    for _ in range(20):
        h = sample_hash(n, m, k, rng)
        data = encode_coeffs(h)
        assert len(data) == (k * max(n, m) + 7) // 8
        assert decode_coeffs(data, n, m, k) == h
        assert hash_from_dict(hash_to_dict(h)) == h


def test_decode_rejects_bad_input():
    h = HashFunction(3, 2, 2, (5, 6))
    data = encode_coeffs(h)
    with pytest.raises(ValueError):
        decode_coeffs(data + b"\0", 3, 2, 2)
    with pytest.raises(ValueError):
        decode_coeffs(bytes([data[0] | 0x80]), 3, 2, 2)
    d = hash_to_dict(h)
    d["modulus_hex"] = "f"
    with pytest.raises(ValueError):
        hash_from_dict(d)
