"""Shared Monte-Carlo draws for the hash-family statistics tests."""

import functools
import itertools

import numpy as np
from scipy import stats

from auditcount.gf2hash import eval_hash, sample_tuple

DRAWS = 100_000
QUANTILE = 0.999
CONFIGS = ((4, 2, 2), (6, 3, 2), (6, 3, 4))


def fixed_inputs(n: int, k: int) -> tuple[int, ...]:
    # distinct, and including 0 and the all-ones input
    return tuple(sorted({0, (1 << n) - 1} | set(range(1, k))))[:k]


@functools.lru_cache(maxsize=None)
def cell_draws(n: int, m: int, k: int, draws: int = DRAWS, seed: int = 2024) -> np.ndarray:
    """draws x k matrix: cells of the fixed inputs under independently sampled hashes."""
    ys = fixed_inputs(n, k)
    hs = sample_tuple(draws, n, m, k, np.random.default_rng(seed))
    return np.array([[eval_hash(h, y) for y in ys] for h in hs], dtype=np.int64)


def chi2_stat(observed: np.ndarray) -> tuple[float, float]:
    """(statistic, 0.999 critical value) against the uniform distribution."""
    expected = observed.sum() / observed.size
    stat = float(((observed - expected) ** 2 / expected).sum())
    return stat, float(stats.chi2.ppf(QUANTILE, observed.size - 1))


def joint_counts(cells: np.ndarray, cols, m: int) -> np.ndarray:
    key = np.zeros(len(cells), dtype=np.int64)
    for c in cols:
        key = (key << m) | cells[:, c]
    return np.bincount(key, minlength=1 << (m * len(cols)))


def all_checks(n: int, m: int, k: int) -> list[tuple[str, float, float]]:
    """(label, statistic, critical) for each marginal, each pair, and the full k-joint."""
    cells = cell_draws(n, m, k)
    out = []
    groups = [(c,) for c in range(k)] + list(itertools.combinations(range(k), 2))
    if k > 2:
        groups.append(tuple(range(k)))
    for cols in groups:
        stat, crit = chi2_stat(joint_counts(cells, cols, m))
        out.append((f"inputs {cols}", stat, crit))
    return out
