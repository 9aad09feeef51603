"""The frozen benchmark corpus: 40 small CNFs with known model counts.

The files under ``data/corpus`` were written by ``generate_corpus()``; a test
regenerates them and compares byte for byte.  Counts are capped per copy
factor so that |sol(F')| stays below about 2^16 and a full sweep of both
counters stays quick.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

import numpy as np

from .formula import CnfFormula, copies_for, exact_count, parse_dimacs, to_dimacs

CORPUS_SEED = 20240611
N_RANDOM = 26


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    formula: CnfFormula
    count: int


def count_cap(n: int) -> int:
    return {2: 16, 3: 32, 4: 12}[copies_for(n)]


def _random_3cnf(n: int, k: int, rng: np.random.Generator) -> CnfFormula:
    clauses = []
    for _ in range(k):
        vs = rng.choice(n, size=3, replace=False) + 1
        signs = rng.integers(0, 2, size=3)
        clauses.append(tuple(int(v) if s else -int(v) for v, s in zip(vs, signs)))
    return CnfFormula.from_clauses(n, clauses)


def _random_entries(rng: np.random.Generator) -> list[tuple[str, CnfFormula]]:
    out = []
    ns = [4, 5, 6, 7, 8, 9, 10]
    i = 0
    while len(out) < N_RANDOM:
        n = ns[i % len(ns)]
        i += 1
        lo = 1 if len(out) % 3 == 0 else 2
        for _ in range(10_000):
            k = int(rng.integers(n, 6 * n))
            f = _random_3cnf(n, k, rng)
            cnt = exact_count(f)
            if lo <= cnt <= count_cap(n):
                out.append((f"r3_n{n:02d}_{len(out):02d}", f))
                break
    return out


def _exactly_one(vs) -> list[tuple[int, ...]]:
    return [tuple(vs)] + [(-a, -b) for a, b in itertools.combinations(vs, 2)]


def _at_most_one(vs) -> list[tuple[int, ...]]:
    return [(-a, -b) for a, b in itertools.combinations(vs, 2)]


def _parity(vs, odd: bool = True) -> list[tuple[int, ...]]:
    out = []
    for signs in itertools.product((1, -1), repeat=len(vs)):
        # forbid each assignment of the wrong parity
        negatives = sum(1 for s in signs if s < 0)
        if (negatives % 2 == 0) == odd:
            out.append(tuple(s * v for s, v in zip(signs, vs)))
    return out


def _chain(vs) -> list[tuple[int, ...]]:
    return [(-a, b) for a, b in zip(vs, vs[1:])]


def _structured() -> list[tuple[str, CnfFormula]]:
    r = lambda a, b: list(range(a, b + 1))  # noqa: E731
    specs = [
        ("taut_n04", 4, []),
        ("units_n05", 5, [(1,), (-2,), (3,), (-4,), (5,)]),
        ("units_n10", 10, [((v if v % 2 else -v),) for v in r(1, 10)]),
        ("chain_n06", 6, _chain(r(1, 6))),
        ("chain_n09", 9, _chain(r(1, 9))),
        ("amo_n05", 5, _at_most_one(r(1, 5))),
        ("amo_n07", 7, _at_most_one(r(1, 7))),
        ("exactly1_n08", 8, _exactly_one(r(1, 8))),
        ("parity_n05", 5, _parity(r(1, 5))),
        ("parity_n06", 6, _parity(r(1, 6), odd=False)),
        ("alleq_n07", 7, [c for a, b in zip(r(1, 7), r(2, 7)) for c in ((-a, b), (a, -b))]),
        ("free2_n06", 6, [(3,), (-4,), (5,), (6,)]),
        ("exactly1_fixed_n10", 10, _exactly_one(r(1, 4)) + [((v if v % 2 else -v),) for v in r(5, 10)]),
        ("chain_amo_n08", 8, _chain(r(1, 4)) + _at_most_one(r(5, 8)) + [(-1, -5)]),
    ]
    return [(name, CnfFormula.from_clauses(n, cl, name=name)) for name, n, cl in specs]


def generate_corpus(seed: int = CORPUS_SEED) -> list[tuple[str, CnfFormula]]:
    rng = np.random.default_rng(seed)
    return _random_entries(rng) + _structured()


def corpus_text(name: str, f: CnfFormula) -> str:
    return f"c {name}\nc count {exact_count(f)}\n" + to_dimacs(f)


def write_corpus(directory: Path, seed: int = CORPUS_SEED) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, f in generate_corpus(seed):
        p = directory / f"{name}.cnf"
        p.write_text(corpus_text(name, f))
        paths.append(p)
    return paths


def corpus_dir() -> Path:
    return Path(str(resources.files("auditcount") / "data" / "corpus"))


def load_corpus(directory: Optional[Path] = None, max_n: Optional[int] = None) -> list[CorpusEntry]:
    """Corpus entries sorted by name; the recorded count comes from the file header."""
    directory = directory or corpus_dir()
    out = []
    for p in sorted(Path(directory).glob("*.cnf")):
        f = parse_dimacs(p.read_text())
        recorded = None
        for line in f.comments:
            toks = line.split()
            if len(toks) == 3 and toks[1] == "count":
                recorded = int(toks[2])
        f = CnfFormula(f.num_vars, f.clauses, name=p.stem, unsat=f.unsat, comments=f.comments)
        if max_n is not None and f.num_vars > max_n:
            continue
        out.append(CorpusEntry(p.stem, f, recorded if recorded is not None else exact_count(f)))
    return out


def random_formula(n: int, clauses: int, seed: int) -> CnfFormula:
    """A seeded random 3-CNF, used by the bench at sizes outside the corpus."""
    return _random_3cnf(n, clauses, np.random.default_rng(seed))
