import itertools
import stat
import sys
from pathlib import Path

import pytest

from auditcount.corpus import load_corpus
from auditcount.formula import CnfFormula

TESTS = Path(__file__).parent
BRUTE_SOLVER = TESTS / "qbf_bruteforce.py"


def naive_count(f: CnfFormula) -> int:
    """Truth-table count written independently of the package's sweep."""
    if f.unsat:
        return 0
    total = 0
    for bits in itertools.product((False, True), repeat=f.num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in f.clauses):
            total += 1
    return total


def naive_solutions(f: CnfFormula) -> list[int]:
    out = []
    for x in range(1 << f.num_vars):
        if f.unsat:
            break
        if all(any(((x >> (abs(l) - 1)) & 1) == (l > 0) for l in c) for c in f.clauses):
            out.append(x)
    return out


def tautology(n: int) -> CnfFormula:
    return CnfFormula.from_clauses(n, [], name=f"taut{n}")


def make_script(directory: Path, name: str, body: str) -> Path:
    path = directory / name
    path.write_text(f"#!{sys.executable}\n{body}")
    path.chmod(path.stat().st_mode | stat.S_IEXEC)
    return path


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [e for e in corpus if e.formula.num_vars <= 6]


@pytest.fixture
def f2():
    return CnfFormula.from_clauses(2, [(1, 2)], name="F2")


@pytest.fixture(scope="session")
def brute_solver(tmp_path_factory):
    d = tmp_path_factory.mktemp("solver")
    return make_script(d, "brute", BRUTE_SOLVER.read_text())
