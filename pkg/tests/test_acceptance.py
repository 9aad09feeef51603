"""Acceptance criteria 1 to 9, one test each.

Every test prints a single PASS or FAIL line (shown even when pytest captures
output) and then asserts.  ``python3 tests/test_acceptance.py`` runs them all
outside pytest.
"""

import json
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from auditcount.auditors import REJECTED, VERIFIED, closed_form, count_audit, measure_audit_complexity
from auditcount.corpus import random_formula
from auditcount.encoder import build_cells, build_holes, build_stock
from auditcount.formula import enumerate_solutions
from auditcount.gf2hash import sample_tuple
from auditcount.oracle import Oracle, OracleConfig, holes_holds, literal_sweep, stock_holds

import hashstats
import mutations
import pipeline
from instances import equivalence_instances

CELLS_BOUNDS = ((1, 2), (1, 4), (2, 8), (1, 16))
SEEDS = 200


_capman = None


@pytest.fixture(autouse=True)
def _uncaptured(pytestconfig):
    # lets report() print its line even while pytest captures output
    global _capman
    _capman = pytestconfig.pluginmanager.getplugin("capturemanager")
    yield
    _capman = None


def report(n: int, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    if _capman is not None:
        with _capman.global_and_fixture_disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


def corpus():
    return list(pipeline.corpus_by_name().values())


def test_1_approximation_bracket():
    bad = []
    for e in corpus():
        for alg, res in (("stock", pipeline.stock_result(e.name)), ("af", pipeline.af_result(e.name))):
            est = res.estimate
            if est.compare(Fraction(e.count, 16)) < 0 or est.compare(16 * e.count) > 0:
                bad.append((alg, e.name, str(est), e.count))
    n = len(corpus())
    report(1, not bad, f"count/16 <= Cest <= 16 count on {n - len({b[1] for b in bad})}/{n} "
                       f"formulas for stock and af {bad or ''}".rstrip())


def test_2_gap_bound():
    gaps, retried = [], []
    for e in corpus():
        res = pipeline.af_result(e.name)
        c = res.certificate
        if c.c_high - c.c_low > 7:
            gaps.append(e.name)
        if res.retries:
            retried.append(e.name)
    n = len(corpus())
    ok = not gaps and n - len(retried) >= 38
    report(2, ok, f"c_high - c_low <= 7 on {n - len(gaps)}/{n}, no retry on {n - len(retried)}/{n}")


def test_3_sandwich_soundness():
    oracle = Oracle(OracleConfig(seed=0, trials=64))
    checked, violations = 0, []
    for e in corpus():
        f, count = e.formula, e.count
        if f.num_vars > 6:
            continue
        for m in range(1, f.num_vars + 1):
            if oracle.two_qbf_check(build_stock(f, m)).ret:
                checked += 1
                if count > m * 2 ** m:
                    violations.append(("stock", e.name, m))
            if oracle.three_qbf_check(build_holes(f, m)).ret:
                checked += 1
                if (m + 1) * count < 2 ** m:
                    violations.append(("holes", e.name, m))
            for ell, u in CELLS_BOUNDS:
                if oracle.three_qbf_check(build_cells(f, m, ell, u)).ret:
                    checked += 1
                    if not ell * 2 ** m <= count <= u * 2 ** m:
                        violations.append(("cells", e.name, m, ell, u))
    report(3, not violations and checked > 0,
           f"{checked} true answers on n <= 6, {len(violations)} sandwich violations {violations or ''}".rstrip())


def test_4_single_draw_success_rates():
    worst_stock, worst_holes, cases = 1.0, 1.0, 0
    failures = []
    for e in corpus():
        f, count = e.formula, e.count
        n = f.num_vars
        sols = enumerate_solutions(f).solutions
        for m in range(1, n + 1):
            if count <= 2 ** (m - 2):
                hits = sum(stock_holds(sample_tuple(m, n, m, 2, np.random.default_rng([s, 1, m])), sols)
                           for s in range(SEEDS))
                rate, need = hits / SEEDS, 1 - 2 ** -m - 0.05
                worst_stock = min(worst_stock, rate - need)
                cases += 1
                if rate < need:
                    failures.append(("stock", e.name, m, rate))
            if count >= 2 ** (m + 3):
                hits = sum(holes_holds(sample_tuple(m + 1, n, m, 2, np.random.default_rng([s, 2, m])), sols, m)
                           for s in range(SEEDS))
                rate = hits / SEEDS
                worst_holes = min(worst_holes, rate)
                cases += 1
                if rate < 0.45:
                    failures.append(("holes", e.name, m, rate))
    report(4, not failures,
           f"{cases} (instance, m) cases over {SEEDS} seeds, stock min margin {worst_stock:+.3f}, "
           f"holes min rate {worst_holes:.3f} {failures or ''}".rstrip())


def test_5_audit_completeness_and_mutations():
    verified = sum(count_audit(e.formula, pipeline.af_result(e.name).certificate).verdict == VERIFIED
                   for e in corpus())
    muts = mutations.af_mutations()
    rejected = sum(count_audit(f, c).verdict == REJECTED for _, f, c in muts)
    n = len(corpus())
    report(5, verified == n and rejected == len(muts) == 15,
           f"count_audit verified {verified}/{n}, rejected {rejected}/{len(muts)} tampered certificates")


def test_6_audit_complexity():
    rows = measure_audit_complexity([random_formula(n, 4 * n, n) for n in (8, 12, 16)])
    exact = all(r.query_vars_total == closed_form(r.algorithm, r.n, r.exit_param) for r in rows)
    t = {(r.algorithm, r.n): r.query_vars_total for r in rows}
    parts, ordered = [], True
    for n in (8, 12, 16):
        a, c, s = t["af", n], t["cells", n], t["stock", n]
        ordered &= a < c < s and s / a >= n / 4
        parts.append(f"n={n}: {a} < {c} < {s}, ratio {s / a:.1f}")
    report(6, exact and ordered, f"closed forms {'exact' if exact else 'MISMATCH'}; " + "; ".join(parts))


def test_7_hash_statistics():
    worst, bad = 0.0, []
    for cfg in hashstats.CONFIGS:
        for label, stat, crit in hashstats.all_checks(*cfg):
            worst = max(worst, stat / crit)
            if stat > crit:
                bad.append((cfg, label, round(stat, 1), round(crit, 1)))
    report(7, not bad, f"chi-square below the 0.999 quantile for {hashstats.CONFIGS}, "
                       f"max stat/critical {worst:.3f} {bad or ''}".rstrip())


def test_8_dual_path_equivalence():
    oracle = Oracle(OracleConfig(exhaustive_bits=16))
    qs = equivalence_instances()
    bad = [(q.family, q.m) for q in qs if oracle.decide(q).ret != literal_sweep(q)]
    report(8, not bad, f"{len(qs)} instances across {len({q.family for q in qs})} families, "
                       f"{len(bad)} disagreements")


PIPELINE = r"""
import sys
from pathlib import Path
from auditcount.cli import main
from auditcount.corpus import corpus_dir
out = Path(sys.argv[1])
for src in sorted(corpus_dir().glob("*.cnf")):
    for alg in ("stock", "af"):
        cert = out / f"{src.stem}.{alg}.json"
        assert main(["count", "-i", str(src), "--alg", alg, "--cert", str(cert)]) in (0, 2)
        if cert.exists():
            main(["audit", "-i", str(src), "--cert", str(cert), "--out", str(out / f"{src.stem}.{alg}.report.json")])
assert main(["bench", "--out", str(out / "bench.csv")]) == 0
"""


def pipeline_run(directory: Path) -> dict:
    subprocess.run([sys.executable, "-c", PIPELINE, str(directory)], check=True,
                   capture_output=True, text=True)
    return {p.name: p.read_bytes() for p in sorted(directory.iterdir())}


def test_9_determinism():
    with tempfile.TemporaryDirectory() as a, tempfile.TemporaryDirectory() as b:
        first, second = pipeline_run(Path(a)), pipeline_run(Path(b))
    certs = sum(1 for k in first if k.endswith(".json") and "report" not in k)
    reports = sum(1 for k in first if "report" in k)
    same = first == second and certs > 0 and "bench.csv" in first
    for k in first:
        if k.endswith(".report.json"):
            same &= json.loads(first[k])["verdict"] in ("Verified", "Rejected")
    report(9, same, f"two runs byte-identical over {certs} certificates, {reports} reports and the bench CSV")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
