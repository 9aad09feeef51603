"""The equal-cells counter at desk scale.

With the large default constants no formula here can reach a live witness,
so the counter counts directly.  Passing a small ell_base runs the hashing
loop instead and produces a certificate whose single hash splits sol(F) into
2^m cells holding between ell and u solutions each.
"""

from auditcount import CnfFormula, equal_cells_audit, equal_cells_count
from auditcount.gf2hash import eval_hash
from auditcount.formula import enumerate_solutions

f = CnfFormula.from_clauses(6, [(1, 2), (-3, 4)])
sols = enumerate_solutions(f).solutions
print("exact count:", len(sols))

direct = equal_cells_count(f)
print("default constants:", direct.path, direct.estimate)

res = equal_cells_count(f, ell_base=2)
cert = res.certificate
print(f"loop path: m = {cert.m}, ell = {cert.ell}, u = {cert.u}, estimate {res.estimate}")
h = cert.hashes[0]
sizes = [0] * (1 << cert.m)
for s in sols:
    sizes[eval_hash(h, int(s))] += 1
print("cell sizes:", sizes)

rep = equal_cells_audit(f, cert)
print(rep.verdict, "bounds", rep.implied_bounds, "query_vars", rep.query_vars.total)
