"""Export the isolation query as QDIMACS for an external QBF solver.

The prefix is exists-hash, forall-assignments, then an innermost exists
block of Tseitin variables.  Pass the file to any QDIMACS solver, or point
the oracle at one with --oracle external:PATH.
"""

from auditcount import CnfFormula
from auditcount.encoder import build_stock, to_qdimacs
from auditcount.oracle import literal_sweep, two_qbf_check

f = CnfFormula.from_clauses(2, [(1, 2)])
q = build_stock(f, 1)
text = to_qdimacs(q).decode()
print("\n".join(text.splitlines()[:6]))
print("...")
print(q.budget.csv_row())

# 3 solutions cannot be isolated by one 1-bit hash; both deciders agree
print("semantic oracle:", two_qbf_check(q).ret, " literal sweep:", literal_sweep(q))
print("with m = 2:", two_qbf_check(build_stock(f, 2)).ret)
