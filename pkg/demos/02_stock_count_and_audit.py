"""Count a small formula with the stock counter, then audit its certificate.

The counter works on F' (F copied so the 16x bracket tightens) and stops at
the first v where v hashes can isolate every solution.  The auditor checks
that those hashes really do isolate, and that no v-1 tuple could.
"""

from auditcount import CnfFormula, exact_count, stock_audit, stock_count, write_certificate

# exactly one of x1..x3 is true, x4 free: 6 solutions
f = CnfFormula.from_clauses(4, [(1, 2, 3), (-1, -2), (-1, -3), (-2, -3)])
print("exact count:", exact_count(f))

res = stock_count(f)
cert = res.certificate
print(f"estimate {res.estimate} = {res.estimate.decimal}, copies {cert.copies}, v = {cert.v}")
print("oracle calls:", res.ledger.count(), "mode:", res.mode)
print("certificate bytes:", len(write_certificate(cert)))

rep = stock_audit(f, cert)
lo, hi = rep.implied_bounds
print(rep.verdict, rep.checks)
print(f"implied bounds on |sol(F')|: [{lo}, {hi}], true value {exact_count(f) ** cert.copies}")
print("audit query_vars:", rep.query_vars.total)
