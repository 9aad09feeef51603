"""How big is the query an auditor must hand to its oracle?

Each row is the variable budget of the existential-shaped audit query at
the worst-case exit for that algorithm.  Stock grows like n'^2, the
equal-cells audit like n (times its cell bound), the two-sided audit like n'.
"""

from auditcount.auditors import closed_form, complexity_csv, measure_audit_complexity
from auditcount.corpus import random_formula

rows = measure_audit_complexity([random_formula(n, 4 * n, n) for n in (4, 8, 12, 16, 20)])
print(complexity_csv(rows))

table = {(r.algorithm, r.n): r.query_vars_total for r in rows}
for n in (8, 12, 16, 20):
    print(f"n={n:>2}: stock/af = {table['stock', n] / table['af', n]:6.1f}   (n/4 = {n / 4})")

print("closed forms hold:", all(r.query_vars_total == closed_form(r.algorithm, r.n, r.exit_param)
                                for r in rows))
