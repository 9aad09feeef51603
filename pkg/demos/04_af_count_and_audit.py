"""The two-sided counter: a lower bound from holes, an upper bound from isolation.

c_low is the last m where m+1 hashes leave no empty cell; c_high is the
first m where m hashes isolate every solution.  Their gap is at most 7, and
the certificate carries both hash tuples so an auditor can check both sides
with one combined query.  c_low can exceed c_high; only the gap is bounded.
"""

import dataclasses

from auditcount import HashFunction, HashTuple, af_count, count_audit, read_certificate, write_certificate
from auditcount.corpus import load_corpus

results = {}
for e in load_corpus()[:6]:
    res = af_count(e.formula)
    c = res.certificate
    results[e.name] = (e, c)
    rep = count_audit(e.formula, read_certificate(write_certificate(c)))
    print(f"{e.name:>14}  exact {e.count:>3}  estimate {res.estimate.decimal:>10}  "
          f"c_low {c.c_low:>2}  c_high {c.c_high:>2}  audit {rep.verdict}  query_vars {rep.query_vars.total}")

# tamper: lower c_low by 8 (and cut the holes tuple to match) so the gap exceeds 7
e, c = results["chain_n09"]
lo = c.c_low - 8
holes = HashTuple(tuple(HashFunction(h.n, lo, h.k, h.coeffs) for h in c.hashes_holes[:lo + 1]))
bad = dataclasses.replace(c, c_low=lo, hashes_holes=holes)
rep = count_audit(e.formula, bad)
print(f"tampered chain_n09 certificate: {rep.verdict} ({rep.reason})")
