"""
Searching for violations of delta(x, y) <= deg h(x, y) - 1
==========================================================

Random seeded instances are drawn and every pair of equivalent Apery
points is tested. Restricted to adjacent pairs no violation appears. Over
all pairs the search does turn up violations, one of which is replayed
below.
"""

from semigroup_reg import SemigroupPresentation
from semigroup_reg.cli import search
from semigroup_reg.sequences import check_pair, delta_set, enumerate_full

cfg = {"seed": 1, "trials": 200, "alpha_min": 3, "alpha_max": 25, "d_min": 2, "d_max": 2,
       "c_min": 1, "c_max": 6, "max_seqs": 10 ** 6, "max_pairs": 10 ** 7, "field": "q"}

for scope in ("adjacent-only", "all-pairs"):
    records, summary = search(dict(cfg, scope=scope))
    print(f"{scope:14s} pairs {summary['pairs']:4d}  violations {summary['violations']}"
          f"  indeterminate {summary['indeterminate']}")

# a small violating pair: each point has a single full sequence
P = SemigroupPresentation(2, 14, [(13, 1), (4, 10)])
x, y = (104, 8), (20, 50)
[lam] = enumerate_full(P, x)
[nu] = enumerate_full(P, y)
print("Delta:", delta_set(lam, nu, 14))
v = check_pair(P, x, y)
print(f"delta = {v.value}, deg h - 1 = {v.deg_h - 1}: {v.verdict}")
