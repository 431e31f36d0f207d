"""
Decomposing a monomial curve
============================

A projective monomial curve in P^5 of degree 12, written as the affine
semigroup generated by (12,0), (0,12) and four extra points on the line
x + y = 12. We split K[B] into shifted monomial ideals and read off the
regularity.
"""

from semigroup_reg import SemigroupPresentation, decompose, gap_report, check_eisenbud_goto

P = SemigroupPresentation(2, 12, [(11, 1), (9, 3), (4, 8), (1, 11)])

# every Apery class contributes one summand I_t shifted by deg h_t
rep = decompose(P)
for s in rep.summands:
    print(f"class {s.index:2d}  {str(s.cls.elements):28s} ideal {str(s.ideal):22s}"
          f" reg {s.reg} + shift {s.shift_degree} = {s.total}")

# the regularity is the largest reg I_t + deg h_t; only the three-element class reaches it
print("reg K[B] =", rep.reg, "attained by classes", rep.gamma)

# the degree is the number of classes, the codimension the number of extras
v = check_eisenbud_goto(P, report=rep)
print(f"reg {v.reg} <= deg - codim = {v.bound} (margin {v.margin}); proved regimes: {v.regimes}")

# gaps on the degree-one line give two classical bounds for smooth curves
g = gap_report(P)
print("gaps", g.gaps, "L'vovsky bound", g.lvovsky_bound, "HHS bound", g.hhs_bound)

# smooth rational curves in P^3 are the sharp family: reg = deg - codim
for alpha in (4, 7, 10):
    r = decompose(SemigroupPresentation(2, alpha, [(alpha - 1, 1), (1, alpha - 1)]))
    print(f"alpha={alpha}: reg {r.reg}, deg - codim {r.eg_bound}, modules {r.module_multiset()}")
