"""
Regularity beyond curves
========================

In four variables the ideals I_t no longer have the simple staircase
shape, so their regularity comes from Betti numbers computed over the lcm
lattice.
"""

from semigroup_reg import SemigroupPresentation, decompose, check_eisenbud_goto
from semigroup_reg.ideals import betti_numbers

P = SemigroupPresentation(4, 6, [(0, 2, 0, 4), (3, 0, 2, 1), (0, 2, 2, 2)])
rep = decompose(P)
print("classes:", rep.f, " reg K[B] =", rep.reg)

for t in rep.gamma:
    s = rep.summands[t - 1]
    print("attained by", s.cls.elements, "shift", s.cls.shift, "ideal", s.ideal)
    # Betti numbers by homological index and total degree
    print("graded Betti numbers:", betti_numbers(s.ideal).graded())
    print(f"reg I = {s.reg}, deg h = {s.shift_degree}")

print(check_eisenbud_goto(P, report=rep).to_dict())
