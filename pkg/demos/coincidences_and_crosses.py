"""
Coincidences between sequences
==============================

Two equivalent Apery points x ~ y are peeled off one generator at a time.
Delta records the steps at which the remainders are again equivalent, and
a cross is a pair of such coincidences in opposite order.
"""

from semigroup_reg import SemigroupPresentation
from semigroup_reg.sequences import (
    StarSequence, delta_min, delta_set, enumerate_full, find_crosses, glue_crosses,
    h_min, is_crossless, third_element,
)
from semigroup_reg.lattice import degree

# a pair whose coincidences form a chain
P = SemigroupPresentation(2, 30, [(3, 27), (23, 7)])
x, y = (27, 243), (207, 63)
[lam] = enumerate_full(P, x)
[nu] = enumerate_full(P, y)
print("Delta:", delta_set(lam, nu, 30), "crossless:", is_crossless(lam, nu, 30))
print("delta(x,y) =", delta_min(P, x, y).value, " deg h =", degree(h_min(x, y), 30))

# a pair with a cross; the cross forces a third element into the class
P = SemigroupPresentation(2, 79, [(77, 2), (34, 45)])
x, y = (1232, 32), (442, 585)
[lam] = enumerate_full(P, x)
[nu] = enumerate_full(P, y)
print("Delta:", delta_set(lam, nu, 79))
[cross] = find_crosses(lam, nu, 79)
print("cross (i, j, l, k) =", cross.indices, "height", cross.height)
print("third element of the class:", third_element(P, cross))

# two stacked crosses can be glued into one whose height is the sum
lam = StarSequence((0, 8), ((0, 2),) * 4)
_, _, glued = glue_crosses(lam, lam, (0, 1, 0, 1), (2, 3, 2, 3), 2)
print("glued cross", glued.indices, "height", glued.height)
