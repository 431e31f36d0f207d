"""Apery set of a presentation and its partition into residue classes."""
from dataclasses import dataclass

from .lattice import class_count, degree, is_member, residue, sub


class ConsistencyError(RuntimeError):
    """An internal invariant failed (a bug or an invalid presentation)."""


@dataclass(frozen=True)
class AperyClass:
    residue: tuple
    elements: tuple
    shift: tuple
    exponents: tuple

    def __len__(self):
        return len(self.elements)

    def shift_degree(self, alpha):
        return int(degree(self.shift, alpha))

    def to_dict(self, alpha):
        return {
            "residue": list(self.residue),
            "elements": [list(x) for x in self.elements],
            "shift": list(self.shift),
            "shift_degree": self.shift_degree(alpha),
            "exponents": [list(e) for e in self.exponents],
        }


def in_apery(P, x):
    """``x`` is in B and no scaled unit vector can be removed inside B."""
    if not is_member(P, x):
        return False
    for e in P.units:
        z = sub(x, e)
        if all(v >= 0 for v in z) and is_member(P, z):
            return False
    return True


def apery_levels(P):
    """Apery elements grouped by degree, as a list of sets.

    Level n is obtained from level n-1 by adding extra generators; adding a
    unit vector never yields an Apery element, and a non-Apery element has
    no Apery successors, so this reaches everything.
    """
    f = class_count(P)
    cap = f - P.c
    levels = [{P.zero()}]
    for _ in range(cap):
        nxt = set()
        for x in levels[-1]:
            for a in P.extras:
                y = tuple(u + v for u, v in zip(x, a))
                if y not in nxt and in_apery(P, y):
                    nxt.add(y)
        if not nxt:
            break
        levels.append(nxt)
    seen = {residue(x, P.alpha) for lvl in levels for x in lvl}
    if len(seen) != f:
        raise ConsistencyError(
            f"Apery enumeration found {len(seen)} residue classes, expected {f}"
        )
    return levels


def apery_set(P):
    return set().union(*apery_levels(P))


def shift_and_exponents(elements, alpha):
    elements = list(elements)
    if not elements:
        raise ValueError("empty class")
    h = tuple(min(col) for col in zip(*elements))
    exps = []
    for x in elements:
        diff = sub(x, h)
        if any(v % alpha for v in diff):
            raise ConsistencyError(f"{x} - {h} is not divisible by {alpha}")
        exps.append(tuple(v // alpha for v in diff))
    return h, exps


def partition_classes(P, apery=None):
    """Group the Apery set by residue.

    Order: the class of 0, then the singleton classes of the extras in input
    order, then the rest by residue. Elements within a class are sorted in
    decreasing lexicographic order.
    """
    if apery is None:
        apery = apery_set(P)
    alpha = P.alpha
    groups = {}
    for x in apery:
        groups.setdefault(residue(x, alpha), []).append(x)
    order = [P.zero()] + [residue(a, alpha) for a in P.extras]
    rest = sorted(r for r in groups if r not in set(order))
    classes = []
    for r in order + rest:
        if r not in groups:
            raise ConsistencyError(f"no Apery element with residue {r}")
        elems = tuple(sorted(groups.pop(r), reverse=True))
        h, exps = shift_and_exponents(elems, alpha)
        classes.append(AperyClass(r, elems, h, tuple(exps)))
    f = class_count(P)
    if len(classes) != f:
        raise ConsistencyError(f"{len(classes)} classes, expected {f}")
    return classes


def apery_classes(P):
    return partition_classes(P, apery_set(P))
