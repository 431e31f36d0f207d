"""Lattice points, homogeneous simplicial semigroups and membership.

A presentation is ``(d, alpha, extras)``: the semigroup is generated by the
scaled unit vectors ``alpha * e_i`` together with the extra generators, all
of coordinate sum ``alpha``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd


def as_point(x):
    return tuple(int(c) for c in x)


def degree(x, alpha):
    """Exact degree ``sum(x) / alpha`` as a Fraction."""
    return Fraction(sum(x), alpha)


def residue(x, alpha):
    return tuple(c % alpha for c in x)


def add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def leq(x, y):
    """Componentwise ``x <= y``."""
    return all(a <= b for a, b in zip(x, y))


def meet(x, y):
    return tuple(min(a, b) for a, b in zip(x, y))


def join(x, y):
    return tuple(max(a, b) for a, b in zip(x, y))


@dataclass(frozen=True)
class SemigroupPresentation:
    d: int
    alpha: int
    extras: tuple
    _member: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "extras", tuple(as_point(a) for a in self.extras))

    @property
    def c(self):
        return len(self.extras)

    @property
    def units(self):
        """The scaled unit vectors ``alpha * e_i``."""
        return tuple(
            tuple(self.alpha if k == i else 0 for k in range(self.d)) for i in range(self.d)
        )

    @property
    def generators(self):
        return self.units + self.extras

    def zero(self):
        return (0,) * self.d

    def to_dict(self):
        return {"d": self.d, "alpha": self.alpha, "generators": [list(a) for a in self.extras]}


@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def valid(self):
        return not self.errors

    @property
    def gcd_ok(self):
        return not self.warnings

    def to_dict(self):
        return {"valid": self.valid, "errors": list(self.errors), "warnings": list(self.warnings)}


def validate(P):
    rep = ValidationReport()
    if not isinstance(P.d, int) or P.d < 2:
        rep.errors.append(f"dimension d={P.d} must be an integer >= 2")
    if not isinstance(P.alpha, int) or P.alpha < 1:
        rep.errors.append(f"alpha={P.alpha} must be a positive integer")
    if P.c < 1:
        rep.errors.append("at least one extra generator is required (c >= 1)")
    if rep.errors:
        return rep
    units = set(P.units)
    seen = set()
    for a in P.extras:
        if len(a) != P.d:
            rep.errors.append(f"generator {a} has length {len(a)}, expected {P.d}")
            continue
        if any(v < 0 for v in a):
            rep.errors.append(f"generator {a} has a negative coordinate")
        if sum(a) != P.alpha:
            rep.errors.append(f"generator {a} has coordinate sum {sum(a)}, expected {P.alpha}")
        if a in units:
            rep.errors.append(f"generator {a} coincides with a scaled unit vector")
        if a in seen:
            rep.errors.append(f"generator {a} is repeated")
        seen.add(a)
    if not rep.errors:
        g = reduce(gcd, (v for a in P.extras for v in a), 0)
        if g != 1:
            rep.warnings.append(f"coordinates of the extra generators are not coprime (gcd {g})")
    return rep


def is_member(P, x):
    """Decide whether ``x`` lies in the semigroup generated by ``P``.

    Degree-descending search: ``x`` is a member iff it is zero or some
    generator can be subtracted leaving a member. Results are cached on the
    presentation, so repeated queries are cheap.
    """
    x = as_point(x)
    if any(v < 0 for v in x) or sum(x) % P.alpha:
        return False
    cache = P._member
    known = cache.get(x)
    if known is not None:
        return known
    gens = P.generators
    stack = [x]
    # explicit stack: degrees can exceed the recursion limit
    while stack:
        y = stack[-1]
        if y in cache:
            stack.pop()
            continue
        if not any(y):
            cache[y] = True
            stack.pop()
            continue
        pending = None
        found = False
        for g in gens:
            z = sub(y, g)
            if any(v < 0 for v in z):
                continue
            r = cache.get(z)
            if r:
                found = True
                break
            if r is None:
                pending = z
                break
        if found:
            cache[y] = True
            stack.pop()
        elif pending is not None:
            stack.append(pending)
        else:
            cache[y] = False
            stack.pop()
    return cache[x]


def class_count(P):
    """Order of the subgroup of ``(Z/alpha)^d`` generated by the extras' residues."""
    alpha = P.alpha
    gens = [residue(a, alpha) for a in P.extras]
    seen = {P.zero()}
    frontier = [P.zero()]
    while frontier:
        nxt = []
        for r in frontier:
            for g in gens:
                s = tuple((u + v) % alpha for u, v in zip(r, g))
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return len(seen)
