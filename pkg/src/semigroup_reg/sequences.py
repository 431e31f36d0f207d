"""Sequences with the *-property, their coincidence sets and crosses.

A *-sequence of ``x`` is an ordered list of generators whose running
subtraction from ``x`` never leaves the semigroup. Full-length sequences
(length ``deg x``) end at 0. For two equivalent points, the coincidence
set Delta collects the index pairs whose partial points are congruent
modulo ``alpha``; ``delta = #Delta - 2``.

``delta_min`` computes the minimum of delta over all pairs of full
sequences without enumerating both sides: for a fixed sequence of ``x``
the count of coincidences along a sequence of ``y`` is additive over its
partial points, so the optimum over sequences of ``y`` is a shortest-path
problem on the remainders of ``y``.
"""
import random
from dataclasses import dataclass, field

from .apery import apery_classes
from .lattice import add, degree, is_member, meet, residue, sub

DEFAULT_MAX_SEQS = 10 ** 6
DEFAULT_MAX_PAIRS = 10 ** 7


class CapExceeded(RuntimeError):
    def __init__(self, what, count, cap):
        super().__init__(f"{what}: more than {cap} (stopped at {count})")
        self.what = what
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class StarSequence:
    base: tuple
    steps: tuple

    def __len__(self):
        return len(self.steps)

    def point(self, i):
        if not 0 <= i <= len(self.steps):
            raise IndexError(f"index {i} outside 0..{len(self.steps)}")
        x = self.base
        for g in self.steps[:i]:
            x = sub(x, g)
        return x

    def points(self):
        out = [self.base]
        for g in self.steps:
            out.append(sub(out[-1], g))
        return out

    def to_list(self):
        return [list(g) for g in self.steps]


def partial_point(lam, i):
    return lam.point(i)


def is_star_sequence(P, lam):
    return all(all(v >= 0 for v in p) and is_member(P, p) for p in lam.points()[1:])


def is_full(P, lam):
    return degree(lam.base, P.alpha) == len(lam) and is_star_sequence(P, lam)


def reverse(lam):
    return StarSequence(lam.base, lam.steps[::-1])


def _moves(P, r):
    """Generators whose removal from ``r`` stays inside B."""
    out = []
    for g in P.generators:
        z = sub(r, g)
        if all(v >= 0 for v in z) and is_member(P, z):
            out.append((g, z))
    return out


def iter_full(P, x):
    """Yield every full-length *-sequence of ``x`` (depth first, generator order)."""
    x = tuple(x)
    if not any(x):
        return
    path = []
    stack = [iter(_moves(P, x))]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            if path:
                path.pop()
            continue
        g, z = nxt
        path.append(g)
        if not any(z):
            yield StarSequence(x, tuple(path))
            path.pop()
        else:
            stack.append(iter(_moves(P, z)))


def enumerate_full(P, x, cap=DEFAULT_MAX_SEQS):
    out = []
    for lam in iter_full(P, x):
        if len(out) >= cap:
            raise CapExceeded(f"sequences of {tuple(x)}", len(out) + 1, cap)
        out.append(lam)
    return out


def count_full(P, x):
    """``#Lambda_x`` by counting paths, without enumerating them."""
    memo = {}

    def walk(r):
        if not any(r):
            return 1
        if r not in memo:
            memo[r] = sum(walk(z) for _, z in _moves(P, r))
        return memo[r]

    x = tuple(x)
    return walk(x) if any(x) else 0


def first_full(P, x):
    return next(iter_full(P, x), None)


def random_full(P, x, rng):
    """A random full-length sequence; every remainder in B has a next step."""
    x = tuple(x)
    steps = []
    r = x
    while any(r):
        g, r = rng.choice(_moves(P, r))
        steps.append(g)
    return StarSequence(x, tuple(steps))


# coincidences


def delta_set(lam, nu, alpha):
    rx = [residue(p, alpha) for p in lam.points()]
    where = {}
    for i, r in enumerate(rx):
        where.setdefault(r, []).append(i)
    out = []
    for j, p in enumerate(nu.points()):
        for i in where.get(residue(p, alpha), ()):
            out.append((i, j))
    return sorted(out)


def delta(lam, nu, alpha):
    return len(delta_set(lam, nu, alpha)) - 2


def h_min(x, y):
    return meet(x, y)


def _path_optimum(P, y, weight, better):
    """Best total weight over full sequences of ``y``.

    ``weight(r)`` scores each partial point (including ``y`` and 0);
    ``better(a, b)`` picks the preferred total. Returns (total, steps).
    """
    memo = {}
    stack = [y]
    while stack:
        r = stack[-1]
        if r in memo:
            stack.pop()
            continue
        if not any(r):
            memo[r] = (weight(r), None)
            stack.pop()
            continue
        moves = _moves(P, r)
        todo = [z for _, z in moves if z not in memo]
        if todo:
            stack.extend(todo)
            continue
        best = None
        for g, z in moves:
            v = memo[z][0]
            if best is None or better(v, best[0]) != best[0]:
                best = (v, g)
        memo[r] = (best[0] + weight(r), best[1])
        stack.pop()
    steps = []
    r = y
    while any(r):
        g = memo[r][1]
        steps.append(g)
        r = sub(r, g)
    return memo[y][0], StarSequence(y, tuple(steps))


@dataclass
class DeltaResult:
    """Outcome of an optimisation of delta over sequence pairs.

    ``value`` is exact or None when a cap stopped the search; ``bound`` is
    the best value seen (an upper bound for a minimum, a lower bound for a
    maximum) and is never reported as exact.
    """
    value: object
    bound: object
    witness: object = None
    outer_count: int = 0
    capped: bool = False

    @property
    def exact(self):
        return not self.capped


def _optimise(P, x, y, max_seqs, want_max):
    alpha = P.alpha
    x, y = tuple(x), tuple(y)
    nx, ny = count_full(P, x), count_full(P, y)
    swap = ny < nx
    outer, inner = (y, x) if swap else (x, y)
    better = max if want_max else min
    # for equivalent points Delta always holds the two corner pairs
    floor = 2 if residue(x, alpha) == residue(y, alpha) else 0
    best = None
    capped = False
    seen = 0
    for lam in iter_full(P, outer):
        if seen >= max_seqs:
            capped = True
            break
        seen += 1
        mult = {}
        for p in lam.points():
            r = residue(p, alpha)
            mult[r] = mult.get(r, 0) + 1
        total, nu = _path_optimum(P, inner, lambda r: mult.get(residue(r, alpha), 0), better)
        if best is None or better(total, best[0]) != best[0]:
            best = (total, lam, nu)
            if not want_max and total <= floor:
                break
    if best is None:
        return DeltaResult(None, None)
    wit = (best[2], best[1]) if swap else (best[1], best[2])
    val = best[0] - 2
    if capped:
        return DeltaResult(None, val, wit, seen, True)
    return DeltaResult(val, val, wit, seen)


def delta_min(P, x, y, max_seqs=DEFAULT_MAX_SEQS):
    """delta(x, y): the minimum of delta over Lambda_x x Lambda_y.

    For equivalent points of B_A the minimum is at least 0, which lets the
    search stop early.
    """
    return _optimise(P, x, y, max_seqs, want_max=False)


def delta_max(P, x, y, max_seqs=DEFAULT_MAX_SEQS):
    return _optimise(P, x, y, max_seqs, want_max=True)


def delta_min_bruteforce(P, x, y, max_pairs=DEFAULT_MAX_PAIRS):
    """Reference minimum by enumerating every pair of full sequences."""
    lams = enumerate_full(P, x, max_pairs)
    nus = enumerate_full(P, y, max_pairs)
    if len(lams) * len(nus) > max_pairs:
        raise CapExceeded("sequence pairs", len(lams) * len(nus), max_pairs)
    return min(delta(lam, nu, P.alpha) for lam in lams for nu in nus)


# crosses


@dataclass(frozen=True)
class CrossCertificate:
    """x(lam, i) ~ y(nu, k) and x(lam, j) ~ y(nu, l) with i < j, l < k."""
    lam: StarSequence
    nu: StarSequence
    i: int
    j: int
    l: int
    k: int

    @property
    def height(self):
        return (self.j - self.i, self.k - self.l)

    @property
    def indices(self):
        return (self.i, self.j, self.l, self.k)

    def is_valid(self, alpha):
        lam, nu = self.lam, self.nu
        if not (0 <= self.i < self.j <= len(lam) and 0 <= self.l < self.k <= len(nu)):
            return False
        return residue(lam.point(self.i), alpha) == residue(nu.point(self.k), alpha) and residue(
            lam.point(self.j), alpha
        ) == residue(nu.point(self.l), alpha)

    def to_dict(self):
        return {"i": self.i, "j": self.j, "l": self.l, "k": self.k, "height": list(self.height)}


def find_crosses(lam, nu, alpha):
    pairs = delta_set(lam, nu, alpha)
    out = []
    for i, k in pairs:
        for j, l in pairs:
            if i < j and l < k:
                out.append(CrossCertificate(lam, nu, i, j, l, k))
    return out


def is_crossless(lam, nu, alpha):
    pairs = delta_set(lam, nu, alpha)
    return all(
        (a <= c and b <= e) or (a >= c and b >= e) for a, b in pairs for c, e in pairs
    )


def maximal_cross(crosses):
    """Largest ``j - i``; ties by smallest ``i``, then smallest ``l``."""
    if not crosses:
        return None
    return min(crosses, key=lambda c: (-(c.j - c.i), c.i, c.l))


def _crossless_partner(P, lam, y):
    """A sequence of ``y`` forming a crossless pair with ``lam``, or None.

    Reading the partial points of y in order, the matched indices of lam
    must never decrease; the state is (remainder, largest matched index).
    """
    alpha = P.alpha
    where = {}
    for i, p in enumerate(lam.points()):
        where.setdefault(residue(p, alpha), []).append(i)
    memo = {}

    def step(last, r):
        hit = where.get(residue(r, alpha))
        if not hit:
            return last
        if hit[0] < last:
            return None
        return hit[-1]

    def feasible(r, last):
        key = (r, last)
        if key in memo:
            return memo[key]
        nl = step(last, r)
        if nl is None:
            ans = None
        elif not any(r):
            ans = ()
        else:
            ans = None
            for g, z in _moves(P, r):
                tail = feasible(z, nl)
                if tail is not None:
                    ans = (g,) + tail
                    break
        memo[key] = ans
        return ans

    steps = feasible(tuple(y), -1)
    return None if steps is None else StarSequence(tuple(y), steps)


@dataclass
class CrosslessResult:
    value: object
    witness: object = None
    capped: bool = False


def are_crossless(P, x, y, max_seqs=DEFAULT_MAX_SEQS):
    """Whether some pair in Lambda_x x Lambda_y is crossless.

    ``value`` is None when the outer enumeration hit the cap without
    finding a crossless pair.
    """
    seen = 0
    for lam in iter_full(P, x):
        if seen >= max_seqs:
            return CrosslessResult(None, capped=True)
        seen += 1
        nu = _crossless_partner(P, lam, y)
        if nu is not None:
            return CrosslessResult(True, (lam, nu))
    return CrosslessResult(False)


def glue_crosses(lam, nu, first, second, alpha):
    """Merge two stacked crosses into one whose height is the sum.

    ``first`` and ``second`` are (i, j, l, k) index tuples of crosses on
    (lam, nu) with ``j <= i'`` and ``k <= l'``. Returns the rearranged
    sequences and the certificate of the glued cross.
    """
    i, j, l, k = first
    i2, j2, l2, k2 = second
    for t in (first, second):
        if not CrossCertificate(lam, nu, *t).is_valid(alpha):
            raise ValueError(f"{t} is not a cross on the given sequences")
    if j > i2 or k > l2:
        raise ValueError("crosses must satisfy j <= i' and k <= l'")
    b, g = lam.steps, nu.steps
    lam2 = StarSequence(lam.base, b[j:j2] + b[i:j] + b[:i] + b[j2:])
    nu2 = StarSequence(nu.base, g[k:k2] + g[l:k] + g[:l] + g[k2:])
    cert = CrossCertificate(lam2, nu2, i2 - j, j2 - i, l2 - k, k2 - l)
    if not cert.is_valid(alpha):
        raise AssertionError("glued cross failed validation")
    return lam2, nu2, cert


def reduce_to_apery(P, z):
    """Remove scaled unit vectors from ``z`` as often as possible inside B.

    Among reductions with the largest total count, the lexicographically
    largest count vector wins. The reachable count vectors form a down-set,
    so a search by single unit steps finds all of them.
    """
    z = tuple(z)
    alpha = P.alpha
    zero = (0,) * P.d
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for n in frontier:
            for u in range(P.d):
                m = n[:u] + (n[u] + 1,) + n[u + 1:]
                if m in seen:
                    continue
                w = tuple(a - alpha * c for a, c in zip(z, m))
                if min(w) >= 0 and is_member(P, w):
                    seen.add(m)
                    nxt.append(m)
        frontier = nxt
    best = max(seen, key=lambda n: (sum(n), n))
    return tuple(a - alpha * c for a, c in zip(z, best))


def third_element(P, cross):
    """A third element of the class of two crossed Apery points.

    With cross (i, j, l, k) the point ``x(lam, j) + (y - y(nu, l))`` is
    equivalent to both and strictly below each of them in some coordinate;
    reducing it into B_A gives an element different from both.
    """
    lam, nu = cross.lam, cross.nu
    y = nu.base
    zp = add(lam.point(cross.j), sub(y, nu.point(cross.l)))
    return reduce_to_apery(P, zp)


def is_adjacent(cls, x, y):
    """No third element of the class lies strictly between x and y."""
    x, y = tuple(x), tuple(y)
    if len(x) != 2:
        raise ValueError("adjacency is only defined for d = 2")
    if x == y:
        raise ValueError("adjacency needs two distinct points")
    for z in cls.elements:
        if z in (x, y):
            continue
        if all(min(a, b) < c < max(a, b) for a, b, c in zip(x, y, z)):
            return False
    return True


# conjecture


SCOPES = ("all-pairs", "adjacent-only", "strong")


@dataclass
class PairVerdict:
    x: tuple
    y: tuple
    deg_h: int
    value: object
    bound: object
    verdict: str
    witness: object = None

    def to_dict(self):
        out = {
            "x": list(self.x),
            "y": list(self.y),
            "deg_h": self.deg_h,
            "delta": self.value,
            "bound": self.bound,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = {"lambda": self.witness[0].to_list(), "nu": self.witness[1].to_list()}
        return out


@dataclass
class ConjectureReport:
    scope: str
    pairs: list = field(default_factory=list)

    def count(self, verdict):
        return sum(p.verdict == verdict for p in self.pairs)

    @property
    def violations(self):
        return [p for p in self.pairs if p.verdict == "violated"]

    def to_dict(self):
        return {
            "scope": self.scope,
            "pairs": len(self.pairs),
            "holds": self.count("holds"),
            "violated": self.count("violated"),
            "indeterminate": self.count("indeterminate"),
            "violations": [p.to_dict() for p in self.violations],
        }


def check_pair(P, x, y, strong=False, max_seqs=DEFAULT_MAX_SEQS):
    """Test delta(x, y) <= deg h(x, y) - 1 (or the per-pair strong form)."""
    x, y = tuple(x), tuple(y)
    dh = int(degree(h_min(x, y), P.alpha))
    res = delta_max(P, x, y, max_seqs) if strong else delta_min(P, x, y, max_seqs)
    if res.capped:
        verdict = "indeterminate"
    else:
        verdict = "holds" if res.value <= dh - 1 else "violated"
    wit = res.witness if verdict == "violated" else None
    return PairVerdict(x, y, dh, res.value, res.bound, verdict, wit)


def conjecture_pairs(P, scope, classes=None):
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    if classes is None:
        classes = apery_classes(P)
    if scope == "adjacent-only" and P.d != 2:
        raise ValueError("adjacent-only scope needs d = 2")
    for cls in classes:
        els = [e for e in cls.elements if any(e)]
        for a in range(len(els)):
            for b in range(a + 1, len(els)):
                if scope == "adjacent-only" and not is_adjacent(cls, els[a], els[b]):
                    continue
                yield els[a], els[b]


def check_conjecture(P, scope="all-pairs", max_seqs=DEFAULT_MAX_SEQS, classes=None):
    rep = ConjectureReport(scope)
    for x, y in conjecture_pairs(P, scope, classes):
        rep.pairs.append(check_pair(P, x, y, scope == "strong", max_seqs))
    return rep


def sample_sequences(P, x, n, seed=0):
    rng = random.Random(seed)
    return [random_full(P, x, rng) for _ in range(n)]
