"""Monomial ideals: minimal generators, multigraded Betti numbers, regularity.

Betti numbers are read off the upper Koszul simplicial complexes

    K^b(I) = {S subset of {1..d} : x^(b - 1_S) in I},

with beta_{i,b}(I) = dim reduced H_{i-1}(K^b(I)). Only multidegrees in the
lcm-lattice of the generators can carry nonzero Betti numbers.
"""
from dataclasses import dataclass
from itertools import combinations

from .lattice import join

MAX_GENERATORS = 20
MAX_LATTICE = 2 ** 20


class TooLargeError(ValueError):
    pass


def divides(u, v):
    return all(a <= b for a, b in zip(u, v))


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    generators: tuple

    def __len__(self):
        return len(self.generators)

    def contains(self, b):
        return any(divides(m, b) for m in self.generators)

    def __str__(self):
        def mono(e):
            parts = [f"y{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k]
            return "*".join(parts) or "1"

        return "(" + ", ".join(mono(e) for e in self.generators) + ")"


def minimalize(gens):
    """Drop repeated and divisibility-dominated exponent vectors.

    Output is sorted in decreasing lexicographic order.
    """
    gens = sorted({tuple(int(v) for v in g) for g in gens}, reverse=True)
    if not gens:
        raise ValueError("a monomial ideal needs at least one generator")
    dims = {len(g) for g in gens}
    if len(dims) != 1:
        raise ValueError("generators of mixed length")
    keep = [g for g in gens if not any(h != g and divides(h, g) for h in gens)]
    return MonomialIdeal(dims.pop(), tuple(keep))


def regularity_bivariate(I):
    if I.dim != 2:
        raise ValueError(f"bivariate formula needs dim 2, got {I.dim}")
    gens = sorted(I.generators, reverse=True)
    if len(gens) == 1:
        return sum(gens[0])
    # lex order: b strictly decreasing, c strictly increasing
    return max(gens[i][0] + gens[i + 1][1] for i in range(len(gens) - 1)) - 1


def lcm_lattice(I, max_generators=MAX_GENERATORS, max_size=MAX_LATTICE):
    if len(I.generators) > max_generators:
        raise TooLargeError(
            f"{len(I.generators)} generators exceed the cap of {max_generators}"
        )
    lattice = set()
    for g in I.generators:
        lattice |= {join(m, g) for m in lattice}
        lattice.add(g)
        if len(lattice) > max_size:
            raise TooLargeError(f"lcm-lattice exceeds {max_size} elements")
    return lattice


# exact rank


def rank_rational(rows):
    """Rank over Q of an integer matrix, by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    m, n = len(M), len(M[0])
    rank = 0
    prev = 1
    for col in range(n):
        piv = next((r for r in range(rank, m) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, m):
            a = M[r][col]
            row, prow = M[r], M[rank]
            for c in range(col, n):
                row[c] = (p * row[c] - a * prow[c]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod_p(rows, p):
    M = [[v % p for v in r] for r in rows]
    M = [r for r in M if any(r)]
    if not M:
        return 0
    m, n = len(M), len(M[0])
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, m) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], -1, p)
        prow = M[rank] = [(v * inv) % p for v in M[rank]]
        for r in range(m):
            if r != rank and M[r][col]:
                a = M[r][col]
                M[r] = [(u - a * v) % p for u, v in zip(M[r], prow)]
        rank += 1
        if rank == m:
            break
    return rank


def parse_field(field):
    """``None``/``"q"`` for the rationals, ``"fp:P"`` or an int for GF(P)."""
    if field is None or field == "q" or field == 0:
        return 0
    if isinstance(field, int):
        p = field
    elif isinstance(field, str) and field.startswith("fp:"):
        p = int(field[3:])
    else:
        raise ValueError(f"unknown field {field!r}")
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return p


def matrix_rank(rows, field=None):
    p = parse_field(field)
    return rank_rational(rows) if p == 0 else rank_mod_p(rows, p)


def reduced_homology(faces, field=None):
    """Reduced homology ranks of a simplicial complex.

    ``faces`` is a collection of sorted vertex tuples closed under taking
    subsets, including the empty face. Returns ``{k: rank}`` for the nonzero
    ranks, ``k >= -1``.
    """
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(f))
    if not by_dim:
        return {}
    for k in by_dim:
        by_dim[k].sort()
    index = {k: {f: n for n, f in enumerate(fs)} for k, fs in by_dim.items()}
    top = max(by_dim)
    ranks = {}
    for k in range(0, top + 1):
        if k not in by_dim or k - 1 not in by_dim:
            ranks[k] = 0
            continue
        lower = index[k - 1]
        rows = []
        for f in by_dim[k]:
            row = [0] * len(lower)
            for pos in range(len(f)):
                row[lower[f[:pos] + f[pos + 1:]]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[k] = matrix_rank(rows, field)
    out = {}
    for k in range(-1, top + 1):
        h = len(by_dim.get(k, ())) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def upper_koszul(I, b):
    d = I.dim
    faces = []
    for size in range(d + 1):
        for S in combinations(range(d), size):
            v = list(b)
            for s in S:
                v[s] -= 1
            if min(v) >= 0 and I.contains(v):
                faces.append(S)
    return faces


@dataclass
class BettiTable:
    entries: dict
    field: int = 0

    def regularity(self):
        return max(sum(b) - i for (i, b) in self.entries)

    def total(self, i):
        return sum(v for (k, _), v in self.entries.items() if k == i)

    def graded(self):
        """``{(i, total degree): rank}``."""
        out = {}
        for (i, b), v in self.entries.items():
            out[i, sum(b)] = out.get((i, sum(b)), 0) + v
        return out


def betti_numbers(I, field=None, max_generators=MAX_GENERATORS, max_size=MAX_LATTICE):
    p = parse_field(field)
    entries = {}
    for b in lcm_lattice(I, max_generators, max_size):
        for k, r in reduced_homology(upper_koszul(I, b), p).items():
            entries[k + 1, b] = r
    return BettiTable(entries, p)


def regularity_general(I, field=None, **caps):
    return betti_numbers(I, field, **caps).regularity()


def regularity(I, field=None, method="auto", **caps):
    """Regularity of ``I``; the closed bivariate formula is used for dim 2."""
    if method == "bivariate" or (method == "auto" and I.dim == 2):
        return regularity_bivariate(I)
    return regularity_general(I, field, **caps)
