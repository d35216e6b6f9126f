"""Finite simplicial base models and an exact abelian-cohomology oracle.

A base space is modeled purely combinatorially: the cover is the vertex-star
cover, every intersection of stars is connected (it is the star of the
spanned simplex), and the nerve of the cover is the complex itself.  A
locally constant cochain is therefore a single group element per ordered
tuple, and an ordered tuple carries data exactly when its support spans a
simplex.

The oracle computes simplicial cohomology with Z/n coefficients on the
ordered, *normalized* cochain complex (cochains vanish on tuples with an
adjacent repeated index), which keeps its degree-2 answers in the same basis
convention as the nonabelian machinery elsewhere in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInput, IndexOutOfRange
from .snf import rank_and_divisors


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite abstract simplicial complex, downward closed."""

    vertex_count: int
    simplices: frozenset[frozenset[int]]

    def is_simplex(self, vertices: Iterable[int]) -> bool:
        return frozenset(vertices) in self.simplices

    def simplices_sorted(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(s)) for s in self.simplices)

    def simplex_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for s in self.simplices:
            counts[len(s) - 1] = counts.get(len(s) - 1, 0) + 1
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** dim * cnt for dim, cnt in self.simplex_counts().items())

    def star_simplices(self, vertex: int) -> list[tuple[int, ...]]:
        """Simplices containing the vertex (the chart of its star)."""
        return [s for s in self.simplices_sorted() if vertex in s]

    def maximal_simplices(self) -> list[tuple[int, ...]]:
        out = []
        for s in self.simplices:
            if not any(s < t for t in self.simplices):
                out.append(tuple(sorted(s)))
        return sorted(out)


def build_complex(maximal_simplices: Sequence[Sequence[int]],
                  vertex_count: int | None = None) -> SimplicialComplex:
    """Downward closure of the given simplices."""
    if not maximal_simplices:
        raise EmptyInput()
    sims = set()
    top = 0
    for s in maximal_simplices:
        s = tuple(s)
        if not s:
            raise EmptyInput("empty simplex given")
        for v in s:
            if v < 0:
                raise IndexOutOfRange(v, vertex_count or 0)
            top = max(top, v + 1)
        if vertex_count is not None and max(s) >= vertex_count:
            raise IndexOutOfRange(max(s), vertex_count)
        for k in range(1, len(s) + 1):
            for sub in itertools.combinations(sorted(set(s)), k):
                sims.add(frozenset(sub))
    n = vertex_count if vertex_count is not None else top
    covered = set().union(*sims)
    for v in range(n):
        if v not in covered:
            raise ValueError(f"vertex {v} appears in no simplex")
    return SimplicialComplex(n, frozenset(sims))


def full_simplex(n: int) -> SimplicialComplex:
    """The solid n-simplex on vertices 0..n (contractible)."""
    return build_complex([list(range(n + 1))])


def simplex_boundary(n: int) -> SimplicialComplex:
    """All proper faces of the n-simplex: a triangulated sphere S^(n-1)."""
    verts = list(range(n + 1))
    return build_complex(list(itertools.combinations(verts, n)))


def circle() -> SimplicialComplex:
    return simplex_boundary(2)


def torus_7() -> SimplicialComplex:
    """The 7-vertex (2-neighborly) triangulation of the torus."""
    facets = []
    for i in range(7):
        facets.append([i, (i + 1) % 7, (i + 3) % 7])
        facets.append([i, (i + 2) % 7, (i + 3) % 7])
    return build_complex(facets)


def rp2_6() -> SimplicialComplex:
    """The 6-vertex triangulation of the projective plane (icosahedron / antipodes)."""
    facets = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 4], [2, 4, 5], [2, 3, 5], [1, 3, 5], [1, 3, 4],
    ]
    return build_complex(facets)


def point_complex() -> SimplicialComplex:
    return build_complex([[0]])


def disjoint_union(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    shift = k1.vertex_count
    sims = [tuple(sorted(s)) for s in k1.simplices]
    sims += [tuple(v + shift for v in sorted(s)) for s in k2.simplices]
    return build_complex(sims, vertex_count=shift + k2.vertex_count)


# -- ordered tuples ------------------------------------------------------------

def valid_tuples(K: SimplicialComplex, arity: int) -> list[tuple[int, ...]]:
    """All ordered tuples (repeats allowed) whose support spans a simplex.

    Deterministic lexicographic order.  Tuples with repeated indices are
    included whenever the support is a simplex.
    """
    if arity not in (1, 2, 3, 4):
        raise ValueError("arity must be 1, 2, 3 or 4")
    out = []
    for t in itertools.product(range(K.vertex_count), repeat=arity):
        if K.is_simplex(set(t)):
            out.append(t)
    return out


def is_degenerate(t: tuple[int, ...]) -> bool:
    """True when some adjacent pair of indices coincides."""
    return any(t[m] == t[m + 1] for m in range(len(t) - 1))


def normalized_tuples(K: SimplicialComplex, arity: int) -> list[tuple[int, ...]]:
    return [t for t in valid_tuples(K, arity) if not is_degenerate(t)]


def coboundary_matrix(K: SimplicialComplex, k: int) -> list[list[int]]:
    """Integer matrix of the normalized Cech differential C^k -> C^(k+1).

    Rows are indexed by normalized (k+2)-tuples, columns by normalized
    (k+1)-tuples; (dc)(t) = sum_m (-1)^m c(t drop m), with c extended by
    zero on degenerate tuples.
    """
    domain = normalized_tuples(K, k + 1)
    codomain = normalized_tuples(K, k + 2)
    col = {t: i for i, t in enumerate(domain)}
    rows = []
    for t in codomain:
        row = [0] * len(domain)
        for m in range(len(t)):
            face = t[:m] + t[m + 1:]
            if is_degenerate(face):
                continue
            row[col[face]] += (-1) ** m
        rows.append(row)
    return rows


def abelian_cohomology_oracle(K: SimplicialComplex, n: int, k: int) -> int:
    """|H^k(K; Z/n)| via integer Smith normal form of the normalized complex.

    For a complex of free Z-modules, reducing the Smith form mod n gives
    |ker| = n^(c_k - r_k) * prod gcd(d_i, n) and |im| = n^(r_{k-1}) /
    prod gcd(d_j, n), whence the quotient cardinality.
    """
    if k not in (0, 1, 2):
        raise ValueError("degree must be 0, 1 or 2")
    if n < 2:
        raise ValueError("modulus must be at least 2")
    c_k = len(normalized_tuples(K, k + 1))
    mat_k = coboundary_matrix(K, k)
    r_k, div_k = rank_and_divisors(mat_k) if mat_k else (0, [])
    if k == 0:
        r_prev, div_prev = 0, []
    else:
        mat_prev = coboundary_matrix(K, k - 1)
        r_prev, div_prev = rank_and_divisors(mat_prev) if mat_prev else (0, [])
    from math import gcd
    size = n ** (c_k - r_k - r_prev)
    for d in div_k:
        size *= gcd(d, n)
    for d in div_prev:
        size *= gcd(d, n)
    return size
