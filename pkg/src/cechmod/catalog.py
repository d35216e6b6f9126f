"""Named built-in complexes and crossed modules, addressable from the CLI.

Keeping the standard test objects addressable by name makes acceptance runs
reproducible from the installed package alone, with no input files.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import (
    CrossedModule,
    automorphism_group,
    conjugation_action,
    crossed_module,
    cyclic_group,
    symmetric_group,
    trivial_action,
    trivial_group,
)
from .complexes import (
    SimplicialComplex,
    circle,
    full_simplex,
    point_complex,
    rp2_6,
    simplex_boundary,
    torus_7,
)

COMPLEX_BUILDERS = {
    "point": point_complex,
    "full1": lambda: full_simplex(1),
    "full2": lambda: full_simplex(2),
    "full3": lambda: full_simplex(3),
    "circle": circle,
    "boundary3": lambda: simplex_boundary(3),
    "torus7": torus_7,
    "rp26": rp2_6,
}


@lru_cache(maxsize=None)
def named_complex(name: str) -> SimplicialComplex:
    return COMPLEX_BUILDERS[name]()


def _z2_trivial() -> CrossedModule:
    Z2 = cyclic_group(2)
    return crossed_module(Z2, Z2, [0, 1], trivial_action(Z2, Z2).table)


def _z4_over_z2() -> CrossedModule:
    """H = Z4 surjecting onto G = Z2; the central extension Z2 -> Z4 -> Z2."""
    Z2, Z4 = cyclic_group(2), cyclic_group(4)
    return crossed_module(Z2, Z4, [0, 1, 0, 1], trivial_action(Z2, Z4).table)


def _z2_into_z4() -> CrossedModule:
    """H = Z2 included in G = Z4 as the index-2 subgroup."""
    Z2, Z4 = cyclic_group(2), cyclic_group(4)
    return crossed_module(Z4, Z2, [0, 2], trivial_action(Z4, Z2).table)


def _point_to(G) -> CrossedModule:
    one = trivial_group()
    return crossed_module(G, one, [G.identity], trivial_action(G, one).table)


def _to_point(A) -> CrossedModule:
    one = trivial_group()
    return crossed_module(one, A, [0] * A.order, trivial_action(one, A).table)


def _conj_s3() -> CrossedModule:
    S3 = symmetric_group(3)
    return crossed_module(S3, S3, list(range(6)), conjugation_action(S3).table)


def _aut_z3() -> CrossedModule:
    """Z3 mapped to its automorphism group by conjugation (trivially, since
    Z3 is abelian), with the tautological action: nontrivial action, trivial
    homomorphism."""
    Z3 = cyclic_group(3)
    aut, taut = automorphism_group(Z3)
    return crossed_module(aut, Z3, [aut.identity] * 3, taut.table)


CM_BUILDERS = {
    "z2_trivial": _z2_trivial,
    "z4_over_z2": _z4_over_z2,
    "z2_into_z4": _z2_into_z4,
    "star_to_z2": lambda: _point_to(cyclic_group(2)),
    "star_to_z3": lambda: _point_to(cyclic_group(3)),
    "star_to_s3": lambda: _point_to(symmetric_group(3)),
    "z2_to_point": lambda: _to_point(cyclic_group(2)),
    "z3_to_point": lambda: _to_point(cyclic_group(3)),
    "z4_to_point": lambda: _to_point(cyclic_group(4)),
    "conj_s3": _conj_s3,
    "aut_z3": _aut_z3,
}


@lru_cache(maxsize=None)
def named_crossed_module(name: str) -> CrossedModule:
    return CM_BUILDERS[name]()
