"""Exact computational engine for nonabelian Cech cohomology with finite
crossed-module coefficients: classification of the associated principal
2-bundles over finite simplicial bases, their bundle groupoids, bands,
central reductions, lifting obstructions and gauge 2-groups."""

from .algebra import (
    CrossedModule,
    FiniteGroup,
    GroupAction,
    GroupHom,
    Strict2Group,
    automorphism_group,
    conjugation_action,
    crossed_module,
    cyclic_group,
    find_isomorphism,
    group_from_operation,
    kernel_of_beta,
    power_group,
    quotient_by_image,
    semidirect_product,
    symmetric_group,
    trivial_action,
    trivial_group,
    two_group_from_crossed_module,
    validate_action,
    validate_crossed_module,
    validate_group,
    validate_hom,
)
from .bundle import (
    Band,
    BundleGroupoid,
    CentralReduction,
    FiniteGroupoid,
    GroupoidFunctor,
    LiftResult,
    NaturalTransformation,
    Trivialization,
    band,
    build_total_groupoid,
    canonical_trivializations,
    central_reduction,
    check_action,
    check_trivialization,
    coboundary_to_bundle_morphism,
    extract_cocycle,
    identity_functor,
    is_weak_equivalence,
    lifting_obstruction,
    morita_equivalent,
    quotient_by_structure_group,
    reconstruction_morphism,
    section_of_beta,
    trivializations,
    validate_one_cocycle,
)
from .cech import (
    ClassifyResult,
    Coboundary,
    Cocycle,
    apply_coboundary,
    are_cohomologous,
    classify,
    coboundary,
    cocycle,
    compose_coboundaries,
    identity_coboundary,
    inverse_coboundary,
    random_coboundary,
    sample_cocycle,
    stabilizer,
    trivial_cocycle,
    validate_cocycle,
)
from .complexes import (
    SimplicialComplex,
    abelian_cohomology_oracle,
    build_complex,
    circle,
    disjoint_union,
    full_simplex,
    point_complex,
    rp2_6,
    simplex_boundary,
    torus_7,
    valid_tuples,
)
from .gauge import (
    EquivariantEndofunctor,
    GaugeCrossedModule,
    GaugeObject,
    ad_equivariant_functor_count,
    equivariant_endofunctors_of_2group,
    gauge_crossed_module,
    gauge_objects,
)

__version__ = "0.1.0"
