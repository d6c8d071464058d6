"""Crossed products of finite groups: construction, enumeration, classification."""

from .errors import (
    ActionNotHomomorphismError,
    AxiomViolationError,
    CapExceededError,
    CocycleConditionError,
    CocycleNotCentralError,
    CrossedProductError,
    InvalidDescriptorError,
    InvalidTableError,
    NotAbelianError,
    NotNormalError,
    PairInvariantViolationError,
    QuadrupleConditionError,
    SectionInvalidError,
)
from .groups import (
    Automorphism,
    FiniteGroup,
    Homomorphism,
    Subgroup,
    are_isomorphic,
    automorphism_group,
    center,
    cyclic_group,
    dihedral_group,
    direct_product,
    enumerate_homomorphisms,
    identify_group,
    inverse,
    make_group,
    multiply,
    normal_subgroups,
    quaternion_group,
    quotient,
    symmetric_group,
)
from .systems import (
    Cocycle,
    CrossedSystem,
    WeakAction,
    derived_identities_check,
    invariant_subgroup,
    is_symmetric,
    normalize,
    trivial_action,
    trivial_cocycle,
    validate_crossed_system,
)
from .products import (
    CrossedProductGroup,
    build_product,
    build_semidirect,
    build_twisted,
    centralizer_of_h,
    is_abelian_product,
    product_center,
)
from .morphisms import (
    MorphismQuadruple,
    PairFromX,
    PairIntoX,
    enumerate_morphisms,
    enumerate_stabilizing_isos,
    find_splitting,
    lift_through_inclusion,
    lift_through_projection,
    universal_map_in,
    universal_map_out,
    verify_quadruple,
)
from .classify import (
    ClassificationReport,
    Equivalence1Witness,
    Equivalence2Witness,
    are_equivalent_1,
    are_equivalent_2,
    classify,
    enumerate_crossed_systems,
    functor_check,
)
from .decompose import (
    DecompositionTree,
    Extension,
    Section,
    decompose,
    decompose_abelian,
    default_section,
    extract_crossed_system,
    holder_cross_validate,
    holder_enumerate,
    is_simple,
)

__version__ = "0.1.0"
