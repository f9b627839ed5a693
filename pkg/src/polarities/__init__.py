"""Finite polarities (formal contexts) with compatible relations as morphisms."""
from .category import (
    FactoredMorphism,
    IsoWitness,
    dual_morphism,
    dual_object,
    factor,
    is_epi,
    is_iso,
    is_lower_separating,
    is_mono,
    is_separating,
    is_standard,
    is_upper_separating,
    pol,
    separate,
    standardize,
    try_invert,
)
from .core import (
    LOWER,
    UPPER,
    ClosedFamily,
    Polarity,
    Relation,
    cl_lower,
    cl_upper,
    closed_sets,
    galois_down,
    galois_up,
    next_closure_sets,
)
from .errors import (
    CapExceeded,
    CountMismatch,
    DimensionError,
    EndpointMismatch,
    HeaderError,
    IllegalRowCharacter,
    IncompatibleRelation,
    NotALattice,
    ParseError,
    PolarityError,
)
from .io import (
    parse_burmeister,
    parse_json_context,
    parse_lattice,
    parse_morphism,
    serialize_burmeister,
    serialize_json_context,
    serialize_lattice,
    serialize_morphism,
)
from .lattice import (
    FiniteLattice,
    LatticeIso,
    LatticeMap,
    c_morphism,
    c_object,
    epsilon,
    g_minus_lower_adjoint,
    g_minus_morphism,
    g_minus_object,
    g_minus_preserves_joins,
    is_clat_morphism,
    lattice_unit,
    lower_adjoint,
    lower_adjoint_relation,
    preserves_joins,
)
from .limits import (
    ProductBundle,
    coequalizer,
    coproduct,
    cotuple_morphism,
    equalizer,
    is_reduced,
    is_rs_frame,
    product,
    reduce,
    restrict_lower,
    restrict_upper,
    tuple_morphism,
)
from .morphism import (
    Morphism,
    compatibilize,
    compose,
    compose_all,
    hom_enumerate,
    hom_meet,
    hom_top,
    identity,
    is_compatible,
    is_compatible_left,
    is_compatible_right,
)
from .tensor import (
    UNIT,
    associator,
    internal_hom,
    is_stable,
    left_unitor,
    linear_curry,
    linear_uncurry,
    right_unitor,
    stable_closure,
    stable_sets,
    symmetry,
    tensor_morphism,
    tensor_object,
)

__version__ = "0.1.0"
