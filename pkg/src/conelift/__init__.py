"""Exact tools for surjections from affine spaces onto affine cones."""

from .cone import (
    ConeSurjection,
    ConeVariety,
    SampleReport,
    build_gamma,
    sample_membership,
    verify_gamma_scaling,
    verify_maps_into_cone,
)
from .errors import (
    ArityError,
    BasePointDetected,
    BudgetExceeded,
    ConeliftError,
    DuplicatePoints,
    InvalidFraction,
    NotHomogeneous,
    NotIntoCone,
    ParseError,
    UnknownVariable,
    VarSetMismatch,
)
from .groebner import GroebnerBasis, Ideal, buchberger, contains, is_unit_ideal, reduce
from .interpolate import (
    PointSet,
    TargetAssignment,
    compose_with_surjection,
    interpolate_map,
    separating_functional,
)
from .lift import (
    LiftResult,
    ProjectiveMapRep,
    clear_denominators,
    coprime_reduce,
    lift_morphism,
    verify_projective_equality,
    wps_obstruction_demo,
)
from .parsing import parse_polynomial, parse_rational_function
from .polycore import (
    Polynomial,
    RationalFunction,
    VarSet,
    derivative,
    evaluate,
    gcd,
    is_homogeneous,
    square_root,
    substitute,
)
from .trinomial import (
    TrinomialHypersurface,
    admits_surjection_from_affine_space,
    classify,
    is_affine_cone,
    l_gcds,
    to_polynomial,
)

__version__ = "0.1.0"
