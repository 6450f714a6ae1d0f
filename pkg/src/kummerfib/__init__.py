"""Exact lattice invariants for Lagrangian fibrations on generalized Kummer varieties."""

from .errors import (
    ConsistencyFailure,
    DegenerateLattice,
    DimensionMismatch,
    DomainError,
    GenusMismatch,
    InvalidDegree,
    InvalidLattice,
    OutOfRange,
    OutOfRegime,
    OutOfRegimeWarning,
    ZeroVector,
)
from .lattice import (
    GramMatrix,
    OutcomeKind,
    SearchOutcome,
    inner_product,
    isotropic_search,
    primitive_part,
    signature,
)
from .surface import (
    CurveClass,
    PolarizedSurface,
    curve_for_kummer_principal,
    euler_characteristic,
    genus,
    incidence_dimension_count,
    linear_system_dim,
)
from .mukai import (
    MukaiVector,
    fm_double_transform,
    fm_transform,
    generic_ideal_twist_invariants,
    kummer_fiber_dim,
    mukai_pairing,
    slope_destabilizes,
)
from .kummer import (
    FibrationVerdict,
    KummerClass,
    KummerLattice,
    SurveyRow,
    bb_pairing,
    bb_square,
    fibration_check_principal,
    square_zero_class_exists,
    survey_principal,
)

__version__ = "0.1.0"
