"""curvlike: pointwise curvature-like tensor algebra.

Builds curvature-like tensors from bundle-valued symmetric forms through the
algebraic Gauss equation, evaluates the Chen-Ricci and improved Chen-Ricci
bounds, classifies their equality configurations, and maps the abstract
quantities to space-form ambient models.
"""

__version__ = "0.1.0"

from .ambient_models import (
    AmbientKind,
    AmbientModel,
    application_bound,
    intrinsic_ricci,
    mean_curvature_sq,
    ricci_offset,
)
from .errors import (
    BundleDimensionMismatch,
    BundleTooSmall,
    CurvlikeError,
    DimensionMismatch,
    InvalidDimension,
    InvalidParams,
    InvalidTensor,
    LengthMismatch,
    NoConvergence,
    NonOrthonormalPair,
    NotOrthogonal,
    NotUnitVector,
    OddDimension,
    ParseError,
    ValidationError,
)
from .gauss_bounds import (
    BoundMode,
    BoundReport,
    CorollaryTriple,
    EqualityClass,
    EqualityTag,
    build_T_from_zeta,
    check_bound,
    chen_ricci_bound,
    classify_all_equality,
    corollary_triple,
    equality_directions,
    improved_bound,
    is_totally_symmetric,
    verify_gauss,
)
from .instance_io import (
    Instance,
    StructureInfo,
    instance_sha256,
    load_instance,
    loads_instance,
    save_instance,
)
from .optim_lemmas import (
    ConstrainedQuadratic,
    Objective,
    brute_force_max,
    f1_max_closed,
    f2_max_closed,
    f_value,
    jacobi_eigh,
    max_ricci,
)
from .structures import (
    Family,
    FamilyParams,
    RigidityVerdict,
    SlantStructure,
    build_slant_structure,
    construct_family,
    lagrangian_symmetry_check,
    umbilical_rigidity_witness,
)
from .tensor_core import (
    DEFAULT_TOL,
    BundleValuedForm,
    CurvatureLikeTensor,
    Dimensions,
    SymmetryReport,
    as_unit_vector,
    null_space,
    pair_exchange_residual,
    rotate_frame,
    t_ricci,
    t_ricci_form,
    t_scalar,
    t_sectional,
    trace_norm_sq,
    trace_zeta,
    validate_curvature_symmetries,
    zeta_norm_sq,
)

__all__ = [
    "__version__",
    # tensor_core
    "DEFAULT_TOL",
    "Dimensions",
    "BundleValuedForm",
    "CurvatureLikeTensor",
    "SymmetryReport",
    "as_unit_vector",
    "validate_curvature_symmetries",
    "pair_exchange_residual",
    "t_sectional",
    "t_ricci_form",
    "t_ricci",
    "t_scalar",
    "zeta_norm_sq",
    "trace_zeta",
    "trace_norm_sq",
    "rotate_frame",
    "null_space",
    # gauss_bounds
    "BoundMode",
    "EqualityTag",
    "EqualityClass",
    "BoundReport",
    "CorollaryTriple",
    "build_T_from_zeta",
    "verify_gauss",
    "chen_ricci_bound",
    "improved_bound",
    "is_totally_symmetric",
    "check_bound",
    "equality_directions",
    "classify_all_equality",
    "corollary_triple",
    # optim_lemmas
    "Objective",
    "ConstrainedQuadratic",
    "f_value",
    "f1_max_closed",
    "f2_max_closed",
    "brute_force_max",
    "jacobi_eigh",
    "max_ricci",
    # ambient_models
    "AmbientKind",
    "AmbientModel",
    "ricci_offset",
    "mean_curvature_sq",
    "application_bound",
    "intrinsic_ricci",
    # structures
    "SlantStructure",
    "build_slant_structure",
    "Family",
    "FamilyParams",
    "construct_family",
    "lagrangian_symmetry_check",
    "RigidityVerdict",
    "umbilical_rigidity_witness",
    # instance_io
    "Instance",
    "StructureInfo",
    "load_instance",
    "loads_instance",
    "save_instance",
    "instance_sha256",
    # errors
    "CurvlikeError",
    "InvalidDimension",
    "DimensionMismatch",
    "NotUnitVector",
    "NonOrthonormalPair",
    "InvalidTensor",
    "NotOrthogonal",
    "BundleTooSmall",
    "BundleDimensionMismatch",
    "LengthMismatch",
    "NoConvergence",
    "InvalidParams",
    "OddDimension",
    "ParseError",
    "ValidationError",
]
