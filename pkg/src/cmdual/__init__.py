"""Exact Chern-Mather class computations under projective duality.

Classes in ``P^n`` are integer vectors indexed by dimension.  See the
README for conventions (unsigned ``c_Ma`` versus the signed class).
"""

__version__ = "0.1.0"

from .chow_core import (
    ChernMatrix,
    ChowClass,
    HPolyView,
    RankVector,
    chern_matrix,
    check_support,
    class_of_poly,
    class_of_ranks,
    pair_dual_basis,
    pk_class,
    poly_of_class,
    ranks_of,
    signed,
    smooth_hypersurface_class,
)
from .cones import (
    ConeSpec,
    cone_class,
    cone_class_general,
    pullback_class,
    push_forward,
    vertex_euler_obstruction,
    vertex_term,
)
from .conormal_ed import TRANSVERSALITY_CAVEAT, ConormalCycle, class_of_conormal, conormal_of, ed_degree
from .dual_variety import (
    DualReport,
    PartialRanks,
    dual_defect_degree,
    dual_report_signed,
    hypersurface_ranks,
    mt_dual_degree,
)
from .duality import (
    AffineFamily,
    dual_class,
    dual_of_variety,
    even_dim_self_dual_check,
    is_self_dual,
    jn,
    self_dual_family,
)
from .errors import (
    AmbientOdd,
    CMError,
    DegenerateDual,
    DimensionMismatch,
    InconsistentConstraints,
    InvalidInput,
    NonProperClass,
    NotDivisible,
    ZeroClass,
)
from .plucker_singular import (
    HypconsVerdict,
    HypersurfaceSing,
    PlaneCurveDual,
    PlaneCurveSing,
    RhoBudget,
    curve_ed_degree,
    hypcons_check,
    piene_isolated_class,
    plane_curve_class,
    plane_curve_dual,
    self_dual_rho_budget,
    self_dual_surface_class,
    teissier_dual_degree,
)
