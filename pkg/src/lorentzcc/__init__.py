"""Closed-form geometry of constant-curvature Riemann and Lorentz surfaces.

The library models the four surfaces of constant Gauss curvature +-1/R^2 with
definite or Lorentzian metric, in both the isometric (rho, phi) chart and the
conformal Cartesian chart.  Geodesics, rigid motions, and invariant distances
come in closed form, built on complex and hyperbolic (split-complex) number
arithmetic; an independent numerical layer (Christoffel symbols, geodesic
integration, quadrature) cross-checks every closed-form result.
"""

from .errors import (
    CoincidentPoints,
    DegenerateEpsilon,
    DegenerateTuple,
    DivisorOfZero,
    DomainError,
    DomainExit,
    GeometryError,
    InvalidMotion,
    MapsToInfinity,
    MixedCausality,
    NearSingular,
    NoGeodesic,
    NoRealIntersection,
    OnLimitingCurve,
    OnNullLine,
    OutOfChart,
    OutOfDisk,
    ProfileZero,
    SingularPoint,
)
from .hypernum import (
    ComplexNumber,
    HyperbolicNumber,
    PolarForm,
    Sector,
    conj,
    hyper_arg,
    hyper_exp,
    inverse,
    is_null,
    modulus,
    mul,
    polar,
    square_modulus,
    zero_divisor_tolerance,
)
from .surface import (
    Chart,
    CurvatureSign,
    MetricField,
    Signature,
    SurfaceSpec,
    causal_class,
    exp_map_pushforward,
    exp_map_to_cartesian,
    gauss_curvature_of_profile,
    line_element_cartesian,
    line_element_isometric,
    metric_tensor,
    rho_from_u,
)
from .geodesic import (
    GeodesicConic,
    LimitingIntersection,
    LineKind,
    PlaneLine,
    Worldline,
    circle_geodesic_parametric,
    circle_parameters,
    constant_A,
    epsilon_from_constant,
    geodesic_from_AB,
    geodesic_from_constants,
    geodesic_parametric,
    geodesic_parametric_with_velocity,
    hyperbola_parameters,
    limiting_curve,
    limiting_intersections,
    origin_line,
    parametric_window,
    plane_geodesic,
    worldline_hyperbolic,
)
from .motion import (
    BilinearMotion,
    PlaneMotion,
    TwoPointSolution,
    apply,
    cross_ratio,
    geodesic_distance,
    geodesic_through,
    inverse_motion,
    number_for,
    plane_apply,
    plane_motion,
    solve_two_point,
)
from .oracle import (
    ConstantsReport,
    FlatPlaneField,
    GeodesicState,
    TauField,
    arc_length,
    beltrami_delta1,
    christoffel,
    geodesic_constants_check,
    integrate_geodesic,
    isothermal_curvature,
)
from .verify import CHECK_NAMES, DEFAULT_TOLERANCES, CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "BilinearMotion",
    "CHECK_NAMES",
    "Chart",
    "CheckResult",
    "CoincidentPoints",
    "ComplexNumber",
    "ConstantsReport",
    "CurvatureSign",
    "DEFAULT_TOLERANCES",
    "DegenerateEpsilon",
    "DegenerateTuple",
    "DivisorOfZero",
    "DomainError",
    "DomainExit",
    "FlatPlaneField",
    "GeodesicConic",
    "GeodesicState",
    "GeometryError",
    "HyperbolicNumber",
    "InvalidMotion",
    "LimitingIntersection",
    "LineKind",
    "MapsToInfinity",
    "MetricField",
    "MixedCausality",
    "NearSingular",
    "NoGeodesic",
    "NoRealIntersection",
    "OnLimitingCurve",
    "OnNullLine",
    "OutOfChart",
    "OutOfDisk",
    "PlaneLine",
    "PlaneMotion",
    "PolarForm",
    "ProfileZero",
    "Sector",
    "Signature",
    "SingularPoint",
    "SurfaceSpec",
    "TauField",
    "TwoPointSolution",
    "Worldline",
    "apply",
    "arc_length",
    "beltrami_delta1",
    "causal_class",
    "christoffel",
    "circle_geodesic_parametric",
    "circle_parameters",
    "conj",
    "constant_A",
    "cross_ratio",
    "epsilon_from_constant",
    "exp_map_pushforward",
    "exp_map_to_cartesian",
    "gauss_curvature_of_profile",
    "geodesic_constants_check",
    "geodesic_distance",
    "geodesic_from_AB",
    "geodesic_from_constants",
    "geodesic_parametric",
    "geodesic_parametric_with_velocity",
    "geodesic_through",
    "hyper_arg",
    "hyper_exp",
    "hyperbola_parameters",
    "integrate_geodesic",
    "inverse",
    "inverse_motion",
    "is_null",
    "isothermal_curvature",
    "limiting_curve",
    "limiting_intersections",
    "line_element_cartesian",
    "line_element_isometric",
    "metric_tensor",
    "modulus",
    "mul",
    "number_for",
    "origin_line",
    "parametric_window",
    "plane_apply",
    "plane_geodesic",
    "plane_motion",
    "polar",
    "rho_from_u",
    "run_all",
    "solve_two_point",
    "square_modulus",
    "worldline_hyperbolic",
    "zero_divisor_tolerance",
]
