"""Isometries as linear-fractional maps, and what they buy: a two-point
geodesic solver, invariant distance, and cross ratios.

Everything in this module works in NORMALIZED model coordinates
``zeta = z / R`` (radius scaled out).  Motions of the curved surfaces are

    positive curvature:  w = (alpha z + beta) / (-conj(beta) z + conj(alpha))
    negative curvature:  w = (alpha z + beta) / (+conj(beta) z + conj(alpha))

with hyperbolic-number constants on Lorentzian surfaces and complex ones on
definite surfaces, defined up to a common scale, nondegenerate when
``D(alpha) +/- D(beta) != 0`` (``|alpha|^2 +/- |beta|^2`` in the complex
case).  Only :func:`geodesic_distance` and :func:`geodesic_through` convert
back to physical units (factor ``2R`` on distances, ``1/R`` powers on conic
coefficients).

The flat-plane rigid motions ``w = a z + b`` / ``w = a conj(z) + b`` with
``D(a) = 1`` are kept separately in :class:`PlaneMotion`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CoincidentPoints,
    DegenerateTuple,
    DivisorOfZero,
    InvalidMotion,
    MapsToInfinity,
    NoGeodesic,
    OutOfDisk,
)
from .hypernum import (
    ComplexNumber,
    HyperbolicNumber,
    Number,
    Sector,
    conj,
    hyper_exp,
    inverse,
    is_null,
    mul,
    polar,
    square_modulus,
)
from .surface import CurvatureSign, Signature, SurfaceSpec

__all__ = [
    "PlaneMotion",
    "plane_motion",
    "plane_apply",
    "BilinearMotion",
    "apply",
    "inverse_motion",
    "TwoPointSolution",
    "solve_two_point",
    "geodesic_through",
    "geodesic_distance",
    "cross_ratio",
    "number_for",
]


# --------------------------------------------------------------------------
# flat plane


@dataclass(frozen=True, slots=True)
class PlaneMotion:
    """Rigid motion of the flat Lorentz plane: ``z -> a z + b`` (or
    ``a conj(z) + b`` when ``reflect``), with unit constant ``D(a) = 1``."""

    a: HyperbolicNumber
    b: HyperbolicNumber
    reflect: bool = False


def plane_motion(a: HyperbolicNumber, b: HyperbolicNumber, reflect: bool = False) -> PlaneMotion:
    return PlaneMotion(a, b, reflect)


def plane_apply(motion: PlaneMotion, z: HyperbolicNumber) -> HyperbolicNumber:
    """Apply a plane motion.

    Raises:
        InvalidMotion: D(a) differs from 1 beyond 1e-12 (relative).
    """
    d = square_modulus(motion.a)
    if abs(d - 1.0) > 1e-12 * max(1.0, abs(d)):
        raise InvalidMotion(f"plane motion needs D(a) = 1, got {d}")
    w = conj(z) if motion.reflect else z
    return mul(motion.a, w) + motion.b


# --------------------------------------------------------------------------
# curved surfaces


def number_for(spec: SurfaceSpec, x: float, y: float) -> Number:
    """Wrap chart components in the number type matching the signature."""
    if spec.signature is Signature.LORENTZIAN:
        return HyperbolicNumber(float(x), float(y))
    return ComplexNumber(float(x), float(y))


def _as_number(spec: SurfaceSpec, z) -> Number:
    if isinstance(z, (tuple, list)):
        return number_for(spec, z[0], z[1])
    want = HyperbolicNumber if spec.signature is Signature.LORENTZIAN else ComplexNumber
    if not isinstance(z, want):
        raise TypeError(f"{spec.name} points must be {want.__name__}, got {type(z).__name__}")
    return z


@dataclass(frozen=True, slots=True)
class BilinearMotion:
    """Isometry of a curved surface in normalized model coordinates."""

    alpha: Number
    beta: Number
    spec: SurfaceSpec

    def __post_init__(self) -> None:
        want = (
            HyperbolicNumber
            if self.spec.signature is Signature.LORENTZIAN
            else ComplexNumber
        )
        if not (isinstance(self.alpha, want) and isinstance(self.beta, want)):
            raise TypeError(f"{self.spec.name} motions need {want.__name__} constants")
        da, db = square_modulus(self.alpha), square_modulus(self.beta)
        nd = da + db if self.spec.curvature_sign is CurvatureSign.POSITIVE else da - db
        if abs(nd) <= 1e-12 * max(1.0, abs(da), abs(db)):
            raise InvalidMotion(
                f"degenerate motion: D(alpha) {'+' if nd == da + db else '-'} D(beta) = {nd}"
            )

    def apply(self, z) -> Number:
        return apply(self, z)

    def inverse(self) -> "BilinearMotion":
        return inverse_motion(self)


def apply(motion: BilinearMotion, z) -> Number:
    """Image of a normalized point under the motion.

    Raises:
        MapsToInfinity: the denominator is not invertible at ``z``.
    """
    spec = motion.spec
    z = _as_number(spec, z)
    num = mul(motion.alpha, z) + motion.beta
    cb = conj(motion.beta)
    if spec.curvature_sign is CurvatureSign.POSITIVE:
        den = -mul(cb, z) + conj(motion.alpha)
    else:
        den = mul(cb, z) + conj(motion.alpha)
    try:
        return mul(num, inverse(den))
    except DivisorOfZero as exc:
        raise MapsToInfinity(f"denominator {den} is not invertible at {z}") from exc


def inverse_motion(motion: BilinearMotion) -> BilinearMotion:
    """The inverse isometry; same family with constants (conj(alpha), -beta)."""
    return BilinearMotion(conj(motion.alpha), -motion.beta, motion.spec)


# --------------------------------------------------------------------------
# two-point problems


@dataclass(frozen=True, slots=True)
class TwoPointSolution:
    """Motion taking ``z1 -> 0`` and ``z2`` onto the positive real axis.

    ``l`` is the model abscissa of the image of ``z2`` (so the invariant
    separation in normalized units); ``theta_alpha`` / ``theta_beta`` are the
    arguments of the motion constants and ``rho_beta`` the signed modulus of
    ``beta`` (zero by convention when ``z1`` is the origin).
    """

    motion: BilinearMotion
    l: float
    theta_alpha: float
    theta_beta: float
    rho_beta: float


def _coincident(z1: Number, z2: Number) -> bool:
    scale = max(1.0, abs(z1.x), abs(z1.y), abs(z2.x), abs(z2.y))
    return abs(z1.x - z2.x) <= 1e-14 * scale and abs(z1.y - z2.y) <= 1e-14 * scale


def solve_two_point(spec: SurfaceSpec, z1, z2) -> TwoPointSolution:
    """Motion normal form of the geodesic through two normalized points.

    Raises:
        CoincidentPoints: z1 == z2 (to 1e-14, relative).
        NoGeodesic: no geodesic of the closed-form family joins the points
            (null or spacelike separation on a Lorentzian surface, a null or
            limiting-curve base point, antipodal points, ...).
    """
    z1 = _as_number(spec, z1)
    z2 = _as_number(spec, z2)
    if _coincident(z1, z2):
        raise CoincidentPoints(f"points coincide: {z1}")
    positive = spec.curvature_sign is CurvatureSign.POSITIVE
    hyperbolic = spec.signature is Signature.LORENTZIAN

    if hyperbolic and is_null(z1) and not (z1.x == 0.0 and z1.y == 0.0):
        raise NoGeodesic(f"base point {z1} lies on a null line of the model")
    d1 = square_modulus(z1)
    if positive:
        if hyperbolic and abs(1.0 + d1) <= 1e-12 * max(1.0, abs(d1)):
            raise NoGeodesic(f"base point {z1} lies on the limiting curve")
    else:
        if abs(1.0 - d1) <= 1e-12 * max(1.0, abs(d1)):
            raise NoGeodesic(f"base point {z1} lies on the limiting curve")

    one = type(z1)(1.0, 0.0)
    den = one + mul(conj(z1), z2) if positive else one - mul(conj(z1), z2)
    try:
        q = mul(z2 - z1, inverse(den))
    except DivisorOfZero as exc:
        raise NoGeodesic(f"normal-form denominator degenerates: {exc}") from exc

    if hyperbolic:
        if is_null(q):
            raise NoGeodesic(f"{z1} and {z2} are null-separated")
        pol = polar(q)
        if pol.sector in (Sector.UP, Sector.DOWN):
            raise NoGeodesic(
                f"{z1} and {z2} are separated across the null cone "
                "(no geodesic of the family joins them)"
            )
        half = pol.theta / 2.0
        if pol.sector is Sector.RIGHT:
            alpha = hyper_exp(HyperbolicNumber(0.0, -half))
        else:
            alpha = HyperbolicNumber(-math.sinh(half), math.cosh(half))
    else:
        pol = polar(q)
        half = pol.theta / 2.0
        alpha = ComplexNumber(math.cos(half), -math.sin(half))

    beta = -mul(alpha, z1)
    motion = BilinearMotion(alpha, beta, spec)

    if beta.x == 0.0 and beta.y == 0.0:
        theta_beta, rho_beta = 0.0, 0.0
    else:
        pb = polar(beta)
        theta_beta = pb.theta
        rho_beta = pb.sign * pb.rho if hyperbolic else pb.rho
    return TwoPointSolution(motion, pol.rho, -half, theta_beta, rho_beta)


def geodesic_through(spec: SurfaceSpec, z1, z2):
    """Physical-chart conic of the geodesic through two normalized points.

    The coefficients come straight from the normal-form motion constants:
    with ``G = alpha beta`` and ``S = alpha^2 +/- conj(beta)^2`` the
    normalized conic is ``(-/+ G.y, S.y, S.x, G.y)``, rescaled here to the
    physical chart.  Raises everything :func:`solve_two_point` raises.
    """
    from .geodesic import GeodesicConic

    sol = solve_two_point(spec, z1, z2)
    alpha, beta = sol.motion.alpha, sol.motion.beta
    g = mul(alpha, beta)
    a2 = mul(alpha, alpha)
    cb = conj(beta)
    b2 = mul(cb, cb)
    positive = spec.curvature_sign is CurvatureSign.POSITIVE
    s = a2 + b2 if positive else a2 - b2
    sgn = 1.0 if positive else -1.0
    r = spec.radius
    return GeodesicConic(
        -sgn * g.y / (r * r), s.y / r, s.x / r, g.y, spec
    )


def geodesic_distance(spec: SurfaceSpec, z1, z2) -> float:
    """Geodesic distance between two normalized model points, in physical
    units (the radius scales back in here: ``2R atanh(l)`` at negative
    curvature, ``2R atan(l)`` at positive).

    Raises:
        OutOfDisk: negative curvature with the image abscissa ``l >= 1``
            (the second point is not inside the model domain).
    """
    z1 = _as_number(spec, z1)
    z2 = _as_number(spec, z2)
    if _coincident(z1, z2):
        return 0.0
    l = solve_two_point(spec, z1, z2).l
    r = spec.radius
    if spec.curvature_sign is CurvatureSign.NEGATIVE:
        if l >= 1.0:
            raise OutOfDisk(f"image abscissa l = {l} >= 1; point outside the model")
        return 2.0 * r * math.atanh(l)
    return 2.0 * r * math.atan(l)


def cross_ratio(a: Number, b: Number, c: Number, d: Number) -> Number:
    """Cross ratio ``(a-c)(b-d) / ((a-d)(b-c))``, invariant under motions.

    Raises:
        DegenerateTuple: repeated points, or a non-invertible denominator
            (distinct points that are null-separated).
    """
    pts = (a, b, c, d)
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DegenerateTuple(f"repeated point {pts[i]} in cross ratio")
    try:
        return mul(mul(a - c, b - d), inverse(mul(a - d, b - c)))
    except DivisorOfZero as exc:
        raise DegenerateTuple(f"cross-ratio denominator degenerates: {exc}") from exc
