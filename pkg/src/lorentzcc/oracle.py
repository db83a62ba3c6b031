"""Numerical cross-checks that know nothing about the closed forms.

This module treats a surface purely as a metric field: Christoffel symbols
come from finite differences of the metric tensor, geodesics from a
fixed-step RK4 integration of the geodesic equation, lengths from midpoint
quadrature of polylines, and the arc-length field tau from adaptive Simpson
quadrature of its defining integral.  Nothing in here looks at the conic
family, so agreement between the two routes is an actual test.

Numerical notes
---------------
* ``christoffel`` uses a central stencil of half-width ``step`` on the
  metric tensor and a hand-rolled 2x2 inverse; the truncation error is
  O(step^2), so errors shrink about 4x when the step halves.
* ``integrate_geodesic`` is classical RK4 with Christoffel symbols
  re-evaluated from finite differences at every stage (stencil width one
  tenth of the time step).  It refuses non-unit-speed starts and raises
  :class:`~lorentzcc.errors.DomainExit` carrying the partial trajectory when
  the path drifts within ``10 * step`` of a chart boundary.
* ``_adaptive_simpson`` accepts an interval when ``|S2 - S1| <= 15 tol``,
  which bounds the extrapolated error by roughly ``tol``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DegenerateEpsilon,
    DomainError,
    DomainExit,
    GeometryError,
    MixedCausality,
    NearSingular,
)
from .surface import Chart, CurvatureSign, MetricField, Signature, SurfaceSpec

__all__ = [
    "GeodesicState",
    "FlatPlaneField",
    "christoffel",
    "integrate_geodesic",
    "arc_length",
    "TauField",
    "beltrami_delta1",
    "ConstantsReport",
    "geodesic_constants_check",
    "isothermal_curvature",
]


@dataclass(frozen=True, slots=True)
class GeodesicState:
    """Point and velocity of a geodesic in a given chart."""

    position: tuple[float, float]
    velocity: tuple[float, float]
    chart: Chart


@dataclass(frozen=True, slots=True)
class FlatPlaneField:
    """Metric field of the flat Lorentz plane (duck-typed like MetricField)."""

    signature_sign: float = -1.0
    chart: Chart = Chart.CARTESIAN

    def factor(self, a: float, b: float) -> float:
        return 1.0

    def tensor(self, a: float, b: float) -> np.ndarray:
        return np.array([[1.0, 0.0], [0.0, self.signature_sign]])

    def boundary_distance(self, a: float, b: float) -> float:
        return math.inf


def christoffel(field, a: float, b: float, step: float = 1e-5) -> np.ndarray:
    """Christoffel symbols Gamma^l_ik from finite differences of the metric.

    Returns a (2, 2, 2) array indexed [l, i, k], symmetric in (i, k).

    Raises:
        NearSingular: a stencil point left the chart domain.
    """
    try:
        g0 = field.tensor(a, b)
        gpa = field.tensor(a + step, b)
        gma = field.tensor(a - step, b)
        gpb = field.tensor(a, b + step)
        gmb = field.tensor(a, b - step)
    except GeometryError as exc:
        raise NearSingular(
            f"metric stencil at ({a}, {b}) with step {step} left the domain: {exc}"
        ) from exc

    dg = np.empty((2, 2, 2))  # dg[m, i, k] = d_m g_ik
    dg[0] = (gpa - gma) / (2.0 * step)
    dg[1] = (gpb - gmb) / (2.0 * step)

    det = g0[0, 0] * g0[1, 1] - g0[0, 1] * g0[1, 0]
    ginv = np.array(
        [[g0[1, 1], -g0[0, 1]], [-g0[1, 0], g0[0, 0]]]
    ) / det

    gamma = np.zeros((2, 2, 2))
    for l in range(2):
        for i in range(2):
            for k in range(2):
                acc = 0.0
                for m in range(2):
                    acc += ginv[l, m] * (dg[i, m, k] + dg[k, m, i] - dg[m, i, k])
                gamma[l, i, k] = 0.5 * acc
    return gamma


def integrate_geodesic(
    field, state: GeodesicState, length: float, step: float = 1e-3
) -> list[GeodesicState]:
    """RK4 integration of the geodesic equation, fixed step in arc length.

    The initial velocity must be unit speed in the field's metric (to 1e-9),
    so the curve parameter coincides with arc length.  Returns the list of
    states after each step, the initial one included.

    Raises:
        ValueError: the start is not unit speed (or charts disagree).
        DomainExit: the path came within ``10 * step`` of a chart boundary;
            the partial trajectory rides on the exception.
    """
    if state.chart is not field.chart:
        raise ValueError(f"state chart {state.chart} != field chart {field.chart}")
    x0, y0 = state.position
    vx0, vy0 = state.velocity
    lam = field.factor(x0, y0)
    speed2 = lam * (vx0 * vx0 + field.signature_sign * vy0 * vy0)
    if abs(abs(speed2) - 1.0) >= 1e-9:
        raise ValueError(f"initial velocity is not unit speed: |ds^2| = {abs(speed2)}")

    # Christoffel FD step: well below the integration step so the O(fd^2)
    # stencil truncation stays negligible against the RK4 error even where
    # the conformal factor has steep higher derivatives.
    fd_step = 0.01 * step
    n_steps = max(1, int(round(length / step)))

    def rhs(y: np.ndarray) -> np.ndarray:
        gamma = christoffel(field, y[0], y[1], fd_step)
        v = y[2:]
        acc = np.empty(2)
        for l in range(2):
            acc[l] = -(
                gamma[l, 0, 0] * v[0] * v[0]
                + 2.0 * gamma[l, 0, 1] * v[0] * v[1]
                + gamma[l, 1, 1] * v[1] * v[1]
            )
        return np.concatenate([v, acc])

    y = np.array([x0, y0, vx0, vy0])
    chart = state.chart
    states = [state]
    for _ in range(n_steps):
        if field.boundary_distance(y[0], y[1]) < 10.0 * step:
            raise DomainExit(
                f"geodesic reached the chart boundary near ({y[0]}, {y[1]})",
                states,
            )
        k1 = rhs(y)
        k2 = rhs(y + 0.5 * step * k1)
        k3 = rhs(y + 0.5 * step * k2)
        k4 = rhs(y + step * k3)
        y = y + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        states.append(GeodesicState((y[0], y[1]), (y[2], y[3]), chart))
    return states


def arc_length(field, points: Sequence[tuple[float, float]]) -> float:
    """Metric length of a polyline: midpoint conformal factor per segment.

    All segments must have one causal character; null (zero) segments are
    skipped.

    Raises:
        MixedCausality: some segments measure spacelike and others timelike.
    """
    total = 0.0
    votes: set[int] = set()
    s = field.signature_sign
    for (ax, ay), (bx, by) in zip(points[:-1], points[1:]):
        dx, dy = bx - ax, by - ay
        if dx == 0.0 and dy == 0.0:
            continue
        lam = field.factor(0.5 * (ax + bx), 0.5 * (ay + by))
        ds2 = lam * (dx * dx + s * dy * dy)
        if ds2 > 0.0:
            votes.add(1)
        elif ds2 < 0.0:
            votes.add(-1)
        if len(votes) > 1:
            raise MixedCausality("polyline mixes spacelike and timelike segments")
        total += math.sqrt(abs(ds2))
    return total


def _adaptive_simpson(
    fn: Callable[[float], float], a: float, b: float, tol: float = 1e-10
) -> float:
    """Adaptive Simpson quadrature with Richardson end correction."""
    if a == b:
        return 0.0

    def simpson(lo: float, hi: float, flo: float, fmid: float, fhi: float) -> float:
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(lo, hi, flo, fmid, fhi, whole, eps, depth):
        mid = 0.5 * (lo + hi)
        lmid = 0.5 * (lo + mid)
        rmid = 0.5 * (mid + hi)
        flm, frm = fn(lmid), fn(rmid)
        left = simpson(lo, mid, flo, flm, fmid)
        right = simpson(mid, hi, fmid, frm, fhi)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        half = eps / 2.0
        return recurse(lo, mid, flo, flm, fmid, left, half, depth - 1) + recurse(
            mid, hi, fmid, frm, fhi, right, half, depth - 1
        )

    fa, fb = fn(a), fn(b)
    m = 0.5 * (a + b)
    fm = fn(m)
    whole = simpson(a, b, fa, fm, fb)
    return recurse(a, b, fa, fm, fb, whole, tol, 48)


@dataclass(frozen=True, slots=True)
class TauField:
    """Arc-length field of a Lorentzian geodesic family member,

        tau(rho, phi) = A phi + integral from rho_ref to rho of
                        sqrt(factor(r) + A^2) dr + C,

    evaluated by adaptive quadrature (no closed form involved).  The
    reference point is rho_ref = 0 at positive curvature and 1 at negative
    curvature, where the rho = 0 pole forces the field onto one side; there
    the domain is rho > 0.
    """

    A: float
    C: float
    spec: SurfaceSpec

    def __post_init__(self) -> None:
        if self.spec.signature is not Signature.LORENTZIAN:
            raise DomainError("tau fields are defined for Lorentzian surfaces")

    @property
    def rho_ref(self) -> float:
        return 0.0 if self.spec.curvature_sign is CurvatureSign.POSITIVE else 1.0

    def __call__(self, rho: float, phi: float) -> float:
        if self.spec.curvature_sign is CurvatureSign.NEGATIVE and rho <= 0.0:
            raise DomainError(f"need rho > 0 on {self.spec.name}, got {rho}")
        metric = MetricField(self.spec, Chart.ISOMETRIC)
        a2 = self.A * self.A

        def integrand(r: float) -> float:
            return math.sqrt(metric.factor(r, 0.0) + a2)

        return self.A * phi + _adaptive_simpson(integrand, self.rho_ref, rho) + self.C


def beltrami_delta1(
    spec: SurfaceSpec | None,
    tau: Callable[[float, float], float],
    point: tuple[float, float],
    step: float = 1e-5,
) -> float:
    """Raw first-order Beltrami quantity ``(d_a tau)^2 + s (d_b tau)^2`` by
    central differences (``spec=None`` means the flat Lorentz plane, s=-1).

    For an arc-length field this equals the isometric conformal factor at
    the point (or 1 on the plane) — that is the property worth testing.

    Raises:
        NearSingular: the stencil left the field's domain.
    """
    s = -1.0 if spec is None else spec.metric_sign
    a, b = point
    try:
        ta = (tau(a + step, b) - tau(a - step, b)) / (2.0 * step)
        tb = (tau(a, b + step) - tau(a, b - step)) / (2.0 * step)
    except GeometryError as exc:
        raise NearSingular(f"tau stencil at {point} left the domain: {exc}") from exc
    return ta * ta + s * tb * tb


@dataclass(frozen=True, slots=True)
class ConstantsReport:
    """Residuals of the two conserved quantities along a geodesic."""

    b_residuals: tuple[float, ...]
    tau_residuals: tuple[float, ...]

    @property
    def max_residual(self) -> float:
        return max(self.b_residuals + self.tau_residuals)


def geodesic_constants_check(
    spec: SurfaceSpec, A: float, B: float, rhos: Sequence[float]
) -> ConstantsReport:
    """Cross-check the closed-form phase and arc-length of a geodesic
    against independent quadrature, at each rho in ``rhos``.

    The closed forms used here:

        lorentz-pos:  phi(rho) = B - asinh(A sinh(rho) / sqrt(R^2 + A^2))
                      tau(rho) - tau(0) = R asin(tanh(rho) / sqrt(1 + (A/R)^2))
        lorentz-neg:  phi(rho) = B - [G(rho) - G(1)],
                      G(r) = asinh(A cosh(r) / sqrt(R^2 - A^2))
                      |tau(rho) - tau(1)| = R |u(rho) - u(1)|,
                      u(r) = acosh(R coth(r) / sqrt(R^2 - A^2))

    The quadrature side integrates ``A / sqrt(factor + A^2)`` for the phase
    and uses :class:`TauField` for the arc length.

    Raises:
        DomainError: definite surface, or |A| >= R at negative curvature.
        DegenerateEpsilon: |A| below 1e-12 R at negative curvature (the
            u(rho) form needs a nonradial geodesic).
    """
    if spec.signature is not Signature.LORENTZIAN:
        raise DomainError("constants check applies to Lorentzian surfaces")
    r = spec.radius
    positive = spec.curvature_sign is CurvatureSign.POSITIVE
    if not positive:
        if not abs(A) < r:
            raise DomainError(f"lorentz-neg needs |A| < R = {r}, got A = {A}")
        if abs(A) < 1e-12 * r:
            raise DegenerateEpsilon(f"A = {A} is radial; no phase to check")

    metric = MetricField(spec, Chart.ISOMETRIC)
    a2 = A * A

    def phase_integrand(rr: float) -> float:
        return A / math.sqrt(metric.factor(rr, 0.0) + a2)

    if positive:
        root = math.sqrt(r * r + a2)

        def phi_closed(rho: float) -> float:
            return B - math.asinh(A * math.sinh(rho) / root)

        def tau_closed(rho: float) -> float:
            return r * math.asin(math.tanh(rho) / math.sqrt(1.0 + a2 / (r * r)))

        rho_ref = 0.0
    else:
        root = math.sqrt((r - A) * (r + A))

        def g_anti(rr: float) -> float:
            return math.asinh(A * math.cosh(rr) / root)

        def u_of(rr: float) -> float:
            return math.acosh(r / (math.tanh(rr) * root))

        def phi_closed(rho: float) -> float:
            return B - (g_anti(rho) - g_anti(1.0))

        def tau_closed(rho: float) -> float:
            return r * abs(u_of(rho) - u_of(1.0))

        rho_ref = 1.0

    tau_field = TauField(A, 0.0, spec)
    tau_at_ref = tau_field(rho_ref, phi_closed(rho_ref)) if not positive else None

    b_res = []
    tau_res = []
    for rho in rhos:
        if not positive and rho <= 0.0:
            raise DomainError(f"need rho > 0 on {spec.name}, got {rho}")
        q = _adaptive_simpson(phase_integrand, rho_ref, rho)
        b_res.append(abs(phi_closed(rho) + q - B))
        if positive:
            t_num = tau_field(rho, phi_closed(rho)) - tau_field(0.0, B)
            tau_res.append(abs(t_num - tau_closed(rho)))
        else:
            t_num = tau_field(rho, phi_closed(rho)) - tau_at_ref
            tau_res.append(abs(abs(t_num) - tau_closed(rho)))
    return ConstantsReport(tuple(b_res), tuple(tau_res))


def isothermal_curvature(
    spec: SurfaceSpec, x: float, y: float, step: float = 1e-4
) -> float:
    """Gauss curvature from the conformal Cartesian factor by finite
    differences: ``K = -(L_xx + s L_yy) / (2 lambda)`` with ``L = ln
    lambda``.  A pure metric-side probe of the curvature normalization.
    """
    metric = MetricField(spec, Chart.CARTESIAN)

    def logf(a: float, b: float) -> float:
        return math.log(metric.factor(a, b))

    try:
        l0 = logf(x, y)
        lxx = (logf(x + step, y) - 2.0 * l0 + logf(x - step, y)) / (step * step)
        lyy = (logf(x, y + step) - 2.0 * l0 + logf(x, y - step)) / (step * step)
    except GeometryError as exc:
        raise NearSingular(f"curvature stencil at ({x}, {y}) left the domain: {exc}") from exc
    lam = metric.factor(x, y)
    return -(lxx + spec.metric_sign * lyy) / (2.0 * lam)
