"""Geodesics in closed form: conics, parametrizations, windows, envelopes.

The strongest checks here are cross-route: a parametric point must sit on
the conic produced independently from the same two constants, the velocity
must match a finite difference of the position, and the speed must be one.
"""

import math

import numpy as np
import pytest

from lorentzcc import (
    DegenerateEpsilon,
    DomainError,
    LineKind,
    NoRealIntersection,
    OutOfChart,
    SurfaceSpec,
    circle_geodesic_parametric,
    circle_parameters,
    constant_A,
    epsilon_from_constant,
    exp_map_to_cartesian,
    geodesic_from_AB,
    geodesic_from_constants,
    geodesic_parametric,
    geodesic_parametric_with_velocity,
    hyperbola_parameters,
    limiting_curve,
    limiting_intersections,
    line_element_isometric,
    origin_line,
    parametric_window,
    plane_geodesic,
    worldline_hyperbolic,
)
from lorentzcc.geodesic import GeodesicConic

ALL_NAMES = ("def-pos", "def-neg", "lorentz-pos", "lorentz-neg")


def _safe_taus(spec, eps, sigma, n=15):
    """A batch of parameter values comfortably inside the chart window."""
    lo, hi = parametric_window(spec, eps, sigma)
    tau0 = constant_A(spec, eps) * sigma
    if math.isinf(lo) and math.isinf(hi):
        lo, hi = tau0 - 1.0, tau0 + 1.0
    elif math.isinf(hi):
        span = 1.0
        lo, hi = lo + 0.05 * span, lo + span
    else:
        span = hi - lo
        lo, hi = lo + 0.05 * span, hi - 0.05 * span
    return np.linspace(lo, hi, n)


class TestFamilyConstants:
    def test_constant_A_by_family(self):
        # tan on the rows where signature and curvature sign agree
        assert constant_A(SurfaceSpec.definite_positive(), 0.5) == pytest.approx(math.sin(0.5))
        assert constant_A(SurfaceSpec.lorentzian_negative(), 0.5) == pytest.approx(math.sin(0.5))
        assert constant_A(SurfaceSpec.definite_negative(), 0.5) == pytest.approx(math.sinh(0.5))
        assert constant_A(SurfaceSpec.lorentzian_positive(), 0.5) == pytest.approx(math.sinh(0.5))

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_epsilon_round_trip(self, name):
        spec = SurfaceSpec.from_name(name, radius=1.7)
        for eps in (-1.1, -0.3, 0.2, 0.9):
            a = constant_A(spec, eps)
            assert epsilon_from_constant(spec, a) == pytest.approx(eps, rel=1e-12)

    def test_constant_out_of_range(self):
        with pytest.raises(DomainError, match=r"\|A\| < R"):
            epsilon_from_constant(SurfaceSpec.definite_positive(), 1.0)

    def test_eps_zero_is_degenerate(self):
        with pytest.raises(DegenerateEpsilon, match="origin_line"):
            geodesic_from_constants(SurfaceSpec.definite_positive(), 0.0, 0.3)

    def test_eps_near_right_angle_rejected_on_tan_rows(self):
        with pytest.raises(DomainError, match="pi/2"):
            geodesic_from_constants(SurfaceSpec.lorentzian_negative(), math.pi / 2, 0.0)

    def test_geodesic_from_AB_matches_constants_route(self):
        spec = SurfaceSpec.lorentzian_positive(radius=1.2)
        eps, sigma = 0.6, -0.4
        c1 = geodesic_from_constants(spec, eps, sigma)
        c2 = geodesic_from_AB(spec, constant_A(spec, eps), sigma)
        assert c2.quad == pytest.approx(c1.quad)
        assert c2.lin_x == pytest.approx(c1.lin_x)
        assert c2.lin_y == pytest.approx(c1.lin_y)
        assert c2.const_term == pytest.approx(c1.const_term)


class TestConicForm:
    def test_frozen_lorentz_negative_coefficients(self):
        conic = geodesic_from_constants(SurfaceSpec.lorentzian_negative(), 0.3, 0.2)
        assert conic.quad == pytest.approx(1.0)
        assert conic.lin_x == pytest.approx(-1.3017291235358055)
        assert conic.lin_y == pytest.approx(6.5951970188193698)
        assert conic.const_term == pytest.approx(1.0)

    def test_degenerate_conic_rejected(self):
        with pytest.raises(ValueError, match="quadratic or linear"):
            GeodesicConic(0.0, 0.0, 0.0, 1.0, SurfaceSpec.definite_positive())

    def test_gradient_matches_finite_difference(self):
        conic = geodesic_from_constants(SurfaceSpec.definite_negative(), 0.8, 0.1)
        h = 1e-7
        for x, y in ((0.3, -0.2), (-0.5, 0.4)):
            gx, gy = conic.gradient(x, y)
            assert gx == pytest.approx(
                (conic.residual(x + h, y) - conic.residual(x - h, y)) / (2 * h), rel=1e-6
            )
            assert gy == pytest.approx(
                (conic.residual(x, y + h) - conic.residual(x, y - h)) / (2 * h), rel=1e-6
            )

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_parametric_points_lie_on_the_conic(self, name):
        spec = SurfaceSpec.from_name(name, radius=1.4)
        rng = np.random.default_rng(31)
        for _ in range(8):
            eps = float(rng.choice([-1.0, 1.0])) * rng.uniform(0.1, 1.1)
            sigma = rng.uniform(-1.2, 1.2)
            conic = geodesic_from_constants(spec, eps, sigma)
            for tau in _safe_taus(spec, eps, sigma):
                rho, phi = geodesic_parametric(spec, eps, sigma, float(tau))
                x, y = exp_map_to_cartesian(spec, rho, phi)
                scale = max(1.0, abs(conic.lin_x * x), abs(conic.lin_y * y))
                assert abs(conic.residual(x, y)) / scale < 1e-11


class TestParametrization:
    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_unit_speed(self, name):
        spec = SurfaceSpec.from_name(name, radius=0.8)
        rng = np.random.default_rng(32)
        for _ in range(6):
            eps = float(rng.choice([-1.0, 1.0])) * rng.uniform(0.15, 1.0)
            sigma = rng.uniform(-1.0, 1.0)
            for tau in _safe_taus(spec, eps, sigma, n=9):
                (rho, phi), (drho, dphi) = geodesic_parametric_with_velocity(
                    spec, eps, sigma, float(tau)
                )
                ds2 = line_element_isometric(spec, rho, drho, dphi)
                assert ds2 == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_velocity_matches_finite_difference(self, name):
        spec = SurfaceSpec.from_name(name)
        h = 1e-6
        for tau in _safe_taus(spec, 0.45, -0.3, n=7):
            (_, _), (drho, dphi) = geodesic_parametric_with_velocity(spec, 0.45, -0.3, float(tau))
            rp = geodesic_parametric(spec, 0.45, -0.3, float(tau) + h)
            rm = geodesic_parametric(spec, 0.45, -0.3, float(tau) - h)
            assert drho == pytest.approx((rp[0] - rm[0]) / (2 * h), rel=1e-5, abs=1e-7)
            assert dphi == pytest.approx((rp[1] - rm[1]) / (2 * h), rel=1e-5, abs=1e-7)

    def test_definite_positive_crosses_many_turns(self):
        """The angle branch must stay continuous across u = pi multiples."""
        spec = SurfaceSpec.definite_positive()
        taus = np.linspace(-7.0, 7.0, 1201)
        phis = [geodesic_parametric(spec, 0.35, 0.0, float(t))[1] for t in taus]
        jumps = np.abs(np.diff(phis))
        assert jumps.max() < 0.2


class TestWindows:
    def test_definite_windows_are_unbounded(self):
        for name in ("def-pos", "def-neg"):
            lo, hi = parametric_window(SurfaceSpec.from_name(name), 0.5, 0.1)
            assert lo == -math.inf and hi == math.inf

    def test_positive_lorentz_window(self):
        spec = SurfaceSpec.lorentzian_positive(radius=2.0)
        eps, sigma = 0.7, 0.3
        tau0 = constant_A(spec, eps) * sigma
        half = 2.0 * math.asin(1.0 / math.cosh(eps))
        lo, hi = parametric_window(spec, eps, sigma)
        assert lo == pytest.approx(tau0 - half)
        assert hi == pytest.approx(tau0 + half)
        geodesic_parametric(spec, eps, sigma, hi - 1e-6)  # inside: fine
        with pytest.raises(OutOfChart):
            geodesic_parametric(spec, eps, sigma, hi + 1e-6)

    def test_negative_lorentz_window(self):
        spec = SurfaceSpec.lorentzian_negative()
        eps, sigma = 0.4, -0.2
        tau0 = constant_A(spec, eps) * sigma
        lo, hi = parametric_window(spec, eps, sigma)
        assert lo == pytest.approx(tau0 + math.acosh(1.0 / math.cos(eps)))
        assert hi == math.inf
        geodesic_parametric(spec, eps, sigma, lo + 1e-6)
        with pytest.raises(OutOfChart):
            geodesic_parametric(spec, eps, sigma, lo - 1e-6)
        with pytest.raises(OutOfChart):
            # the branch point itself is outside the chart
            geodesic_parametric(spec, eps, sigma, tau0)


class TestOriginLines:
    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_line_contains_the_ray(self, name):
        spec = SurfaceSpec.from_name(name, radius=1.1)
        sigma = 0.6
        line = origin_line(spec, sigma)
        assert line.quad == 0.0
        for rho in (-0.5, 0.1, 1.3):
            x, y = exp_map_to_cartesian(spec, rho, sigma)
            assert line.residual(x, y) == pytest.approx(0.0, abs=1e-12)


class TestCircleGeodesics:
    def test_positive_circle_radius(self):
        spec = SurfaceSpec.definite_positive(radius=1.5)
        xc, yc, rad = circle_parameters(spec, 0.5, 0.2)
        assert rad == pytest.approx(1.5 / abs(math.sin(0.5)))

    def test_negative_circle_radius(self):
        spec = SurfaceSpec.definite_negative(radius=1.5)
        xc, yc, rad = circle_parameters(spec, 0.5, 0.2)
        assert rad == pytest.approx(1.5 / abs(math.sinh(0.5)))

    def test_circle_points_lie_on_conic(self):
        spec = SurfaceSpec.definite_negative()
        conic = geodesic_from_constants(spec, 0.7, -0.4)
        for ang in np.linspace(0.0, 2.0 * math.pi, 17):
            x, y = circle_geodesic_parametric(spec, 0.7, -0.4, float(ang))
            assert conic.residual(x, y) == pytest.approx(0.0, abs=1e-12)

    def test_lorentz_rejected(self):
        with pytest.raises(DomainError, match="hyperbola"):
            circle_parameters(SurfaceSpec.lorentzian_positive(), 0.5, 0.2)


class TestHyperbolaGeodesics:
    def test_frozen_negative_lorentz_values(self):
        spec = SurfaceSpec.lorentzian_negative()
        x0, y0, d = hyperbola_parameters(spec, math.sin(0.3), 0.2)
        assert x0 == pytest.approx(0.6508645617679029)
        assert y0 == pytest.approx(3.2975985094096854)
        assert d == pytest.approx(3.3838633618241229)

    @pytest.mark.parametrize("name", ["lorentz-pos", "lorentz-neg"])
    def test_completed_square_identity(self, name):
        """(y - y0)^2 - (x - x0)^2 - d^2 = -R^2 * residual, everywhere."""
        spec = SurfaceSpec.from_name(name, radius=1.3)
        rng = np.random.default_rng(33)
        a = constant_A(spec, 0.6)
        x0, y0, d = hyperbola_parameters(spec, a, -0.5)
        conic = geodesic_from_AB(spec, a, -0.5)
        for _ in range(40):
            x, y = rng.uniform(-3.0, 3.0, size=2)
            lhs = (y - y0) ** 2 - (x - x0) ** 2 - d * d
            rhs = -spec.radius**2 * conic.residual(x, y)
            assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-9)

    def test_definite_rejected(self):
        with pytest.raises(DomainError, match="circle"):
            hyperbola_parameters(SurfaceSpec.definite_positive(), 0.3, 0.0)

    def test_radial_constant_rejected(self):
        with pytest.raises(DegenerateEpsilon):
            hyperbola_parameters(SurfaceSpec.lorentzian_positive(), 0.0, 0.1)

    def test_negative_lorentz_needs_small_constant(self):
        with pytest.raises(DomainError, match=r"\|A\| < R"):
            hyperbola_parameters(SurfaceSpec.lorentzian_negative(), 1.0, 0.1)


class TestLimitingCurve:
    def test_curve_equations(self):
        lim = limiting_curve(SurfaceSpec.definite_negative(radius=2.0))
        assert lim.residual(2.0, 0.0) == pytest.approx(0.0)
        assert lim.residual(0.0, -2.0) == pytest.approx(0.0)
        lim = limiting_curve(SurfaceSpec.lorentzian_negative(radius=2.0))
        assert lim.residual(2.0 * math.cosh(0.4), 2.0 * math.sinh(0.4)) == pytest.approx(0.0, abs=1e-12)
        lim = limiting_curve(SurfaceSpec.lorentzian_positive(radius=2.0))
        assert lim.residual(2.0 * math.sinh(0.4), 2.0 * math.cosh(0.4)) == pytest.approx(0.0, abs=1e-12)

    def test_crossings_are_pseudo_orthogonal(self):
        spec = SurfaceSpec.lorentzian_negative()
        rng = np.random.default_rng(34)
        lim = limiting_curve(spec)
        for _ in range(10):
            eps = float(rng.choice([-1.0, 1.0])) * rng.uniform(0.1, 1.2)
            sigma = rng.uniform(-1.2, 1.2)
            conic = geodesic_from_constants(spec, eps, sigma)
            hits = limiting_intersections(spec, conic)
            assert len(hits) == 2
            for hit in hits:
                assert conic.residual(hit.x, hit.y) == pytest.approx(0.0, abs=1e-9)
                assert lim.residual(hit.x, hit.y) == pytest.approx(0.0, abs=1e-9)
                assert hit.product == pytest.approx(0.0, abs=1e-9)

    def test_positive_lorentz_geodesics_never_reach_the_curve(self):
        spec = SurfaceSpec.lorentzian_positive()
        conic = geodesic_from_constants(spec, 0.5, 0.3)
        with pytest.raises(NoRealIntersection):
            limiting_intersections(spec, conic)

    def test_origin_line_crossings(self):
        spec = SurfaceSpec.lorentzian_negative(radius=1.2)
        sigma = 0.7
        hits = limiting_intersections(spec, origin_line(spec, sigma))
        xs = sorted(h.x for h in hits)
        assert xs[0] == pytest.approx(-1.2 * math.cosh(sigma))
        assert xs[1] == pytest.approx(1.2 * math.cosh(sigma))
        for h in hits:
            assert abs(h.y) == pytest.approx(1.2 * abs(math.sinh(sigma)))
            assert h.product == pytest.approx(0.0, abs=1e-9)

    def test_definite_negative_circles_cross_orthogonally(self):
        """Geodesic circles meet the limiting circle at Euclidean right angles."""
        spec = SurfaceSpec.definite_negative()
        rng = np.random.default_rng(35)
        for _ in range(10):
            eps = float(rng.choice([-1.0, 1.0])) * rng.uniform(0.15, 1.4)
            sigma = rng.uniform(-1.5, 1.5)
            conic = geodesic_from_constants(spec, eps, sigma)
            hits = limiting_intersections(spec, conic)
            assert len(hits) == 2
            for hit in hits:
                assert math.hypot(hit.x, hit.y) == pytest.approx(1.0, abs=1e-9)
                assert hit.product == pytest.approx(0.0, abs=1e-9)

    def test_positive_definite_has_no_curve(self):
        spec = SurfaceSpec.definite_positive()
        conic = geodesic_from_constants(spec, 0.5, 0.3)
        with pytest.raises(DomainError, match="no real limiting curve"):
            limiting_intersections(spec, conic)


class TestPlaneLines:
    def test_first_kind_is_spacelike(self):
        line = plane_geodesic(LineKind.FIRST, 0.6, 1.2)
        tx, ty = line.tangent
        assert tx * tx - ty * ty == pytest.approx(1.0)
        for s in (-2.0, 0.0, 1.5):
            x, y = line.point_at(s)
            assert line.residual(x, y) == pytest.approx(0.0, abs=1e-12)

    def test_second_kind_is_timelike(self):
        line = plane_geodesic(LineKind.SECOND, -0.4, 0.7)
        tx, ty = line.tangent
        assert tx * tx - ty * ty == pytest.approx(-1.0)
        x, y = line.point_at(2.0)
        assert line.residual(x, y) == pytest.approx(0.0, abs=1e-12)

    def test_line_equation(self):
        line = plane_geodesic(LineKind.FIRST, 0.6, 1.2)
        x, y = line.point_at(0.8)
        assert x * math.sinh(0.6) + y * math.cosh(0.6) == pytest.approx(1.2)


class TestWorldline:
    def test_position_and_velocity(self):
        wl = worldline_hyperbolic(2.0, t0=0.5, x0=-1.0)
        t, x = wl.position(0.75)
        assert t == pytest.approx(0.5 + math.sinh(1.5) / 2.0)
        assert x == pytest.approx(-1.0 + (math.cosh(1.5) - 1.0) / 2.0)
        vt, vx = wl.velocity(0.75)
        assert vt == pytest.approx(math.cosh(1.5))
        assert vx == pytest.approx(math.sinh(1.5))
        # unit timelike velocity everywhere
        assert vt * vt - vx * vx == pytest.approx(1.0)

    def test_coordinate_speed_approaches_light(self):
        wl = worldline_hyperbolic(1.0)
        vt, vx = wl.velocity(20.0)
        assert vx / vt == pytest.approx(1.0, abs=1e-10)

    def test_invariant_residual_small(self):
        wl = worldline_hyperbolic(0.5, t0=-2.0, x0=3.0)
        for s in np.linspace(-6.0, 6.0, 25):
            assert abs(wl.invariant_residual(float(s))) < 1e-12

    def test_bad_acceleration(self):
        with pytest.raises(ValueError, match="positive"):
            worldline_hyperbolic(0.0)
        with pytest.raises(ValueError, match="positive"):
            worldline_hyperbolic(-1.0)
