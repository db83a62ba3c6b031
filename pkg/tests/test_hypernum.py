"""Algebra of hyperbolic (split-complex) and ordinary complex pairs.

The hyperbolic product has an independent matrix model: x + hy maps to
[[x, y], [y, x]] and multiplication becomes the matrix product.  Several
tests lean on that model instead of the closed-form component formulas.
"""

import cmath
import math

import numpy as np
import pytest

from lorentzcc import (
    ComplexNumber,
    DivisorOfZero,
    HyperbolicNumber,
    OnNullLine,
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


def _as_matrix(z):
    if isinstance(z, HyperbolicNumber):
        return np.array([[z.x, z.y], [z.y, z.x]])
    return np.array([[z.x, -z.y], [z.y, z.x]])


class TestProduct:
    def test_worked_hyperbolic_product(self):
        # (2 + h)(3 + 2h) = 6 + 2 + (4 + 3)h
        z = HyperbolicNumber(2.0, 1.0) * HyperbolicNumber(3.0, 2.0)
        assert z == HyperbolicNumber(8.0, 7.0)

    def test_worked_complex_product(self):
        z = ComplexNumber(2.0, 1.0) * ComplexNumber(3.0, 2.0)
        assert z == ComplexNumber(4.0, 7.0)

    @pytest.mark.parametrize("cls", [HyperbolicNumber, ComplexNumber])
    def test_matches_matrix_model(self, cls):
        rng = np.random.default_rng(11)
        for _ in range(200):
            a = cls(*rng.uniform(-3.0, 3.0, size=2))
            b = cls(*rng.uniform(-3.0, 3.0, size=2))
            left = _as_matrix(mul(a, b))
            right = _as_matrix(a) @ _as_matrix(b)
            assert left == pytest.approx(right, abs=1e-12)

    def test_mixed_types_rejected(self):
        with pytest.raises(TypeError, match="cannot multiply"):
            mul(HyperbolicNumber(1.0, 0.0), ComplexNumber(1.0, 0.0))

    def test_scalar_and_vector_operators(self):
        a = HyperbolicNumber(1.0, 2.0)
        b = HyperbolicNumber(0.5, -1.0)
        assert a + b == HyperbolicNumber(1.5, 1.0)
        assert a - b == HyperbolicNumber(0.5, 3.0)
        assert -a == HyperbolicNumber(-1.0, -2.0)
        assert 2.0 * a == a * 2.0 == HyperbolicNumber(2.0, 4.0)
        assert a / 2.0 == HyperbolicNumber(0.5, 1.0)


class TestModulusAndConjugate:
    def test_square_modulus_is_signed(self):
        assert square_modulus(HyperbolicNumber(2.0, 3.0)) == pytest.approx(-5.0)
        assert square_modulus(HyperbolicNumber(3.0, 2.0)) == pytest.approx(5.0)
        assert square_modulus(ComplexNumber(3.0, 4.0)) == pytest.approx(25.0)

    def test_modulus(self):
        assert modulus(HyperbolicNumber(3.0, 2.0)) == pytest.approx(math.sqrt(5.0))
        assert modulus(ComplexNumber(3.0, 4.0)) == pytest.approx(5.0)

    def test_z_times_conj_is_square_modulus(self):
        rng = np.random.default_rng(12)
        for _ in range(100):
            z = HyperbolicNumber(*rng.uniform(-2.0, 2.0, size=2))
            w = z * conj(z)
            assert w.x == pytest.approx(square_modulus(z), abs=1e-12)
            assert w.y == pytest.approx(0.0, abs=1e-12)

    def test_square_modulus_multiplicative(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            a = HyperbolicNumber(*rng.uniform(-2.0, 2.0, size=2))
            b = HyperbolicNumber(*rng.uniform(-2.0, 2.0, size=2))
            lhs = square_modulus(a * b)
            rhs = square_modulus(a) * square_modulus(b)
            assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)


class TestInverse:
    def test_worked_inverse(self):
        # (5 + 3h)^-1 = (5 - 3h)/16
        w = inverse(HyperbolicNumber(5.0, 3.0))
        assert w.x == pytest.approx(0.3125)
        assert w.y == pytest.approx(-0.1875)

    @pytest.mark.parametrize("cls", [HyperbolicNumber, ComplexNumber])
    def test_round_trip(self, cls):
        rng = np.random.default_rng(14)
        count = 0
        while count < 100:
            z = cls(*rng.uniform(-2.0, 2.0, size=2))
            if is_null(z):
                continue
            w = mul(z, inverse(z))
            assert w.x == pytest.approx(1.0, abs=1e-10)
            assert w.y == pytest.approx(0.0, abs=1e-10)
            count += 1

    def test_null_has_no_inverse(self):
        with pytest.raises(DivisorOfZero):
            inverse(HyperbolicNumber(1.0, 1.0))
        with pytest.raises(DivisorOfZero, match="no inverse"):
            inverse(ComplexNumber(0.0, 0.0))

    def test_near_null_rejected_by_relative_tolerance(self):
        # D = (x - y)(x + y) ~ 2e-13 * x at x = y(1 + 1e-13): inside the guard
        x = 10.0
        z = HyperbolicNumber(x, x * (1.0 - 1e-14))
        with pytest.raises(DivisorOfZero):
            inverse(z)


class TestNullLines:
    def test_is_null_on_the_lines(self):
        assert is_null(HyperbolicNumber(0.7, 0.7))
        assert is_null(HyperbolicNumber(-1.2, 1.2))
        assert is_null(HyperbolicNumber(0.0, 0.0))
        assert not is_null(HyperbolicNumber(0.7, 0.6))

    def test_tolerance_scales_with_magnitude(self):
        assert zero_divisor_tolerance(HyperbolicNumber(0.1, 0.1)) == pytest.approx(1e-12)
        assert zero_divisor_tolerance(HyperbolicNumber(50.0, 0.0)) == pytest.approx(5e-11)

    def test_complex_null_is_only_zero(self):
        assert is_null(ComplexNumber(0.0, 0.0))
        assert not is_null(ComplexNumber(1e-30, 0.0))


class TestPolar:
    @pytest.mark.parametrize(
        "z, sector, sign",
        [
            (HyperbolicNumber(2.0, 1.0), Sector.RIGHT, 1),
            (HyperbolicNumber(-2.0, 1.0), Sector.LEFT, -1),
            (HyperbolicNumber(1.0, 2.0), Sector.UP, 1),
            (HyperbolicNumber(1.0, -2.0), Sector.DOWN, -1),
        ],
    )
    def test_sector_assignment(self, z, sector, sign):
        p = polar(z)
        assert p.sector is sector
        assert p.sign == sign
        assert p.rho == pytest.approx(math.sqrt(3.0))

    def test_right_sector_values(self):
        p = polar(HyperbolicNumber(2.0, 1.0))
        assert p.theta == pytest.approx(math.atanh(0.5))
        assert p.rho == pytest.approx(math.sqrt(3.0))

    def test_reconstruct_round_trip(self):
        rng = np.random.default_rng(15)
        done = 0
        while done < 300:
            z = HyperbolicNumber(*rng.uniform(-4.0, 4.0, size=2))
            if is_null(z) or abs(abs(z.x) - abs(z.y)) < 1e-3:
                continue
            w = polar(z).reconstruct()
            assert w.x == pytest.approx(z.x, rel=1e-9, abs=1e-12)
            assert w.y == pytest.approx(z.y, rel=1e-9, abs=1e-12)
            done += 1

    def test_complex_polar_round_trip(self):
        p = polar(ComplexNumber(-1.0, 1.0))
        assert p.rho == pytest.approx(math.sqrt(2.0))
        assert p.theta == pytest.approx(3.0 * math.pi / 4.0)
        w = p.reconstruct()
        assert w.x == pytest.approx(-1.0)
        assert w.y == pytest.approx(1.0)

    def test_null_rejected(self):
        with pytest.raises(OnNullLine, match="null line"):
            polar(HyperbolicNumber(0.3, 0.3))
        with pytest.raises(DivisorOfZero):
            polar(ComplexNumber(0.0, 0.0))


class TestExponential:
    def test_hyperbolic_components(self):
        w = hyper_exp(HyperbolicNumber(0.5, 0.3))
        assert w.x == pytest.approx(math.exp(0.5) * math.cosh(0.3))
        assert w.y == pytest.approx(math.exp(0.5) * math.sinh(0.3))

    def test_complex_matches_cmath(self):
        w = hyper_exp(ComplexNumber(0.5, 0.3))
        ref = cmath.exp(0.5 + 0.3j)
        assert w.x == pytest.approx(ref.real)
        assert w.y == pytest.approx(ref.imag)

    def test_additivity(self):
        rng = np.random.default_rng(16)
        for _ in range(100):
            a = HyperbolicNumber(*rng.uniform(-1.5, 1.5, size=2))
            b = HyperbolicNumber(*rng.uniform(-1.5, 1.5, size=2))
            lhs = hyper_exp(a + b)
            rhs = hyper_exp(a) * hyper_exp(b)
            scale = max(1.0, abs(lhs.x), abs(lhs.y))
            assert abs(lhs.x - rhs.x) / scale < 1e-13
            assert abs(lhs.y - rhs.y) / scale < 1e-13

    def test_square_modulus_of_exp(self):
        # D(exp(x + hy)) = e^{2x}, independent of y
        rng = np.random.default_rng(17)
        for _ in range(100):
            w = HyperbolicNumber(*rng.uniform(-1.5, 1.5, size=2))
            assert square_modulus(hyper_exp(w)) == pytest.approx(
                math.exp(2.0 * w.x), rel=1e-12
            )


class TestArgument:
    def test_complex_argument(self):
        assert hyper_arg(ComplexNumber(1.0, 1.0)) == pytest.approx(math.pi / 4.0)

    def test_hyperbolic_argument(self):
        assert hyper_arg(HyperbolicNumber(2.0, 1.0)) == pytest.approx(math.atanh(0.5))
        # the up sector measures its angle from the y axis
        assert hyper_arg(HyperbolicNumber(1.0, 2.0)) == pytest.approx(math.atanh(0.5))
