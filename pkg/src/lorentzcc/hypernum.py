"""Arithmetic of split-complex (hyperbolic) and ordinary complex numbers.

A hyperbolic number is ``z = x + h*y`` with ``h*h = +1``.  Its indefinite
square modulus ``D(z) = x*x - y*y`` is signed; the lines ``|x| = |y|`` are
null lines whose elements are divisors of zero.  A complex number is
``z = x + i*y`` with ``i*i = -1`` and positive square modulus ``x*x + y*y``.

Both types expose the same field names, so the callers in
:mod:`lorentzcc.motion` can stay generic.  The near-null guard used
throughout is

    tol = 1e-12 * max(1, |x|, |y|)

applied to ``|D(z)|``; small numbers are deliberately treated as near-null
because every statement downstream degrades in the same absolute way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import DivisorOfZero, OnNullLine

__all__ = [
    "HyperbolicNumber",
    "ComplexNumber",
    "Number",
    "Sector",
    "PolarForm",
    "mul",
    "conj",
    "square_modulus",
    "modulus",
    "inverse",
    "hyper_exp",
    "polar",
    "hyper_arg",
    "is_null",
    "zero_divisor_tolerance",
]


@dataclass(frozen=True, slots=True)
class HyperbolicNumber:
    """``x + h*y``, ``h*h = +1``."""

    x: float
    y: float

    def __add__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        return HyperbolicNumber(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        return HyperbolicNumber(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "HyperbolicNumber":
        return HyperbolicNumber(-self.x, -self.y)

    def __mul__(self, other):
        if isinstance(other, HyperbolicNumber):
            return mul(self, other)
        return HyperbolicNumber(self.x * other, self.y * other)

    def __rmul__(self, scalar: float) -> "HyperbolicNumber":
        return HyperbolicNumber(scalar * self.x, scalar * self.y)

    def __truediv__(self, scalar: float) -> "HyperbolicNumber":
        return HyperbolicNumber(self.x / scalar, self.y / scalar)


@dataclass(frozen=True, slots=True)
class ComplexNumber:
    """``x + i*y``, ``i*i = -1``.

    A thin mirror of :class:`HyperbolicNumber` (same field names) rather than
    the builtin ``complex`` so that code handling "a number with components
    ``x`` and ``y``" is type-agnostic.
    """

    x: float
    y: float

    def __add__(self, other: "ComplexNumber") -> "ComplexNumber":
        return ComplexNumber(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "ComplexNumber") -> "ComplexNumber":
        return ComplexNumber(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "ComplexNumber":
        return ComplexNumber(-self.x, -self.y)

    def __mul__(self, other):
        if isinstance(other, ComplexNumber):
            return mul(self, other)
        return ComplexNumber(self.x * other, self.y * other)

    def __rmul__(self, scalar: float) -> "ComplexNumber":
        return ComplexNumber(scalar * self.x, scalar * self.y)

    def __truediv__(self, scalar: float) -> "ComplexNumber":
        return ComplexNumber(self.x / scalar, self.y / scalar)


Number = Union[HyperbolicNumber, ComplexNumber]


class Sector(Enum):
    """Connected component of the hyperbolic plane minus its null lines."""

    RIGHT = "right"
    UP = "up"
    LEFT = "left"
    DOWN = "down"


@dataclass(frozen=True, slots=True)
class PolarForm:
    """Polar decomposition of a non-null number.

    For a hyperbolic number the sector records which of the four wedges the
    number lies in and ``sign`` is the sign of the dominant component, so

        right/left:  sign * rho * (cosh(theta) + h sinh(theta))
        up/down:     sign * rho * (sinh(theta) + h cosh(theta))

    For a complex number ``sector`` is ``None``, ``sign`` is ``+1`` and the
    pair is the usual modulus/argument.
    """

    rho: float
    theta: float
    sector: Sector | None
    sign: int

    def reconstruct(self) -> Number:
        """Rebuild the number this form was computed from."""
        if self.sector is None:
            return ComplexNumber(
                self.rho * math.cos(self.theta), self.rho * math.sin(self.theta)
            )
        c, s = math.cosh(self.theta), math.sinh(self.theta)
        r = self.sign * self.rho
        if self.sector in (Sector.RIGHT, Sector.LEFT):
            return HyperbolicNumber(r * c, r * s)
        return HyperbolicNumber(r * s, r * c)


def zero_divisor_tolerance(z: Number) -> float:
    """Absolute guard under which ``D(z)`` counts as vanishing."""
    return 1e-12 * max(1.0, abs(z.x), abs(z.y))


def mul(a: Number, b: Number) -> Number:
    """Product; the two factors must be of the same kind."""
    if isinstance(a, HyperbolicNumber) and isinstance(b, HyperbolicNumber):
        return HyperbolicNumber(a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x)
    if isinstance(a, ComplexNumber) and isinstance(b, ComplexNumber):
        return ComplexNumber(a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x)
    raise TypeError(f"cannot multiply {type(a).__name__} by {type(b).__name__}")


def conj(z: Number) -> Number:
    """Conjugation ``x + h*y -> x - h*y`` (same formula in both planes)."""
    return type(z)(z.x, -z.y)


def square_modulus(z: Number) -> float:
    """``x*x - y*y`` (signed) for hyperbolic, ``x*x + y*y`` for complex."""
    if isinstance(z, HyperbolicNumber):
        return z.x * z.x - z.y * z.y
    return z.x * z.x + z.y * z.y


def modulus(z: Number) -> float:
    """``sqrt(|square_modulus|)``; equals ``hypot(x, y)`` in the complex case."""
    if isinstance(z, HyperbolicNumber):
        return math.sqrt(abs((abs(z.x) - abs(z.y)) * (abs(z.x) + abs(z.y))))
    return math.hypot(z.x, z.y)


def is_null(z: Number) -> bool:
    """True when ``z`` is (numerically) a divisor of zero."""
    if isinstance(z, HyperbolicNumber):
        return abs(square_modulus(z)) <= zero_divisor_tolerance(z)
    return z.x == 0.0 and z.y == 0.0


def inverse(z: Number) -> Number:
    """Multiplicative inverse ``conj(z) / square_modulus(z)``.

    Raises:
        DivisorOfZero: hyperbolic ``z`` with ``|D| <= tol``, or complex zero.
    """
    d = square_modulus(z)
    if isinstance(z, HyperbolicNumber):
        if abs(d) <= zero_divisor_tolerance(z):
            raise DivisorOfZero(
                f"({z.x}, {z.y}) lies on a null line and has no inverse"
            )
        return HyperbolicNumber(z.x / d, -z.y / d)
    if d == 0.0:
        raise DivisorOfZero("complex zero has no inverse")
    return ComplexNumber(z.x / d, -z.y / d)


def hyper_exp(w: Number) -> Number:
    """Exponential; ``exp(x) * (cosh y + h sinh y)`` in the hyperbolic plane.

    Note ``square_modulus(hyper_exp(w)) = exp(2 w.x)``: the image always lies
    in the right sector.
    """
    e = math.exp(w.x)
    if isinstance(w, HyperbolicNumber):
        return HyperbolicNumber(e * math.cosh(w.y), e * math.sinh(w.y))
    return ComplexNumber(e * math.cos(w.y), e * math.sin(w.y))


def polar(z: Number) -> PolarForm:
    """Polar decomposition.

    Hyperbolic case raises :class:`OnNullLine` when ``|D(z)| <= tol``; the
    complex case raises :class:`DivisorOfZero` at the origin only.
    """
    if isinstance(z, ComplexNumber):
        if z.x == 0.0 and z.y == 0.0:
            raise DivisorOfZero("complex zero has no polar form")
        return PolarForm(math.hypot(z.x, z.y), math.atan2(z.y, z.x), None, 1)

    ax, ay = abs(z.x), abs(z.y)
    if abs(z.x * z.x - z.y * z.y) <= zero_divisor_tolerance(z):
        raise OnNullLine(f"({z.x}, {z.y}) lies on a null line")
    if ax > ay:
        sector = Sector.RIGHT if z.x > 0 else Sector.LEFT
        sign = 1 if z.x > 0 else -1
        rho = math.sqrt((ax - ay) * (ax + ay))
        theta = math.atanh(z.y / z.x)
    else:
        sector = Sector.UP if z.y > 0 else Sector.DOWN
        sign = 1 if z.y > 0 else -1
        rho = math.sqrt((ay - ax) * (ay + ax))
        theta = math.atanh(z.x / z.y)
    return PolarForm(rho, theta, sector, sign)


def hyper_arg(z: Number) -> float:
    """Hyperbolic (or circular) angle of the polar form of ``z``."""
    if isinstance(z, ComplexNumber):
        if z.x == 0.0 and z.y == 0.0:
            raise DivisorOfZero("complex zero has no argument")
        return math.atan2(z.y, z.x)
    return polar(z).theta
