"""Exact rational arithmetic and dense polynomials over the rationals.

Rational values are ``fractions.Fraction``: arbitrary precision, always
normalized to lowest terms with a positive denominator.  This module adds
the polynomial layer used everywhere else: immutable dense coefficient
vectors, denominator extraction, content/primitive splitting, and exact
interpolation through integer or rational points.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int]


def denom(value: RationalLike) -> int:
    """Denominator of value in lowest terms; integers have denominator 1."""
    return Fraction(value).denominator


class RationalPolynomial:
    """Immutable dense univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of x^i.  Trailing zeros are stripped on
    construction, so the zero polynomial has an empty coefficient tuple and
    every other polynomial has a nonzero leading coefficient.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls()

    @classmethod
    def monomial(cls, power: int, coeff: RationalLike = 1) -> "RationalPolynomial":
        """The polynomial coeff * x^power."""
        if power < 0:
            raise ValueError(f"negative power: {power}")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of x^power (zero beyond the stored degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([c * other for c in self.coeffs])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    def __rmul__(self, other: object) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def eval(self, x: RationalLike) -> Fraction:
        """Evaluate at x by Horner's rule, exactly."""
        acc = Fraction(0)
        xf = Fraction(x)
        for c in reversed(self.coeffs):
            acc = acc * xf + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({list(self.coeffs)!r})"


def poly_denominator(poly: RationalPolynomial) -> int:
    """Least common multiple of the coefficient denominators.

    This is the smallest positive integer d with d * poly having integer
    coefficients; the zero polynomial gives 1.
    """
    return lcm(*(c.denominator for c in poly.coeffs)) if poly.coeffs else 1


def content_split(poly: RationalPolynomial) -> tuple[Fraction, RationalPolynomial]:
    """Split poly as scale * primitive with primitive having integer
    coefficients of gcd 1 and the scale a positive rational.

    Signs stay with the primitive part, so the scale is always positive.
    Raises ValueError for the zero polynomial, which has no such splitting.
    """
    if poly.is_zero():
        raise ValueError("no content decomposition for the zero polynomial")
    d = poly_denominator(poly)
    ints = [int(c * d) for c in poly.coeffs]
    g = gcd(*ints)
    scale = Fraction(g, d)
    primitive = RationalPolynomial([c // g for c in ints])
    return scale, primitive


def lagrange_interpolate(
    points: Sequence[tuple[RationalLike, RationalLike]],
) -> RationalPolynomial:
    """Unique polynomial of degree < len(points) through the given points.

    All arithmetic is exact.  Duplicate x-coordinates raise ValueError.
    Internally this builds the Newton divided-difference form and expands
    it, which needs O(n^2) field operations instead of the O(n^3) of the
    textbook basis-polynomial sum.
    """
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate x-coordinates in interpolation points")
    if not points:
        return RationalPolynomial()

    # dd[i] walks through the divided differences f[x_i, ..., x_{i+level}].
    dd = list(ys)
    newton = [dd[0]]
    for level in range(1, len(xs)):
        for i in range(len(xs) - level):
            dd[i] = (dd[i + 1] - dd[i]) / (xs[i + level] - xs[i])
        newton.append(dd[0])

    result = RationalPolynomial([newton[-1]])
    for k in range(len(newton) - 2, -1, -1):
        result = result * RationalPolynomial([-xs[k], 1]) + RationalPolynomial([newton[k]])
    return result
