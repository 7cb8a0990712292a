"""Power-sum polynomials and their denominators.

S_n(x) interpolates 1^n + 2^n + ... + (x-1)^n, so S_n(x) + x^n interpolates
the sum up to x^n.  d_n is the least common denominator of either form (they
agree for n >= 1), and q_n = d_n / (n+1) is the squarefree quotient that the
product formulas in :mod:`powersum_denoms.formulas` reproduce.  Everything
here goes through exact Bernoulli coefficients or exact interpolation; this
module is the slow, definitional side of every cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bernoulli import BernoulliTable, bernoulli_numbers, bernoulli_poly
from .exact_poly import (
    RationalPolynomial,
    content_split,
    lagrange_interpolate,
    poly_denominator,
)


def power_sum_poly(n: int, table: BernoulliTable | None = None) -> RationalPolynomial:
    """S_n(x) = (B_{n+1}(x) - B_{n+1}) / (n+1), the sum 1^n + ... + (x-1)^n.

    Defined for n >= 1; S_n is a degree n+1 polynomial with zero constant
    term.
    """
    if n < 1:
        raise ValueError(f"power-sum polynomial needs n >= 1, got {n}")
    b = bernoulli_poly(n + 1, table)
    return (b - RationalPolynomial([b.coefficient(0)])) * Fraction(1, n + 1)


def shifted_power_sum_poly(
    n: int, table: BernoulliTable | None = None
) -> RationalPolynomial:
    """S_n(x) + x^n, the polynomial with value 1^n + ... + x^n at integers.

    Handles n = 0 as well, where the sum is simply x.
    """
    if n == 0:
        return RationalPolynomial([0, 1])
    return power_sum_poly(n, table) + RationalPolynomial.monomial(n)


def power_sum_oracle(n: int) -> RationalPolynomial:
    """1^n + ... + x^n via exact interpolation of the literal sums.

    Uses n + 2 sample points, enough to pin down the degree n+1 polynomial.
    Independent of the Bernoulli route, so the two can check each other.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    points = []
    total = 0
    for i in range(n + 2):
        if i > 0:
            total += i**n
        points.append((i, total))
    return lagrange_interpolate(points)


def d_n(n: int, table: BernoulliTable | None = None) -> int:
    """Smallest positive d with d * (1^n + ... + x^n) having integer
    coefficients as a polynomial in x.

    For n >= 1 the shifted and unshifted power sums have the same
    denominator; that equality is asserted rather than assumed.
    """
    if n == 0:
        return 1
    base = power_sum_poly(n, table)
    shifted = base + RationalPolynomial.monomial(n)
    d = poly_denominator(shifted)
    if poly_denominator(base) != d:
        raise ArithmeticError(f"shifted and unshifted denominators differ at n={n}")
    return d


def q_n_bruteforce(n: int, table: BernoulliTable | None = None) -> int:
    """q_n = d_n / (n+1), computed from the polynomial itself.

    Divisibility of d_n by n+1 and squarefreeness of the quotient are
    structural facts; violations raise ArithmeticError because they can
    only come from a bug.
    """
    d = d_n(n, table)
    if d % (n + 1) != 0:
        raise ArithmeticError(f"d_{n} = {d} is not divisible by {n + 1}")
    q = d // (n + 1)
    t = q
    f = 2
    while f * f <= t:
        if t % f == 0:
            t //= f
            if t % f == 0:
                raise ArithmeticError(f"q_{n} = {q} is not squarefree")
        f += 1
    return q


def bound_M(n: int) -> Fraction:
    """Sharp bound on the primes dividing q_n: (n+2)/2 for even n, (n+2)/3
    for odd n."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return Fraction(n + 2, 2 if n % 2 == 0 else 3)


def t_n_poly(n: int, table: BernoulliTable | None = None) -> RationalPolynomial:
    """The monic degree-n polynomial (n+1) * S_n(x) / x.

    Its coefficients are binomial(n+1, k) * B_k for k = 0..n, so the common
    denominator of S_n can be studied one binomial-weighted Bernoulli number
    at a time.
    """
    if n < 1:
        raise ValueError(f"defined for n >= 1, got {n}")
    if table is None:
        table = bernoulli_numbers(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n + 1, k) * table.number(k)
    return RationalPolynomial(coeffs)


@dataclass(frozen=True)
class FaulhaberForm:
    """1^n + ... + x^n written as (1/denominator) * integer polynomial.

    ``coeffs[i]`` is the integer coefficient of x^i; the gcd of the nonzero
    coefficients is 1, which makes the form unique.
    """

    n: int
    denominator: int
    coeffs: tuple[int, ...]

    def poly(self) -> RationalPolynomial:
        return RationalPolynomial(self.coeffs) * Fraction(1, self.denominator)


def faulhaber_form(n: int, table: BernoulliTable | None = None) -> FaulhaberForm:
    """Write 1^n + ... + x^n over its least common denominator.

    The content of the scaled polynomial is 1 (the coefficients of the
    power sum admit no common cancellation), so the split denominator is
    exactly d_n; anything else raises ArithmeticError.
    """
    if n < 1:
        raise ValueError(f"defined for n >= 1, got {n}")
    scale, primitive = content_split(shifted_power_sum_poly(n, table))
    if scale.numerator != 1:
        raise ArithmeticError(
            f"power-sum coefficients share a factor of {scale.numerator} at n={n}"
        )
    return FaulhaberForm(
        n=n,
        denominator=scale.denominator,
        coeffs=tuple(int(c) for c in primitive.coeffs),
    )
