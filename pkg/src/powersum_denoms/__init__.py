"""Exact denominators of power-sum and Bernoulli polynomials.

The polynomial 1^n + 2^n + ... + x^n has a least common denominator d_n,
and q_n = d_n / (n+1) is squarefree with all prime factors below a sharp,
explicit bound.  This package computes d_n and q_n four independent ways
(three digit-based product formulas and brute-force polynomial expansion),
does the same for the denominators of Bernoulli polynomials, and ships a
CLI for sequences, pretty-printed polynomials, cross-check suites, and
benchmarks.
"""

from .bernoulli import (
    BernoulliTable,
    SquarefreeProduct,
    almkvist_meurman_check,
    bernoulli_numbers,
    bernoulli_poly,
    bernoulli_poly_denominator_direct,
    bernoulli_poly_denominator_formula,
    clausen_denominator,
)
from .exact_poly import (
    Rational,
    RationalPolynomial,
    content_split,
    denom,
    lagrange_interpolate,
    poly_denominator,
)
from .formulas import (
    EpsilonVector,
    hermite_bachmann_holds,
    primes_upto,
    pset,
    pset_bound_check,
    q_n_epsilon,
    q_n_formula,
    q_n_via_psets,
    sharpness_witnesses,
)
from .padic import (
    DigitExpansion,
    MarbleWitness,
    binomial_valuation,
    digit_sum,
    digits,
    fine_count,
    legendre_valuation_factorial,
    lucas_binom_mod,
    marble_witness,
)
from .powersum import (
    FaulhaberForm,
    bound_M,
    d_n,
    faulhaber_form,
    power_sum_oracle,
    power_sum_poly,
    q_n_bruteforce,
    shifted_power_sum_poly,
    t_n_poly,
)

__all__ = [
    "BernoulliTable",
    "DigitExpansion",
    "EpsilonVector",
    "FaulhaberForm",
    "MarbleWitness",
    "Rational",
    "RationalPolynomial",
    "SquarefreeProduct",
    "almkvist_meurman_check",
    "bernoulli_numbers",
    "bernoulli_poly",
    "bernoulli_poly_denominator_direct",
    "bernoulli_poly_denominator_formula",
    "binomial_valuation",
    "bound_M",
    "clausen_denominator",
    "content_split",
    "d_n",
    "denom",
    "digit_sum",
    "digits",
    "faulhaber_form",
    "fine_count",
    "hermite_bachmann_holds",
    "lagrange_interpolate",
    "legendre_valuation_factorial",
    "lucas_binom_mod",
    "marble_witness",
    "poly_denominator",
    "power_sum_oracle",
    "power_sum_poly",
    "primes_upto",
    "pset",
    "pset_bound_check",
    "q_n_bruteforce",
    "q_n_epsilon",
    "q_n_formula",
    "q_n_via_psets",
    "sharpness_witnesses",
    "shifted_power_sum_poly",
    "t_n_poly",
]

__version__ = "0.1.0"
