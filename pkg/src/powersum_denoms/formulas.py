"""Fast product formulas for the power-sum denominator quotient q_n.

Three independent routes, all returning the same squarefree number:

* digit-sum criterion: q_n is the product of the primes p up to the sharp
  bound whose base-p digit sum of n+1 is at least p;
* exponent vector: each prime up to the bound contributes exponent 0 or 1,
  decided by a divisibility test plus a run of Lucas residues;
* prime sets: the denominator of binomial(n+1, k) * B_k is a product of
  primes determined by k and a single binomial residue, and q_n is the
  union of those sets over k.

The digit-sum route touches each candidate prime once and is the one that
scales to very large n.  Supporting checks (a binomial-sum congruence, the
sharpness of the prime bound, and per-k bounds on the prime sets) live here
too.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .bernoulli import SquarefreeProduct
from .padic import digit_sum, is_prime, lucas_binom_mod
from .powersum import bound_M


def primes_upto(x: int) -> list[int]:
    """All primes <= x in increasing order, by a plain Eratosthenes sieve."""
    if x < 2:
        return []
    sieve = bytearray([1]) * (x + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(x) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, x + 1, p)))
    return [p for p in range(2, x + 1) if sieve[p]]


def _prime_limit(n: int) -> int:
    # Largest integer allowed by the sharp bound (n+2)/2 or (n+2)/3.
    return (n + 2) // (2 if n % 2 == 0 else 3)


def q_n_formula(n: int) -> SquarefreeProduct:
    """q_n by the digit-sum criterion.

    Product of the primes p within the sharp bound such that the base-p
    digit sum of n+1 is at least p.  An empty product is 1.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    m = n + 1
    return SquarefreeProduct.of(
        p for p in primes_upto(_prime_limit(n)) if digit_sum(m, p) >= p
    )


@dataclass(frozen=True)
class EpsilonVector:
    """Exponent (0 or 1) of each prime within the sharp bound, for one n."""

    n: int
    exponents: dict[int, int]

    def value(self) -> int:
        v = 1
        for p, e in self.exponents.items():
            v *= p**e
        return v


def q_n_epsilon(n: int) -> EpsilonVector:
    """q_n by per-prime exponents.

    The prime 2 drops out exactly when n+1 is a power of 2.  An odd prime p
    drops out exactly when p does not divide n+2 and p divides
    binomial(n+1, j*(p-1)) for every j from 2 through n // (p-1) - 1; the
    j = 1 case is equivalent to the divisibility test and the top j follows
    from the others by a congruence, so neither needs its own residue.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    m = n + 1
    exponents: dict[int, int] = {}
    for p in primes_upto(_prime_limit(n)):
        if p == 2:
            drop = m & (m - 1) == 0
        else:
            drop = (n + 2) % p != 0 and all(
                lucas_binom_mod(m, j * (p - 1), p) == 0
                for j in range(2, n // (p - 1))
            )
        exponents[p] = 0 if drop else 1
    return EpsilonVector(n=n, exponents=exponents)


def pset(m: int, k: int) -> SquarefreeProduct:
    """Primes dividing the denominator of binomial(m, k) * B_k.

    Empty for k = 0 and for odd k >= 3 (where B_k is 0 or an integer).  For
    k = 1 the answer is {2} exactly when m is odd.  For even k >= 2 it is
    the set of primes p with p - 1 dividing k and binomial(m, k) not
    divisible by p.
    """
    if not 0 <= k <= m:
        raise ValueError(f"index out of range: k={k}, m={m}")
    if k == 0 or (k % 2 == 1 and k >= 3):
        return SquarefreeProduct.of(())
    if k == 1:
        return SquarefreeProduct.of([2] if m % 2 == 1 else [])
    candidates = set()
    for d in range(1, isqrt(k) + 1):
        if k % d == 0:
            candidates.add(d + 1)
            candidates.add(k // d + 1)
    return SquarefreeProduct.of(
        p for p in candidates if is_prime(p) and lucas_binom_mod(m, k, p) != 0
    )


def q_n_via_psets(n: int) -> SquarefreeProduct:
    """q_n as the union of the per-term denominator prime sets.

    Each summand binomial(n+1, k) * B_k of the scaled power sum contributes
    its own squarefree denominator; q_n is their least common multiple.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    m = n + 1
    ps: set[int] = set()
    for k in range(1, m):
        ps.update(pset(m, k).primes)
    return SquarefreeProduct.of(ps)


def hermite_bachmann_holds(m: int, p: int) -> bool:
    """Whether sum(binomial(m, j*(p-1)) for j = 1 .. (m-1)//(p-1)) is
    divisible by p.

    The congruence holds for every m >= 1 and prime p; the sum is computed
    with exact binomials so the check is independent of the Lucas route.
    """
    if not is_prime(p):
        raise ValueError(f"not a prime base: {p}")
    if m < 1:
        raise ValueError(f"index must be positive, got {m}")
    total = sum(comb(m, j * (p - 1)) for j in range(1, (m - 1) // (p - 1) + 1))
    return total % p == 0


def sharpness_witnesses(p: int) -> tuple[int, int]:
    """Indices showing the prime bound cannot be lowered at p.

    For an odd prime p, n = 2p - 2 (even) and n = 3p - 2 (odd) both have
    sharp bound exactly p, and p divides q_n in both cases.  Returns the
    pair after verifying it; failure to verify raises ArithmeticError.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"sharpness witnesses need an odd prime, got {p}")
    pair = (2 * p - 2, 3 * p - 2)
    for n in pair:
        if bound_M(n) != p or p not in q_n_formula(n).primes:
            raise ArithmeticError(f"sharpness witness failed at n={n}, p={p}")
    return pair


def pset_bound_check(m: int, k: int) -> bool:
    """Whether the largest prime in pset(m, k) respects both caps.

    For even k with 2 <= k <= m-1 and odd m >= 3, the cap is
    min(k+1, (m+1)/2); for even m >= 4 and 2 <= k <= m-2 it tightens to
    min(k+1, (m+1)/3).  Index combinations outside those ranges raise
    ValueError.
    """
    if m % 2 == 1:
        if m < 3 or k % 2 != 0 or not 2 <= k <= m - 1:
            raise ValueError(f"bound needs odd m >= 3 and even k in 2..m-1, got m={m}, k={k}")
        cap3 = False
    else:
        if m < 4 or k % 2 != 0 or not 2 <= k <= m - 2:
            raise ValueError(f"bound needs even m >= 4 and even k in 2..m-2, got m={m}, k={k}")
        cap3 = True
    primes = pset(m, k).primes
    if not primes:
        return True
    top = primes[-1]
    return top <= k + 1 and (3 * top <= m + 1 if cap3 else 2 * top <= m + 1)
