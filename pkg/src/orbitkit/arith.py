"""Exact number-theoretic primitives: divisors, the Möbius function,
p-adic valuations and absolute values.

Everything is plain integer arithmetic on Python ints plus
``fractions.Fraction``, so results are exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

# Exact rational carrier used throughout the package.  Fraction already
# guarantees lowest terms and a positive denominator, which makes every
# downstream equality test structural.
Rational = Fraction

__all__ = [
    "Rational",
    "PAdicAbs",
    "ExactnessError",
    "divisors",
    "mobius",
    "ord_p",
    "padic_abs",
]


class ExactnessError(ArithmeticError):
    """An integer structure that is guaranteed by construction failed to hold.

    Raised where a quantity must be an exact non-negative integer (an exact
    division, a count).  Seeing this exception signals a defect in the
    computation, never invalid user input.
    """


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order.

    Trial division up to sqrt(n); ample for the table sizes this package
    works at (n <= 10**4).
    """
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small: list[int] = []
    large: list[int] = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def mobius(n: int) -> int:
    """Möbius function: 0 if a square divides n, else (-1)**(#prime factors)."""
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    result = 1
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            remaining //= p
            if remaining % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if remaining > 1:
        result = -result
    return result


def ord_p(n: int, p: int) -> int:
    """Largest a with p**a dividing n, by repeated exact division.

    This is the brute-force route: no closed forms, just division, so it can
    serve as an independent check for anything cleverer built on top.
    """
    if n < 1:
        raise ValueError(f"ord_p requires n >= 1, got {n}")
    if not _is_prime(p):
        raise ValueError(f"ord_p requires a prime p, got {p}")
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


def padic_abs(n: int, p: int) -> "PAdicAbs":
    """p-adic absolute value of a positive integer, |n|_p = p**(-ord_p(n))."""
    return PAdicAbs(p, ord_p(n, p))


@dataclass(frozen=True)
class PAdicAbs:
    """The exact value p**(-valuation), stored as its prime and exponent.

    Keeping the exponent instead of any numeric value makes products and
    comparisons exact integer operations.  Only absolute values of nonzero
    integers occur here, so the valuation is always >= 0 and the value lies
    in (0, 1].
    """

    prime: int
    valuation: int

    def __post_init__(self) -> None:
        if not _is_prime(self.prime):
            raise ValueError(f"PAdicAbs prime must be prime, got {self.prime}")
        if self.valuation < 0:
            raise ValueError(f"PAdicAbs valuation must be >= 0, got {self.valuation}")

    def as_rational(self) -> Fraction:
        return Fraction(1, self.prime**self.valuation)

    def __float__(self) -> float:
        return 1.0 / self.prime**self.valuation

    def __mul__(self, other: "PAdicAbs") -> "PAdicAbs":
        if not isinstance(other, PAdicAbs):
            return NotImplemented
        self._check_same_prime(other)
        return PAdicAbs(self.prime, self.valuation + other.valuation)

    # A larger valuation means a smaller value, so order is reversed.
    def __lt__(self, other: "PAdicAbs") -> bool:
        self._check_same_prime(other)
        return self.valuation > other.valuation

    def __le__(self, other: "PAdicAbs") -> bool:
        self._check_same_prime(other)
        return self.valuation >= other.valuation

    def __gt__(self, other: "PAdicAbs") -> bool:
        return other.__lt__(self)

    def __ge__(self, other: "PAdicAbs") -> bool:
        return other.__le__(self)

    def _check_same_prime(self, other: "PAdicAbs") -> None:
        if self.prime != other.prime:
            raise ValueError(
                f"cannot combine absolute values for different primes "
                f"({self.prime} vs {other.prime})"
            )

    def __str__(self) -> str:
        if self.valuation == 0:
            return "1"
        return f"{self.prime}^(-{self.valuation})"
