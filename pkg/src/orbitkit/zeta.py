"""Dynamical zeta-function data for orbit tables.

For a map with fix counts F_n the zeta function is

    zeta(z) = exp( sum_{n>=1} F_n * z**n / n ),

an integer power series that also equals the product over all closed
orbits of (1 - z**n)**(-orbits(n)).  Both routes are implemented exactly
and independently: ``zeta_series`` exponentiates via the convolution
recurrence n*c_n = sum F_k c_{n-k}, while ``orbit_product_series`` expands
the product with binomial coefficients; they must agree coefficientwise.

For the 3-adic extension the inner sum splits into elementary logarithms
plus one sixth of the lacunary piece

    xi1(z) = sum_{n>=1} (z**(2n)/n) * (4**n - 1) * |n|_3,

which regroups by 3-adic valuation into a tower of log factors supported
on powers of 3.  ``xi1_direct`` and ``xi1_closed_form`` compute the same
series both ways.  The closed form yields a product expression for
|zeta(z)| whose factors vanish at the points (1/2)e^(2*pi*i*j/3**r), dense
on the circle |z| = 1/2; ``modulus_product`` evaluates it (exactly zero at
those points when given exact polar coordinates) and ``radial_scan`` pairs
it with truncated-series values along rays toward the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .arith import ExactnessError, ord_p
from .counting import OrbitTable
from .series import PowerSeries, log_one_minus

__all__ = [
    "xi_series",
    "zeta_series",
    "orbit_product_series",
    "xi1_direct",
    "xi1_closed_form",
    "xi_from_closed_parts",
    "BoundaryPoint",
    "ScanRow",
    "modulus_product",
    "xi_partial_value",
    "series_modulus",
    "radial_scan",
]


def _check_degree(table: OrbitTable, degree: int) -> None:
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if degree > table.n_max:
        raise ValueError(f"degree {degree} exceeds table range {table.n_max}")


def xi_series(table: OrbitTable, degree: int) -> PowerSeries:
    """The inner sum of the zeta exponential: coefficients F_n/n, a_0 = 0."""
    _check_degree(table, degree)
    coeffs = [Fraction(0)] * (degree + 1)
    for n in range(1, degree + 1):
        coeffs[n] = Fraction(table.fix_counts[n - 1], n)
    return PowerSeries(coeffs)


def zeta_series(table: OrbitTable, degree: int) -> PowerSeries:
    """Exact zeta coefficients via the exponential recurrence.

    Every coefficient must come out a non-negative integer (the orbit
    product forces this for genuine orbit data); anything else is a defect.
    """
    _check_degree(table, degree)
    fix = table.fix_counts
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    for n in range(1, degree + 1):
        acc = sum(fix[k - 1] * coeffs[n - k] for k in range(1, n + 1))
        c, remainder = divmod(acc, n)
        if remainder:
            raise ExactnessError(f"zeta coefficient at degree {n} is not an integer")
        if c < 0:
            raise ExactnessError(f"negative zeta coefficient {c} at degree {n}")
        coeffs[n] = c
    return PowerSeries(coeffs)


def orbit_product_series(table: OrbitTable, degree: int) -> PowerSeries:
    """Zeta via the orbit product, an independent check on ``zeta_series``.

    Expands prod_{n<=N} (1 - z**n)**(-orbits(n)) with the binomial series
    (1 - u)**(-m) = sum_k C(m-1+k, k) u**k, all in integer arithmetic.
    """
    _check_degree(table, degree)
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    for n in range(1, degree + 1):
        m = table.orbit_counts[n - 1]
        if m == 0:
            continue
        k_max = degree // n
        binom = [comb(m - 1 + k, k) for k in range(k_max + 1)]
        new = coeffs[:]
        for k in range(1, k_max + 1):
            b = binom[k]
            shift = n * k
            for i in range(0, degree - shift + 1):
                if coeffs[i]:
                    new[i + shift] += coeffs[i] * b
        coeffs = new
    return PowerSeries(coeffs)


def xi1_direct(degree: int) -> PowerSeries:
    """The lacunary even part, term by term.

    Coefficient at z**(2n) is (4**n - 1) * |n|_3 / n; odd degrees vanish.
    """
    if degree < 2:
        raise ValueError(f"xi1 needs degree >= 2, got {degree}")
    coeffs = [Fraction(0)] * (degree + 1)
    for n in range(1, degree // 2 + 1):
        coeffs[2 * n] = Fraction(4**n - 1, n * 3 ** ord_p(n, 3))
    return PowerSeries(coeffs)


def xi1_closed_form(degree: int) -> PowerSeries:
    """The same series from its closed form,

        log((1-z^2)/(1-4z^2)) + 2*sum_{j>=1} 9**(-j) * log((1-(2z)**(2*3^j))/(1-z**(2*3^j))).

    Only levels with 2*3**j <= degree contribute, so the sum is finite at
    any truncation.
    """
    if degree < 2:
        raise ValueError(f"xi1 needs degree >= 2, got {degree}")
    total = log_one_minus(1, 2, degree) - log_one_minus(4, 2, degree)
    j = 1
    while 2 * 3**j <= degree:
        m = 2 * 3**j
        level = log_one_minus(1 << m, m, degree) - log_one_minus(1, m, degree)
        total = total + level * Fraction(2, 9**j)
        j += 1
    return total


def xi_from_closed_parts(degree: int) -> PowerSeries:
    """Reassemble the full inner sum for the 3-adic extension:

        log((1-z)/(1-2z)) - (1/2) log((1-z^2)/(1-4z^2)) + (1/6) xi1(z).

    Must equal ``xi_series`` of the extension's table coefficientwise.
    """
    if degree < 2:
        raise ValueError(f"decomposition needs degree >= 2, got {degree}")
    odd_part = log_one_minus(1, 1, degree) - log_one_minus(2, 1, degree)
    even_fix = log_one_minus(1, 2, degree) - log_one_minus(4, 2, degree)
    return odd_part - even_fix * Fraction(1, 2) + xi1_closed_form(degree) * Fraction(1, 6)


@dataclass(frozen=True)
class BoundaryPoint:
    """A point given in exact polar form: radius * e^(2*pi*i*turns).

    The exact representation is what makes boundary zeros exact: whether a
    product factor 1 - (2z)**m vanishes reduces to the integer questions
    radius == 1/2 and m*turns in Z.
    """

    radius: Fraction
    turns: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.radius <= Fraction(1, 2):
            raise ValueError(f"radius must lie in (0, 1/2], got {self.radius}")

    def to_complex(self) -> complex:
        angle = 2.0 * math.pi * float(self.turns % 1)
        return float(self.radius) * complex(math.cos(angle), math.sin(angle))


# Factors of the |zeta| product beyond the leading |1-z|/|1-2z|, as
# (exponent, m) pairs meaning |(1 - (2z)**m)/(1 - z**m)| ** exponent.
# The m = 2 factor enters twice, with exponent 1/2 and (inverted) 1/6.


def _product_factors(terms: int) -> list[tuple[Fraction, int]]:
    factors = [(Fraction(1, 2), 2), (Fraction(-1, 6), 2)]
    for j in range(1, terms + 1):
        factors.append((Fraction(1, 3 * 9**j), 2 * 3**j))
    return factors


def modulus_product(z: "complex | BoundaryPoint", terms: int) -> float:
    """|zeta(z)| from the truncated boundary product with ``terms`` levels.

    Accepts a plain complex number (pure floating evaluation) or a
    ``BoundaryPoint`` (exact vanishing detection, so the value is exactly
    0.0 at boundary zeros).  z = 1/2 is the pole of the leading factor and
    is rejected; |z| must not exceed 1/2.
    """
    if terms < 0:
        raise ValueError(f"terms must be >= 0, got {terms}")

    exact: BoundaryPoint | None = None
    if isinstance(z, BoundaryPoint):
        exact = z
        w = z.to_complex()
    else:
        w = complex(z)
        if abs(w) > 0.5 * (1.0 + 1e-12):
            raise ValueError(f"|z| = {abs(w)} exceeds 1/2")

    on_rim = exact is not None and exact.radius == Fraction(1, 2)
    if exact is not None:
        if on_rim and (exact.turns % 1) == 0:
            raise ValueError("z = 1/2 is a pole of the leading factor")
        # Net order of vanishing at this point; > 0 forces the value 0.
        order = Fraction(0)
        if on_rim:
            for exponent, m in _product_factors(terms):
                if (m * exact.turns) % 1 == 0:
                    order += exponent
        if order > 0:
            return 0.0
        if order < 0:
            raise ValueError("boundary product diverges at this point")
    elif w == 0.5 + 0.0j:
        raise ValueError("z = 1/2 is a pole of the leading factor")

    # Past this point no factor vanishes exactly (a vanishing set always has
    # net positive order, handled above), so plain evaluation is safe.
    two_z = 2.0 * w
    value = abs(1.0 - w) / abs(1.0 - two_z)
    for exponent, m in _product_factors(terms):
        numerator = abs(1.0 - two_z**m)
        denominator = abs(1.0 - w**m)
        if numerator == 0.0:
            return 0.0
        ratio = numerator / denominator
        value *= ratio ** float(exponent)
    return value


def xi_partial_value(table: OrbitTable, z: complex, degree: int) -> complex:
    """Partial sum of the zeta exponent at a point, in double precision.

    Terms are accumulated as (2z)**n * (F_n/2**n)/n, which keeps every
    intermediate bounded for |z| <= 1/2 even though F_n itself grows like
    2**n.
    """
    _check_degree(table, degree)
    w = 2.0 * complex(z)
    w_pow = 1.0 + 0.0j
    acc = 0.0 + 0.0j
    for n in range(1, degree + 1):
        w_pow *= w
        scaled = table.fix_counts[n - 1] / (1 << n)  # exact int ratio, one rounding
        acc += w_pow * (scaled / n)
    return acc


def series_modulus(table: OrbitTable, z: complex, degree: int) -> float:
    """|exp(partial zeta exponent)| at a point; pairs with the product."""
    return math.exp(xi_partial_value(table, z, degree).real)


@dataclass(frozen=True)
class ScanRow:
    """One record of a radial boundary scan, with its truncation settings."""

    radius: float
    angle_num: int
    angle_den: int
    product_modulus: float
    series_modulus: float
    terms: int
    degree: int


def radial_scan(
    table: OrbitTable,
    angle_num: int,
    angle_den: int,
    radii: Sequence[float],
    terms: int,
    degree: int,
) -> list[ScanRow]:
    """Evaluate both |zeta| routes along the ray at angle 2*pi*num/den.

    Denominators that are powers of 3 point at boundary zeros; any positive
    denominator is accepted.  Radii must lie strictly inside (0, 1/2): the
    product has its exact zeros and its pole on the rim itself.
    """
    if angle_den < 1:
        raise ValueError(f"angle denominator must be >= 1, got {angle_den}")
    for r in radii:
        if not 0.0 < r < 0.5:
            raise ValueError(f"scan radius must lie in (0, 1/2), got {r}")
    turns = Fraction(angle_num, angle_den)
    angle = 2.0 * math.pi * float(turns % 1)
    direction = complex(math.cos(angle), math.sin(angle))
    rows = []
    for r in radii:
        z = r * direction
        rows.append(
            ScanRow(
                radius=r,
                angle_num=turns.numerator,
                angle_den=turns.denominator,
                product_modulus=modulus_product(z, terms),
                series_modulus=series_modulus(table, z, degree),
                terms=terms,
                degree=degree,
            )
        )
    return rows
