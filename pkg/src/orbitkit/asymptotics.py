"""Aggregate orbit statistics over a growing length cutoff X.

``pi_sum`` counts all closed orbits of length at most X.  For the doubling
map this count grows like 2**(X+1)/X, so the normalized ratio
X*pi(X)/2**(X+1) tends to 1; for the 3-adic extension the ratio only
oscillates inside [1/3, 1].  ``merten_series`` forms the weighted sums
sum_{n<=X} orbits(n)/2**n, which track log X for the doubling map and sit
between (1/2) log X and log X for the extension.

All sums are exact rationals; conversion to high-precision reals (mpmath,
at least 60 significant bits, default 64) happens only for rendering and
for comparison against ln X.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .arith import ExactnessError
from .counting import OrbitTable

__all__ = [
    "RatioPoint",
    "MertenPoint",
    "pi_sum",
    "ratio_series",
    "delta_gap",
    "merten_series",
    "cluster_ratios",
    "mpf_to_fraction",
    "DEFAULT_PRECISION_BITS",
    "DEFAULT_BURN_IN",
    "RATIO_BAND_TOLERANCE",
    "MERTEN_SLACK",
]

# Acceptance-band constants.  These are artifact-level tolerances for
# finite-X effects, not values taken from any asymptotic statement; they are
# defined once here and reported in CLI output metadata.
RATIO_BAND_TOLERANCE = Fraction(2, 100)
MERTEN_SLACK = Fraction(2)

DEFAULT_PRECISION_BITS = 64
DEFAULT_BURN_IN = 64


@dataclass(frozen=True)
class RatioPoint:
    """One sample of the normalized orbit-count ratio X*pi(X)/2**(X+1).

    ``running_min``/``running_max`` are the extrema of the ratio over the
    window from the burn-in point up to X, all exact rationals.
    """

    X: int
    pi: int
    ratio: Fraction
    running_min: Fraction
    running_max: Fraction


@dataclass(frozen=True)
class MertenPoint:
    """One partial sum sum_{n<=X} orbits(n)/2**n with its log X comparison.

    ``sum`` is exact with a power-of-two denominator; ``log_x`` and
    ``normalized`` (= sum/log X, defined for X >= 2) are mpmath reals at the
    requested precision.
    """

    X: int
    sum: Fraction
    log_x: mpmath.mpf
    normalized: "mpmath.mpf | None"


def pi_sum(table: OrbitTable, X: int) -> int:
    """Number of closed orbits of length at most X."""
    if not 1 <= X <= table.n_max:
        raise ValueError(f"X={X} outside table range 1..{table.n_max}")
    return sum(table.orbit_counts[:X])


def ratio_series(
    table: OrbitTable, X_max: int, burn_in: int = DEFAULT_BURN_IN
) -> list[RatioPoint]:
    """Exact ratio points for X = burn_in..X_max with running extrema.

    The burn-in discards small-X transients (the ratio is 1/4 at X = 1);
    extrema are tracked over the reported window only.
    """
    if burn_in < 1:
        raise ValueError(f"burn_in must be >= 1, got {burn_in}")
    if not burn_in < X_max <= table.n_max:
        raise ValueError(
            f"need burn_in < X_max <= n_max, got burn_in={burn_in}, "
            f"X_max={X_max}, n_max={table.n_max}"
        )
    points: list[RatioPoint] = []
    running = 0
    lo: Fraction | None = None
    hi: Fraction | None = None
    for X in range(1, X_max + 1):
        running += table.orbit_counts[X - 1]
        if X < burn_in:
            continue
        ratio = Fraction(X * running, 1 << (X + 1))
        lo = ratio if lo is None or ratio < lo else lo
        hi = ratio if hi is None or ratio > hi else hi
        points.append(
            RatioPoint(X=X, pi=running, ratio=ratio, running_min=lo, running_max=hi)
        )
    return points


def delta_gap(table_f: OrbitTable, table_g: OrbitTable, X: int) -> tuple[int, int]:
    """Orbit-count gap pi_g(X) - pi_f(X) and its even-length upper bound.

    Returns ``(gap, even_bound)`` where ``even_bound`` sums the second
    table's orbit counts over even n <= X.  The gap is guaranteed
    non-negative when the first map's orbit counts are dominated by the
    second's (true for the 3-adic extension vs. the doubling map); a
    negative gap is reported as a defect.  gap <= even_bound additionally
    requires the odd-length counts to agree, as they do for that pair.
    """
    if not 1 <= X <= table_f.n_max or X > table_g.n_max:
        raise ValueError(f"X={X} outside joint table range")
    gap = pi_sum(table_g, X) - pi_sum(table_f, X)
    if gap < 0:
        raise ExactnessError(f"negative orbit-count gap {gap} at X={X}")
    even_bound = sum(table_g.orbit_counts[n - 1] for n in range(2, X + 1, 2))
    return gap, even_bound


def merten_series(
    table: OrbitTable, X_max: int, precision_bits: int = DEFAULT_PRECISION_BITS
) -> list[MertenPoint]:
    """Exact weighted partial sums with ln X comparison columns."""
    if not 1 <= X_max <= table.n_max:
        raise ValueError(f"X_max={X_max} outside table range 1..{table.n_max}")
    if precision_bits < 60:
        raise ValueError(f"precision must be >= 60 bits, got {precision_bits}")
    points: list[MertenPoint] = []
    total = Fraction(0)
    with mpmath.workprec(precision_bits):
        for X in range(1, X_max + 1):
            total += Fraction(table.orbit_counts[X - 1], 1 << X)
            log_x = mpmath.log(X)
            if X >= 2:
                normalized = (
                    mpmath.fdiv(total.numerator, total.denominator) / log_x
                )
            else:
                normalized = None
            points.append(
                MertenPoint(X=X, sum=total, log_x=log_x, normalized=normalized)
            )
    return points


def cluster_ratios(
    values: list[Fraction], gap: float = 0.01
) -> list[tuple[float, int]]:
    """Group ratio values into clusters separated by more than ``gap``.

    Returns (cluster mean, member count) pairs in ascending order.  This is
    a qualitative report: the ratio sequence appears to have several
    accumulation values, but no pass/fail criterion is attached to their
    number.
    """
    if not values:
        return []
    floats = sorted(float(v) for v in values)
    clusters: list[tuple[float, int]] = []
    start = 0
    for i in range(1, len(floats) + 1):
        if i == len(floats) or floats[i] - floats[i - 1] > gap:
            members = floats[start:i]
            clusters.append((sum(members) / len(members), len(members)))
            start = i
    return clusters


def mpf_to_fraction(x: mpmath.mpf) -> Fraction:
    """Exact rational value of a finite mpmath float."""
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0 and exp != 0:
        raise ValueError("cannot convert non-finite value to Fraction")
    value = Fraction(man) * (Fraction(2) ** exp)
    return -value if sign else value
