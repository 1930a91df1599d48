"""Periodic-point and closed-orbit counts.

Three sequences describe the orbit structure of a map T: the number of
points fixed by T^n (``fix``), the number of points whose least period is
exactly n (``least``), and the number of closed orbits of length n
(``orbits``).  They determine each other through

    fix(n)   = sum of least(d) over divisors d of n,
    least(n) = n * orbits(n),

with the inverse of the first relation given by Möbius inversion.  The maps
supported here are the circle-doubling map (fix(n) = 2**n - 1), its 3-adic
isometric extension (fix(n) = (2**n - 1) * |2**n - 1|_3, an exact integer),
iterates of either, and user-supplied orbit-count data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log
from typing import Iterator, Sequence

from .arith import ExactnessError, PAdicAbs, divisors, mobius, ord_p

__all__ = [
    "MapSpec",
    "OrbitTable",
    "CIRCLE_DOUBLING",
    "THREE_ADIC_EXTENSION",
    "iterate",
    "custom_orbits",
    "padic_factor",
    "fix_count",
    "build_table",
    "orbit_count_iterate",
    "iterate_square_identity",
]

_DOUBLING = "circle-doubling"
_EXTENSION = "3-adic-extension"
_ITERATE = "iterate"
_CUSTOM = "custom"


@dataclass(frozen=True)
class MapSpec:
    """Which dynamical system a computation refers to.

    ``kind`` selects the variant; ``base``/``power`` describe an iterate,
    and ``counts`` holds explicit orbit counts for a custom system (the
    sequence is zero-extended past its end).
    """

    kind: str
    base: "MapSpec | None" = None
    power: int = 1
    counts: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in (_DOUBLING, _EXTENSION, _ITERATE, _CUSTOM):
            raise ValueError(f"unknown map kind {self.kind!r}")
        if self.kind == _ITERATE:
            if self.base is None:
                raise ValueError("iterate spec requires a base map")
            if self.power < 1:
                raise ValueError(f"iterate power must be >= 1, got {self.power}")
        if self.kind == _CUSTOM:
            if any(c < 0 for c in self.counts):
                raise ValueError("custom orbit counts must be non-negative")

    @property
    def entropy_base(self) -> int | None:
        """Integer b with topological entropy log(b), when known.

        Both the doubling map and its 3-adic extension have entropy log 2;
        the k-th iterate multiplies entropy by k.  Custom orbit data carries
        no entropy information.
        """
        if self.kind in (_DOUBLING, _EXTENSION):
            return 2
        if self.kind == _ITERATE:
            assert self.base is not None
            b = self.base.entropy_base
            return None if b is None else b**self.power
        return None

    @property
    def entropy(self) -> float | None:
        b = self.entropy_base
        return None if b is None else log(b)

    @property
    def label(self) -> str:
        if self.kind == _ITERATE:
            assert self.base is not None
            return f"{self.base.label}^{self.power}"
        if self.kind == _CUSTOM:
            return f"custom[{len(self.counts)}]"
        return self.kind


CIRCLE_DOUBLING = MapSpec(_DOUBLING)
THREE_ADIC_EXTENSION = MapSpec(_EXTENSION)


def iterate(base: MapSpec, k: int) -> MapSpec:
    """The k-th iterate of ``base`` (k = 1 returns ``base`` itself)."""
    if k < 1:
        raise ValueError(f"iterate power must be >= 1, got {k}")
    if k == 1:
        return base
    return MapSpec(_ITERATE, base=base, power=k)


def custom_orbits(counts: Sequence[int]) -> MapSpec:
    """A system prescribed by its orbit counts (orbits(n) = counts[n-1])."""
    return MapSpec(_CUSTOM, counts=tuple(int(c) for c in counts))


def padic_factor(n: int) -> PAdicAbs:
    """Closed form for |2**n - 1|_3.

    Expanding 2**n = (3 - 1)**n shows the value is 1 for odd n and
    (1/3)|n|_3 for even n.  ``ord_p`` on the full integer 2**n - 1 is the
    brute-force check for this.
    """
    if n < 1:
        raise ValueError(f"padic_factor requires n >= 1, got {n}")
    if n % 2 == 1:
        return PAdicAbs(3, 0)
    return PAdicAbs(3, 1 + ord_p(n, 3))


def fix_count(spec: MapSpec, n: int) -> int:
    """Number of points fixed by the n-th iterate of the given map.

    Exact integer arithmetic throughout: for the 3-adic extension the
    power of 3 is divided out of 2**n - 1, never multiplied in as a float.
    """
    if n < 1:
        raise ValueError(f"fix_count requires n >= 1, got {n}")
    if spec.kind == _DOUBLING:
        return (1 << n) - 1
    if spec.kind == _EXTENSION:
        mersenne = (1 << n) - 1
        scale = 3 ** padic_factor(n).valuation
        quotient, remainder = divmod(mersenne, scale)
        if remainder:
            raise ExactnessError(
                f"3**{padic_factor(n).valuation} does not divide 2**{n} - 1"
            )
        return quotient
    if spec.kind == _ITERATE:
        assert spec.base is not None
        return fix_count(spec.base, n * spec.power)
    # custom: fix(n) = sum of d * orbits(d) over divisors d of n
    counts = spec.counts
    return sum(d * counts[d - 1] for d in divisors(n) if d <= len(counts))


@dataclass(frozen=True)
class OrbitTable:
    """The three count sequences for one map, cached up to ``n_max``.

    Tuples are indexed from 0 for n = 1; use ``fix``/``least``/``orbits``
    for 1-based access.  A built table is immutable and safe to share.
    """

    spec: MapSpec
    n_max: int
    fix_counts: tuple[int, ...]
    least_counts: tuple[int, ...]
    orbit_counts: tuple[int, ...]

    def _check_range(self, n: int) -> None:
        if not 1 <= n <= self.n_max:
            raise ValueError(f"index {n} outside table range 1..{self.n_max}")

    def fix(self, n: int) -> int:
        self._check_range(n)
        return self.fix_counts[n - 1]

    def least(self, n: int) -> int:
        self._check_range(n)
        return self.least_counts[n - 1]

    def orbits(self, n: int) -> int:
        self._check_range(n)
        return self.orbit_counts[n - 1]

    def rows(self) -> Iterator[tuple[int, int, int, int]]:
        for i in range(self.n_max):
            yield i + 1, self.fix_counts[i], self.least_counts[i], self.orbit_counts[i]


class _SequenceCache:
    """Incrementally grown fix/least/orbit sequences for one spec."""

    __slots__ = ("fix", "least", "orbits")

    def __init__(self) -> None:
        self.fix: list[int] = []
        self.least: list[int] = []
        self.orbits: list[int] = []

    def extend_to(self, spec: MapSpec, n_max: int) -> None:
        for n in range(len(self.fix) + 1, n_max + 1):
            f = fix_count(spec, n)
            least = sum(mobius(n // d) * self.fix[d - 1] for d in divisors(n) if d < n)
            least += f
            if least < 0:
                raise ExactnessError(f"negative least-period count {least} at n={n}")
            orbit, remainder = divmod(least, n)
            if remainder:
                raise ExactnessError(f"{n} does not divide least-period count {least}")
            self.fix.append(f)
            self.least.append(least)
            self.orbits.append(orbit)


_TABLE_CACHE: dict[MapSpec, _SequenceCache] = {}


def build_table(spec: MapSpec, n_max: int) -> OrbitTable:
    """Compute fix/least/orbit counts for n = 1..n_max.

    fix comes from ``fix_count``, least by Möbius inversion of the divisor
    sum, and orbits by the exact division least(n)/n.  Results are memoized
    per spec, so growing a table reuses earlier entries.
    """
    if n_max < 1:
        raise ValueError(f"build_table requires n_max >= 1, got {n_max}")
    cache = _TABLE_CACHE.setdefault(spec, _SequenceCache())
    cache.extend_to(spec, n_max)
    return OrbitTable(
        spec=spec,
        n_max=n_max,
        fix_counts=tuple(cache.fix[:n_max]),
        least_counts=tuple(cache.least[:n_max]),
        orbit_counts=tuple(cache.orbits[:n_max]),
    )


def orbit_count_iterate(base: OrbitTable, k: int, n: int) -> int:
    """Orbits of length n of the k-th iterate, from the base map's table.

    Uses the double divisor sum

        orbits_n(T^k) = (1/n) * sum_{d|n} mu(n/d) * sum_{d'|dk} d' * orbits_{d'}(T),

    which needs base entries up to n*k.  This is deliberately a second,
    independent route: building a table for the iterate spec goes through
    fix counts instead, and the two must agree.
    """
    if k < 1:
        raise ValueError(f"iterate power must be >= 1, got {k}")
    if n < 1:
        raise ValueError(f"orbit_count_iterate requires n >= 1, got {n}")
    if n * k > base.n_max:
        raise ValueError(
            f"base table covers 1..{base.n_max}, need {n * k} for n={n}, k={k}"
        )
    total = 0
    for d in divisors(n):
        inner = sum(dp * base.orbits(dp) for dp in divisors(d * k))
        total += mobius(n // d) * inner
    orbit, remainder = divmod(total, n)
    if remainder:
        raise ExactnessError(f"{n} does not divide iterate orbit sum {total}")
    if orbit < 0:
        raise ExactnessError(f"negative iterate orbit count {orbit} at n={n}")
    return orbit


def iterate_square_identity(base: OrbitTable, n: int) -> int:
    """Orbits of length n of the second iterate via the two-case identity.

    orbits_n(T^2) equals 2*orbits_{2n}(T) + orbits_n(T) for odd n and
    2*orbits_{2n}(T) for even n.  Needs base entries up to 2n.
    """
    if n < 1:
        raise ValueError(f"iterate_square_identity requires n >= 1, got {n}")
    if 2 * n > base.n_max:
        raise ValueError(f"base table covers 1..{base.n_max}, need {2 * n}")
    doubled = 2 * base.orbits(2 * n)
    if n % 2 == 1:
        return doubled + base.orbits(n)
    return doubled
