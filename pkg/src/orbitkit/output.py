"""Rendering of result tables as CSV or JSON.

Conventions, identical for both formats: big integers are full decimal
strings, exact rationals are "numerator/denominator", and reals are
fixed-point strings with a configurable number of decimal places.  CSV
output starts with '#'-prefixed metadata lines (truncation and tolerance
parameters) followed by the column header; JSON carries the same metadata
under a "meta" key.  Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Sequence

import mpmath

from .asymptotics import mpf_to_fraction

__all__ = [
    "OutputConfig",
    "format_fraction",
    "format_fraction_decimal",
    "format_real",
    "write_table",
]


@dataclass(frozen=True)
class OutputConfig:
    format: str = "csv"
    digits: int = 12
    path: "str | None" = None

    def __post_init__(self) -> None:
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.format!r}")
        if self.digits < 1:
            raise ValueError(f"digits must be >= 1, got {self.digits}")


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def format_fraction_decimal(value: Fraction, digits: int) -> str:
    """Fixed-point decimal of an exact rational, round half away from zero."""
    sign = "-" if value < 0 else ""
    num = abs(value.numerator) * 10**digits
    quotient, remainder = divmod(num, value.denominator)
    if 2 * remainder >= value.denominator:
        quotient += 1
    whole, frac = divmod(quotient, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def format_real(value: Any, digits: int) -> str:
    """Fixed-point decimal of a float or mpmath real, via its exact value."""
    if isinstance(value, float):
        return format_fraction_decimal(Fraction(value), digits)
    if isinstance(value, mpmath.mpf):
        return format_fraction_decimal(mpf_to_fraction(value), digits)
    if isinstance(value, Fraction):
        return format_fraction_decimal(value, digits)
    raise TypeError(f"cannot render {type(value).__name__} as a real")


def _render_csv(meta: Mapping[str, Any], header: Sequence[str],
                rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    for key, value in meta.items():
        buffer.write(f"# {key}={value}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _render_json(meta: Mapping[str, Any], header: Sequence[str],
                 rows: Sequence[Sequence[str]]) -> str:
    payload = {
        "meta": {k: str(v) for k, v in meta.items()},
        "rows": [dict(zip(header, row)) for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def write_table(
    config: OutputConfig,
    meta: Mapping[str, Any],
    header: Sequence[str],
    rows: Sequence[Sequence[str]],
) -> None:
    """Render one result table to the configured destination."""
    if config.format == "csv":
        text = _render_csv(meta, header, rows)
    else:
        text = _render_json(meta, header, rows)
    if config.path is None:
        sys.stdout.write(text)
    else:
        with open(config.path, "w", encoding="utf-8") as handle:
            handle.write(text)
