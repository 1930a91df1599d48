"""Command-line front end.

Every computation is exposed as a reproducible table on stdout (or a file)
in CSV or JSON.  Subcommands:

    table    fix/least/orbit counts up to a bound
    pnt      orbit-counting function with its normalized ratio
    merten   weighted orbit sums against ln X
    zeta     series coefficients, the lacunary-identity check, boundary scans
    verify   the full invariant suite, one PASS/FAIL line per check

Exit status: 0 on success, 1 on a validation error, 2 on a verification
failure.  The environment variable ORBITKIT_PRECISION_BITS (default 64)
sets the working precision for real-valued columns.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .asymptotics import (
    DEFAULT_BURN_IN,
    DEFAULT_PRECISION_BITS,
    MERTEN_SLACK,
    RATIO_BAND_TOLERANCE,
    cluster_ratios,
    merten_series,
    ratio_series,
)
from .counting import (
    CIRCLE_DOUBLING,
    THREE_ADIC_EXTENSION,
    MapSpec,
    build_table,
    custom_orbits,
    iterate,
)
from .output import (
    OutputConfig,
    format_fraction,
    format_fraction_decimal,
    format_real,
    write_table,
)
from .verify import run_checks
from .zeta import radial_scan, xi1_closed_form, xi1_direct, zeta_series

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2

_NAMED_MAPS = {
    "f": THREE_ADIC_EXTENSION,
    "g": CIRCLE_DOUBLING,
    "f2": iterate(THREE_ADIC_EXTENSION, 2),
    "g2": iterate(CIRCLE_DOUBLING, 2),
}


def _precision_bits() -> int:
    raw = os.environ.get("ORBITKIT_PRECISION_BITS", "")
    if not raw:
        return DEFAULT_PRECISION_BITS
    try:
        bits = int(raw)
    except ValueError as exc:
        raise ValueError(f"ORBITKIT_PRECISION_BITS must be an integer, got {raw!r}") from exc
    if bits < 60:
        raise ValueError(f"ORBITKIT_PRECISION_BITS must be >= 60, got {bits}")
    return bits


def _resolve_map(name: str) -> MapSpec:
    """A named map, or a path to a one-column file of orbit counts."""
    if name in _NAMED_MAPS:
        return _NAMED_MAPS[name]
    try:
        with open(name, "r", encoding="utf-8") as handle:
            lines = [line.strip() for line in handle]
    except OSError as exc:
        raise ValueError(f"cannot read orbit file {name!r}: {exc}") from exc
    counts = []
    for i, line in enumerate(lines, start=1):
        if not line:
            continue
        try:
            value = int(line)
        except ValueError as exc:
            raise ValueError(f"{name}:{i}: not an integer: {line!r}") from exc
        if value < 0:
            raise ValueError(f"{name}:{i}: orbit counts must be non-negative")
        counts.append(value)
    if not counts:
        raise ValueError(f"orbit file {name!r} is empty")
    return custom_orbits(counts)


def _output_config(args: argparse.Namespace) -> OutputConfig:
    return OutputConfig(format=args.format, digits=args.digits, path=args.output)


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--digits", type=int, default=12,
                        help="decimal places for real-valued columns (default 12)")
    parser.add_argument("--output", default=None, metavar="PATH",
                        help="write to a file instead of stdout")


def _add_map_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--map", required=True, metavar="MAP",
        help="f, g, f2, g2, or a path to a one-column orbit-count file",
    )


def _cmd_table(args: argparse.Namespace) -> int:
    if not 1 <= args.max <= 10**4:
        raise ValueError(f"--max must lie in 1..10000, got {args.max}")
    spec = _resolve_map(args.map)
    table = build_table(spec, args.max)
    meta = {"command": "table", "map": spec.label, "max": args.max}
    if spec.entropy_base is not None:
        meta["entropy"] = f"log({spec.entropy_base})"
    rows = [
        (str(n), str(fix), str(least), str(orbits))
        for n, fix, least, orbits in table.rows()
    ]
    write_table(_output_config(args), meta,
                ("n", "fix_count", "least_count", "orbit_count"), rows)
    return EXIT_OK


def _cmd_pnt(args: argparse.Namespace) -> int:
    if not 1 <= args.max <= 10**4:
        raise ValueError(f"--max must lie in 1..10000, got {args.max}")
    spec = _resolve_map(args.map)
    table = build_table(spec, args.max)
    points = ratio_series(table, args.max, args.burn_in)
    config = _output_config(args)
    band_low = Fraction(1, 3) - RATIO_BAND_TOLERANCE
    band_high = Fraction(1) + RATIO_BAND_TOLERANCE
    clusters = cluster_ratios([p.ratio for p in points])
    meta = {
        "command": "pnt",
        "map": spec.label,
        "max": args.max,
        "burn_in": args.burn_in,
        "digits": config.digits,
        "band": f"[{format_fraction(band_low)}, {format_fraction(band_high)}]",
        "ratio_clusters": "; ".join(f"{mean:.4f} x{count}" for mean, count in clusters),
    }
    rows = [
        (
            str(p.X),
            str(p.pi),
            format_fraction(p.ratio),
            format_fraction_decimal(p.ratio, config.digits),
            format_fraction(p.running_min),
            format_fraction(p.running_max),
        )
        for p in points
    ]
    write_table(config, meta,
                ("X", "pi", "ratio", "ratio_decimal", "running_min", "running_max"),
                rows)
    return EXIT_OK


def _cmd_merten(args: argparse.Namespace) -> int:
    if not 1 <= args.max <= 10**4:
        raise ValueError(f"--max must lie in 1..10000, got {args.max}")
    spec = _resolve_map(args.map)
    bits = _precision_bits()
    table = build_table(spec, args.max)
    points = merten_series(table, args.max, bits)
    config = _output_config(args)
    meta = {
        "command": "merten",
        "map": spec.label,
        "max": args.max,
        "digits": config.digits,
        "precision_bits": bits,
        "slack": str(MERTEN_SLACK),
    }
    rows = []
    for p in points:
        rows.append(
            (
                str(p.X),
                format_fraction(p.sum),
                format_fraction_decimal(p.sum, config.digits),
                format_real(p.log_x, config.digits),
                "" if p.normalized is None else format_real(p.normalized, config.digits),
            )
        )
    write_table(config, meta,
                ("X", "sum", "sum_decimal", "log_x", "normalized"), rows)
    return EXIT_OK


def _cmd_zeta_coeffs(args: argparse.Namespace) -> int:
    if not 0 <= args.degree <= 5000:
        raise ValueError(f"--degree must lie in 0..5000, got {args.degree}")
    spec = _resolve_map(args.map)
    table = build_table(spec, max(args.degree, 1))
    coeffs = zeta_series(table, args.degree)
    meta = {"command": "zeta coeffs", "map": spec.label, "degree": args.degree}
    rows = [(str(n), str(int(coeffs[n]))) for n in range(args.degree + 1)]
    write_table(_output_config(args), meta, ("n", "coefficient"), rows)
    return EXIT_OK


def _cmd_zeta_xi1_check(args: argparse.Namespace) -> int:
    if args.degree < 2:
        raise ValueError(f"--degree must be >= 2, got {args.degree}")
    direct = xi1_direct(args.degree)
    closed = xi1_closed_form(args.degree)
    verified = direct == closed
    meta = {"command": "zeta xi1-check", "degree": args.degree}
    rows = [(str(args.degree), "PASS" if verified else "FAIL")]
    write_table(_output_config(args), meta, ("degree_verified", "status"), rows)
    return EXIT_OK if verified else EXIT_VERIFY


def _cmd_zeta_boundary(args: argparse.Namespace) -> int:
    try:
        turns = Fraction(args.angle)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"--angle must be a rational like 1/3, got {args.angle!r}") from exc
    try:
        radii = [float(part) for part in args.radii.split(",") if part]
    except ValueError as exc:
        raise ValueError(f"--radii must be comma-separated reals, got {args.radii!r}") from exc
    if not radii:
        raise ValueError("--radii must list at least one radius")
    if args.terms < 0:
        raise ValueError(f"--terms must be >= 0, got {args.terms}")
    if not 1 <= args.degree <= 10**4:
        raise ValueError(f"--degree must lie in 1..10000, got {args.degree}")
    spec = _resolve_map(args.map)
    table = build_table(spec, args.degree)
    rows_data = radial_scan(table, turns.numerator, turns.denominator,
                            radii, args.terms, args.degree)
    config = _output_config(args)
    meta = {
        "command": "zeta boundary",
        "map": spec.label,
        "angle_turns": format_fraction(turns),
        "terms": args.terms,
        "degree": args.degree,
        "digits": config.digits,
    }
    rows = [
        (
            format_real(row.radius, config.digits),
            str(row.angle_num),
            str(row.angle_den),
            format_real(row.product_modulus, config.digits),
            format_real(row.series_modulus, config.digits),
            str(row.terms),
            str(row.degree),
        )
        for row in rows_data
    ]
    write_table(config, meta,
                ("radius", "angle_num", "angle_den", "product_modulus",
                 "series_modulus", "terms", "degree"),
                rows)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.max <= 10**4:
        raise ValueError(f"--max must lie in 1..10000, got {args.max}")
    results = run_checks(args.max)
    meta = {"command": "verify", "max": args.max,
            "checks": len(results), "version": __version__}
    rows = [
        (r.name, "PASS" if r.passed else "FAIL", r.params, r.detail)
        for r in results
    ]
    write_table(_output_config(args), meta,
                ("check", "status", "params", "detail"), rows)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitkit",
        description="Exact orbit counting and zeta-function data for the "
                    "circle-doubling map and its 3-adic isometric extension.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="fix/least/orbit counts")
    _add_map_option(p_table)
    p_table.add_argument("--max", type=int, required=True)
    _add_output_options(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_pnt = sub.add_parser("pnt", help="orbit-counting function and ratio")
    _add_map_option(p_pnt)
    p_pnt.add_argument("--max", type=int, required=True)
    p_pnt.add_argument("--burn-in", dest="burn_in", type=int, default=DEFAULT_BURN_IN)
    _add_output_options(p_pnt)
    p_pnt.set_defaults(func=_cmd_pnt)

    p_merten = sub.add_parser("merten", help="weighted orbit sums vs ln X")
    _add_map_option(p_merten)
    p_merten.add_argument("--max", type=int, required=True)
    _add_output_options(p_merten)
    p_merten.set_defaults(func=_cmd_merten)

    p_zeta = sub.add_parser("zeta", help="zeta series and boundary data")
    zeta_sub = p_zeta.add_subparsers(dest="zeta_command", required=True)

    p_coeffs = zeta_sub.add_parser("coeffs", help="exact series coefficients")
    _add_map_option(p_coeffs)
    p_coeffs.add_argument("--degree", type=int, required=True)
    _add_output_options(p_coeffs)
    p_coeffs.set_defaults(func=_cmd_zeta_coeffs)

    p_xi1 = zeta_sub.add_parser("xi1-check", help="lacunary-series identity check")
    p_xi1.add_argument("--degree", type=int, required=True)
    _add_output_options(p_xi1)
    p_xi1.set_defaults(func=_cmd_zeta_xi1_check)

    p_boundary = zeta_sub.add_parser("boundary", help="radial |zeta| scan")
    p_boundary.add_argument("--angle", required=True,
                            help="angle as a fraction of a full turn, e.g. 1/3")
    p_boundary.add_argument("--radii", required=True,
                            help="comma-separated radii in (0, 1/2)")
    p_boundary.add_argument("--terms", type=int, default=10,
                            help="product levels (default 10)")
    p_boundary.add_argument("--degree", type=int, default=2000,
                            help="series truncation for the series column (default 2000)")
    p_boundary.add_argument("--map", default="f", metavar="MAP",
                            help="f, g, f2, g2, or an orbit-count file (default f)")
    _add_output_options(p_boundary)
    p_boundary.set_defaults(func=_cmd_zeta_boundary)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("--max", type=int, default=500)
    _add_output_options(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; our contract reserves 2 for
        # verification failures, so fold usage problems into status 1.
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"orbitkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"orbitkit: i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
