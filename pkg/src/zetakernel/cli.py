"""Command-line front end.

Subcommands mirror the library: ``kernel show/verify``, ``identities``,
``delta``, ``s``, ``zeta even/odd``, ``mc volume/zeta-odd``.  Every
invocation builds one RunReport and renders it as an aligned table
(default), CSV (header row, strings quoted, numbers bare), or a single
JSON object with keys command, parameters, results, status, elapsed_s.
The default format comes from the ZETAKERNEL_FORMAT environment
variable when set.

Floating-point output is printed with 12 significant digits; exact
rationals are printed exactly.  Exit code 0 means every check in the
invocation passed (or the command was purely informational), 1 means
some check failed, 2 means a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .euler import check_identities
from .kernels import closed_form, recurrence_step
from .mc import McConfig, mc_volume, mc_zeta_odd
from .zeta import (
    QuadratureConfig,
    SeriesConfig,
    delta,
    s_odd,
    s_value,
    series_S,
    series_zeta,
    zeta_even,
    zeta_odd_logtan,
    zeta_odd_quadrature,
)

_FORMATS = ("table", "csv", "json")
# oracle tolerances for the pass/fail columns
_SERIES_S_TOL = 1e-8        # series_S config; rows pass within twice this
_ZETA_EVEN_TOL = 1e-12
_ZETA_ODD_QUAD_TOL = 1e-10
_ZETA_ODD_LOGTAN_TOL = 1e-8
_MC_Z_LIMIT = 4.0


class UsageError(Exception):
    """Invalid arguments detected after parsing; maps to exit code 2."""


@dataclass
class RunReport:
    command: str
    parameters: dict
    results: list
    status: str  # pass | fail | info
    elapsed_s: float = 0.0


def _check(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _status_from_rows(rows: list) -> str:
    checks = [v for row in rows for k, v in row.items() if v in ("PASS", "FAIL")]
    if not checks:
        return "info"
    return "pass" if all(v == "PASS" for v in checks) else "fail"


def cmd_kernel_show(args: argparse.Namespace) -> RunReport:
    k = closed_form(args.n)
    rows = [
        {"field": "order", "value": k.order},
        {"field": "split", "value": k.split.value},
        {"field": "branch_le", "value": str(k.branch_le)},
        {"field": "branch_ge", "value": str(k.branch_ge)},
        {"field": "trace", "value": str(k.trace())},
    ]
    return RunReport("kernel show", {"n": args.n}, rows, "info")


def cmd_kernel_verify(args: argparse.Namespace) -> RunReport:
    rows = []
    for n in range(1, args.max_n):
        stepped = recurrence_step(closed_form(n))
        rows.append({"order": n + 1, "check": _check(stepped == closed_form(n + 1))})
    return RunReport("kernel verify", {"max_n": args.max_n}, rows, _status_from_rows(rows))


def cmd_identities(args: argparse.Namespace) -> RunReport:
    rows = [
        {"identity": r.name, "index_range": r.index_range, "check": _check(r.passed)}
        for r in check_identities()
    ]
    return RunReport("identities", {}, rows, _status_from_rows(rows))


def cmd_delta(args: argparse.Namespace) -> RunReport:
    cfg = SeriesConfig(tolerance=_SERIES_S_TOL)
    rows = []
    for n in range(2, args.max_n + 1):
        d_trace = delta(n, "trace")
        d_closed = delta(n, "closed")
        numeric = s_value(n).numeric()
        series = series_S(n, cfg)
        rows.append(
            {
                "n": n,
                "delta": str(d_closed),
                "numeric": float(d_closed),
                "routes": _check(d_trace == d_closed),
                "series": _check(abs(series - numeric) < 2 * _SERIES_S_TOL),
            }
        )
    return RunReport("delta", {"max_n": args.max_n}, rows, _status_from_rows(rows))


def cmd_s(args: argparse.Namespace) -> RunReport:
    cfg = SeriesConfig(tolerance=_SERIES_S_TOL)
    rows = []
    for n in range(1, args.max_n + 1):
        if n == 1:
            c = s_odd(0)
            routes = series = "-"
            note = "outside volume-identity range (n >= 2); series oracle skipped"
        else:
            c = s_value(n)
            if n % 2 == 0:
                other = (1 - Fraction(1, 2 ** n)) * zeta_even(n // 2).rational_part
            else:
                other = s_odd((n - 1) // 2).rational_part
            routes = _check(c.rational_part == other)
            series = _check(abs(series_S(n, cfg) - c.numeric()) < 2 * _SERIES_S_TOL)
            note = ""
        rows.append(
            {
                "n": n,
                "rational_part": str(c.rational_part),
                "pi_power": c.pi_power,
                "exact": str(c),
                "numeric": c.numeric(),
                "routes": routes,
                "series": series,
                "note": note,
            }
        )
    return RunReport("s", {"max_n": args.max_n}, rows, _status_from_rows(rows))


def cmd_zeta_even(args: argparse.Namespace) -> RunReport:
    if args.method not in ("formula", "series"):
        raise UsageError(
            f"method {args.method!r} is not available at even arguments; choose formula or series"
        )
    n = args.n
    c = zeta_even(n)
    formula = c.numeric()
    series = series_zeta(2 * n, SeriesConfig(tolerance=_ZETA_EVEN_TOL / 10))
    value, oracle = (formula, series) if args.method == "formula" else (series, formula)
    diff = abs(value - oracle)
    consistent = s_value(2 * n).rational_part == (1 - Fraction(1, 4 ** n)) * c.rational_part
    rows = [
        {
            "s": 2 * n,
            "method": args.method,
            "rational_part": str(c.rational_part),
            "pi_power": c.pi_power,
            "exact": str(c),
            "value": value,
            "oracle": oracle,
            "abs_diff": diff,
            "routes": _check(consistent),
            "check": _check(diff <= _ZETA_EVEN_TOL),
        }
    ]
    return RunReport(
        "zeta even", {"n": n, "method": args.method}, rows, _status_from_rows(rows)
    )


def cmd_zeta_odd(args: argparse.Namespace) -> RunReport:
    if args.method == "formula":
        raise UsageError(
            "no closed formula is known at odd arguments; choose quadrature, logtan, or series"
        )
    n = args.n
    qcfg = QuadratureConfig(panels=args.panels, nodes_per_panel=args.nodes)
    series = series_zeta(2 * n + 1, SeriesConfig(tolerance=1e-13))
    if args.method == "quadrature":
        value, oracle, tol = zeta_odd_quadrature(n, qcfg), series, _ZETA_ODD_QUAD_TOL
    elif args.method == "logtan":
        value, oracle, tol = zeta_odd_logtan(n, qcfg), series, _ZETA_ODD_LOGTAN_TOL
    else:
        value, oracle, tol = series, zeta_odd_quadrature(n, qcfg), _ZETA_ODD_QUAD_TOL
    diff = abs(value - oracle)
    rows = [
        {
            "s": 2 * n + 1,
            "method": args.method,
            "value": value,
            "oracle": oracle,
            "abs_diff": diff,
            "tolerance": tol,
            "check": _check(diff <= tol),
        }
    ]
    return RunReport(
        "zeta odd", {"n": n, "method": args.method}, rows, _status_from_rows(rows)
    )


def _mc_row(est, ref: float) -> dict:
    if est.stderr > 0:
        z = (est.mean - ref) / est.stderr
    else:
        z = 0.0 if est.mean == ref else math.inf
    return {
        "mean": est.mean,
        "stderr": est.stderr,
        "ci95_lo": est.mean - 1.96 * est.stderr,
        "ci95_hi": est.mean + 1.96 * est.stderr,
        "reference": ref,
        "z_score": z,
        "clamped": est.clamped,
        "check": _check(abs(z) <= _MC_Z_LIMIT),
    }


def cmd_mc_volume(args: argparse.Namespace) -> RunReport:
    cfg = McConfig(dimension=args.n, samples=args.samples, seed=args.seed, chunk_size=args.chunk)
    est = mc_volume(cfg, workers=args.workers)
    rows = [_mc_row(est, float(delta(args.n)))]
    params = {
        "n": args.n, "samples": args.samples, "seed": args.seed,
        "chunk": args.chunk, "workers": args.workers,
    }
    return RunReport("mc volume", params, rows, _status_from_rows(rows))


def cmd_mc_zeta_odd(args: argparse.Namespace) -> RunReport:
    cfg = McConfig(dimension=2 * args.n, samples=args.samples, seed=args.seed, chunk_size=args.chunk)
    est = mc_zeta_odd(args.n, cfg, workers=args.workers)
    ref = series_zeta(2 * args.n + 1, SeriesConfig(tolerance=1e-12))
    rows = [_mc_row(est, ref)]
    params = {
        "n": args.n, "samples": args.samples, "seed": args.seed,
        "chunk": args.chunk, "workers": args.workers,
    }
    return RunReport("mc zeta-odd", params, rows, _status_from_rows(rows))


def _int_at_least(minimum: int, what: str) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{what} must be an integer")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{what} must be >= {minimum}")
        return value

    return parse


def _seed_type(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("seed must be an integer")
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps the per-subcommand copy from clobbering a value parsed
    # by the top-level flag; it only writes the attribute when given
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=_FORMATS,
        default=argparse.SUPPRESS,
        help="output format (default from ZETAKERNEL_FORMAT, else table)",
    )

    parser = argparse.ArgumentParser(
        prog="zetakernel",
        description="Piecewise kernels, cyclic-polytope volumes, and zeta values with cross-checked routes.",
    )
    parser.add_argument(
        "--format",
        choices=_FORMATS,
        default=os.environ.get("ZETAKERNEL_FORMAT", "table"),
        help="output format (default from ZETAKERNEL_FORMAT, else table)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kernel = sub.add_parser("kernel", help="inspect and verify the piecewise kernels")
    ksub = kernel.add_subparsers(dest="subcommand", required=True)
    kshow = ksub.add_parser("show", parents=[fmt], help="print one kernel's branches and split line")
    kshow.add_argument("n", type=_int_at_least(1, "n"), help="kernel order, >= 1")
    kshow.set_defaults(handler=cmd_kernel_show)
    kverify = ksub.add_parser("verify", parents=[fmt], help="check the convolution recurrence against the closed form")
    kverify.add_argument("--max-n", type=_int_at_least(2, "max-n"), default=12)
    kverify.set_defaults(handler=cmd_kernel_verify)

    ident = sub.add_parser("identities", parents=[fmt], help="exact Euler/Bernoulli identity suite")
    ident.set_defaults(handler=cmd_identities)

    deltap = sub.add_parser("delta", parents=[fmt], help="exact cyclic-polytope volumes, both routes, series-checked")
    deltap.add_argument("--max-n", type=_int_at_least(2, "max-n"), default=12)
    deltap.set_defaults(handler=cmd_delta)

    sp = sub.add_parser("s", parents=[fmt], help="S(n) table with exact and series routes")
    sp.add_argument("--max-n", type=_int_at_least(1, "max-n"), default=10)
    sp.set_defaults(handler=cmd_s)

    zeta = sub.add_parser("zeta", help="zeta values at even and odd arguments")
    zsub = zeta.add_subparsers(dest="subcommand", required=True)
    zeven = zsub.add_parser("even", parents=[fmt], help="zeta(2n), exact, with series oracle")
    zeven.add_argument("n", type=_int_at_least(1, "n"), help="half the argument: computes zeta(2n)")
    zeven.add_argument("--method", choices=("formula", "series"), default="formula")
    zeven.set_defaults(handler=cmd_zeta_even)
    zodd = zsub.add_parser("odd", parents=[fmt], help="zeta(2n+1), numeric routes with series oracle")
    zodd.add_argument("n", type=_int_at_least(1, "n"), help="computes zeta(2n+1)")
    zodd.add_argument(
        "--method",
        choices=("formula", "quadrature", "logtan", "series"),
        default="quadrature",
        help="formula is rejected here: no closed form exists at odd arguments",
    )
    zodd.add_argument("--panels", type=_int_at_least(1, "panels"), default=16)
    zodd.add_argument("--nodes", type=_int_at_least(2, "nodes"), default=20)
    zodd.set_defaults(handler=cmd_zeta_odd)

    mc = sub.add_parser("mc", help="seeded Monte Carlo estimates")
    msub = mc.add_subparsers(dest="subcommand", required=True)

    def mc_common(p: argparse.ArgumentParser, default_samples: int) -> None:
        p.add_argument("--samples", type=_int_at_least(1, "samples"), default=default_samples)
        p.add_argument("--seed", type=_seed_type, default=42)
        p.add_argument("--chunk", type=_int_at_least(1, "chunk"), default=65536)
        p.add_argument("--workers", type=_int_at_least(1, "workers"), default=1)

    mvol = msub.add_parser("volume", parents=[fmt], help="hit-fraction estimate of delta_n")
    mvol.add_argument("n", type=_int_at_least(2, "n"), help="polytope dimension, >= 2")
    mc_common(mvol, 1_000_000)
    mvol.set_defaults(handler=cmd_mc_volume)
    mzeta = msub.add_parser("zeta-odd", parents=[fmt], help="Monte Carlo zeta(2n+1) over the 2n-dimensional polytope")
    mzeta.add_argument("n", type=_int_at_least(1, "n"), help="computes zeta(2n+1) in dimension 2n")
    mc_common(mzeta, 1_000_000)
    mzeta.set_defaults(handler=cmd_mc_zeta_odd)

    return parser


def _fmt_float(value: float) -> str:
    return f"{value:.12g}"


def _render_cell(value) -> str:
    if isinstance(value, float):
        return _fmt_float(value)
    return str(value)


def _render_table(report: RunReport, out) -> None:
    if report.results:
        columns = list(report.results[0].keys())
        rendered = [[_render_cell(row[c]) for c in columns] for row in report.results]
        widths = [max(len(c), *(len(r[i]) for r in rendered)) for i, c in enumerate(columns)]
        print("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip(), file=out)
        for r in rendered:
            print("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip(), file=out)
    print(f"status: {report.status}", file=out)
    print(f"elapsed_s: {report.elapsed_s:.3f}", file=out)


def _csv_cell(value):
    if isinstance(value, float):
        return float(_fmt_float(value))  # rounded to 12 significant digits, written bare
    return value


def _render_csv(report: RunReport, out) -> None:
    if not report.results:
        return
    columns = list(report.results[0].keys())
    writer = csv.writer(out, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(columns)
    for row in report.results:
        writer.writerow([_csv_cell(row[c]) for c in columns])


def _json_value(value):
    if isinstance(value, float):
        return float(_fmt_float(value))
    if isinstance(value, (int, str)):
        return value
    return str(value)


def _render_json(report: RunReport, out) -> None:
    doc = {
        "command": report.command,
        "parameters": {k: _json_value(v) for k, v in report.parameters.items()},
        "results": [{k: _json_value(v) for k, v in row.items()} for row in report.results],
        "status": report.status,
        "elapsed_s": round(report.elapsed_s, 6),
    }
    json.dump(doc, out, indent=2)
    out.write("\n")


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "table")
    if fmt not in _FORMATS:
        print(f"error: invalid output format {fmt!r} (ZETAKERNEL_FORMAT?)", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        report = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.elapsed_s = time.perf_counter() - start
    if fmt == "table":
        _render_table(report, sys.stdout)
    elif fmt == "csv":
        _render_csv(report, sys.stdout)
    else:
        _render_json(report, sys.stdout)
    return 0 if report.status in ("pass", "info") else 1


if __name__ == "__main__":
    sys.exit(main())
