"""Command-line surface.

Subcommands
-----------
measure   H and J of the maximum for one distribution and n
bounds    finite-n envelope reports for both measures
tables    closed form vs quadrature across the canonical catalog
figure1   (n, H, ceiling) profile for Exp(1), n = 1..50
converge  normalized measures along an n-grid vs their limiting targets
verify    run the built-in invariant suite

Output is CSV (default) or JSON on stdout.  Numbers are printed with 15
significant digits; extended reals use the literals ``inf``, ``-inf`` and
``indeterminate``.  Identical invocations (including ``--seed``) produce
byte-identical output.  Exit codes: 0 success, 1 usage error, 2 domain
error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from . import bounds as bounds_mod
from . import canonical
from . import distributions as dist_mod
from . import evt
from . import measures
from .measures import INDETERMINATE, is_indeterminate
from .numerics import QuadratureError

__all__ = ["RunConfig", "main", "format_extended"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

SEED_ENV_VAR = "EXTREMAL_INFO_SEED"

_FIGURE1_MAX_N = 50


@dataclass(frozen=True)
class RunConfig:
    """Validated run-wide options shared by all subcommands."""

    quad_tol: float = 1e-10
    mc_samples: int = 100_000
    seed: int = 0
    output_format: str = "csv"

    def __post_init__(self):
        if not (self.quad_tol > 0.0 and math.isfinite(self.quad_tol)):
            raise UsageError(f"--tol must be a positive finite real, got {self.quad_tol!r}")
        if self.mc_samples < 100:
            raise UsageError(f"--samples must be at least 100, got {self.mc_samples!r}")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"--format must be csv or json, got {self.output_format!r}")


class UsageError(Exception):
    """Malformed invocation; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through UsageError
    # instead so usage problems consistently map to exit code 1.
    def error(self, message):
        raise UsageError(message)


def format_extended(x) -> str:
    """Fixed textual form of an extended real for CSV output."""
    if is_indeterminate(x):
        return "indeterminate"
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return "%.15g" % x


def _json_value(x):
    if x is None or isinstance(x, (str, bool, int)):
        return x
    if is_indeterminate(x):
        return "indeterminate"
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return x


def _csv_value(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    return format_extended(x)


def _emit(header: list[str], rows: list[list], config: RunConfig, out) -> None:
    if config.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_value(v) for v in row])
        out.write(buf.getvalue())
    else:
        payload = [
            {key: _json_value(value) for key, value in zip(header, row)} for row in rows
        ]
        out.write(json.dumps(payload, indent=2))
        out.write("\n")


def _params_label(dist) -> str:
    d = dist_mod.to_dict(dist)
    return ",".join(f"{k}={d[k]:g}" for k in ("theta", "nu", "xi") if k in d)


def _parse_dist(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--dist is not valid JSON: {exc}") from exc
    return dist_mod.from_dict(data)


def _parse_n(value) -> int:
    if value is None:
        raise UsageError("--n is required")
    if value < 1:
        raise UsageError(f"--n must be an integer >= 1, got {value}")
    return value


def _parse_n_grid(text: str) -> list[int]:
    if text is None:
        raise UsageError("--n-grid is required")
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) != 3:
                raise ValueError("expected a:b:step")
            a, b, step = parts
            if step < 1:
                raise ValueError("step must be >= 1")
            grid = list(range(a, b + 1, step))
        else:
            grid = [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"--n-grid must be a:b:step or a comma list of integers: {exc}") from exc
    if not grid:
        raise UsageError("--n-grid is empty")
    if any(n < 1 for n in grid):
        raise UsageError("--n-grid entries must be >= 1")
    if any(b <= a for a, b in zip(grid[:-1], grid[1:])):
        raise UsageError("--n-grid must be strictly increasing")
    return grid


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_measure(dist, n: int, method: str, config: RunConfig, out) -> int:
    h = measures.shannon_max(
        dist, n, method, quad_tol=config.quad_tol, samples=config.mc_samples, seed=config.seed
    )
    j = measures.extropy_max(
        dist, n, method, quad_tol=config.quad_tol, samples=config.mc_samples, seed=config.seed
    )
    header = ["family", "params", "n", "H", "J", "method", "error_estimate"]
    rows = [
        [
            dist.family,
            _params_label(dist),
            n,
            h.value,
            j.value,
            h.method,
            max(h.error_estimate, j.error_estimate),
        ]
    ]
    _emit(header, rows, config, out)
    return EXIT_OK


def cmd_bounds(dist, n: int, method: str, config: RunConfig, out) -> int:
    header = [
        "family",
        "params",
        "n",
        "measure",
        "lower",
        "value",
        "upper",
        "lower_holds",
        "upper_holds",
        "applicable",
        "gate_note",
    ]
    rows = []
    for name, report in (
        ("shannon", bounds_mod.shannon_bounds(dist, n, method, quad_tol=config.quad_tol)),
        ("extropy", bounds_mod.extropy_bounds(dist, n, method, quad_tol=config.quad_tol)),
    ):
        rows.append(
            [
                dist.family,
                _params_label(dist),
                n,
                name,
                report.lower,
                report.value,
                report.upper,
                report.lower_holds,
                report.upper_holds,
                report.applicable,
                report.gate_note,
            ]
        )
    _emit(header, rows, config, out)
    return EXIT_OK


def cmd_tables(config: RunConfig, out) -> int:
    header = [
        "family",
        "params",
        "n",
        "h_closed",
        "h_quad",
        "h_gap",
        "h_ub",
        "j_closed",
        "j_quad",
        "j_gap",
        "j_ub",
    ]
    rows = []
    for dist in canonical.catalog_members():
        h_ub = bounds_mod.shannon_limit_upper(dist)
        j_ub = bounds_mod.extropy_limit_upper(dist)
        for n in canonical.TABLE_N:
            chk = measures.crosscheck(dist, n, quad_tol=config.quad_tol)
            rows.append(
                [
                    dist.family,
                    _params_label(dist),
                    n,
                    chk["h_closed"],
                    chk["h_quad"],
                    chk["h_gap"],
                    h_ub,
                    chk["j_closed"],
                    chk["j_quad"],
                    chk["j_gap"],
                    j_ub,
                ]
            )
        rows.append(
            [
                dist.family,
                _params_label(dist),
                "limit",
                measures.shannon_limit(dist),
                None,
                None,
                h_ub,
                measures.extropy_limit(dist),
                None,
                None,
                j_ub,
            ]
        )
    _emit(header, rows, config, out)
    return EXIT_OK


def cmd_figure1(config: RunConfig, out) -> int:
    dist = dist_mod.exponential(1.0)
    ub = bounds_mod.shannon_limit_upper(dist)
    header = ["n", "H", "UB"]
    rows = [
        [n, measures.shannon_max(dist, n).value, ub] for n in range(1, _FIGURE1_MAX_N + 1)
    ]
    _emit(header, rows, config, out)
    return EXIT_OK


def cmd_converge(dist, n_grid: list[int], config: RunConfig, out) -> int:
    study = evt.convergence_study(dist, n_grid)
    header = [
        "n",
        "h_normalized",
        "j_normalized",
        "h_target",
        "j_target",
        "h_gap",
        "j_gap",
    ]
    rows = [
        [r.n, r.h_normalized, r.j_normalized, r.h_target, r.j_target, r.h_gap, r.j_gap]
        for r in study.records
    ]
    _emit(header, rows, config, out)
    return EXIT_OK


def cmd_verify(config: RunConfig, out) -> int:
    from . import verify as verify_mod

    results = verify_mod.run_all(config)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "ok" if r.passed else "FAIL"
        line = f"{status:4s} {r.name}"
        if not r.passed:
            line += f": {r.detail}"
        out.write(line + "\n")
    out.write(f"{len(results) - len(failed)} passed, {len(failed)} failed\n")
    return EXIT_OK if not failed else EXIT_VERIFY


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="extremal-info",
        description="Entropy and extropy of sample maxima: measures, bounds, and limits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config_flags(p):
        p.add_argument("--tol", type=float, default=1e-10, help="quadrature absolute tolerance")
        p.add_argument("--samples", type=int, default=100_000, help="Monte Carlo sample count")
        p.add_argument("--seed", type=int, default=None, help="Monte Carlo seed")
        p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")

    p = sub.add_parser("measure", help="H and J of the maximum of n draws")
    p.add_argument("--dist", required=True, help="distribution spec as JSON")
    p.add_argument("--n", type=int, required=True, help="number of draws")
    p.add_argument("--method", choices=("closed", "quad", "mc"), default="closed")
    add_config_flags(p)

    p = sub.add_parser("bounds", help="finite-n envelope reports")
    p.add_argument("--dist", required=True, help="distribution spec as JSON")
    p.add_argument("--n", type=int, required=True, help="number of draws")
    p.add_argument("--method", choices=("closed", "quad"), default="closed")
    add_config_flags(p)

    p = sub.add_parser("tables", help="closed form vs quadrature across the catalog")
    add_config_flags(p)

    p = sub.add_parser("figure1", help="(n, H, ceiling) profile for Exp(1), n = 1..50")
    add_config_flags(p)

    p = sub.add_parser("converge", help="normalized measures along an n-grid")
    p.add_argument("--dist", required=True, help="distribution spec as JSON")
    p.add_argument("--n-grid", dest="n_grid", required=True, help="a:b:step or comma list")
    add_config_flags(p)

    p = sub.add_parser("verify", help="run the built-in invariant suite")
    add_config_flags(p)

    return parser


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(
            f"environment variable {SEED_ENV_VAR} must be an integer, got {raw!r}"
        ) from None


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        seed = args.seed if args.seed is not None else _default_seed()
        config = RunConfig(
            quad_tol=args.tol,
            mc_samples=args.samples,
            seed=seed,
            output_format=args.format,
        )
        if args.command == "measure":
            dist = _parse_dist(args.dist)
            return cmd_measure(dist, _parse_n(args.n), args.method, config, out)
        if args.command == "bounds":
            dist = _parse_dist(args.dist)
            return cmd_bounds(dist, _parse_n(args.n), args.method, config, out)
        if args.command == "tables":
            return cmd_tables(config, out)
        if args.command == "figure1":
            return cmd_figure1(config, out)
        if args.command == "converge":
            dist = _parse_dist(args.dist)
            return cmd_converge(dist, _parse_n_grid(args.n_grid), config, out)
        return cmd_verify(config, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, QuadratureError) as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
