"""Command-line surface: solvers, verification campaigns, sweeps, traces.

Commands

* ``solve``     — critical level for a coefficient class, as JSON.
* ``verify``    — randomized inequality campaign at a fixed level, JSON summary.
* ``sweep``     — defining-series values on a level grid, CSV.
* ``extremal``  — family trace CSV plus the optimality-witness verdict JSON.
* ``geometry``  — axis-ratio / level / eccentricity table, CSV.

Exit codes: 0 success, 2 usage error, 3 hypothesis-regime error,
4 verification failure.  Identical flags (and seed) produce byte-identical
output; the ``ELLIPTIC_BOHR_THREADS`` environment variable caps campaign
workers without affecting output (results are ordered by draw index).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import coefficients as coeff
from .condenser import eccentricity
from .extremal import FAMILIES, FAMILY_KIND, extremal_trace, optimality_witness
from .radius import series_general, series_real, solve_radius
from .serialize import to_csv_text, to_json_text

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3
EXIT_VERIFICATION = 4

SCHEMA_VERSION = "1"
#: Axis ratios quoted by earlier estimates; the solved levels must beat both.
REFERENCE_AXIS_RATIOS = (5.1284, 5.1573)

_KIND_TOKENS = {
    "real": "real_coefficients",
    "real_coefficients": "real_coefficients",
    "general": "general",
}
VERIFY_FAMILY_TOKENS = tuple(coeff.CHECK_FAMILIES) + ("envelope_derivatives",)
ENVELOPE_BASE_INDICES = (1, 3, 5)
ENVELOPE_DOUBLINGS = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    R: float | None = None
    tol: float = 1e-12
    seed: int = 0
    n_max: int = 64
    output_format: str = "json"
    output_path: str | None = None


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def cmd_solve(cfg: RunConfig, args) -> int:
    solution = solve_radius(_KIND_TOKENS[args.kind], cfg.tol)
    payload = {"schema": SCHEMA_VERSION, "command": "solve"}
    payload.update(solution.to_jsonable())
    _emit(to_json_text(payload), cfg.output_path)
    return EXIT_OK


def _verify_one(task):
    """Campaign worker: one draw index, all per-series families.

    Seeding depends only on (seed, index, realness), so the output is
    independent of how draws are distributed across workers.
    """
    index, seed, R, n_max, families = task
    series = None
    real_series = None
    out = {}
    for family in families:
        if family == "real_sharpening":
            if real_series is None:
                real_series = coeff.generate_positive_real_part(
                    [seed, index, 1], R, n_max, real_coefficients=True
                )
            report = coeff.CHECK_FAMILIES[family](real_series)
        else:
            if series is None:
                series = coeff.generate_positive_real_part([seed, index, 0], R, n_max)
            report = coeff.CHECK_FAMILIES[family](series)
        out[family] = (report.min_slack, report.all_hold)
    return index, out


def _worker_count() -> int:
    raw = os.environ.get("ELLIPTIC_BOHR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_campaign(R: float, count: int, seed: int, n_max: int, families) -> dict:
    """Aggregate min_slack / all_hold per family over ``count`` random draws."""
    per_series = tuple(f for f in families if f != "envelope_derivatives")
    summary = {
        family: {"min_slack": math.inf, "all_hold": True, "count": 0}
        for family in families
    }
    if per_series:
        regime_bound = {"weighted_pair", "majorant"} & set(per_series)
        if regime_bound and R > coeff.PAIR_REGIME_R_MAX:
            raise coeff.RegimeError(
                f"families {sorted(regime_bound)} require R <= "
                f"{coeff.PAIR_REGIME_R_MAX}, got R={R}"
            )
        tasks = [(i, seed, R, n_max, per_series) for i in range(count)]
        workers = _worker_count()
        if workers > 1 and count > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(
                    pool.map(_verify_one, tasks, chunksize=max(1, count // (4 * workers)))
                )
        else:
            results = [_verify_one(t) for t in tasks]
        for _, per_family in sorted(results):
            for family, (min_slack, all_hold) in per_family.items():
                agg = summary[family]
                agg["min_slack"] = min(agg["min_slack"], min_slack)
                agg["all_hold"] = agg["all_hold"] and all_hold
                agg["count"] += 1
    if "envelope_derivatives" in families:
        agg = summary["envelope_derivatives"]
        for n0 in ENVELOPE_BASE_INDICES:
            report = coeff.check_envelope_derivatives(n0, ENVELOPE_DOUBLINGS, R)
            agg["min_slack"] = min(agg["min_slack"], report.min_slack)
            agg["all_hold"] = agg["all_hold"] and report.all_hold
            agg["count"] += 1
    return summary


def cmd_verify(cfg: RunConfig, args) -> int:
    summary = run_campaign(cfg.R, args.count, cfg.seed, cfg.n_max, tuple(args.families))
    all_hold = all(entry["all_hold"] for entry in summary.values())
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "R": cfg.R,
        "count": args.count,
        "seed": cfg.seed,
        "n_max": cfg.n_max,
        "families": summary,
        "all_hold": all_hold,
    }
    _emit(to_json_text(payload), cfg.output_path)
    return EXIT_OK if all_hold else EXIT_VERIFICATION


def cmd_sweep(cfg: RunConfig, args) -> int:
    kind = _KIND_TOKENS[args.kind]
    series = series_real if kind == "real_coefficients" else series_general
    step = (args.R_hi - args.R_lo) / (args.steps - 1)
    rows = []
    for i in range(args.steps):
        R = args.R_lo + i * step
        rows.append((R, series(R, cfg.tol)))
    _emit(to_csv_text(("R", "value"), rows), cfg.output_path)
    return EXIT_OK


def cmd_extremal(cfg: RunConfig, args) -> int:
    trace = extremal_trace(args.family, cfg.R, args.k_min, args.k_max, cfg.tol)
    witness = optimality_witness(FAMILY_KIND[args.family], cfg.R, cfg.tol)
    _emit(to_csv_text(trace.CSV_COLUMNS, trace.csv_rows()), cfg.output_path)
    payload = {"schema": SCHEMA_VERSION, "command": "extremal", "family": args.family}
    payload.update(witness.to_jsonable())
    sys.stdout.write(to_json_text(payload))
    return EXIT_OK


def cmd_geometry(cfg: RunConfig, args) -> int:
    rows = []
    for kind in ("real_coefficients", "general"):
        level = solve_radius(kind, cfg.tol).value
        rows.append((kind, 1.0 / level, level, eccentricity(1.0 / level)))
    for label, rho in zip(("reference_a", "reference_b"), REFERENCE_AXIS_RATIOS):
        rows.append((label, rho, 1.0 / rho, eccentricity(rho)))
    _emit(to_csv_text(("kind", "rho", "R", "eccentricity"), rows), cfg.output_path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elliptic-bohr",
        description="Critical Bohr-type levels for the segment/ellipse condenser.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_R=False):
        p.add_argument("--tol", type=float, default=1e-12, help="numerical tolerance")
        p.add_argument("--output", default=None, help="write primary payload here")
        if needs_R:
            p.add_argument("--R", type=float, required=True, help="inner level")

    p = sub.add_parser("solve", help="critical level for a coefficient class")
    p.add_argument("--kind", choices=sorted(_KIND_TOKENS), default="real")
    common(p)

    p = sub.add_parser("verify", help="randomized inequality campaign")
    common(p, needs_R=True)
    p.add_argument("--count", type=int, default=100, help="number of random series")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", dest="n_max", type=int, default=64)
    p.add_argument(
        "--families",
        nargs="+",
        choices=VERIFY_FAMILY_TOKENS,
        default=list(coeff.DEFAULT_FAMILIES),
    )

    p = sub.add_parser("sweep", help="defining-series values on a level grid")
    p.add_argument("--kind", choices=sorted(_KIND_TOKENS), default="real")
    p.add_argument("--R-lo", dest="R_lo", type=float, required=True)
    p.add_argument("--R-hi", dest="R_hi", type=float, required=True)
    p.add_argument("--steps", type=int, default=50)
    common(p)

    p = sub.add_parser("extremal", help="family trace plus optimality witness")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--k-min", dest="k_min", type=int, default=4)
    p.add_argument("--k-max", dest="k_max", type=int, default=16)
    common(p, needs_R=True)

    p = sub.add_parser("geometry", help="axis-ratio / level / eccentricity table")
    common(p)

    return parser


_HANDLERS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "extremal": cmd_extremal,
    "geometry": cmd_geometry,
}

_FORMATS = {
    "solve": "json",
    "verify": "json",
    "sweep": "csv",
    "extremal": "csv",
    "geometry": "csv",
}


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if args.tol <= 0.0:
        parser.error("--tol must be positive")
    if args.command == "verify":
        if not 0.0 <= args.R < 1.0:
            parser.error("--R must lie in [0, 1)")
        if args.count < 1:
            parser.error("--count must be at least 1")
        if args.n_max < 1:
            parser.error("--n-max must be at least 1")
    if args.command == "sweep":
        if not 0.0 <= args.R_lo < args.R_hi < 1.0:
            parser.error("need 0 <= R-lo < R-hi < 1")
        if args.steps < 2:
            parser.error("--steps must be at least 2")
    if args.command == "extremal":
        if not 1 <= args.k_min <= args.k_max:
            parser.error("need 1 <= k-min <= k-max")
        if not 0.0 < args.R < 1.0 - 2.0 ** (-args.k_min):
            parser.error("--R must lie in (0, 1 - 2^-k_min)")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    cfg = RunConfig(
        command=args.command,
        R=getattr(args, "R", None),
        tol=args.tol,
        seed=getattr(args, "seed", 0),
        n_max=getattr(args, "n_max", 64),
        output_format=_FORMATS[args.command],
        output_path=args.output,
    )
    try:
        return _HANDLERS[args.command](cfg, args)
    except coeff.HypothesisError as exc:
        print(f"hypothesis-regime error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
