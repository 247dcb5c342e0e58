"""Command-line front end: every computation as a subcommand.

Output goes to standard output (or --out) as JSON or CSV; logs and notes go
to standard error. Every run echoes its fully resolved configuration, with
defaults materialized, so any output can be replayed bit-for-bit from the
flags it records. Exit status: 0 success, 1 domain/convergence errors,
2 argument-parse errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from enum import Enum
from pathlib import Path
from typing import Sequence

from . import __version__
from .constants import PlateGeometry, make_constants
from .distributions import DistributionSpec, Family, check_cutoff_compliance
from .errors import DomainError, VacgasError
from .montecarlo import McConfig, bracket_monte_carlo, estimate_p_in, pressure_inside_from_mc
from .pressure import lamoreaux_sweep, pressure_difference
from .reduction import reduce_distribution
from .summation import Method, bracket_direct, bracket_euler_maclaurin
from .temperature import Convention, temperature_from_affinity

__all__ = ["build_parser", "run", "main"]

_PAPER_NOTE = (
    "note: convention 'paper' divides the cutoff wavenumber itself by the "
    "Boltzmann constant; pass --convention energy for the photon-energy reading."
)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vacgas",
        description="Vacuum photon-gas pressure between parallel plates.",
    )
    parser.add_argument("--version", action="version", version=f"vacgas {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    dist = argparse.ArgumentParser(add_help=False)
    dist.add_argument("--dist", required=True, choices=[f.value for f in Family])
    dist.add_argument("--lambda", dest="lam", type=float, default=None)
    dist.add_argument("--sharpness", type=float, default=None)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=["csv", "json"], default="json")
    output.add_argument("--out", default=None)

    deterministic = argparse.ArgumentParser(add_help=False)
    deterministic.add_argument("--em-order", type=int, default=3)
    deterministic.add_argument("--quad-tol", type=float, default=1e-10)

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=int, default=1_000_000)
    sampling.add_argument("--seed", type=int, default=0)
    sampling.add_argument("--streams", type=int, default=1)

    kc = argparse.ArgumentParser(add_help=False)
    kc.add_argument("--kc-physical", type=float, default=None)
    kc.add_argument("--kc-inverse-bohr", action="store_true")

    p = sub.add_parser(
        "bracket",
        parents=[dist, deterministic, sampling, output],
        help="dimensionless sum-minus-integral bracket",
    )
    p.add_argument("--method", choices=[m.value for m in Method], default="em")

    p = sub.add_parser(
        "pressure",
        parents=[dist, deterministic, output],
        help="pressure difference at one separation (--dmin, metres)",
    )
    p.add_argument("--method", choices=["direct", "em"], default="em")
    p.add_argument("--dmin", type=float, default=1e-6)

    p = sub.add_parser(
        "sweep",
        parents=[dist, kc, deterministic, output],
        help="pressure over a log-spaced separation range",
    )
    p.add_argument("--method", choices=["direct", "em"], default="em")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--dmin", type=float, default=0.6e-6)
    p.add_argument("--dmax", type=float, default=6e-6)
    p.add_argument("--points", type=int, default=13)

    sub.add_parser(
        "compare",
        parents=[dist, deterministic, output],
        help="direct versus boundary-expansion bracket on one distribution",
    )

    p = sub.add_parser(
        "check-cutoff",
        parents=[dist, output],
        help="compliance of a distribution with the cutoff criteria",
    )
    p.add_argument("--epsilon", type=float, default=0.01)

    p = sub.add_parser(
        "temperature",
        parents=[kc, output],
        help="implied vacuum temperature of a thermal-looking edge",
    )
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--convention", choices=[c.value for c in Convention], default="paper")

    p = sub.add_parser(
        "montecarlo",
        parents=[dist, sampling, output],
        help="sampled inside-pressure integral",
    )
    p.add_argument("--dmin", type=float, default=1e-6)

    return parser


# ---------------------------------------------------------------------------
# Shared pieces
# ---------------------------------------------------------------------------


def _build_spec(args: argparse.Namespace) -> DistributionSpec:
    if args.lam is None:
        raise DomainError("--lambda is required for this subcommand")
    return DistributionSpec(Family(args.dist), args.lam, args.sharpness)


def _resolve_kc(args: argparse.Namespace) -> float | None:
    if args.kc_inverse_bohr:
        if args.kc_physical is not None:
            raise DomainError("pass either --kc-physical or --kc-inverse-bohr, not both")
        return 1.0 / make_constants().bohr_radius
    return args.kc_physical


def _json_safe(value):
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _bracket_row(result) -> dict:
    return {
        "value": result.value,
        "error_estimate": result.error_estimate,
        "method": result.method.value,
        "terms_used": result.terms_used,
    }


def _pressure_row(entry) -> dict:
    return {
        "d_m": entry.separation_d,
        "lambda": entry.bracket.diagnostics.get("lambda"),
        "bracket_value": entry.bracket.value,
        "bracket_error": entry.bracket.error_estimate,
        "pressure_pa": entry.pressure_difference,
        "ideal_pressure_pa": entry.ideal_limit_pressure,
        "relative_deviation": entry.relative_deviation_from_ideal,
    }


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (config, results, diagnostics)
# ---------------------------------------------------------------------------


def _cmd_bracket(args):
    spec = _build_spec(args)
    method = Method(args.method)
    config = {
        "subcommand": "bracket",
        "dist": spec.family.value,
        "lambda": spec.cutoff,
        "sharpness": spec.sharpness,
        "method": method.value,
        "em_order": args.em_order,
        "quad_tol": args.quad_tol,
        "samples": args.samples,
        "seed": args.seed,
        "streams": args.streams,
        "format": args.format,
        "out": args.out,
    }
    if method is Method.MONTE_CARLO:
        result = bracket_monte_carlo(spec, args.samples, args.seed, args.streams)
    elif method is Method.DIRECT:
        result = bracket_direct(reduce_distribution(spec), quad_tol=args.quad_tol)
    else:
        result = bracket_euler_maclaurin(reduce_distribution(spec), order=args.em_order)
    return config, [_bracket_row(result)], dict(result.diagnostics)


def _cmd_pressure(args):
    spec = _build_spec(args)
    config = {
        "subcommand": "pressure",
        "dist": spec.family.value,
        "lambda": spec.cutoff,
        "sharpness": spec.sharpness,
        "method": args.method,
        "em_order": args.em_order,
        "quad_tol": args.quad_tol,
        "dmin": args.dmin,
        "format": args.format,
        "out": args.out,
    }
    entry = pressure_difference(
        spec,
        PlateGeometry(separation_d=args.dmin),
        method=Method(args.method),
        em_order=args.em_order,
        quad_tol=args.quad_tol,
    )
    return config, [_pressure_row(entry)], dict(entry.bracket.diagnostics)


def _cmd_sweep(args):
    kc_value = _resolve_kc(args)
    family = Family(args.dist)
    if kc_value is not None and args.lam is not None:
        raise DomainError("fixed --lambda and physical --kc-physical modes are exclusive")
    if kc_value is None and args.lam is None:
        raise DomainError("sweep needs --lambda (fixed mode) or --kc-physical (physical mode)")

    if kc_value is not None:
        if args.sharpness is not None:
            raise DomainError("physical mode takes --alpha; --sharpness is per-separation")
        alpha = args.alpha if args.alpha is not None else -50.0
        if family is Family.SHARP_CUTOFF:
            template = DistributionSpec.from_physical(family, kc_value, 0.0, args.dmin)
        else:
            if alpha >= 0.0:
                raise DomainError(f"affinity must be negative, got {alpha!r}")
            template = DistributionSpec.from_physical(family, kc_value, -alpha / kc_value, args.dmin)
        mode = "physical-kc"
    else:
        template = _build_spec(args)
        alpha = template.alpha
        mode = "fixed-lambda"

    config = {
        "subcommand": "sweep",
        "dist": family.value,
        "lambda": args.lam,
        "sharpness": args.sharpness,
        "alpha": alpha,
        "kc_physical": kc_value,
        "method": args.method,
        "em_order": args.em_order,
        "quad_tol": args.quad_tol,
        "dmin": args.dmin,
        "dmax": args.dmax,
        "points": args.points,
        "format": args.format,
        "out": args.out,
    }
    sweep = lamoreaux_sweep(
        template,
        args.dmin,
        args.dmax,
        args.points,
        k_c_physical=kc_value,
        method=Method(args.method),
        em_order=args.em_order,
        quad_tol=args.quad_tol,
    )
    diagnostics = {
        "mode": mode,
        "points": len(sweep),
        "all_within_ideal": sweep.all_within_ideal,
    }
    return config, [_pressure_row(e) for e in sweep], diagnostics


def _cmd_compare(args):
    spec = _build_spec(args)
    config = {
        "subcommand": "compare",
        "dist": spec.family.value,
        "lambda": spec.cutoff,
        "sharpness": spec.sharpness,
        "em_order": args.em_order,
        "quad_tol": args.quad_tol,
        "format": args.format,
        "out": args.out,
    }
    direct = bracket_direct(reduce_distribution(spec), quad_tol=args.quad_tol)
    expansion = bracket_euler_maclaurin(reduce_distribution(spec), order=args.em_order)
    scale = max(abs(direct.value), abs(expansion.value), sys.float_info.min)
    rows = []
    for result in (direct, expansion):
        row = _bracket_row(result)
        row["distribution_evaluations"] = result.diagnostics["distribution_evaluations"]
        row["big_f_evaluations"] = result.diagnostics["big_f_evaluations"]
        rows.append(row)
    diagnostics = {
        "relative_difference": abs(direct.value - expansion.value) / scale,
        "evaluation_ratio": rows[0]["distribution_evaluations"]
        / max(1, rows[1]["distribution_evaluations"]),
    }
    return config, rows, diagnostics


def _cmd_check_cutoff(args):
    spec = _build_spec(args)
    config = {
        "subcommand": "check-cutoff",
        "dist": spec.family.value,
        "lambda": spec.cutoff,
        "sharpness": spec.sharpness,
        "epsilon": args.epsilon,
        "format": args.format,
        "out": args.out,
    }
    report = check_cutoff_compliance(spec, epsilon=args.epsilon)
    results = [
        {
            "family": spec.family.value,
            "lambda": spec.cutoff,
            "sharpness": spec.sharpness,
            "epsilon": args.epsilon,
            "passes_plateau": report.passes_plateau,
            "passes_decay": report.passes_decay,
            "passes_range": report.passes_range,
            "verdict": report.verdict,
        }
    ]
    stride = max(1, len(report.diagnostics) // 20)
    diagnostics = {"probes": [list(p) for p in report.diagnostics[::stride]]}
    return config, results, diagnostics


def _cmd_temperature(args):
    kc_value = _resolve_kc(args)
    if kc_value is None:
        raise DomainError("temperature needs --kc-physical or --kc-inverse-bohr")
    convention = Convention(args.convention)
    config = {
        "subcommand": "temperature",
        "alpha": args.alpha,
        "kc_physical": kc_value,
        "convention": convention.value,
        "format": args.format,
        "out": args.out,
    }
    estimate = temperature_from_affinity(args.alpha, kc_value, convention)
    if convention is Convention.WAVENUMBER_LITERAL:
        print(_PAPER_NOTE, file=sys.stderr)
    results = [
        {
            "alpha": estimate.alpha,
            "k_c": estimate.k_c,
            "omega_c": estimate.omega_c,
            "beta_m": estimate.beta,
            "temperature_k": estimate.temperature,
            "convention": estimate.convention.value,
        }
    ]
    return config, results, {}


def _cmd_montecarlo(args):
    spec = _build_spec(args)
    config = {
        "subcommand": "montecarlo",
        "dist": spec.family.value,
        "lambda": spec.cutoff,
        "sharpness": spec.sharpness,
        "samples": args.samples,
        "seed": args.seed,
        "streams": args.streams,
        "dmin": args.dmin,
        "format": args.format,
        "out": args.out,
    }
    estimate = estimate_p_in(McConfig(spec, args.samples, args.seed, args.streams))
    pressure_pa, pressure_se = pressure_inside_from_mc(estimate, args.dmin)
    results = [
        {
            "mean": estimate.mean,
            "standard_error": estimate.standard_error,
            "samples_used": estimate.samples_used,
            "seed": estimate.seed,
            "streams": args.streams,
            "d_m": args.dmin,
            "pressure_in_pa": pressure_pa,
            "pressure_in_se_pa": pressure_se,
        }
    ]
    relative = estimate.standard_error / abs(estimate.mean)
    return config, results, {"relative_standard_error": relative}


_HANDLERS = {
    "bracket": _cmd_bracket,
    "pressure": _cmd_pressure,
    "sweep": _cmd_sweep,
    "compare": _cmd_compare,
    "check-cutoff": _cmd_check_cutoff,
    "temperature": _cmd_temperature,
    "montecarlo": _cmd_montecarlo,
}


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.16e}"
    return str(value)


def _render_csv(config: dict, results: list, diagnostics: dict) -> str:
    lines = [f"# vacgas {__version__}", f"# config {json.dumps(_json_safe(config))}"]
    if results:
        columns = list(results[0].keys())
        lines.append(",".join(columns))
        for row in results:
            lines.append(",".join(_csv_cell(row.get(c)) for c in columns))
    return "\n".join(lines) + "\n"


def _render_json(config: dict, results: list, diagnostics: dict) -> str:
    envelope = {
        "config": _json_safe(config),
        "results": _json_safe(results),
        "diagnostics": _json_safe(diagnostics),
        "version": __version__,
    }
    return json.dumps(envelope, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2

    try:
        config, results, diagnostics = _HANDLERS[args.subcommand](args)
    except VacgasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    render = _render_csv if args.format == "csv" else _render_json
    text = render(config, results, diagnostics)
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
