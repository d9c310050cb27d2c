"""Command-line interface: detect, path, simulate, bench, fit.

Input series are CSV files with one numeric value per line (an optional
single header line is auto-detected); "-" reads standard input.  Output
is JSON (schema "notseg/1") or plot-ready CSV.  All commands are
reproducible from their flags plus the seed, which may also be supplied
via the NOTSEG_SEED environment variable (the --seed flag wins).

Exit codes: 0 success, 2 malformed input, 3 infeasible configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .bench import run_benchmark
from .core import ChangePointSet, Scenario
from .detector import ProfileCache, detect_from_cache
from .fitting import fit_segments, mad_sigma
from .path import solution_path
from .sampler import DEFAULT_M, draw_ensemble
from .select import DEFAULT_Q_MAX, select_on_path, ssic_score
from .simulate import NOISE_KINDS, NoiseSpec, gen_noise, gen_signal

__all__ = ["main"]

SCHEMA = "notseg/1"

# Scenarios whose contrast is threshold-tested in noise units: a user
# threshold is multiplied by the known or MAD-estimated noise sd.  The
# sign-based and variance contrasts take the threshold as given.
_SIGMA_SCALED = {Scenario.PCWS_CONST_MEAN, Scenario.PCWS_LIN_CONT_MEAN,
                 Scenario.PCWS_LIN_MEAN, Scenario.PCWS_QUAD_MEAN}


class InputError(Exception):
    """Malformed input (exit 2)."""


class InfeasibleError(Exception):
    """Valid input that cannot be processed (exit 3)."""


def _read_series(path: str) -> np.ndarray:
    try:
        if path == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    rows = [ln.strip() for ln in lines if ln.strip()]
    if rows and not _is_number(rows[0].split(",")[0]):
        rows = rows[1:]  # header line
    values = []
    for i, row in enumerate(rows, start=1):
        token = row.split(",")[0].strip()
        if not _is_number(token):
            raise InputError(f"line {i}: not a number: {token!r}")
        values.append(float(token))
    if not values:
        raise InputError("no numeric rows in input")
    arr = np.asarray(values)
    if not np.all(np.isfinite(arr)):
        raise InputError("input contains NaN or infinite values")
    return arr


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _seed_from(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NOTSEG_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"NOTSEG_SEED is not an integer: {env!r}") from exc
    return 0


def _scenario_from(args) -> Scenario:
    try:
        return Scenario.from_label(args.scenario)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _sigma_hat(y: np.ndarray, scenario: Scenario, given: float | None) -> float | None:
    if given is not None:
        return given
    try:
        return mad_sigma(y, scenario)
    except ValueError:
        return None


def _cmd_detect(args) -> int:
    y = _read_series(args.input)
    scenario = _scenario_from(args)
    seed = _seed_from(args)
    if y.size <= 2 * scenario.d - 1:
        raise InfeasibleError(f"series too short for {scenario.label}: T={y.size}")
    try:
        ensemble = draw_ensemble(y.size, args.m, scenario, seed)
    except ValueError as exc:
        raise InfeasibleError(str(exc)) from exc
    sigma_hat = _sigma_hat(y, scenario, args.sigma)
    cache = ProfileCache(y, ensemble)
    if args.threshold is not None:
        scale = sigma_hat if (scenario in _SIGMA_SCALED and sigma_hat) else 1.0
        threshold_used = args.threshold * scale
        cps = detect_from_cache(cache, threshold_used)
        method = "not-threshold"
    else:
        path = solution_path(y, ensemble, cache=cache)
        best = select_on_path(y, path, scenario, args.alpha, args.q_max)
        cps = best.cps
        # smallest path threshold that yields the selected model
        threshold_used = 0.0
        for z, model in zip(path.thresholds, path.models):
            if model.taus == cps.taus:
                threshold_used = z
                break
        else:
            if cps.q == 0:
                threshold_used = path.final_threshold
        method = "not-ssic"
    scored = ssic_score(y, cps, scenario, args.alpha)
    payload = {
        "schema": SCHEMA,
        "T": int(y.size),
        "scenario": scenario.label,
        "method": method,
        "seed": seed,
        "change_points": list(cps.taus),
        "threshold_used": threshold_used,
        "n_params": scored.n_params,
        "ssic": scored.ssic,
        "sigma_hat": sigma_hat,
    }
    fit = fit_segments(y, cps, _fit_scenario(scenario))
    if args.fitted:
        payload["fitted"] = [float(v) for v in fit.fitted]
    if args.format == "json":
        _write_text(args.output, json.dumps(payload, indent=2))
    else:
        lines = ["t,y,fitted,sigma_t"]
        for t in range(y.size):
            lines.append(f"{t + 1},{float(y[t])!r},{float(fit.fitted[t])!r},{float(fit.sigma_t[t])!r}")
        _write_text(args.output, "\n".join(lines))
    return 0


def _fit_scenario(scenario: Scenario) -> Scenario:
    if scenario is Scenario.PCWS_CONST_MEAN_HT:
        return Scenario.PCWS_CONST_MEAN
    return scenario


def _cmd_path(args) -> int:
    y = _read_series(args.input)
    scenario = _scenario_from(args)
    seed = _seed_from(args)
    try:
        ensemble = draw_ensemble(y.size, args.m, scenario, seed)
    except ValueError as exc:
        raise InfeasibleError(str(exc)) from exc
    path = solution_path(y, ensemble)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "T": int(y.size),
            "scenario": scenario.label,
            "seed": seed,
            "thresholds": list(path.thresholds),
            "models": [list(m.taus) for m in path.models],
            "final_threshold": path.final_threshold,
        }
        _write_text(args.output, json.dumps(payload, indent=2))
    else:
        lines = ["threshold,q,change_points"]
        for z, model in zip(path.thresholds, path.models):
            lines.append(f"{float(z)!r},{model.q}," + " ".join(map(str, model.taus)))
        lines.append(f"{float(path.final_threshold)!r},0,")
        _write_text(args.output, "\n".join(lines))
    return 0


def _cmd_simulate(args) -> int:
    try:
        spec = gen_signal(args.model)
        noise_spec = NoiseSpec(args.noise, _seed_from(args), args.sd)
    except ValueError as exc:
        raise InfeasibleError(str(exc)) from exc
    noise = gen_noise(noise_spec, spec.T)
    y = spec.f + spec.sigma * noise
    if args.full:
        lines = ["y,f,sigma"]
        for t in range(spec.T):
            lines.append(f"{float(y[t])!r},{float(spec.f[t])!r},{float(spec.sigma[t])!r}")
    else:
        lines = ["y"] + [repr(float(v)) for v in y]
    _write_text(args.output, "\n".join(lines))
    return 0


def _cmd_bench(args) -> int:
    if args.noise not in NOISE_KINDS:
        raise InfeasibleError(f"unknown noise kind {args.noise!r}; "
                              f"expected one of {NOISE_KINDS}")
    try:
        report = run_benchmark(args.model, args.noise, sd=args.sd,
                               reps=args.reps, m=args.m, alpha=args.alpha,
                               q_max=args.q_max, seed=_seed_from(args),
                               threads=args.threads)
    except ValueError as exc:
        raise InfeasibleError(str(exc)) from exc
    prefix = args.output or f"bench_{args.model}_{args.noise}"
    with open(prefix + ".json", "w", encoding="utf-8") as fh:
        fh.write(report.to_json() + "\n")
    with open(prefix + ".txt", "w", encoding="utf-8") as fh:
        fh.write(report.to_table() + "\n")
    sys.stdout.write(report.to_table() + "\n")
    return 0


def _cmd_fit(args) -> int:
    y = _read_series(args.input)
    if args.from_json:
        try:
            with open(args.from_json, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
            taus = tuple(int(t) for t in doc["change_points"])
            scenario = Scenario.from_label(doc["scenario"])
        except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot use {args.from_json}: {exc}") from exc
    else:
        scenario = _scenario_from(args)
        taus = ()
        if args.cps:
            try:
                taus = tuple(int(t) for t in args.cps.split(","))
            except ValueError as exc:
                raise InputError(f"bad --cps list: {args.cps!r}") from exc
    try:
        cps = ChangePointSet(taus, y.size)
        fit = fit_segments(y, cps, _fit_scenario(scenario))
    except ValueError as exc:
        raise InfeasibleError(str(exc)) from exc
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "T": int(y.size),
            "scenario": scenario.label,
            "change_points": list(cps.taus),
            "rss": fit.rss,
            "per_segment_params": [list(p) for p in fit.per_segment_params],
            "fitted": [float(v) for v in fit.fitted],
            "sigma_t": [float(v) for v in fit.sigma_t],
        }
        _write_text(args.output, json.dumps(payload, indent=2))
    else:
        lines = ["t,y,fitted,sigma_t"]
        for t in range(y.size):
            lines.append(f"{t + 1},{float(y[t])!r},{float(fit.fitted[t])!r},{float(fit.sigma_t[t])!r}")
        _write_text(args.output, "\n".join(lines))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="notseg",
        description="Narrowest-over-threshold change-point detection")
    sub = parser.add_subparsers(dest="command", required=True)
    scenarios = [s.label for s in Scenario]

    def common(p, with_scenario=True):
        if with_scenario:
            p.add_argument("--scenario", choices=scenarios, default="pcws-const")
        p.add_argument("--seed", type=int, default=None,
                       help="PRNG seed (default: $NOTSEG_SEED or 0)")
        p.add_argument("--output", "-o", default=None,
                       help="output file (default: stdout)")

    p = sub.add_parser("detect", help="detect change-points in a CSV series")
    p.add_argument("--input", "-i", required=True, help="CSV path or - for stdin")
    common(p)
    p.add_argument("--threshold", type=float, default=None,
                   help="fixed threshold (in noise units for the mean "
                        "scenarios); default: automatic sSIC selection")
    p.add_argument("--sigma", type=float, default=None,
                   help="known noise sd (default: MAD estimate)")
    p.add_argument("--m", type=int, default=DEFAULT_M)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--q-max", type=int, default=DEFAULT_Q_MAX)
    p.add_argument("--threads", type=int, default=1,
                   help="cap on worker processes (replicated runs)")
    p.add_argument("--fitted", action="store_true", help="include fitted values")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("path", help="compute the full threshold solution path")
    p.add_argument("--input", "-i", required=True)
    common(p)
    p.add_argument("--m", type=int, default=DEFAULT_M)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("simulate", help="generate a benchmark signal plus noise")
    p.add_argument("--model", required=True)
    p.add_argument("--noise", choices=list(NOISE_KINDS), default="gauss")
    p.add_argument("--sd", type=float, default=1.0)
    p.add_argument("--full", action="store_true",
                   help="emit y,f,sigma columns instead of y only")
    common(p, with_scenario=False)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("bench", help="replicated benchmark with metrics report")
    p.add_argument("--model", required=True)
    p.add_argument("--noise", default="gauss")
    p.add_argument("--sd", type=float, default=1.0)
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--m", type=int, default=DEFAULT_M)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--q-max", type=int, default=DEFAULT_Q_MAX)
    p.add_argument("--threads", type=int, default=1,
                   help="cap on worker processes (replicated runs)")
    common(p, with_scenario=False)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("fit", help="fit segments for given change-points")
    p.add_argument("--input", "-i", required=True)
    common(p)
    p.add_argument("--cps", default="",
                   help="comma-separated change-points (default: none)")
    p.add_argument("--from-json", default=None,
                   help="take change_points and scenario from a detect output")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_fit)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
