"""Command-line front end.

Subcommands: spectrum, classify, verify-identity, search, sweep.  All
structured output is JSON on stdout with floats rounded to 12 significant
digits; human-oriented lines (verify-identity text mode, sweep tables) are
plain text.  Errors go to stderr.

Exit codes: 0 success (search: verdict confirmed); 2 bad usage, bad
parameters, undecodable graph6, or a capability cap; 3 classifier returned
UndeterminedByTheorem (the resolved comparison is still printed); 4
verification failure (an identity check FAILed, a search maximizer did not
match the prediction, or an eigensolve failed to converge).

A JSON config file named by the ALPHASPEC_CONFIG environment variable can
set defaults for keys: workers, seed, format, output.  Command-line flags
win over the config; the config wins over built-in defaults.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .classifier import UNDETERMINED, classify
from .closedforms import ScenarioParams, alpha_zero_discriminant
from .errors import (
    CapabilityError,
    Graph6DecodeError,
    NumericError,
    ParameterError,
)
from .exactpoly import run_all_checks
from .graphs import FamilySpec, extremal_family, graph6_decode, half_family
from .search import SearchTask, counterexample_probe, run
from .spectra import largest_eigenpair

CONFIG_ENV = "ALPHASPEC_CONFIG"
CONFIG_KEYS = ("workers", "seed", "format", "output")


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _round12(obj):
    """Clamp every float in a JSON tree to 12 significant digits."""
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    return obj


def _emit(payload: dict) -> None:
    print(json.dumps(_round12(payload)))


def _load_config() -> dict:
    path = os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ParameterError(f"cannot read config file {path!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise ParameterError(f"config file {path!r} is not valid JSON: {exc}")
    if not isinstance(cfg, dict):
        raise ParameterError(f"config file {path!r} must hold a JSON object")
    unknown = sorted(set(cfg) - set(CONFIG_KEYS))
    if unknown:
        raise ParameterError(
            f"config file {path!r} has unknown keys: {', '.join(unknown)} "
            f"(known: {', '.join(CONFIG_KEYS)})")
    return cfg


def _cfg_int(cfg: dict, key: str, default: int) -> int:
    value = cfg.get(key, default)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParameterError(f"config key {key!r} must be an integer, "
                             f"got {value!r}")
    return value


def _parse_ints(text: str, what: str, count: int) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != count:
        raise ParameterError(
            f"{what} must be {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ParameterError(
            f"{what} must be {count} comma-separated integers, got {text!r}")


def _parse_range(text: str) -> tuple[int, int]:
    head, sep, tail = text.partition("..")
    if not sep:
        raise ParameterError(f"range must look like 10..40, got {text!r}")
    try:
        lo, hi = int(head), int(tail)
    except ValueError:
        raise ParameterError(f"range must look like 10..40, got {text!r}")
    if lo > hi:
        raise ParameterError(f"empty range {text!r}")
    return lo, hi


def _cmd_spectrum(args: argparse.Namespace, cfg: dict) -> int:
    chosen = [name for name, value in
              (("--graph6", args.graph6), ("--family", args.family),
               ("--half", args.half)) if value is not None]
    if len(chosen) != 1:
        raise ParameterError(
            "exactly one of --graph6, --family, --half is required"
            + (f"; got {', '.join(chosen)}" if chosen else ""))
    alpha = args.alpha
    if args.graph6 is not None:
        if args.graph6 == "-":
            lines = [ln.strip() for ln in sys.stdin if ln.strip()]
        else:
            lines = [args.graph6]
        for line in lines:
            g = graph6_decode(line)
            _emit(largest_eigenpair(g, alpha).to_json(alpha))
        return 0
    if args.family is not None:
        n, s, k = _parse_ints(args.family, "--family", 3)
        g = extremal_family(FamilySpec(n, s, k))
    else:
        n, k = _parse_ints(args.half, "--half", 2)
        g = half_family(n, k)
    _emit(largest_eigenpair(g, alpha).to_json(alpha))
    return 0


def _cmd_classify(args: argparse.Namespace, cfg: dict) -> int:
    params = ScenarioParams(args.n, args.t, args.k, args.alpha)
    result = classify(params)
    _emit(result.to_json())
    return 3 if result.verdict == UNDETERMINED else 0


def _cmd_verify_identity(args: argparse.Namespace, cfg: dict) -> int:
    outcomes = run_all_checks(perturb=args.perturb)
    as_json = args.json or cfg.get("format") == "json"
    if as_json:
        _emit({"identities": [o.to_json() for o in outcomes]})
    else:
        for o in outcomes:
            if o.passed:
                print(f"{o.name}: PASS")
            else:
                print(f"{o.name}: FAIL (residual of {o.residual_monomials} "
                      f"monomials)")
    return 0 if all(o.passed for o in outcomes) else 4


def _cmd_search(args: argparse.Namespace, cfg: dict) -> int:
    params = ScenarioParams(args.n, args.t, args.k, args.alpha)
    seed = args.seed if args.seed is not None else _cfg_int(cfg, "seed", 0)
    workers = (args.workers if args.workers is not None
               else _cfg_int(cfg, "workers", 1))
    if args.exhaustive:
        task = SearchTask(params, "exhaustive")
    else:
        task = SearchTask(params, "sample", sample_count=args.samples,
                          seed=seed)
    report = run(task, workers=workers)
    _emit(report.to_json())
    return 0 if report.verdict_confirmed else 4


def _cmd_probe(args: argparse.Namespace, cfg: dict) -> int:
    seed = args.seed if args.seed is not None else _cfg_int(cfg, "seed", 0)
    workers = (args.workers if args.workers is not None
               else _cfg_int(cfg, "workers", 1))
    budget = None if args.exhaustive else args.samples
    report = counterexample_probe(args.n, args.alpha, budget=budget,
                                  seed=seed, workers=workers)
    _emit(report.to_json())
    return 0 if not report.violations else 4


SWEEP_COLUMNS = ("n", "t", "k", "alpha", "delta1", "delta2", "delta",
                 "rho_t", "rho_half", "verdict")


def _sweep_rows(t: int, k: int, alpha: float, lo: int, hi: int) -> list[dict]:
    rows = []
    for n in range(lo, hi + 1):
        if (n - k) % 2 != 0 or n < k + 2 or t > (n - k) // 2:
            continue
        result = classify(ScenarioParams(n, t, k, alpha))
        delta = ""
        if float(alpha) == 0.0:
            delta = alpha_zero_discriminant(n, t, k)
        rows.append({
            "n": n, "t": t, "k": k, "alpha": alpha,
            "delta1": result.delta1, "delta2": result.delta2,
            "delta": delta,
            "rho_t": result.rho_t, "rho_half": result.rho_half,
            "verdict": result.verdict,
        })
    return rows


def _sweep_cell(value) -> str:
    if isinstance(value, float):
        return _fmt(value)
    return str(value)


def _cmd_sweep(args: argparse.Namespace, cfg: dict) -> int:
    lo, hi = _parse_range(args.n_range)
    rows = _sweep_rows(args.t, args.k, args.alpha, lo, hi)
    if not rows:
        raise ParameterError(
            f"no valid scenarios for t={args.t}, k={args.k} with n in "
            f"{lo}..{hi} (check parity of n - k and the bound on t)")
    csv_path = args.csv if args.csv is not None else cfg.get("output")
    as_csv = csv_path is not None or cfg.get("format") == "csv"
    if as_csv:
        import csv as _csv
        out = open(csv_path, "w", newline="", encoding="utf-8") \
            if csv_path else sys.stdout
        try:
            writer = _csv.writer(out)
            writer.writerow(SWEEP_COLUMNS)
            for row in rows:
                writer.writerow([_sweep_cell(row[c]) for c in SWEEP_COLUMNS])
        finally:
            if csv_path:
                out.close()
        return 0
    cells = [[_sweep_cell(row[c]) for c in SWEEP_COLUMNS] for row in rows]
    widths = [max(len(SWEEP_COLUMNS[i]), *(len(r[i]) for r in cells))
              for i in range(len(SWEEP_COLUMNS))]
    print("  ".join(c.ljust(w) for c, w in zip(SWEEP_COLUMNS, widths)))
    for r in cells:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphaspec",
        description="verification toolkit for alpha-spectral extremal "
                    "graph families")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum",
                       help="largest eigenvalue and eigenvector of a graph")
    p.add_argument("--graph6", help="graph6 string, or - to read lines "
                                    "from stdin")
    p.add_argument("--family", metavar="N,S,K",
                   help="clique-joined family on the given parameters")
    p.add_argument("--half", metavar="N,K",
                   help="endpoint family: clique joined to an "
                        "independent set")
    p.add_argument("--alpha", type=float, required=True)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("classify",
                       help="which family attains the extremal radius")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("verify-identity",
                       help="re-derive the closed-form identities in exact "
                            "arithmetic")
    p.add_argument("--json", action="store_true")
    p.add_argument("--perturb", help=argparse.SUPPRESS)
    p.set_defaults(handler=_cmd_verify_identity)

    p = sub.add_parser("search",
                       help="scan labelled graphs for the true maximizer")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int, metavar="COUNT")
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("probe",
                       help="hunt for graphs above the perfect-matching "
                            "radius threshold without a perfect matching")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int, metavar="COUNT")
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.set_defaults(handler=_cmd_probe)

    p = sub.add_parser("sweep",
                       help="classify a whole range of orders at fixed "
                            "t, k, alpha")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n-range", required=True, metavar="LO..HI")
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(handler=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code else 0
    try:
        cfg = _load_config()
        return args.handler(args, cfg)
    except Graph6DecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParameterError, CapabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
