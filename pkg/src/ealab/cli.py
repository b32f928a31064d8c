"""Command line interface.

Subcommands:
    run       one experiment config, records CSV to stdout or a file
    figure1   p sweep of the self-adjusting algorithm, normalized runtime
    figure2   static comma vs static plus vs self-adjusting at coupled (lambda, p)
    verify    closed forms against their independent oracles
    plot      render an SVG from a records CSV

Exit codes: 0 on success, 1 on runtime failure or failed verification
checks, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algorithms import ControllerParams, OnePlusOne, SaCommaReset, StaticComma, StaticPlus
from .bounds import (
    brute_force_absorption,
    consistency_checks,
    gamblers_ruin_exact,
    gamblers_ruin_start_bound,
)
from .experiments import (
    ExperimentConfig,
    figure1_sweep,
    figure2_sweep,
    read_records_csv,
    render_csv,
    run_experiment,
    write_records_csv,
)
from .formulas import resolve_param
from .plots import plot_comparison, plot_p_sweep

_RUN_DEFAULTS = {
    "experiment_id": "run",
    "algorithm": "sa",
    "n": None,
    "p": None,
    "d": "ln(n)",
    "k_star": "n^0.4",
    "F": 1.5,
    "s": 1.0,
    "lambda_max": "n*ln(n)",
    "lam": None,
    "budget": 10_000_000,
    "replications": 1,
    "base_seed": 1,
    "parallelism": 1,
}

_ALGO_NAMES = ("sa", "comma", "plus", "one_plus_one")


def _int_list(text: str) -> list:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}") from None


def _float_list(text: str) -> list:
    try:
        return [float(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise ValueError(f"expected a comma-separated number list, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ealab",
        description="runtime experiments for one-parent evolutionary algorithms "
        "on OneMax and frozen-noise distorted OneMax",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one experiment config")
    run.add_argument("--config", help="JSON file with config keys; flags override it")
    run.add_argument("--id", dest="experiment_id", help="experiment id for the CSV rows")
    run.add_argument("--algo", dest="algorithm", choices=_ALGO_NAMES, help="algorithm (default sa)")
    run.add_argument("--n", type=int, help="dimension")
    run.add_argument("--p", help="distortion probability, number or formula")
    run.add_argument("--d", help="distortion bonus, number or formula (default ln(n))")
    run.add_argument("--k-star", dest="k_star", help="target gap, number or formula (default n^0.4)")
    run.add_argument("--F", type=float, help="controller update strength (default 1.5)")
    run.add_argument("--s", type=float, help="controller success ratio (default 1)")
    run.add_argument("--lambda-max", dest="lambda_max", help="controller cap, number or formula (default n*ln(n))")
    run.add_argument("--lambda", dest="lam", type=int, help="offspring count for static algorithms")
    run.add_argument("--budget", type=int, help="evaluation budget per trial (default 1e7)")
    run.add_argument("--reps", dest="replications", type=int, help="replications (default 1)")
    run.add_argument("--seed", dest="base_seed", type=int, help="base seed (default 1)")
    run.add_argument("--threads", dest="parallelism", type=int, help="worker processes (default 1)")
    run.add_argument("--out", help="write CSV here instead of stdout")
    run.set_defaults(func=cmd_run)

    fig1 = sub.add_parser("figure1", help="p sweep of the self-adjusting algorithm")
    fig1.add_argument("--n", required=True, help="comma-separated dimensions, e.g. 100,200")
    fig1.add_argument("--p-grid", dest="p_grid", help="comma-separated p values (default log grid)")
    fig1.add_argument("--reps", type=int, default=50, help="replications per grid cell (default 50)")
    fig1.add_argument("--budget", type=int, default=10_000_000, help="budget per trial (default 1e7)")
    fig1.add_argument("--seed", type=int, default=1, help="base seed (default 1)")
    fig1.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    fig1.add_argument("--out", default="figure1.csv", help="records CSV path (default figure1.csv)")
    fig1.add_argument("--plot", help="also render an SVG here")
    fig1.set_defaults(func=cmd_figure1)

    fig2 = sub.add_parser("figure2", help="three-algorithm comparison at coupled (lambda, p)")
    fig2.add_argument("--n", required=True, help="comma-separated dimensions, e.g. 100,200,400,800")
    fig2.add_argument("--reps", type=int, default=50, help="replications per cell (default 50)")
    fig2.add_argument("--budget", type=int, default=1_000_000, help="budget per trial (default 1e6)")
    fig2.add_argument("--seed", type=int, default=1, help="base seed (default 1)")
    fig2.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    fig2.add_argument("--out", default="figure2.csv", help="records CSV path (default figure2.csv)")
    fig2.add_argument("--plot", help="also render an SVG here")
    fig2.set_defaults(func=cmd_figure2)

    verify = sub.add_parser("verify", help="check closed forms against oracles")
    verify.add_argument("--trials", type=int, default=20000, help="Monte-Carlo trials per cell (default 20000)")
    verify.add_argument("--seed", type=int, default=7, help="Monte-Carlo seed (default 7)")
    verify.add_argument("--q", type=float, help="single walk query: step probability toward 0")
    verify.add_argument("--beta", type=int, help="single walk query: interior width")
    verify.add_argument("--i", dest="start", type=int, help="single walk query: start state (default beta)")
    verify.set_defaults(func=cmd_verify)

    plot = sub.add_parser("plot", help="render an SVG from a records CSV")
    plot.add_argument("--csv", required=True, help="records CSV produced by run/figure1/figure2")
    plot.add_argument("--kind", required=True, choices=("figure1", "figure2"), help="plot family")
    plot.add_argument("--out", required=True, help="SVG output path")
    plot.set_defaults(func=cmd_plot)

    return parser


def _load_config_file(path: str) -> dict:
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as exc:
        raise ValueError(f"cannot read config file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"config file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    unknown = set(data) - set(_RUN_DEFAULTS)
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return data


def _merged_run_settings(args) -> dict:
    settings = dict(_RUN_DEFAULTS)
    if args.config:
        settings.update(_load_config_file(args.config))
    for key in _RUN_DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def _build_kind(settings):
    algo = settings["algorithm"]
    if algo not in _ALGO_NAMES:
        raise ValueError(f"algorithm must be one of {', '.join(_ALGO_NAMES)}, got {algo!r}")
    n = settings["n"]
    if algo == "sa":
        lambda_max = resolve_param(settings["lambda_max"], n, name="lambda_max")
        return SaCommaReset(ControllerParams(F=float(settings["F"]), s=float(settings["s"]), lambda_max=lambda_max))
    if algo == "one_plus_one":
        return OnePlusOne()
    lam = settings["lam"]
    if lam is None:
        raise ValueError(f"algorithm {algo!r} needs --lambda")
    return StaticComma(int(lam)) if algo == "comma" else StaticPlus(int(lam))


def cmd_run(args) -> int:
    settings = _merged_run_settings(args)
    if settings["n"] is None:
        raise ValueError("n is required (flag --n or config key n)")
    if settings["p"] is None:
        raise ValueError("p is required (flag --p or config key p)")
    n = int(settings["n"])
    settings["n"] = n
    kind = _build_kind(settings)
    lam = settings["lam"]
    config = ExperimentConfig(
        experiment_id=str(settings["experiment_id"]),
        algorithm=kind,
        n=n,
        p=resolve_param(settings["p"], n, lam=lam, name="p"),
        d=resolve_param(settings["d"], n, lam=lam, name="d"),
        k_star=resolve_param(settings["k_star"], n, lam=lam, name="k_star"),
        budget=int(settings["budget"]),
        replications=int(settings["replications"]),
        base_seed=int(settings["base_seed"]),
        parallelism=int(settings["parallelism"]),
    )
    records = run_experiment(config)
    if args.out:
        write_records_csv(records, args.out)
        print(f"wrote {len(records)} records to {args.out}")
    else:
        sys.stdout.write(render_csv(records))
    return 0


def _print_points(points) -> None:
    for pt in points:
        stats = pt.stats
        line = (
            f"n={pt.n} p={pt.p:.6g} {pt.algorithm}: "
            f"median={stats.median:.6g} mean={stats.mean:.6g} "
            f"censored={stats.censored_count}/{stats.count}"
        )
        if stats.normalized_median is not None:
            line += f" normalized_median={stats.normalized_median:.4g}"
        if stats.median_unreliable:
            line += " (median unreliable)"
        print(line)


def cmd_figure1(args) -> int:
    ns = _int_list(args.n)
    p_grid = _float_list(args.p_grid) if args.p_grid else None
    result = figure1_sweep(
        ns,
        p_grid=p_grid,
        replications=args.reps,
        budget=args.budget,
        base_seed=args.seed,
        parallelism=args.threads,
    )
    write_records_csv(result.records, args.out)
    _print_points(result.points)
    print(f"wrote {len(result.records)} records to {args.out}")
    if args.plot:
        plot_p_sweep(result.records, args.plot)
        print(f"wrote plot to {args.plot}")
    return 0


def cmd_figure2(args) -> int:
    ns = _int_list(args.n)
    result = figure2_sweep(
        ns,
        replications=args.reps,
        budget=args.budget,
        base_seed=args.seed,
        parallelism=args.threads,
    )
    write_records_csv(result.records, args.out)
    _print_points(result.points)
    for n, ref in result.references:
        print(f"n={n} reference n*ln(n)/p={ref:.6g}")
    print(f"wrote {len(result.records)} records to {args.out}")
    if args.plot:
        plot_comparison(result.records, args.plot)
        print(f"wrote plot to {args.plot}")
    return 0


def cmd_verify(args) -> int:
    if args.q is not None or args.beta is not None:
        if args.q is None or args.beta is None:
            raise ValueError("single walk query needs both --q and --beta")
        start = args.beta if args.start is None else args.start
        exact = gamblers_ruin_exact(args.q, args.beta, start)
        brute = brute_force_absorption(args.q, args.beta, start)
        bound = gamblers_ruin_start_bound(args.q, args.beta)
        print(
            f"q={args.q:g} beta={args.beta} i={start}: "
            f"exact={exact:.10g} brute={brute:.10g} start_bound={bound:.10g}"
        )
        return 0
    results = consistency_checks(trials=args.trials, seed=args.seed)
    failed = 0
    for res in results:
        tag = "ok  " if res.passed else "FAIL"
        print(f"{tag} {res.name}: {res.detail}")
        if not res.passed:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def cmd_plot(args) -> int:
    records = read_records_csv(args.csv)
    if not records:
        raise ValueError(f"no records in {args.csv!r}")
    if args.kind == "figure1":
        plot_p_sweep(records, args.out)
    else:
        plot_comparison(records, args.out)
    print(f"wrote plot to {args.out}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    raise SystemExit(main())
