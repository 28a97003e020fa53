"""Command line interface: bound reports, Δ* sweeps and Monte Carlo coverage runs.

Usage::

    wagbound bounds --n 1000 --d 10 --a 5 --delta 0.05
    wagbound sweep --n-min 1000 --n-max 10000 --d 10 --a 5 --delta 0.05
    wagbound simulate --method wag --n 300 --a 3 --delta 0.05 --trials 2000 --seed 7

"""

import argparse
import logging
import sys
from typing import List, Optional

import pandas as pd

from .. import __version__
from ..bounds import (
    BINOMIAL,
    Explicit,
    PowerLaw,
    WagSetting,
    binomial_upper_bound,
    bound_report,
    get_backend,
    hoeffding_radius,
    wag_outperforms,
)
from ..lab import (
    DEFAULT_GRID,
    DEFAULT_MAX_INTERVALS,
    DEFAULT_NOISE,
    DEFAULT_TEST_SIZE,
    DEFAULT_TRUTH,
    GridClassSpec,
    Method,
    SyntheticTaskSpec,
    TrialConfig,
    run_trials,
    summarize,
)
from ..misc import as_interval_index, serialize_intervals
from ..misc.Parser import parse_interval_list
from ._sweep import CurvePoint, SweepConfig, sweep_curves, write_csv

logger = logging.getLogger("wagbound")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COVERAGE_FAILED = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors with exit code 1, leaving 2 for failed coverage checks."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def format_value(value) -> str:
    """Formats numbers with 6 significant digits and booleans as ``true``/``false``."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def cmd_bounds(args: argparse.Namespace) -> int:
    """Prints a bound report as ``key=value`` lines."""
    spec = PowerLaw(args.d) if args.d is not None else Explicit(args.m)
    backend = get_backend(args.backend)
    if backend is BINOMIAL and args.k is None:
        raise ValueError("The binomial backend requires the number of holdout errors --k")

    report = bound_report(args.n, spec, args.a, args.delta, args.eps_for_s)
    setting = WagSetting(args.n, args.delta, args.disagreement or 0.0, a=args.a)

    values = {"n": args.n}
    values.update({"d": spec.dimension} if isinstance(spec, PowerLaw) else {"m": spec.count})
    values.update(
        a=args.a,
        v=setting.v,
        delta=args.delta,
        eps_v=report.eps_v,
        eps_w=report.eps_w,
        delta_star=report.delta_star,
        s=report.s,
        w_star=report.w_star,
        eps_for_s=report.eps_for_s,
    )
    if args.disagreement is not None:
        values.update(
            Delta=setting.disagreement,
            eps_w_at_Delta=setting.radius(backend),
            wag_outperforms=wag_outperforms(spec, args.n, setting.v, args.delta, setting.disagreement),
        )
    if args.k is not None:
        if not 0 <= args.k <= setting.v:
            raise ValueError(f"The number of holdout errors must lie in [0, {setting.v}], got {args.k}")
        if backend is BINOMIAL:
            holdout_bound = binomial_upper_bound(args.k, setting.v, args.delta)
        else:
            holdout_bound = args.k / setting.v + hoeffding_radius(setting.v, args.delta)
        values.update(
            backend=backend.name,
            holdout_error=args.k / setting.v,
            holdout_bound=holdout_bound,
            wag_bound=holdout_bound + setting.disagreement,
        )

    for key, value in values.items():
        print(f"{key}={format_value(value)}")
    if not report.wag_can_outperform:
        print("note=WAG cannot outperform SVOOSH at any disagreement")

    if args.out is not None:
        write_csv(pd.DataFrame([values]), args.out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Writes Δ*, ε_V and ε_W curves as CSV."""
    config = SweepConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        n_steps=args.n_steps,
        d=args.d,
        a_list=tuple(args.a),
        delta=args.delta,
        scale=args.grid_scale,
        disagreement=args.disagreement,
    )
    frame = sweep_curves(config)
    logger.info("Writing %d curve points", len(frame))
    write_csv(frame[list(CurvePoint._fields)], args.out)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    """Runs a Monte Carlo coverage experiment and checks the failure rate."""
    truth = as_interval_index(parse_interval_list(args.truth))
    task = SyntheticTaskSpec(
        truth_intervals=tuple(truth.to_tuples()),
        noise_eta=args.eta,
        n_train=args.n,
        n_test=args.ntest,
        seed=args.seed,
    )
    class_spec = GridClassSpec(args.grid, args.k)
    config = TrialConfig(
        method=Method(args.method),
        delta=args.delta,
        a=args.a,
        backend=get_backend(args.backend),
        unlabeled=args.unlabeled,
        split=args.split,
    )
    logger.info(
        "Simulating %s on truth %s with m=%d hypotheses", config.method.value, serialize_intervals(truth), class_spec.m_exact
    )

    records = run_trials(task, class_spec, config, args.trials, args.seed, args.workers)
    summary = summarize(records, config.delta)
    write_csv(records, args.out)

    fields = dict(
        trials=summary.trials,
        failures=summary.failures,
        failure_rate=summary.failure_rate,
        threshold=summary.threshold,
        mean_Delta=summary.mean_disagreement,
        mean_bound=summary.mean_bound,
        mean_test_error=summary.mean_test_error,
    )
    print(" ".join(f"{key}={format_value(value)}" for key, value in fields.items()))
    return EXIT_OK if summary.passed else EXIT_COVERAGE_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="wagbound", description="Compare and verify WAG and SVOOSH error bounds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr, repeat for debug output")
    commands = parser.add_subparsers(dest="command", required=True)

    bounds = commands.add_parser("bounds", help="print the bound report of one configuration")
    bounds.add_argument("--n", type=int, required=True, help="number of training examples")
    hypotheses = bounds.add_mutually_exclusive_group(required=True)
    hypotheses.add_argument("--d", type=float, help="dimension of a power-law class, m(n) = n^d")
    hypotheses.add_argument("--m", type=float, help="explicit number of hypotheses")
    bounds.add_argument("--a", type=float, required=True, help="split divisor, v = n / a")
    bounds.add_argument("--delta", type=float, required=True, help="bound failure probability")
    bounds.add_argument("--Delta", dest="disagreement", type=float, help="disagreement rate to evaluate WAG at")
    bounds.add_argument("--backend", choices=["hoeffding", "binomial"], default="hoeffding")
    bounds.add_argument("--k", type=int, help="errors of the holdout classifier on the v withheld examples")
    bounds.add_argument("--eps-for-s", type=float, help="bound range for s and w* (default: eps_v)")
    bounds.add_argument("--out", help="also write the report as a single-row CSV file")
    bounds.set_defaults(handler=cmd_bounds)

    sweep = commands.add_parser("sweep", help="write critical disagreement curves as CSV")
    sweep.add_argument("--n-min", type=int, default=1000)
    sweep.add_argument("--n-max", type=int, default=10000)
    sweep.add_argument("--n-steps", type=int, default=10)
    sweep.add_argument("--grid-scale", choices=["log", "linear"], default="log")
    sweep.add_argument("--d", type=float, default=10.0)
    sweep.add_argument("--a", type=float, nargs="+", default=[5.0])
    sweep.add_argument("--delta", type=float, default=0.05)
    sweep.add_argument("--Delta", dest="disagreement", type=float, help="evaluate eps_w at this disagreement")
    sweep.add_argument("--out", help="output file (default: stdout)")
    sweep.set_defaults(handler=cmd_sweep)

    simulate = commands.add_parser("simulate", help="run a Monte Carlo coverage experiment")
    simulate.add_argument("--method", choices=[method.value for method in Method], required=True)
    simulate.add_argument("--n", type=int, required=True, help="number of training examples")
    simulate.add_argument("--a", type=float, help="split divisor (wag and wag-nt)")
    simulate.add_argument("--delta", type=float, required=True)
    simulate.add_argument("--trials", type=int, required=True)
    simulate.add_argument("--seed", type=int, required=True, help="base seed, trial i uses seed XOR i")
    simulate.add_argument("--grid", type=int, default=DEFAULT_GRID, help="grid resolution G")
    simulate.add_argument("--k", type=int, default=DEFAULT_MAX_INTERVALS, help="maximum number of intervals")
    simulate.add_argument("--eta", type=float, default=DEFAULT_NOISE, help="label noise rate")
    simulate.add_argument("--ntest", type=int, default=DEFAULT_TEST_SIZE, help="number of test examples")
    simulate.add_argument("--truth", default=",".join(f"{lo}:{hi}" for lo, hi in DEFAULT_TRUTH))
    simulate.add_argument("--unlabeled", type=int, default=0, help="unlabeled examples (wag-nt)")
    simulate.add_argument("--split", type=float, default=0.5, help="share of delta for the holdout bound (wag-nt)")
    simulate.add_argument("--backend", choices=["hoeffding", "binomial"], default="hoeffding")
    simulate.add_argument("--workers", type=int, default=1)
    simulate.add_argument("--out", help="per-trial CSV file (default: stdout)")
    simulate.set_defaults(handler=cmd_simulate)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        logging.basicConfig(
            level=logging.DEBUG if args.verbose > 1 else logging.INFO,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )

    try:
        return args.handler(args)
    except (ValueError, OSError) as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
