import enum
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np
import pandas as pd

from ..bounds import (
    HOEFFDING,
    ConcentrationBackend,
    nontransductive_range,
    svoosh_radius,
    validation_size,
    wag_radius,
)
from ..misc.Parser import (
    PositiveInt,
    Probability,
    auto_parse,
    parse_int,
    parse_optional,
    parse_positive,
    parse_probability,
    parse_real,
)
from ._classifier import Classifier, GridClassSpec, disagreement_rate, empirical_error, train_erm_intervals
from ._task import SyntheticTaskSpec, generate_task, generate_unlabeled

logger = logging.getLogger("wagbound")

COLUMNS = ["trial", "seed", "method", "anchor_error", "Delta", "bound", "test_error", "holds"]


class Method(str, enum.Enum):
    WAG = "wag"
    SVOOSH = "svoosh"
    WAG_NONTRANSDUCTIVE = "wag-nt"


@dataclass(frozen=True)
class TrialOutcome:
    """Bound and realized test error of one validation trial.

    Attributes
    ----------
    method : Method
        The validation method.
    anchor_error : float
        Holdout validation error (WAG) or full-data training error (SVOOSH).
    disagreement : float
        Disagreement between the holdout and full-data classifiers, 0 for SVOOSH.
    bound_value : float
        The anchor error plus the bound range.
    test_error : float
        Test error of the full-data classifier.

    """

    method: Method
    anchor_error: float
    disagreement: float
    bound_value: float
    test_error: float

    @property
    def holds(self) -> bool:
        return self.test_error <= self.bound_value


@dataclass(frozen=True)
class TrialConfig:
    """Method and parameters shared by all trials of an experiment.

    `a` is required by both WAG variants, `unlabeled` by the nontransductive one,
    where `split` is the share of `delta` spent on validating the holdout classifier.

    """

    method: Method
    delta: float = 0.05
    a: Optional[float] = None
    backend: ConcentrationBackend = HOEFFDING
    unlabeled: int = 0
    split: float = 0.5

    def __post_init__(self):
        method = Method(self.method)
        if method != Method.SVOOSH and self.a is None:
            raise ValueError(f"The {method.value} method requires the split divisor `a`")
        if method == Method.WAG_NONTRANSDUCTIVE and not self.unlabeled:
            raise ValueError("The wag-nt method requires a positive number of unlabeled examples")
        object.__setattr__(self, "method", method)
        object.__setattr__(self, "delta", parse_probability(parse_real(self.delta)))
        object.__setattr__(self, "a", parse_optional(self.a, parse_real))
        object.__setattr__(self, "unlabeled", parse_int(self.unlabeled))
        object.__setattr__(self, "split", parse_probability(parse_real(self.split)))


def _train_holdout_and_full(
    train: pd.DataFrame, class_spec: GridClassSpec, a: float
) -> Tuple[Classifier, pd.DataFrame, Classifier]:
    """Trains on all but the last ``floor(n / a)`` examples and on all of them."""
    n = len(train)
    v = validation_size(n, a)
    holdout = train_erm_intervals(train.iloc[: n - v], class_spec)
    full = train_erm_intervals(train, class_spec)
    return holdout, train.iloc[n - v :], full


@auto_parse
def run_wag_trial(
    task: SyntheticTaskSpec,
    class_spec: GridClassSpec,
    a: float,
    delta: Probability,
    backend: ConcentrationBackend = HOEFFDING,
) -> TrialOutcome:
    """Validates the full-data classifier by withholding and gapping.

    The last ``v = floor(n / a)`` training examples are withheld. The disagreement
    between the holdout and full-data classifiers is computed exactly over the test
    inputs (transductive setting).

    Parameters
    ----------
    task : SyntheticTaskSpec
        The task, including its seed.
    class_spec : GridClassSpec
        The hypothesis class of both classifiers.
    a : float
        The split divisor.
    delta : float
        The bound failure probability.
    backend : ConcentrationBackend, default HOEFFDING
        The single-classifier bound on the withheld examples.

    Returns
    -------
    TrialOutcome
        The outcome of the trial.

    """
    train, test = generate_task(task)
    holdout, withheld, full = _train_holdout_and_full(train, class_spec, a)
    disagreement = disagreement_rate(holdout, full, test["x"].to_numpy())
    anchor_error = empirical_error(holdout, withheld)
    return TrialOutcome(
        method=Method.WAG,
        anchor_error=anchor_error,
        disagreement=disagreement,
        bound_value=anchor_error + wag_radius(len(withheld), delta, disagreement, backend),
        test_error=empirical_error(full, test),
    )


@auto_parse
def run_nontransductive_wag_trial(
    task: SyntheticTaskSpec,
    class_spec: GridClassSpec,
    a: float,
    delta: Probability,
    t: PositiveInt,
    backend: ConcentrationBackend = HOEFFDING,
    split: Probability = 0.5,
) -> TrialOutcome:
    """WAG trial where the disagreement is estimated on `t` unlabeled inputs.

    The failure probability is split into ``split * delta`` for the holdout
    classifier and the rest for the disagreement estimate.

    """
    train, test = generate_task(task)
    holdout, withheld, full = _train_holdout_and_full(train, class_spec, a)
    delta_hat = disagreement_rate(holdout, full, generate_unlabeled(task, t))
    anchor_error = empirical_error(holdout, withheld)
    bound_range = nontransductive_range(len(withheld), split * delta, delta_hat, t, (1 - split) * delta, backend)
    return TrialOutcome(
        method=Method.WAG_NONTRANSDUCTIVE,
        anchor_error=anchor_error,
        disagreement=delta_hat,
        bound_value=anchor_error + bound_range,
        test_error=empirical_error(full, test),
    )


@auto_parse
def run_svoosh_trial(task: SyntheticTaskSpec, class_spec: GridClassSpec, delta: Probability) -> TrialOutcome:
    """Validates the full-data classifier simultaneously over the whole grid class.

    The bound range uses the exact hypothesis count of `class_spec`.

    """
    train, test = generate_task(task)
    full = train_erm_intervals(train, class_spec)
    anchor_error = empirical_error(full, train)
    return TrialOutcome(
        method=Method.SVOOSH,
        anchor_error=anchor_error,
        disagreement=0.0,
        bound_value=anchor_error + svoosh_radius(class_spec.hypothesis_class(), len(train), delta),
        test_error=empirical_error(full, test),
    )


def run_trial(task: SyntheticTaskSpec, class_spec: GridClassSpec, config: TrialConfig) -> TrialOutcome:
    """Runs one trial of the configured method."""
    if config.method == Method.SVOOSH:
        outcome = run_svoosh_trial(task, class_spec, config.delta)
    elif config.method == Method.WAG:
        outcome = run_wag_trial(task, class_spec, config.a, config.delta, config.backend)
    else:
        outcome = run_nontransductive_wag_trial(
            task, class_spec, config.a, config.delta, config.unlabeled, config.backend, config.split
        )
    logger.debug("Trial with seed %d: %s", task.seed, outcome)
    return outcome


def trial_seed(base_seed: int, index: int) -> int:
    """Seed of trial `index`, ``base_seed XOR index``."""
    base_seed = parse_int(base_seed)
    if not 0 <= base_seed < 2**64:
        raise ValueError(f"The base seed must be a 64-bit unsigned integer, got {base_seed}")
    return base_seed ^ index


def run_trials(
    task_template: SyntheticTaskSpec,
    class_spec: GridClassSpec,
    config: TrialConfig,
    trials: int,
    base_seed: int,
    workers: int = 1,
) -> pd.DataFrame:
    """Runs independent trials and collects one record per trial.

    Parameters
    ----------
    task_template : SyntheticTaskSpec
        The task, whose seed is replaced by each trial's seed.
    class_spec : GridClassSpec
        The hypothesis class.
    config : TrialConfig
        The method and its parameters.
    trials : int
        The number of trials.
    base_seed : int
        Trial ``i`` uses the seed ``base_seed XOR i``.
    workers : int, default 1
        Number of threads to fan the trials out to. Records are always returned in
        trial order.

    Returns
    -------
    DataFrame
        With columns ``trial, seed, method, anchor_error, Delta, bound, test_error, holds``.

    """
    trials = parse_positive(parse_int(trials))
    seeds = [trial_seed(base_seed, index) for index in range(trials)]

    def run(seed):
        return run_trial(task_template.with_seed(seed), class_spec, config)

    logger.info("Running %d %s trials with base seed %d", trials, config.method.value, base_seed)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(run, seeds))
    else:
        outcomes = [run(seed) for seed in seeds]

    return pd.DataFrame(
        {
            "trial": np.arange(trials),
            "seed": np.array(seeds, dtype=np.uint64),
            "method": [outcome.method.value for outcome in outcomes],
            "anchor_error": [outcome.anchor_error for outcome in outcomes],
            "Delta": [outcome.disagreement for outcome in outcomes],
            "bound": [outcome.bound_value for outcome in outcomes],
            "test_error": [outcome.test_error for outcome in outcomes],
            "holds": [outcome.holds for outcome in outcomes],
        },
        columns=COLUMNS,
    )


@auto_parse
def coverage_threshold(delta: Probability, trials: PositiveInt) -> float:
    """Largest acceptable failure rate, ``delta + 3 sqrt(delta (1 - delta) / trials)``."""
    return delta + 3 * math.sqrt(delta * (1 - delta) / trials)


@dataclass(frozen=True)
class MonteCarloSummary:
    """Aggregate bound failures over a set of trials."""

    trials: int
    failures: int
    failure_rate: float
    mean_disagreement: float
    mean_bound: float
    mean_test_error: float
    delta: float

    @property
    def threshold(self) -> float:
        return coverage_threshold(self.delta, self.trials)

    @property
    def passed(self) -> bool:
        """Whether the failure rate is within sampling error of `delta`."""
        return self.failure_rate <= self.threshold


def summarize(records: pd.DataFrame, delta: float) -> MonteCarloSummary:
    """Aggregates per-trial records into a summary.

    Records are ordered by trial index first, so the summary does not depend on the
    order in which trials finished.

    Raises
    ------
    ValueError
        If there are no records.

    """
    if records.empty:
        raise ValueError("Cannot summarize an empty set of trials")

    records = records.sort_values("trial")
    trials = len(records)
    failures = int((~records["holds"].astype(bool)).sum())
    return MonteCarloSummary(
        trials=trials,
        failures=failures,
        failure_rate=failures / trials,
        mean_disagreement=float(records["Delta"].mean()),
        mean_bound=float(records["bound"].mean()),
        mean_test_error=float(records["test_error"].mean()),
        delta=delta,
    )


def monte_carlo(
    task_template: SyntheticTaskSpec,
    class_spec: GridClassSpec,
    config: TrialConfig,
    trials: int,
    base_seed: int,
    workers: int = 1,
) -> MonteCarloSummary:
    """Estimates how often the configured bound fails. See `run_trials`."""
    records = run_trials(task_template, class_spec, config, trials, base_seed, workers)
    summary = summarize(records, config.delta)
    logger.info(
        "%d of %d %s bounds failed (threshold %.4f)", summary.failures, summary.trials, config.method.value, summary.threshold
    )
    return summary


def disagreement_trend(
    task_template: SyntheticTaskSpec,
    class_spec: GridClassSpec,
    a_values: Iterable[float],
    trials: int,
    base_seed: int,
    delta: float = 0.05,
) -> pd.Series:
    """Mean disagreement between holdout and full-data classifiers for each split.

    Returns
    -------
    Series
        Indexed by the split divisor `a`, holding the mean disagreement.

    """
    means = {}
    for a in a_values:
        records = run_trials(task_template, class_spec, TrialConfig(Method.WAG, delta, a), trials, base_seed)
        means[a] = float(records["Delta"].mean())
    return pd.Series(means, name="mean_Delta").rename_axis("a")
