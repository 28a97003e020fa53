"""Synthetic learning tasks and Monte Carlo coverage experiments for WAG and SVOOSH.

Tasks are one-dimensional with uniform inputs, interval-union truths and symmetric
label noise. Classifiers are unions of grid intervals trained by exact empirical
risk minimization, so the hypothesis count used by SVOOSH is exact.

"""

from ._classifier import (
    DEFAULT_GRID,
    DEFAULT_MAX_INTERVALS,
    Classifier,
    GridClassSpec,
    disagreement_rate,
    empirical_error,
    grid_cells,
    train_erm_intervals,
)
from ._task import (
    DEFAULT_NOISE,
    DEFAULT_TEST_SIZE,
    DEFAULT_TRUTH,
    LabeledSample,
    SyntheticTaskSpec,
    default_task,
    generate_task,
    generate_unlabeled,
    samples_to_frame,
)
from ._trials import (
    COLUMNS,
    Method,
    MonteCarloSummary,
    TrialConfig,
    TrialOutcome,
    coverage_threshold,
    disagreement_trend,
    monte_carlo,
    run_nontransductive_wag_trial,
    run_svoosh_trial,
    run_trial,
    run_trials,
    run_wag_trial,
    summarize,
    trial_seed,
)
