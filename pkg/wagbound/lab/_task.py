import functools
from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple, Tuple

import numpy as np
import pandas as pd

from ..misc import as_interval_index, interval_membership
from ..misc.Parser import parse_int, parse_positive, parse_real

DEFAULT_TRUTH = ((0.2, 0.45), (0.6, 0.85))
DEFAULT_NOISE = 0.1
DEFAULT_TEST_SIZE = 10000


class LabeledSample(NamedTuple):
    """A single example, one row of a labeled data frame."""

    x: float
    y: int


@dataclass(frozen=True)
class SyntheticTaskSpec:
    """One-dimensional learning task with interval-union truth and label noise.

    Inputs are uniform on [0, 1]. The label is 1 inside any of the (closed) truth
    intervals and 0 elsewhere, flipped independently with probability `noise_eta`.

    Parameters
    ----------
    truth_intervals : tuple, of type (float, float)
        Sorted, disjoint positive-label regions inside [0, 1].
    noise_eta : float, default 0.1
        Label flip probability in [0, 0.5).
    n_train : int, default 300
        Number of in-sample (training) examples.
    n_test : int, default 10000
        Number of test examples.
    seed : int, default 0
        Key of the counter-based random generator, a 64-bit unsigned integer.

    """

    truth_intervals: Tuple[Tuple[float, float], ...] = DEFAULT_TRUTH
    noise_eta: float = DEFAULT_NOISE
    n_train: int = 300
    n_test: int = DEFAULT_TEST_SIZE
    seed: int = 0

    def __post_init__(self):
        truth = tuple((float(lo), float(hi)) for lo, hi in self.truth_intervals)
        as_interval_index(truth)
        noise_eta = parse_real(self.noise_eta)
        if not 0 <= noise_eta < 0.5:
            raise ValueError(f"The noise rate must lie in [0, 0.5), got {noise_eta}")
        seed = parse_int(self.seed)
        if not 0 <= seed < 2**64:
            raise ValueError(f"The seed must be a 64-bit unsigned integer, got {seed}")
        object.__setattr__(self, "truth_intervals", truth)
        object.__setattr__(self, "noise_eta", noise_eta)
        object.__setattr__(self, "n_train", parse_positive(parse_int(self.n_train)))
        object.__setattr__(self, "n_test", parse_positive(parse_int(self.n_test)))
        object.__setattr__(self, "seed", seed)

    @functools.cached_property
    def truth(self) -> pd.IntervalIndex:
        return as_interval_index(self.truth_intervals)

    def label(self, x: np.ndarray) -> np.ndarray:
        """The noiseless label of each input."""
        return interval_membership(self.truth, x).astype(np.int64)

    def with_seed(self, seed: int) -> "SyntheticTaskSpec":
        return replace(self, seed=seed)


def default_task(n_train: int = 300, seed: int = 0) -> SyntheticTaskSpec:
    """The preset task: two truth intervals, 10% label noise and 10000 test examples."""
    return SyntheticTaskSpec(n_train=n_train, seed=seed)


def _generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed))


def generate_task(spec: SyntheticTaskSpec) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """Draws the training and test examples of a task.

    The draw is a pure function of `spec`: a Philox (counter-based) generator keyed
    by ``spec.seed`` produces all inputs first and all label flips second.

    Parameters
    ----------
    spec : SyntheticTaskSpec
        The task to draw from.

    Returns
    -------
    (DataFrame, DataFrame)
        The training and test examples, each with columns ``x`` and ``y``.

    """
    rng = _generator(spec.seed)
    size = spec.n_train + spec.n_test
    x = rng.random(size)
    flips = rng.random(size) < spec.noise_eta
    y = spec.label(x) ^ flips.astype(np.int64)
    frame = pd.DataFrame({"x": x, "y": y})
    train = frame.iloc[: spec.n_train].reset_index(drop=True)
    test = frame.iloc[spec.n_train :].reset_index(drop=True)
    return train, test


def generate_unlabeled(spec: SyntheticTaskSpec, t: int) -> np.ndarray:
    """Draws `t` unlabeled inputs, independent of the examples of `generate_task`.

    The inputs come from the jumped stream of the same Philox key.

    """
    t = parse_positive(parse_int(t))
    rng = np.random.Generator(np.random.Philox(key=spec.seed).jumped())
    return rng.random(t)


def samples_to_frame(samples: Iterable[LabeledSample]) -> pd.DataFrame:
    """Collects labeled samples into a data frame with columns ``x`` and ``y``."""
    samples = [LabeledSample(*sample) for sample in samples]
    return pd.DataFrame(
        {
            "x": np.array([sample.x for sample in samples], dtype=float),
            "y": np.array([sample.y for sample in samples], dtype=np.int64),
        }
    )
