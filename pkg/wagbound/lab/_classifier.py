import functools
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np
import pandas as pd

from ..bounds import Explicit
from ..misc import find_continuous_runs
from ..misc.Parser import parse_int, parse_nonnegative, parse_positive

logger = logging.getLogger("wagbound")

DEFAULT_GRID = 64
DEFAULT_MAX_INTERVALS = 2


def grid_cells(x: np.ndarray, grid: int) -> np.ndarray:
    """Maps inputs in [0, 1] to the index of their grid cell.

    Cells are the half-open intervals ``[j / grid, (j + 1) / grid)``, with the point
    1 belonging to the last cell.

    """
    cells = np.floor(np.asarray(x, dtype=float) * grid).astype(np.int64)
    return np.clip(cells, 0, grid - 1)


@dataclass(frozen=True)
class Classifier:
    """Union of intervals with end points on a uniform grid over [0, 1].

    The classifier predicts 1 inside any interval and 0 elsewhere. Intervals are
    stored as grid indices ``cuts = (lo_1, hi_1, lo_2, hi_2, ...)`` with
    ``lo_1 < hi_1 < lo_2 < ...``, each interval being ``[lo / grid, hi / grid)``.

    """

    cuts: Tuple[int, ...]
    grid: int

    def __post_init__(self):
        grid = parse_positive(parse_int(self.grid))
        cuts = tuple(parse_int(cut) for cut in self.cuts)
        if len(cuts) % 2:
            raise ValueError(f"Expected an even number of cut points, got {cuts}")
        if any(a >= b for a, b in zip(cuts, cuts[1:])) or (cuts and not (0 <= cuts[0] and cuts[-1] <= grid)):
            raise ValueError(f"Cut points must be strictly increasing within [0, {grid}], got {cuts}")
        object.__setattr__(self, "cuts", cuts)
        object.__setattr__(self, "grid", grid)

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "Classifier":
        """Builds the classifier predicting 1 exactly on the cells where `mask` is true."""
        runs = find_continuous_runs(mask)
        return cls(tuple(itertools.chain.from_iterable(runs)), len(mask))

    @property
    def n_intervals(self) -> int:
        return len(self.cuts) // 2

    @functools.cached_property
    def mask(self) -> np.ndarray:
        """Predicted label of each grid cell."""
        mask = np.zeros(self.grid, dtype=bool)
        for lo, hi in zip(self.cuts[::2], self.cuts[1::2]):
            mask[lo:hi] = True
        return mask

    @property
    def intervals(self) -> pd.IntervalIndex:
        cuts = np.array(self.cuts, dtype=float) / self.grid
        return pd.IntervalIndex.from_arrays(cuts[::2], cuts[1::2], closed="left")

    def predict(self, x: np.ndarray) -> np.ndarray:
        """Predicts the label, 0 or 1, of each input."""
        return self.mask[grid_cells(x, self.grid)].astype(np.int64)

    def complement(self) -> "Classifier":
        """The classifier predicting the opposite label everywhere."""
        return Classifier.from_mask(~self.mask)


@dataclass(frozen=True)
class GridClassSpec:
    """Finite class of all unions of at most `max_intervals` grid intervals.

    Parameters
    ----------
    grid : int, default 64
        Number of grid cells, giving ``grid + 1`` cut points.
    max_intervals : int, default 2
        Largest number of intervals in a union.

    """

    grid: int = DEFAULT_GRID
    max_intervals: int = DEFAULT_MAX_INTERVALS

    def __post_init__(self):
        object.__setattr__(self, "grid", parse_positive(parse_int(self.grid)))
        object.__setattr__(self, "max_intervals", parse_nonnegative(parse_int(self.max_intervals)))

    @property
    def m_exact(self) -> int:
        """Exact number of hypotheses, one per choice of ``2 j`` ordered cut points."""
        return sum(math.comb(self.grid + 1, 2 * j) for j in range(self.max_intervals + 1))

    def hypothesis_class(self) -> Explicit:
        return Explicit(self.m_exact)

    def contains(self, classifier: Classifier) -> bool:
        return classifier.grid == self.grid and classifier.n_intervals <= self.max_intervals

    def hypotheses(self) -> Iterator[Classifier]:
        """Enumerates every hypothesis, by interval count and then lexicographically."""
        for j in range(self.max_intervals + 1):
            for cuts in itertools.combinations(range(self.grid + 1), 2 * j):
                yield Classifier(cuts, self.grid)


def _check_nonempty(data, what: str):
    if len(data) == 0:
        raise ValueError(f"Expected at least one {what}")


def train_erm_intervals(data: pd.DataFrame, class_spec: GridClassSpec) -> Classifier:
    """Trains the empirical risk minimizer over a grid interval class.

    Errors are minimized by dynamic programming over the grid cells. Among the
    minimizers the one with the fewest intervals is chosen, then the one with the
    lexicographically smallest cut points.

    Parameters
    ----------
    data : DataFrame
        Training examples with columns ``x`` and ``y``.
    class_spec : GridClassSpec
        The hypothesis class.

    Returns
    -------
    Classifier
        The trained classifier, a member of `class_spec`.

    Raises
    ------
    ValueError
        If `data` is empty.

    """
    _check_nonempty(data, "training example")

    grid, k = class_spec.grid, class_spec.max_intervals
    cells = grid_cells(data["x"].to_numpy(), grid)
    y = data["y"].to_numpy()
    # Errors made in each cell when predicting 0 and 1 respectively
    cost_off = np.bincount(cells[y == 1], minlength=grid).tolist()
    cost_on = np.bincount(cells[y == 0], minlength=grid).tolist()

    # best[c][j][inside] = fewest errors on cells c.. starting exactly j more
    # intervals, where `inside` tells whether cell c - 1 is covered
    best = [[[math.inf, math.inf] for _ in range(k + 1)] for _ in range(grid + 1)]
    best[grid][0] = [0, 0]
    for c in range(grid - 1, -1, -1):
        following = best[c + 1]
        for j in range(k + 1):
            off = cost_off[c] + following[j][0]
            best[c][j][0] = min(off, cost_on[c] + following[j - 1][1] if j else math.inf)
            best[c][j][1] = min(off, cost_on[c] + following[j][1])

    errors = [best[0][j][0] for j in range(k + 1)]
    target = min(errors)
    j = errors.index(target)

    # Walk forward, placing each end point as early as an optimal solution allows
    cuts = []
    inside = False
    for c in range(grid):
        following = best[c + 1]
        if inside:
            if cost_off[c] + following[j][0] == target:
                cuts.append(c)
                inside = False
                target -= cost_off[c]
            else:
                target -= cost_on[c]
        elif j and cost_on[c] + following[j - 1][1] == target:
            cuts.append(c)
            inside = True
            j -= 1
            target -= cost_on[c]
        else:
            target -= cost_off[c]
    if inside:
        cuts.append(grid)

    classifier = Classifier(tuple(cuts), grid)
    logger.debug("Trained %s with %d training errors", classifier.cuts, min(errors))
    return classifier


def empirical_error(classifier: Classifier, data: pd.DataFrame) -> float:
    """Fraction of examples whose label differs from the prediction.

    Raises
    ------
    ValueError
        If `data` is empty.

    """
    _check_nonempty(data, "example")
    return float(np.mean(classifier.predict(data["x"].to_numpy()) != data["y"].to_numpy()))


def disagreement_rate(first: Classifier, second: Classifier, inputs: np.ndarray) -> float:
    """Fraction of inputs on which two classifiers predict differently.

    The rate bounds the difference of the two classifiers' error rates on any
    labeling of the inputs.

    Raises
    ------
    ValueError
        If `inputs` is empty.

    """
    inputs = np.asarray(inputs, dtype=float)
    _check_nonempty(inputs, "input")
    return float(np.mean(first.predict(inputs) != second.predict(inputs)))
