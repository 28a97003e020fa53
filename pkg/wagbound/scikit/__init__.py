"""Scikit-learn wrapper around the grid interval classifiers of `wagbound.lab`."""

from typing import Union

import numpy as np
import pandas as pd
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from ..lab import DEFAULT_GRID, DEFAULT_MAX_INTERVALS, GridClassSpec, train_erm_intervals


def _as_inputs(X: Union[pd.DataFrame, pd.Series, np.ndarray]) -> np.ndarray:
    """Flattens single-feature input to a vector of points in [0, 1]."""
    if isinstance(X, pd.DataFrame):
        if X.shape[1] != 1:
            raise ValueError(f"Expected a single feature column, got {X.shape[1]}")
        X = X.iloc[:, 0]
    x = np.asarray(X, dtype=float)
    if x.ndim == 2:
        if x.shape[1] != 1:
            raise ValueError(f"Expected a single feature column, got {x.shape[1]}")
        x = x[:, 0]
    if x.ndim != 1:
        raise ValueError(f"Expected one- or two-dimensional input, got shape {x.shape}")
    if np.any((x < 0) | (x > 1)):
        raise ValueError("Inputs must lie in [0, 1]")
    return x


class IntervalUnionClassifier(ClassifierMixin, BaseEstimator):
    """Empirical risk minimizer over unions of at most `max_intervals` grid intervals.

    Parameters
    ----------
    grid : int, default 64
        Number of grid cells over [0, 1].
    max_intervals : int, default 2
        Largest number of intervals in the fitted union.

    Attributes
    ----------
    classifier_ : Classifier
        The fitted classifier.
    classes_ : ndarray
        The labels ``[0, 1]``.

    Examples
    --------
    >>> model = IntervalUnionClassifier(grid=8, max_intervals=1)
    >>> model.fit([[0.1], [0.4], [0.6], [0.9]], [0, 1, 1, 0]).predict([[0.5]])
    array([1])

    """

    def __init__(self, grid: int = DEFAULT_GRID, max_intervals: int = DEFAULT_MAX_INTERVALS):
        self.grid = grid
        self.max_intervals = max_intervals

    def fit(self, X, y):
        x = _as_inputs(X)
        y = np.asarray(y).astype(np.int64)
        if len(x) != len(y):
            raise ValueError(f"Found {len(x)} inputs but {len(y)} labels")
        if not np.isin(y, (0, 1)).all():
            raise ValueError("Labels must be 0 or 1")
        self.classifier_ = train_erm_intervals(pd.DataFrame({"x": x, "y": y}), GridClassSpec(self.grid, self.max_intervals))
        self.classes_ = np.array([0, 1])
        return self

    def predict(self, X):
        check_is_fitted(self, "classifier_")
        prediction = self.classifier_.predict(_as_inputs(X))
        if isinstance(X, (pd.DataFrame, pd.Series)):
            return pd.Series(prediction, index=X.index)
        return prediction
