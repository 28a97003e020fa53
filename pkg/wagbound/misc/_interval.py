from typing import Iterable, List, Tuple

import numpy as np
import pandas as pd


def as_interval_index(pairs: Iterable[Tuple[float, float]], closed: str = "both") -> pd.IntervalIndex:
    """Builds a validated interval index on the unit interval.

    Parameters
    ----------
    pairs : iterable, of type (float, float)
        The ``(lo, hi)`` end points of each interval.
    closed : {"both", "left", "right", "neither"}, default "both"
        Which sides of the intervals are closed.

    Returns
    -------
    IntervalIndex
        The intervals, sorted as given.

    Raises
    ------
    ValueError
        If an interval is empty or reversed, leaves [0, 1], or if the intervals
        overlap or are not sorted.

    """
    pairs = [(float(lo), float(hi)) for lo, hi in pairs]

    if not pairs:
        return pd.IntervalIndex.from_arrays(np.array([], dtype=float), np.array([], dtype=float), closed=closed)

    for lo, hi in pairs:
        if not 0 <= lo < hi <= 1:
            raise ValueError(f"Interval ({lo}, {hi}) must satisfy 0 <= lo < hi <= 1")

    intervals = pd.IntervalIndex.from_tuples(pairs, closed=closed)

    if not (intervals.is_monotonic_increasing and intervals.is_non_overlapping_monotonic):
        raise ValueError(f"Intervals must be sorted and disjoint, got {pairs}")

    return intervals


def interval_membership(intervals: pd.IntervalIndex, x: np.ndarray) -> np.ndarray:
    """Checks which points fall inside any of the given intervals.

    Parameters
    ----------
    intervals : IntervalIndex
        Non-overlapping intervals.
    x : array-like, of type float
        The points to look up.

    Returns
    -------
    ndarray, of type bool
        True where the point is covered by an interval.

    """
    x = np.asarray(x, dtype=float)
    if intervals.empty:
        return np.zeros(x.shape, dtype=bool)
    return intervals.get_indexer(x) != -1


def find_continuous_runs(mask: np.ndarray) -> List[Tuple[int, int]]:
    """Splits a boolean mask into runs of consecutive true entries.

    Parameters
    ----------
    mask : array-like, of type bool
        The mask to split.

    Returns
    -------
    list, of type (int, int)
        The ``(start, stop)`` positions of each run, where ``stop`` is exclusive.

    """
    padded = np.concatenate([[False], np.asarray(mask, dtype=bool), [False]])
    # Rising edges start a run and falling edges end one
    edges = np.flatnonzero(np.diff(padded.astype(np.int8)))
    return [(int(start), int(stop)) for start, stop in zip(edges[::2], edges[1::2])]


def serialize_intervals(intervals: pd.IntervalIndex) -> str:
    """Serialize an interval index as ``lo:hi`` pairs separated by commas.

    The inverse is `wagbound.misc.Parser.parse_interval_list`.

    """
    return ",".join(f"{interval.left:g}:{interval.right:g}" for interval in intervals)
