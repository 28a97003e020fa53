"""Collection of small helpers shared by the other submodules."""

from . import Parser
from ._interval import (
    as_interval_index,
    find_continuous_runs,
    interval_membership,
    serialize_intervals,
)
