import sys
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np
import pandas as pd

from ..bounds import PowerLaw, critical_delta, hoeffding_radius, svoosh_radius, wag_radius
from ..misc.Parser import (
    parse_int,
    parse_optional,
    parse_positive,
    parse_probability,
    parse_rate,
    parse_real,
    parse_split_divisor,
)

FLOAT_FORMAT = "%.6g"


class CurvePoint(NamedTuple):
    """One row of a sweep, the bound ranges at a single ``(n, a)``."""

    n: int
    d: float
    a: float
    delta: float
    eps_v: float
    eps_w: float
    delta_star: float


@dataclass(frozen=True)
class SweepConfig:
    """Grid of sample sizes and split divisors to evaluate.

    With `disagreement` unset, ``eps_w`` is evaluated at the critical disagreement
    and therefore equals ``eps_v``.

    """

    n_min: int = 1000
    n_max: int = 10000
    n_steps: int = 10
    d: float = 10.0
    a_list: Tuple[float, ...] = (5.0,)
    delta: float = 0.05
    scale: str = "log"
    disagreement: Optional[float] = None

    def __post_init__(self):
        n_min = parse_positive(parse_int(self.n_min))
        n_max = parse_positive(parse_int(self.n_max))
        if n_min > n_max:
            raise ValueError(f"Expected n_min <= n_max, got {n_min} > {n_max}")
        if self.scale not in ("log", "linear"):
            raise ValueError(f"Expected grid scale 'log' or 'linear' but got '{self.scale}'")
        if not self.a_list:
            raise ValueError("Expected at least one split divisor")
        object.__setattr__(self, "n_min", n_min)
        object.__setattr__(self, "n_max", n_max)
        object.__setattr__(self, "n_steps", parse_positive(parse_int(self.n_steps)))
        object.__setattr__(self, "d", parse_positive(parse_real(self.d)))
        object.__setattr__(self, "a_list", tuple(parse_split_divisor(parse_real(a)) for a in self.a_list))
        object.__setattr__(self, "delta", parse_probability(parse_real(self.delta)))
        object.__setattr__(self, "disagreement", parse_optional(self.disagreement, lambda x: parse_rate(parse_real(x))))

    def n_grid(self) -> np.ndarray:
        """The distinct integer sample sizes of the grid, including both ends."""
        space = np.geomspace if self.scale == "log" else np.linspace
        return np.unique(np.rint(space(self.n_min, self.n_max, self.n_steps)).astype(np.int64))


def sweep_curves(config: SweepConfig) -> pd.DataFrame:
    """Evaluates the SVOOSH range, WAG range and critical disagreement on a grid.

    Validation sizes are real-valued, ``v = n / a``, like the closed forms.

    Returns
    -------
    DataFrame
        One row per sample size and split divisor, with the fields of `CurvePoint`.

    """
    spec = PowerLaw(config.d)
    rows = []
    for n in config.n_grid().tolist():
        eps_v = svoosh_radius(spec, n, config.delta)
        for a in config.a_list:
            delta_star = critical_delta(n, config.d, a, config.delta)
            if config.disagreement is None:
                eps_w = delta_star + hoeffding_radius(n / a, config.delta)
            else:
                eps_w = wag_radius(n / a, config.delta, config.disagreement)
            rows.append(CurvePoint(n, config.d, a, config.delta, eps_v, eps_w, delta_star))
    return pd.DataFrame(rows, columns=CurvePoint._fields)


def write_csv(frame: pd.DataFrame, out: Optional[str] = None):
    """Writes a frame as CSV with 6 significant digits and ``true``/``false`` booleans."""
    frame = frame.copy()
    for column in frame.select_dtypes(bool).columns:
        frame[column] = frame[column].map({True: "true", False: "false"})
    frame.to_csv(out if out is not None else sys.stdout, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
