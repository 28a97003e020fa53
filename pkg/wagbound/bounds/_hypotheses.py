import abc
import math
import numbers
from dataclasses import dataclass
from typing import Union

from ..misc.Parser import SampleSize, auto_parse, parse_positive, parse_real


class HypothesisClassSpec(abc.ABC):
    """Model of the hypothesis count m(n) of a hypothesis class.

    Subclasses only have to provide the natural logarithm of the count, which is
    what every bound is computed from. Counts such as ``n ** 100`` do not fit in a
    float, their logarithms do.

    """

    @abc.abstractmethod
    def log_count(self, n: float) -> float:
        """Returns ln m(n) for a sample size ``n >= 1``."""


@dataclass(frozen=True)
class PowerLaw(HypothesisClassSpec):
    """Hypothesis class with ``m(n) = n ** dimension``.

    Parameters
    ----------
    dimension : float
        The (positive, possibly fractional) dimension ``d`` of the class, similar to
        a VC dimension.

    """

    dimension: float

    def __post_init__(self):
        object.__setattr__(self, "dimension", parse_positive(parse_real(self.dimension)))

    def log_count(self, n: float) -> float:
        return self.dimension * math.log(n)


@dataclass(frozen=True)
class Explicit(HypothesisClassSpec):
    """Hypothesis class with a fixed, finite number of hypotheses.

    Parameters
    ----------
    count : int or float
        The number of hypotheses, at least 1. It does not depend on the sample size.
        Integer counts are kept exact, however large.

    """

    count: Union[int, float]

    def __post_init__(self):
        if isinstance(self.count, numbers.Integral) and not isinstance(self.count, bool):
            count = int(self.count)
        else:
            count = parse_real(self.count)
        if not count >= 1:
            raise ValueError(f"A hypothesis class has at least one hypothesis, got {count}")
        object.__setattr__(self, "count", count)

    def log_count(self, n: float) -> float:
        return math.log(self.count)


@auto_parse
def hypothesis_count(spec: HypothesisClassSpec, n: SampleSize) -> Union[int, float]:
    """Evaluates the hypothesis count m(n).

    Parameters
    ----------
    spec : HypothesisClassSpec
        The hypothesis class.
    n : int or float
        The number of training examples.

    Returns
    -------
    int or float
        ``n ** d`` for power-law classes (no rounding) and the fixed count for
        explicit classes, exact for integer counts. Power-law counts beyond the
        float range are returned as ``inf``, use ``spec.log_count(n)`` for arithmetic.

    """
    if isinstance(spec, Explicit):
        return spec.count
    try:
        if isinstance(spec, PowerLaw):
            return float(n) ** spec.dimension
        return math.exp(spec.log_count(n))
    except OverflowError:
        return math.inf
