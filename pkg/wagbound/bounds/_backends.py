import abc
import functools
import logging
import math
from typing import Callable

import numpy as np
from scipy.special import logsumexp
from scipy.stats import binom

from ..misc.Parser import (
    Count,
    NonNegative,
    NonNegativeInt,
    PositiveInt,
    Probability,
    SampleSize,
    auto_parse,
)

logger = logging.getLogger("wagbound")

# Absolute tolerance of every bisection in this module
TOLERANCE = 1e-10

# Entries kept per cached binomial tail and radius function
CACHE_SIZE = 4096


@auto_parse
def hoeffding_tail(n: SampleSize, eps: NonNegative) -> float:
    """Hoeffding bound on a deviation of at least `eps` over `n` samples.

    Parameters
    ----------
    n : int or float
        The number of samples.
    eps : float
        The deviation between empirical and actual mean.

    Returns
    -------
    float
        ``min(1, exp(-2 n eps^2))``.

    """
    return min(1.0, math.exp(-2 * n * eps**2))


@auto_parse
def hoeffding_radius(n: SampleSize, delta: Probability) -> float:
    """Inverts `hoeffding_tail`, i.e. the deviation reached with probability `delta`.

    Parameters
    ----------
    n : int or float
        The number of samples. Real values are allowed, e.g. ``n / a``.
    delta : float
        The bound failure probability.

    Returns
    -------
    float
        ``sqrt(ln(1 / delta) / (2 n))``.

    """
    return math.sqrt(math.log(1 / delta) / (2 * n))


@auto_parse
def binomial_log_cdf(k: NonNegativeInt, n: PositiveInt, p: float) -> float:
    """Natural logarithm of P(Binomial(n, p) <= k).

    The probability masses are summed in the log domain, which stays accurate for
    tails far below the smallest positive float.

    """
    if k >= n:
        return 0.0
    with np.errstate(divide="ignore"):
        return float(logsumexp(binom.logpmf(np.arange(k + 1), n, p)))


def _bisect(f: Callable[[float], float], lo: float, hi: float, tol: float = TOLERANCE) -> float:
    """Finds the crossing of a nonincreasing function with ``f(lo) > 0 >= f(hi)``.

    The upper end of the final bracket is returned, so ``f`` is never positive at
    the result.

    """
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if f(mid) <= 0:
            hi = mid
        else:
            lo = mid
        iterations += 1
    logger.debug("Bisection converged to %.12g after %d iterations", hi, iterations)
    return hi


@auto_parse
def binomial_upper_bound(k: NonNegativeInt, n: PositiveInt, delta: Probability) -> float:
    """Upper confidence bound on an error rate by exact binomial inversion.

    Parameters
    ----------
    k : int
        The number of observed errors.
    n : int
        The number of validation examples.
    delta : float
        The bound failure probability.

    Returns
    -------
    float
        The smallest ``p`` in ``[k / n, 1]`` with ``P(Binomial(n, p) <= k) <= delta``,
        to within 1e-10. Never larger than ``k / n + hoeffding_radius(n, delta)``.

    Raises
    ------
    ValueError
        If ``k > n``.

    """
    if k > n:
        raise ValueError(f"The number of errors ({k}) cannot exceed the number of examples ({n})")
    if k == n:
        return 1.0

    log_delta = math.log(delta)
    lo = k / n
    if binomial_log_cdf(k, n, lo) <= log_delta:
        return lo
    # Hoeffding already guarantees the target at this point
    hi = min(1.0, lo + hoeffding_radius(n, delta))
    return _bisect(lambda p: binomial_log_cdf(k, n, p) - log_delta, lo, hi)


class ConcentrationBackend(abc.ABC):
    """Interchangeable pair of a tail bound b(n, eps) and its inverse eps(n, delta).

    Implementations provide the tail in the log domain so that products with large
    hypothesis counts can be formed without overflow.

    """

    name: str

    @abc.abstractmethod
    def log_tail(self, n, eps) -> float:
        """Natural logarithm of the tail bound, at most 0."""

    @abc.abstractmethod
    def radius(self, n, delta) -> float:
        """The smallest deviation whose tail bound is at most `delta`."""

    def tail(self, n, eps) -> float:
        """Probability bound on a deviation of at least `eps` over `n` samples."""
        return min(1.0, math.exp(self.log_tail(n, eps)))

    def __repr__(self):
        return f"{type(self).__name__}()"


class HoeffdingBackend(ConcentrationBackend):
    """Hoeffding's inequality, ``b(n, eps) = exp(-2 n eps^2)``."""

    name = "hoeffding"

    @auto_parse
    def log_tail(self, n: SampleSize, eps: NonNegative) -> float:
        return -2 * n * eps**2

    def radius(self, n, delta) -> float:
        return hoeffding_radius(n, delta)


@functools.lru_cache(maxsize=CACHE_SIZE)
def _binomial_log_tail(n: int, eps: float) -> float:
    if eps == 0:
        return 0.0
    # The worst true rate for a deviation of eps with k errors is p = eps + k / n
    k = np.arange(math.floor(n * (1 - eps) + 1e-9) + 1)
    if k.size == 0:
        return -math.inf
    p = np.minimum(eps + k / n, 1.0)
    with np.errstate(divide="ignore"):
        return min(0.0, float(np.max(binom.logcdf(k, n, p))))


@functools.lru_cache(maxsize=CACHE_SIZE)
def _binomial_radius(n: int, delta: float) -> float:
    log_delta = math.log(delta)
    hi = hoeffding_radius(n, delta)
    if _binomial_log_tail(n, hi) > log_delta:
        return hi
    return _bisect(lambda eps: _binomial_log_tail(n, eps) - log_delta, 0.0, hi)


class BinomialBackend(ConcentrationBackend):
    """Exact binomial tail, worst case over the true error rate.

    The tail is ``max_p P(Binomial(n, p) / n <= p - eps)``, attained at one of the
    rates ``p = eps + k / n``. It is never larger than the Hoeffding tail and is
    nonincreasing in `eps`. Because of the lattice of attainable error counts it is
    only approximately nonincreasing in `n`.

    """

    name = "binomial"

    @auto_parse
    def log_tail(self, n: Count, eps: NonNegative) -> float:
        return _binomial_log_tail(n, eps)

    @auto_parse
    def radius(self, n: Count, delta: Probability) -> float:
        return _binomial_radius(n, delta)


HOEFFDING = HoeffdingBackend()
BINOMIAL = BinomialBackend()

_BACKENDS = {backend.name: backend for backend in (HOEFFDING, BINOMIAL)}


def get_backend(name: str) -> ConcentrationBackend:
    """Looks up a concentration backend by name ("hoeffding" or "binomial")."""
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"Unknown backend '{name}', expected one of {sorted(_BACKENDS)}")
