import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from ..misc.Parser import (
    NonNegative,
    Positive,
    PositiveInt,
    Probability,
    Rate,
    SampleSize,
    SplitDivisor,
    auto_parse,
    parse_int,
    parse_optional,
    parse_probability,
    parse_rate,
    parse_real,
)
from ._backends import HOEFFDING, ConcentrationBackend, hoeffding_radius
from ._hypotheses import HypothesisClassSpec, PowerLaw

logger = logging.getLogger("wagbound")


@auto_parse
def svoosh_tail(
    spec: HypothesisClassSpec,
    n: SampleSize,
    eps: NonNegative,
    backend: ConcentrationBackend = HOEFFDING,
) -> float:
    """Probability bound for simultaneous validation, ``min(1, m(n) b(n, eps))``.

    The product is formed in the log domain, so huge hypothesis counts are fine.

    """
    log_tail = spec.log_count(n) + backend.log_tail(n, eps)
    return 1.0 if log_tail >= 0 else math.exp(log_tail)


@auto_parse
def svoosh_radius(spec: HypothesisClassSpec, n: SampleSize, delta: Probability) -> float:
    """Bound range of simultaneous validation under Hoeffding's inequality.

    Parameters
    ----------
    spec : HypothesisClassSpec
        The hypothesis class used for training.
    n : int or float
        The number of training examples, all of which are also used for validation.
    delta : float
        The bound failure probability.

    Returns
    -------
    float
        ``sqrt((ln(1 / delta) + ln m(n)) / (2 n))``.

    """
    return math.sqrt((math.log(1 / delta) + spec.log_count(n)) / (2 * n))


@auto_parse
def wag_tail(
    v: SampleSize,
    eps: float,
    disagreement: Rate,
    backend: ConcentrationBackend = HOEFFDING,
) -> float:
    """Probability bound for withhold and gap, ``b(v, eps - disagreement)``.

    A range `eps` that does not exceed the disagreement gives the vacuous bound 1.

    """
    return backend.tail(v, max(0.0, eps - disagreement))


@auto_parse
def wag_radius(
    v: SampleSize,
    delta: Probability,
    disagreement: Rate,
    backend: ConcentrationBackend = HOEFFDING,
) -> float:
    """Bound range of withhold and gap.

    Parameters
    ----------
    v : int or float
        The number of withheld validation examples.
    delta : float
        The bound failure probability.
    disagreement : float
        The rate of disagreement between the holdout and full-data classifiers.
    backend : ConcentrationBackend, default HOEFFDING
        The single-classifier bound used on the validation examples.

    Returns
    -------
    float
        ``disagreement + backend.radius(v, delta)``.

    """
    return disagreement + backend.radius(v, delta)


@auto_parse
def selection_cost_s(spec: HypothesisClassSpec, n: SampleSize, eps: Positive) -> float:
    """Number of examples that simultaneous validation spends on selecting a hypothesis.

    With ``s = ln m(n) / (2 eps^2)`` the simultaneous bound ``m(n) exp(-2 n eps^2)``
    equals the single-classifier bound ``exp(-2 (n - s) eps^2)``. Values larger than
    `n` are legal.

    """
    return spec.log_count(n) / (2 * eps**2)


@auto_parse
def selection_fraction(spec: HypothesisClassSpec, n: SampleSize, eps: Positive) -> float:
    """Share ``s / n`` of the examples consumed by simultaneous validation."""
    return selection_cost_s(spec, n, eps) / n


class SelectionCost(NamedTuple):
    """Result of `min_selection_cost`."""

    s: int
    attainable: bool


@auto_parse
def min_selection_cost(
    backend: ConcentrationBackend,
    spec: HypothesisClassSpec,
    n: PositiveInt,
    eps: Positive,
) -> SelectionCost:
    """Selection cost for an arbitrary concentration backend.

    Finds the smallest integer ``s`` in ``[0, n - 1]`` such that validating a single
    classifier on ``n - s`` examples is no stronger than validating all hypotheses on
    `n` examples, i.e. ``tail(n - s, eps) >= min(1, m(n) tail(n, eps))``. For
    Hoeffding's inequality this is the ceiling of `selection_cost_s`.

    Parameters
    ----------
    backend : ConcentrationBackend
        The tail bound, assumed nonincreasing in the number of samples.
    spec : HypothesisClassSpec
        The hypothesis class.
    n : int
        The number of training examples.
    eps : float
        The bound range.

    Returns
    -------
    SelectionCost
        The cost ``s`` and whether it is attainable. If no ``s`` satisfies the
        inequality, ``s = n - 1`` is returned with ``attainable=False``.

    """
    target = min(0.0, spec.log_count(n) + backend.log_tail(n, eps))

    def is_costly_enough(s):
        return backend.log_tail(n - s, eps) >= target

    if not is_costly_enough(n - 1):
        logger.warning("No selection cost below n=%d reaches the simultaneous bound at eps=%g", n, eps)
        return SelectionCost(n - 1, False)

    lo, hi = 0, n - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if is_costly_enough(mid):
            hi = mid
        else:
            lo = mid + 1
    return SelectionCost(lo, True)


@auto_parse
def max_holdout_train_size(d: Positive, n: SampleSize, eps: Positive) -> float:
    """Largest number of holdout training examples for which WAG can beat SVOOSH.

    Equals ``d ln(n) / (2 eps^2)``, which is `selection_cost_s` of a power-law class.

    """
    return d * math.log(n) / (2 * eps**2)


@auto_parse
def min_validation_size(spec: HypothesisClassSpec, n: SampleSize, eps: Positive) -> float:
    """Validation set size WAG must exceed to beat SVOOSH even without disagreement.

    Returns ``n - s``. A non-positive value means the condition holds for any split.

    """
    return n - selection_cost_s(spec, n, eps)


@auto_parse
def critical_delta(n: SampleSize, d: Positive, a: SplitDivisor, delta: Probability) -> float:
    """Critical disagreement below which WAG has the smaller bound range.

    Parameters
    ----------
    n : int or float
        The number of training examples.
    d : float
        The dimension of the power-law hypothesis class, ``m(n) = n ** d``.
    a : float
        The split divisor, ``v = n / a`` examples are withheld for validation.
    delta : float
        The bound failure probability, equal for both methods.

    Returns
    -------
    float
        ``(sqrt(ln(1/delta) + d ln n) - sqrt(a ln(1/delta))) / sqrt(2 n)``. The value is
        negative when WAG cannot outperform SVOOSH at any rate of disagreement.

    """
    log_inv_delta = math.log(1 / delta)
    return (math.sqrt(log_inv_delta + d * math.log(n)) - math.sqrt(a * log_inv_delta)) / math.sqrt(2 * n)


@auto_parse
def validation_size(n: PositiveInt, a: SplitDivisor) -> int:
    """Number of withheld examples ``floor(n / a)``.

    Raises
    ------
    ValueError
        If the split leaves no validation or no holdout training examples.

    """
    v = math.floor(n / a)
    if not 1 <= v < n:
        raise ValueError(f"Splitting n={n} by a={a} gives v={v}, which must satisfy 0 < v < n")
    return v


@auto_parse
def wag_outperforms(
    spec: HypothesisClassSpec,
    n: SampleSize,
    v: SampleSize,
    delta: Probability,
    disagreement: Rate,
) -> bool:
    """Checks whether WAG's bound range is smaller than SVOOSH's at equal `delta`."""
    return wag_radius(v, delta, disagreement) < svoosh_radius(spec, n, delta)


@dataclass(frozen=True)
class WagSetting:
    """Inputs of the WAG bound for a concrete split.

    Exactly one of `v` and `a` is given; with `a` the split is ``v = floor(n / a)``.

    """

    n: int
    delta: float
    disagreement: float = 0.0
    v: Optional[int] = None
    a: Optional[float] = None

    def __post_init__(self):
        if (self.v is None) == (self.a is None):
            raise ValueError("Specify exactly one of the validation count `v` and the divisor `a`")
        n = parse_int(self.n)
        v = validation_size(n, self.a) if self.v is None else parse_int(self.v)
        if not 0 < v < n:
            raise ValueError(f"The validation count must satisfy 0 < v < n, got v={v} and n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "a", parse_optional(self.a, parse_real))
        object.__setattr__(self, "delta", parse_probability(parse_real(self.delta)))
        object.__setattr__(self, "disagreement", parse_rate(parse_real(self.disagreement)))

    def radius(self, backend: ConcentrationBackend = HOEFFDING) -> float:
        """The WAG bound range for this setting."""
        return wag_radius(self.v, self.delta, self.disagreement, backend)


@dataclass(frozen=True)
class DisagreementBound:
    """Bound on the distributional disagreement rate from `t` unlabeled examples.

    `t` keeps the type it was given, an int for an actual number of examples.

    """

    delta_hat: float
    t: Union[int, float]
    eps_t: float
    delta_t: float

    @property
    def upper(self) -> float:
        return self.delta_hat + self.eps_t


@auto_parse
def disagreement_bound(
    delta_hat: Rate,
    t: SampleSize,
    delta_t: Probability,
    backend: ConcentrationBackend = HOEFFDING,
) -> DisagreementBound:
    """Bounds the disagreement rate measured on unlabeled examples.

    Parameters
    ----------
    delta_hat : float
        The empirical disagreement over the unlabeled examples.
    t : int
        The number of unlabeled examples.
    delta_t : float
        The failure probability spent on the disagreement bound.
    backend : ConcentrationBackend, default HOEFFDING
        The tail bound.

    Returns
    -------
    DisagreementBound
        With ``eps_t = backend.radius(t, delta_t)``.

    """
    return DisagreementBound(delta_hat, t, backend.radius(t, delta_t), delta_t)


@auto_parse
def nontransductive_range(
    v: SampleSize,
    delta_w: Probability,
    delta_hat: Rate,
    t: SampleSize,
    delta_t: Probability,
    backend: ConcentrationBackend = HOEFFDING,
) -> float:
    """WAG bound range when the disagreement is estimated rather than computed.

    The range is ``delta_hat + radius(t, delta_t) + radius(v, delta_w)``. By the union
    bound it fails with probability at most ``delta_w + delta_t``. A natural choice
    is to split the overall failure probability equally.

    Raises
    ------
    ValueError
        If ``delta_w + delta_t >= 1``.

    """
    if delta_w + delta_t >= 1:
        raise ValueError(f"The failure probabilities must sum to less than 1, got {delta_w} + {delta_t}")
    return disagreement_bound(delta_hat, t, delta_t, backend).upper + backend.radius(v, delta_w)


@dataclass(frozen=True)
class BoundReport:
    """Summary of the WAG vs SVOOSH comparison for one configuration.

    ``eps_w`` is evaluated at the critical disagreement, so it equals ``eps_v``.
    ``eps_for_s`` records the bound range the selection cost was evaluated at.

    """

    n: float
    a: float
    delta: float
    eps_v: float
    eps_w: float
    delta_star: float
    s: float
    w_star: float
    eps_for_s: float

    @property
    def wag_can_outperform(self) -> bool:
        return self.delta_star > 0


@auto_parse
def bound_report(
    n: SampleSize,
    spec: HypothesisClassSpec,
    a: SplitDivisor,
    delta: Probability,
    eps_for_s: Optional[Positive] = None,
) -> BoundReport:
    """Collects the bound ranges, critical disagreement and selection costs.

    Parameters
    ----------
    n : int or float
        The number of training examples.
    spec : HypothesisClassSpec
        The hypothesis class.
    a : float
        The split divisor, ``n / a`` examples are withheld (real-valued here).
    delta : float
        The bound failure probability.
    eps_for_s : float, optional
        The bound range at which `s` and `w_star` are evaluated. Defaults to the
        SVOOSH range of the same configuration.

    Returns
    -------
    BoundReport
        The report.

    """
    eps_v = svoosh_radius(spec, n, delta)
    single_radius = hoeffding_radius(n / a, delta)

    if isinstance(spec, PowerLaw):
        delta_star = critical_delta(n, spec.dimension, a, delta)
    else:
        delta_star = eps_v - single_radius

    if eps_for_s is None:
        eps_for_s = eps_v

    s = selection_cost_s(spec, n, eps_for_s)
    w_star = max_holdout_train_size(spec.dimension, n, eps_for_s) if isinstance(spec, PowerLaw) else s

    if delta_star < 0:
        logger.warning("Critical disagreement is negative (%.6g), WAG cannot outperform SVOOSH", delta_star)

    return BoundReport(
        n=n,
        a=a,
        delta=delta,
        eps_v=eps_v,
        eps_w=delta_star + single_radius,
        delta_star=delta_star,
        s=s,
        w_star=w_star,
        eps_for_s=eps_for_s,
    )
