"""Closed-form WAG and SVOOSH generalization bounds and their inversions.

All functions are pure and validate their arguments, raising `ValueError` on
invalid input. Logarithms are natural throughout.

"""

from ._backends import (
    BINOMIAL,
    HOEFFDING,
    BinomialBackend,
    ConcentrationBackend,
    HoeffdingBackend,
    binomial_log_cdf,
    binomial_upper_bound,
    get_backend,
    hoeffding_radius,
    hoeffding_tail,
)
from ._calculus import (
    BoundReport,
    DisagreementBound,
    SelectionCost,
    WagSetting,
    bound_report,
    critical_delta,
    disagreement_bound,
    max_holdout_train_size,
    min_selection_cost,
    min_validation_size,
    nontransductive_range,
    selection_cost_s,
    selection_fraction,
    svoosh_radius,
    svoosh_tail,
    validation_size,
    wag_outperforms,
    wag_radius,
    wag_tail,
)
from ._hypotheses import Explicit, HypothesisClassSpec, PowerLaw, hypothesis_count
