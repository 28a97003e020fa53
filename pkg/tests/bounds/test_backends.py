import itertools
import math

import numpy as np
import pytest
from scipy.stats import binom

from wagbound.bounds import (
    BINOMIAL,
    HOEFFDING,
    binomial_log_cdf,
    binomial_upper_bound,
    get_backend,
    hoeffding_radius,
    hoeffding_tail,
)
from wagbound.bounds._backends import CACHE_SIZE, _binomial_log_tail, _binomial_radius


@pytest.mark.parametrize(
    "n,eps,expected",
    [
        (100, 0.1, math.exp(-2)),
        (50, 0, 1.0),
        (200, 0.08654092, 0.05),
        (1000, 1, math.exp(-2000)),
    ],
)
def test_hoeffding_tail(n, eps, expected):
    assert hoeffding_tail(n, eps) == pytest.approx(expected, rel=1e-6)


@pytest.mark.parametrize(
    "n,delta,expected",
    [
        (200, 0.05, 0.08654092),
        (1, math.exp(-2), 1.0),
        (20000, 0.05, 0.00865409),
        (100, 0.5, 0.05887050),
        (200.5, 0.05, math.sqrt(math.log(20) / 401)),
    ],
)
def test_hoeffding_radius(n, delta, expected):
    assert hoeffding_radius(n, delta) == pytest.approx(expected, abs=1e-8)


@pytest.mark.parametrize(
    "n,delta",
    [
        (0, 0.05),
        (0.5, 0.05),
        (-1, 0.05),
        (100, 0),
        (100, 1),
        (100, 1.5),
        (100, "0.05"),
        (math.nan, 0.05),
    ],
)
def test_hoeffding_radius__invalid_input__should_raise(n, delta):
    with pytest.raises(ValueError):
        hoeffding_radius(n, delta)


@pytest.mark.parametrize("n,eps", [(0, 0.1), (100, -0.1), (100, math.nan)])
def test_hoeffding_tail__invalid_input__should_raise(n, eps):
    with pytest.raises(ValueError):
        hoeffding_tail(n, eps)


def test_hoeffding_radius__inverts_tail():
    for n, delta in itertools.product(np.geomspace(1, 1e6, 25), np.linspace(0.01, 0.99, 15)):
        assert abs(hoeffding_tail(n, hoeffding_radius(n, delta)) - delta) <= 1e-12


def test_hoeffding_radius__strictly_decreasing_in_n():
    radii = [hoeffding_radius(n, 0.05) for n in range(1, 2000)]
    assert all(a > b for a, b in zip(radii, radii[1:]))


@pytest.mark.parametrize(
    "k,n,p",
    [
        (0, 100, 0.03),
        (5, 100, 0.1),
        (50, 100, 0.5),
        (99, 100, 0.999),
        (3, 10000, 0.01),
        (0, 1, 0.0),
    ],
)
def test_binomial_log_cdf(k, n, p):
    assert math.exp(binomial_log_cdf(k, n, p)) == pytest.approx(binom.cdf(k, n, p), rel=1e-7, abs=1e-300)


def test_binomial_log_cdf__far_tail_stays_finite():
    log_cdf = binomial_log_cdf(0, 100000, 0.5)
    assert log_cdf == pytest.approx(100000 * math.log(0.5))


def test_binomial_log_cdf__k_at_least_n():
    assert binomial_log_cdf(10, 10, 0.3) == 0.0


@pytest.mark.parametrize(
    "k,n,delta,expected",
    [
        (0, 100, 0.05, 1 - 0.05 ** (1 / 100)),
        (10, 10, 0.05, 1.0),
        (0, 1, 0.5, 0.5),
    ],
)
def test_binomial_upper_bound(k, n, delta, expected):
    assert binomial_upper_bound(k, n, delta) == pytest.approx(expected, abs=1e-6)


def test_binomial_upper_bound__zero_errors_closed_form():
    assert binomial_upper_bound(0, 100, 0.05) == pytest.approx(0.029513, abs=1e-6)


def test_binomial_upper_bound__matches_cdf_oracle():
    p = binomial_upper_bound(5, 100, 0.05)
    assert 0.09 < p < 0.11
    assert binom.cdf(5, 100, p) == pytest.approx(0.05, abs=1e-6)


@pytest.mark.parametrize("k,n,delta", [(11, 10, 0.05), (-1, 10, 0.05), (1, 0, 0.05), (1, 10, 0), (1.0, 10, 0.05)])
def test_binomial_upper_bound__invalid_input__should_raise(k, n, delta):
    with pytest.raises(ValueError):
        binomial_upper_bound(k, n, delta)


def test_binomial_upper_bound__never_looser_than_hoeffding():
    for n, delta in itertools.product([1, 7, 50, 300, 2000, 10000], [0.01, 0.05, 0.3]):
        for k in sorted({0, 1, n // 10, n // 2, n - 1, n}):
            bound = binomial_upper_bound(k, n, delta)
            assert k / n <= bound <= k / n + hoeffding_radius(n, delta) + 1e-9


@pytest.mark.parametrize("name,expected", [("hoeffding", HOEFFDING), ("binomial", BINOMIAL)])
def test_get_backend(name, expected):
    assert get_backend(name) is expected


def test_get_backend__invalid_input__should_raise():
    with pytest.raises(ValueError):
        get_backend("bernstein")


@pytest.mark.parametrize("backend", [HOEFFDING, BINOMIAL])
def test_backend__zero_deviation_is_certain(backend):
    assert backend.tail(100, 0) == 1.0


@pytest.mark.parametrize("backend", [HOEFFDING, BINOMIAL])
def test_backend__radius_shrinks_with_n(backend):
    radii = [backend.radius(n, 0.05) for n in (10, 100, 1000, 10000)]
    assert all(a > b for a, b in zip(radii, radii[1:]))
    assert radii[-1] < 0.02


def test_hoeffding_backend__matches_functions():
    assert HOEFFDING.tail(100, 0.1) == hoeffding_tail(100, 0.1)
    assert HOEFFDING.radius(200, 0.05) == hoeffding_radius(200, 0.05)


def test_binomial_backend__never_looser_than_hoeffding():
    for n, eps in itertools.product([1, 5, 40, 200, 1000], [0.01, 0.05, 0.1, 0.3, 0.7]):
        assert BINOMIAL.log_tail(n, eps) <= HOEFFDING.log_tail(n, eps) + 1e-12
    for n, delta in itertools.product([1, 5, 40, 200, 1000], [0.01, 0.05, 0.5]):
        assert BINOMIAL.radius(n, delta) <= HOEFFDING.radius(n, delta) + 1e-12


def test_binomial_backend__nonincreasing_in_eps():
    tails = [BINOMIAL.log_tail(200, eps) for eps in np.linspace(0, 1, 101)]
    assert all(a >= b for a, b in zip(tails, tails[1:]))


def test_binomial_backend__radius_meets_delta():
    for n, delta in itertools.product([1, 20, 200], [0.01, 0.05, 0.5]):
        radius = BINOMIAL.radius(n, delta)
        assert BINOMIAL.tail(n, radius) <= delta + 1e-9


def test_binomial_backend__single_sample():
    assert BINOMIAL.radius(1, 0.05) == pytest.approx(0.95, abs=1e-8)


@pytest.mark.parametrize("n", [0, 2.5])
def test_binomial_backend__invalid_input__should_raise(n):
    with pytest.raises(ValueError):
        BINOMIAL.log_tail(n, 0.1)


def test_binomial_backend__accepts_whole_real_sample_size():
    assert BINOMIAL.log_tail(200.0, 0.1) == BINOMIAL.log_tail(200, 0.1)
    assert BINOMIAL.radius(np.float64(200), 0.05) == BINOMIAL.radius(200, 0.05)


def test_binomial_backend__caches_are_bounded():
    for eps in np.linspace(0.001, 0.5, 50):
        BINOMIAL.log_tail(50, eps)
    assert _binomial_log_tail.cache_info().maxsize == CACHE_SIZE
    assert _binomial_radius.cache_info().maxsize == CACHE_SIZE
    assert _binomial_log_tail.cache_info().currsize <= CACHE_SIZE
