import numpy as np
import pandas as pd
import pytest

pytest.importorskip("sklearn")

from sklearn.base import clone  # noqa: E402
from sklearn.exceptions import NotFittedError  # noqa: E402

from wagbound.lab import Classifier  # noqa: E402
from wagbound.scikit import IntervalUnionClassifier  # noqa: E402


@pytest.fixture
def realizable():
    x = np.linspace(0.01, 0.99, 50)
    y = ((x >= 0.25) & (x < 0.5)).astype(int)
    return x, y


def test_interval_union_classifier(realizable):
    x, y = realizable
    model = IntervalUnionClassifier(grid=8, max_intervals=1).fit(x.reshape(-1, 1), y)
    assert model.classifier_ == Classifier((2, 4), 8)
    np.testing.assert_array_equal(model.classes_, [0, 1])
    np.testing.assert_array_equal(model.predict(x.reshape(-1, 1)), y)
    assert model.score(x.reshape(-1, 1), y) == 1.0


def test_interval_union_classifier__pandas_input(realizable):
    x, y = realizable
    X = pd.DataFrame({"x": x}, index=np.arange(100, 150))
    model = IntervalUnionClassifier(grid=8, max_intervals=1).fit(X, pd.Series(y, index=X.index))
    prediction = model.predict(X)
    assert isinstance(prediction, pd.Series)
    pd.testing.assert_index_equal(prediction.index, X.index)
    np.testing.assert_array_equal(prediction.to_numpy(), y)
    np.testing.assert_array_equal(model.predict(X["x"]).to_numpy(), y)


def test_interval_union_classifier__clone_keeps_parameters():
    model = clone(IntervalUnionClassifier(grid=16, max_intervals=3))
    assert model.get_params() == {"grid": 16, "max_intervals": 3}


def test_interval_union_classifier__not_fitted():
    with pytest.raises(NotFittedError):
        IntervalUnionClassifier().predict([[0.5]])


@pytest.mark.parametrize(
    "X,y",
    [
        pytest.param([[0.1], [0.5]], [0, 2], id="label"),
        pytest.param([[0.1, 0.2], [0.5, 0.6]], [0, 1], id="two-features"),
        pytest.param(pd.DataFrame({"a": [0.1, 0.5], "b": [0.2, 0.6]}), [0, 1], id="two-columns"),
        pytest.param([[0.1], [1.5]], [0, 1], id="outside-unit-interval"),
        pytest.param([[0.1], [0.5], [0.9]], [0, 1], id="length-mismatch"),
    ],
)
def test_interval_union_classifier__invalid_input__should_raise(X, y):
    with pytest.raises(ValueError):
        IntervalUnionClassifier().fit(X, y)
