import numpy as np
import pandas as pd
import pytest

from wagbound.lab import (
    DEFAULT_TRUTH,
    LabeledSample,
    SyntheticTaskSpec,
    default_task,
    generate_task,
    generate_unlabeled,
    samples_to_frame,
)


def test_default_task():
    spec = default_task(n_train=500, seed=3)
    assert spec.truth_intervals == DEFAULT_TRUTH
    assert (spec.noise_eta, spec.n_train, spec.n_test, spec.seed) == (0.1, 500, 10000, 3)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(noise_eta=0.5),
        dict(noise_eta=-0.1),
        dict(truth_intervals=((0.5, 0.4),)),
        dict(truth_intervals=((0.2, 0.6), (0.5, 0.8))),
        dict(truth_intervals=((0.5, 1.5),)),
        dict(n_train=0),
        dict(n_test=0),
        dict(seed=-1),
        dict(seed=2**64),
        dict(seed=1.5),
    ],
)
def test_synthetic_task_spec__invalid_input__should_raise(kwargs):
    with pytest.raises(ValueError):
        SyntheticTaskSpec(**kwargs)


def test_synthetic_task_spec__label():
    spec = SyntheticTaskSpec(truth_intervals=((0.2, 0.45), (0.6, 0.85)))
    x = np.array([0.1, 0.2, 0.3, 0.45, 0.5, 0.7, 0.85, 0.95])
    np.testing.assert_array_equal(spec.label(x), [0, 1, 1, 1, 0, 1, 1, 0])


def test_generate_task__noiseless_labels_match_truth():
    spec = SyntheticTaskSpec(truth_intervals=((0.5, 1.0),), noise_eta=0, n_train=1000, n_test=1000, seed=11)
    train, test = generate_task(spec)
    for frame in (train, test):
        np.testing.assert_array_equal(frame["y"].to_numpy(), (frame["x"] >= 0.5).astype(int).to_numpy())


def test_generate_task__shapes_and_ranges():
    train, test = generate_task(default_task(n_train=300, seed=5))
    assert list(train.columns) == ["x", "y"]
    assert (len(train), len(test)) == (300, 10000)
    assert train["x"].between(0, 1).all() and test["x"].between(0, 1).all()
    assert set(np.unique(train["y"])) <= {0, 1}
    assert test.index.equals(pd.RangeIndex(10000))


def test_generate_task__deterministic():
    spec = default_task(n_train=50, seed=123)
    for first, second in zip(generate_task(spec), generate_task(spec)):
        pd.testing.assert_frame_equal(first, second)


def test_generate_task__seed_changes_draw():
    first, _ = generate_task(default_task(n_train=50, seed=1))
    second, _ = generate_task(default_task(n_train=50, seed=2))
    assert not np.array_equal(first["x"].to_numpy(), second["x"].to_numpy())


def test_generate_task__flip_rate():
    eta = 0.3
    spec = SyntheticTaskSpec(noise_eta=eta, n_train=100000, n_test=1, seed=2024)
    train, _ = generate_task(spec)
    flips = (train["y"].to_numpy() != spec.label(train["x"].to_numpy())).mean()
    assert abs(flips - eta) <= 4 * np.sqrt(eta * (1 - eta) / len(train))


def test_with_seed():
    spec = default_task(seed=1)
    assert spec.with_seed(9) == default_task(seed=9)


def test_generate_unlabeled():
    spec = default_task(n_train=100, seed=4)
    inputs = generate_unlabeled(spec, 1000)
    assert inputs.shape == (1000,)
    assert ((inputs >= 0) & (inputs < 1)).all()
    np.testing.assert_array_equal(inputs, generate_unlabeled(spec, 1000))
    train, _ = generate_task(spec)
    assert not np.array_equal(inputs[:100], train["x"].to_numpy())


@pytest.mark.parametrize("t", [0, -5, 2.5])
def test_generate_unlabeled__invalid_input__should_raise(t):
    with pytest.raises(ValueError):
        generate_unlabeled(default_task(), t)


def test_samples_to_frame():
    frame = samples_to_frame([LabeledSample(0.25, 1), (0.75, 0)])
    expected = pd.DataFrame({"x": [0.25, 0.75], "y": np.array([1, 0], dtype=np.int64)})
    pd.testing.assert_frame_equal(frame, expected)


def test_samples_to_frame__empty():
    frame = samples_to_frame([])
    assert list(frame.columns) == ["x", "y"]
    assert frame.empty
