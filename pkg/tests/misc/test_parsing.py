import math
import typing

import numpy as np
import pytest

from wagbound.misc.Parser import (
    Count,
    NonNegativeInt,
    Positive,
    PositiveInt,
    Probability,
    Rate,
    SampleSize,
    SplitDivisor,
    auto_parse,
    parse_count,
    parse_int,
    parse_interval_list,
    parse_optional,
    parse_real,
)


@pytest.mark.parametrize(
    "Type,input,expected",
    [
        (str, "a", "a"),
        (int, 1, 1),
        (int, np.int64(3), 3),
        (float, 1, 1.0),
        (float, np.float32(0.5), 0.5),
        (typing.Optional[int], 1, 1),
        (typing.Optional[int], None, None),
        (typing.Literal["log", "linear"], "log", "log"),
        (typing.Optional[typing.Literal["a", "b"]], None, None),
        (PositiveInt, 5, 5),
        (NonNegativeInt, 0, 0),
        (Positive, 0.1, 0.1),
        (SampleSize, 1, 1.0),
        (SampleSize, 200.5, 200.5),
        (Probability, 0.05, 0.05),
        (Rate, 0, 0.0),
        (Rate, 1, 1.0),
        (SplitDivisor, 1.5, 1.5),
        (typing.Optional[Probability], None, None),
    ],
)
def test_auto_parse(Type, input, expected):
    @auto_parse
    def fn(value: Type):
        return value

    assert fn(input) == expected


@pytest.mark.parametrize(
    "Type,input",
    [
        (int, None),
        (int, "1"),
        (int, 1.0),
        (int, True),
        (float, "0.5"),
        (float, math.nan),
        (float, False),
        (typing.Literal["a", "b"], "c"),
        (typing.Union[int, str, float], 1),
        (PositiveInt, 0),
        (NonNegativeInt, -1),
        (Positive, 0.0),
        (SampleSize, 0.5),
        (SampleSize, math.inf),
        (Probability, 0),
        (Probability, 1),
        (Rate, 1.01),
        (Rate, -0.01),
        (SplitDivisor, 1),
        (SplitDivisor, math.inf),
        (typing.Optional[Probability], 2.0),
    ],
)
def test_auto_parse__invalid_input__should_raise(Type, input):
    @auto_parse
    def fn(value: Type):
        return value

    with pytest.raises(ValueError):
        fn(input)


@pytest.mark.parametrize(
    "Type,types,input,expected",
    [
        (int, dict(value=float), 1, 1.0),
        (int, dict(value="ignore"), "1", "1"),
        (Probability, dict(value=Rate), 1, 1.0),
    ],
)
def test_auto_parse__with_types(Type, types, input, expected):
    @auto_parse(types)
    def fn(value: Type):
        return value

    assert fn(input) == expected


@pytest.mark.parametrize("input", [1, "a", dict(a=1)])
def test_auto_parse__no_type_annotation(input):
    @auto_parse
    def fn(value):
        return value

    assert fn(input) == input


def test_auto_parse__keyword_arguments():
    @auto_parse
    def fn(n: PositiveInt, delta: Probability = 0.05):
        return n, delta

    assert fn(3, delta=0.5) == (3, 0.5)
    with pytest.raises(ValueError):
        fn(n=0)


def test_parse_int__returns_builtin_int():
    assert type(parse_int(np.int32(7))) is int


def test_parse_real__returns_builtin_float():
    assert type(parse_real(3)) is float


@pytest.mark.parametrize("value,expected", [(None, None), ("2", 2)])
def test_parse_optional(value, expected):
    assert parse_optional(value, int) == expected


@pytest.mark.parametrize(
    "value,expected",
    [
        ("", []),
        ("0.2:0.45", [(0.2, 0.45)]),
        ("0.2:0.45,0.6:0.85", [(0.2, 0.45), (0.6, 0.85)]),
        (" 0:1 , ", [(0.0, 1.0)]),
    ],
)
def test_parse_interval_list(value, expected):
    assert parse_interval_list(value) == expected


@pytest.mark.parametrize("value", ["0.2", "0.2:0.4:0.6", "a:b", "0.1-0.2"])
def test_parse_interval_list__invalid_input__should_raise(value):
    with pytest.raises(ValueError):
        parse_interval_list(value)


def test_parse_real__too_large__should_raise():
    with pytest.raises(ValueError):
        parse_real(10**400)


@pytest.mark.parametrize(
    "input,expected_type",
    [
        (200, int),
        (np.int64(200), int),
        (200.5, float),
        (np.float64(200.0), float),
    ],
)
def test_sample_size__keeps_integers(input, expected_type):
    @auto_parse
    def fn(value: SampleSize):
        return value

    assert type(fn(input)) is expected_type
    assert fn(input) == input


@pytest.mark.parametrize("value,expected", [(200, 200), (np.int32(7), 7), (200.0, 200), (np.float64(3.0), 3)])
def test_parse_count(value, expected):
    result = parse_count(value)
    assert result == expected
    assert type(result) is int


@pytest.mark.parametrize("value", [2.5, True, "3", math.nan, math.inf])
def test_parse_count__invalid_input__should_raise(value):
    with pytest.raises(ValueError):
        parse_count(value)


@pytest.mark.parametrize("value", [0, 0.0, -2])
def test_count__invalid_input__should_raise(value):
    @auto_parse
    def fn(n: Count):
        return n

    with pytest.raises(ValueError):
        fn(value)
