"""Functions for parsing and validating input arguments."""

import functools
import inspect
import math
import numbers
import types
import typing

_T = typing.TypeVar("_T")
_R = typing.TypeVar("_R")


def auto_parse(types: typing.Dict[str, typing.Any] = {}):
    """Function decorator to perform automatic parsing of input arguments.

    Parameters
    ----------
    types : dict of types, optional
        The function's type annotations are used as defaults, which can be overridden by
        specifying a dictionary of argument names together with their types.

    Notes
    -----
    Annotations of the form ``Annotated[T, parser, ...]`` first parse the value as ``T``
    and then pass it through each parser in turn. This is how domain constraints such as
    "probability in (0, 1)" are attached to function signatures.

    """

    def decorator(fn):
        signature = inspect.signature(fn)
        keys = list(signature.parameters)
        hints = typing.get_type_hints(fn, include_extras=True)
        types_ = {k: hints.get(k, v.annotation) for k, v in signature.parameters.items()}
        types_.update(types)

        @functools.wraps(fn)
        def fn_with_auto_parse(*args, **kwargs):
            args = tuple(parse_type(v, types_[k]) for k, v in zip(keys, args))
            kwargs = {k: parse_type(v, types_[k]) for k, v in kwargs.items()}
            return fn(*args, **kwargs)

        return fn_with_auto_parse

    if callable(types):
        fn = types
        types = {}
        return decorator(fn)

    return decorator


def parse_type(value: typing.Any, Type: typing.Any) -> typing.Any:
    """Parses a value given a specific type.

    Parameters
    ----------
    value : Any
        The value to parse.
    Type : T
        The type used to decide how to parse the value.
        Types without a registered parser are passed through unchanged.

    Returns
    -------
    T
        The parsed value.

    Raises
    ------
    ValueError
        If the value cannot be parsed to the given type or violates a constraint.

    """
    if Type == "ignore" or Type is inspect.Parameter.empty:
        return value
    if Type is int:
        return parse_int(value)
    if Type is float:
        return parse_real(value)

    origin = typing.get_origin(Type)
    args = typing.get_args(Type)

    if origin is typing.Annotated:
        BaseType, *parsers = args
        value = parse_type(value, BaseType)
        for parser in parsers:
            value = parser(value)
        return value
    if origin in (typing.Union, types.UnionType):
        # Handle optional type
        try:
            ActualType, MaybeNoneType = args
        except ValueError:
            pass
        else:
            if MaybeNoneType is type(None):
                return parse_optional(value, lambda x: parse_type(x, ActualType))
        raise ValueError(f"Unable to parse value with multiple types '{Type}'")
    if origin is typing.Literal:
        if value in args:
            return value
        raise ValueError(f"Expected one of {args} but got '{value}'")

    return value


def parse_int(value: typing.Any) -> int:
    """Parses integer input values.

    Parameters
    ----------
    value : int
        The input value. Numpy integers are accepted, booleans and floats are not.

    Returns
    -------
    int
        The input value as a builtin int.

    Raises
    ------
    ValueError
        If the input is not explicitly of integer type.

    """
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ValueError(f"'{value}' is not of type int")
    return int(value)


def parse_real(value: typing.Any) -> float:
    """Parses real-valued input.

    Parameters
    ----------
    value : int or float
        The input value.

    Returns
    -------
    float
        The input value converted to float.

    Raises
    ------
    ValueError
        If the input is not a real number, is a boolean, is NaN or exceeds the
        float range.

    """
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ValueError(f"'{value}' is not a real number")
    try:
        value = float(value)
    except OverflowError:
        raise ValueError(f"'{value}' is too large to be represented as a float")
    if math.isnan(value):
        raise ValueError("Expected a real number but got NaN")
    return value


def parse_optional(value: _T, parser: typing.Callable[[_T], _R]):
    """Applies parsing only if input is not None.

    Parameters
    ----------
    value : T or None
        The input value to parse if not None.
    parser : callable, of type T -> R
        The parser to use if the input is not None.

    Returns
    -------
    R or None
        The result of applying the parser.

    """
    return None if value is None else parser(value)


def parse_positive(value):
    """Checks that a number is strictly positive."""
    if not value > 0:
        raise ValueError(f"Expected a positive value but got {value}")
    return value


def parse_nonnegative(value):
    """Checks that a number is zero or positive."""
    if not value >= 0:
        raise ValueError(f"Expected a non-negative value but got {value}")
    return value


def parse_count(value: typing.Any) -> int:
    """Parses a count given either as an integer or as an integral real, e.g. ``200.0``.

    Raises
    ------
    ValueError
        If the value is not a whole number.

    """
    if isinstance(value, numbers.Integral) and not isinstance(value, bool):
        return int(value)
    value = parse_real(value)
    if not value.is_integer():
        raise ValueError(f"'{value}' is not a whole number")
    return int(value)


def parse_sample_size(value: typing.Any) -> typing.Union[int, float]:
    """Checks that a (possibly real-valued) sample size is finite and at least one.

    Integers are kept as builtin ints, other reals are converted to float. Real
    values are accepted so that continuous forms such as ``v = n / a`` can be
    evaluated exactly.

    """
    if isinstance(value, numbers.Integral) and not isinstance(value, bool):
        value = int(value)
    else:
        value = parse_real(value)
    if not 1 <= value < math.inf:
        raise ValueError(f"Sample sizes must be finite and at least 1, got {value}")
    return value


def parse_probability(value: float) -> float:
    """Checks that a value lies in the open unit interval.

    Parameters
    ----------
    value : float
        The input value, typically a bound failure probability.

    Returns
    -------
    float
        The input value.

    Raises
    ------
    ValueError
        If the value is not strictly between 0 and 1.

    """
    if not 0 < value < 1:
        raise ValueError(f"Probabilities must lie in (0, 1), got {value}")
    return value


def parse_rate(value: float) -> float:
    """Checks that a value lies in the closed unit interval."""
    if not 0 <= value <= 1:
        raise ValueError(f"Rates must lie in [0, 1], got {value}")
    return value


def parse_split_divisor(value: float) -> float:
    """Checks that the split divisor `a` in ``v = n / a`` is finite and larger than one."""
    if not 1 < value < math.inf:
        raise ValueError(f"The split divisor must be larger than 1, got {value}")
    return value


PositiveInt = typing.Annotated[int, parse_positive]
NonNegativeInt = typing.Annotated[int, parse_nonnegative]
Positive = typing.Annotated[float, parse_positive]
NonNegative = typing.Annotated[float, parse_nonnegative]
Count = typing.Annotated[numbers.Real, parse_count, parse_positive]
SampleSize = typing.Annotated[numbers.Real, parse_sample_size]
Probability = typing.Annotated[float, parse_probability]
Rate = typing.Annotated[float, parse_rate]
SplitDivisor = typing.Annotated[float, parse_split_divisor]


def parse_interval_list(value: str) -> typing.List[typing.Tuple[float, float]]:
    """Parses a comma separated list of ``lo:hi`` pairs.

    Example "0.2:0.45,0.6:0.85" -> [(0.2, 0.45), (0.6, 0.85)]
            "" -> []

    Parameters
    ----------
    value : str
        The text to parse.

    Returns
    -------
    list, of type (float, float)
        The parsed pairs in the given order.

    Raises
    ------
    ValueError
        If an item is not of the form ``lo:hi`` with numeric end points.

    """
    pairs = []
    for item in filter(None, (s.strip() for s in value.split(","))):
        try:
            lo, hi = item.split(":")
            pairs.append((float(lo), float(hi)))
        except ValueError:
            raise ValueError(f"Expected 'lo:hi' but got '{item}'")
    return pairs
