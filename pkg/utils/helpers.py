"""
Helper utility functions
"""

import json
import math
from fractions import Fraction
from typing import Any, Iterable, Sequence, Tuple, Union

from core.constants import (
    FLOAT_SIGNIFICANT_DIGITS,
    JSON_INDENT,
    MAX_PHASE_DENOMINATOR,
    PHASE_SNAP_TOLERANCE,
)

Number = Union[int, float, Fraction]


def parse_rational_literal(text: str) -> Fraction:
    """
    Parse an exact rational literal.

    Accepts integers, "p/q" fractions and decimal literals ("1.1718" is
    read as 11718/10000, not as the nearest binary float).

    Args:
        text: Literal text

    Returns:
        Fraction: Exact value

    Raises:
        ValueError: If the text is not a finite rational literal
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty literal")
    return Fraction(stripped)


def normalize_turns(turns: Fraction) -> Fraction:
    """
    Reduce a phase in turns to the interval [0, 1).

    Args:
        turns: Phase as a fraction of a full circle

    Returns:
        Fraction: Equivalent phase in [0, 1)
    """
    return Fraction(turns) % 1


def snap_turns(turns: float) -> Fraction:
    """
    Recover an exact rational phase from a float number of turns.

    Args:
        turns: Phase in turns

    Returns:
        Fraction: Nearest rational with denominator up to MAX_PHASE_DENOMINATOR, in [0, 1)

    Raises:
        ValueError: If no such rational lies within PHASE_SNAP_TOLERANCE
    """
    if not math.isfinite(turns):
        raise ValueError(f"phase {turns!r} is not finite")
    candidate = Fraction(turns).limit_denominator(MAX_PHASE_DENOMINATOR)
    if abs(float(candidate) - turns) > PHASE_SNAP_TOLERANCE:
        raise ValueError(f"phase {turns!r} is not close to a rational number of turns")
    return candidate % 1


def format_rational(value: Fraction) -> str:
    """
    Format a rational canonically as "p/q", or "p" for integers.

    Example:
        >>> format_rational(Fraction(2, 4))
        '1/2'
    """
    return str(Fraction(value))


def format_float(value: float) -> str:
    """Format a float with the fixed report precision"""
    return f"{value:.{FLOAT_SIGNIFICANT_DIGITS}g}"


def format_number(value: Number) -> str:
    """Format an exact rational as "p/q" and anything else as a fixed-precision float"""
    if isinstance(value, (int, Fraction)):
        return format_rational(Fraction(value))
    return format_float(float(value))


def format_phase(turns: Fraction) -> str:
    """
    Format a phase in turns using e^{2πi·r} notation.

    Args:
        turns: Phase in [0, 1)

    Returns:
        str: "1" for zero phase, "-1" for half a turn, otherwise "e^{2πi·p/q}"
    """
    turns = normalize_turns(turns)
    if turns == 0:
        return "1"
    if turns == Fraction(1, 2):
        return "-1"
    return f"e^(2πi·{format_rational(turns)})"


def parse_int_list(text: str, separator: str = ",") -> Tuple[int, ...]:
    """
    Parse a separated list of integers such as "3,3,3".

    Raises:
        ValueError: If an item is not an integer
    """
    items = [item.strip() for item in text.split(separator)]
    if not items or any(item == "" for item in items):
        raise ValueError(f"expected a {separator!r}-separated list of integers, got {text!r}")
    return tuple(int(item) for item in items)


def parse_factor_spec(text: str) -> Tuple[Tuple[Fraction, ...], ...]:
    """
    Parse explicit factor vectors written as "1,2;1,3;5,7".

    Vectors are separated by ';' and components by ','.

    Returns:
        tuple: One tuple of exact positive components per mode
    """
    vectors = []
    for chunk in text.split(";"):
        components = tuple(parse_rational_literal(item) for item in chunk.split(","))
        if any(component <= 0 for component in components):
            raise ValueError(f"factor components must be positive, got {chunk!r}")
        vectors.append(components)
    return tuple(vectors)


def product(values: Iterable[Number]) -> Number:
    """Product of a sequence of numbers (1 for an empty sequence)"""
    result: Number = 1
    for value in values:
        result *= value
    return result


def to_jsonable(value: Any) -> Any:
    """
    Convert report values to JSON-compatible primitives.

    Fractions become canonical "p/q" strings, floats are rounded to the
    report precision so that identical inputs give byte-identical output,
    tuples become lists and enum members their values.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return format_float(value)
        return float(format_float(value))
    if hasattr(value, "value") and hasattr(value, "name"):
        return to_jsonable(value.value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if hasattr(value, "item"):
        return to_jsonable(value.item())
    raise TypeError(f"Cannot serialize {type(value).__name__} to JSON")


def canonical_json(document: Any) -> str:
    """
    Render a document as stable, key-sorted JSON.

    Example:
        >>> canonical_json({"b": 1, "a": Fraction(1, 3)})
        '{\\n  "a": "1/3",\\n  "b": 1\\n}'
    """
    return json.dumps(to_jsonable(document), sort_keys=True, indent=JSON_INDENT, ensure_ascii=False)


def format_index(index: Sequence[int]) -> str:
    """Format a 1-based multi-index as "(1,2,3)" """
    return "(" + ",".join(str(i) for i in index) + ")"
