"""Rational and label (de)serialization shared by every JSON surface.

Rationals travel as strings "p/q" in lowest terms with q > 0; plain
integers are emitted without the "/1".  Point labels are integers,
strings, or (nested) tuples of these; the extra point at infinity is a
dedicated singleton serialized as "inf".
"""

from __future__ import annotations

import json
from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction."""
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string, got {type(text).__name__}")
    return Fraction(text)


def format_rational(value) -> str:
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_vector(items) -> tuple:
    return tuple(parse_rational(t) for t in items)


def format_vector(vec) -> list:
    return [format_rational(v) for v in vec]


def format_matrix(rows) -> list:
    return [format_vector(r) for r in rows]


def parse_matrix(rows) -> tuple:
    return tuple(parse_vector(r) for r in rows)


def label_key(label):
    """Total order on heterogeneous labels, used for canonical point order.

    Integers sort before tuples before strings; the infinity sentinel
    sorts last.
    """
    from .model import INFINITY

    if label is INFINITY:
        return (3,)
    if isinstance(label, bool):
        raise ValueError("bool is not a valid point label")
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, tuple):
        return (1, tuple(label_key(x) for x in label))
    if isinstance(label, str):
        return (2, label)
    raise ValueError(f"unsupported label type: {type(label).__name__}")


def format_label(label) -> str:
    """Label as a JSON-object key."""
    from .model import INFINITY

    if label is INFINITY:
        return "inf"
    if isinstance(label, int):
        return str(label)
    if isinstance(label, tuple):
        return json.dumps(_label_jsonable(label))
    if isinstance(label, str):
        return json.dumps(label)
    raise ValueError(f"unsupported label type: {type(label).__name__}")


def _label_jsonable(label):
    from .model import INFINITY

    if label is INFINITY:
        return "inf"
    if isinstance(label, tuple):
        return [_label_jsonable(x) for x in label]
    return label


def label_to_json(label):
    """Label as a JSON value (tuples become lists)."""
    return _label_jsonable(label)


def label_from_json(value):
    from .model import INFINITY

    if value == "inf":
        return INFINITY
    if isinstance(value, list):
        return tuple(label_from_json(x) for x in value)
    if isinstance(value, (int, str)):
        return value
    raise ValueError(f"unsupported serialized label: {value!r}")


def parse_label(text: str):
    """Inverse of :func:`format_label`."""
    from .model import INFINITY

    if text == "inf":
        return INFINITY
    try:
        return int(text)
    except ValueError:
        pass
    return label_from_json(json.loads(text))
