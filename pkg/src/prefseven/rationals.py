"""Exact rational parsing and formatting shared across the package.

Every number that takes part in a verdict is a Fraction. Text forms accepted
everywhere: "3/20", "0.15", "15". Floats coming from JSON are interpreted via
their shortest decimal representation (str(x)), so a config written as 0.15
means exactly 3/20, not the binary double nearest to it.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def parse_rational(value) -> Fraction:
    """Coerce ints, rational-like objects, decimal/fraction strings, floats."""
    if isinstance(value, bool):
        raise ValueError(f"not a number: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty numeric string")
        return Fraction(text)
    raise ValueError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def number_json(value) -> dict:
    """The wire form used for every numeric field: exact string plus float."""
    value = Fraction(value)
    return {"exact": format_rational(value), "float": float(value)}


def vector_json(values) -> dict:
    vals = [Fraction(v) for v in values]
    return {"exact": [format_rational(v) for v in vals],
            "float": [float(v) for v in vals]}
