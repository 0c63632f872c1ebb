#!/usr/bin/env python3
"""
Exact rational coefficients.

All coefficients are elements of sympy's rational field QQ; this module
converts to and from it and renders values the way every output format
expects them (integers bare, fractions as p/q).
"""

import re
from typing import Any, Union

from sympy.polys.domains import QQ

from .errors import NotationError

Rational = Any  # an element of QQ

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def qq(value: Union[int, str, Rational], denominator: int = 1) -> Rational:
    """Coerce an int, a 'p/q' string or a QQ element into QQ"""
    if isinstance(value, str):
        return parse_rational(value)
    if denominator != 1:
        return QQ(value, denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def parse_rational(text: str) -> Rational:
    match = _RATIONAL.match(text)
    if not match:
        raise NotationError("not a rational number", text, 0, "an integer or p/q")
    numerator = int(match.group(1))
    denominator = int(match.group(2) or 1)
    if denominator == 0:
        raise NotationError("zero denominator", text, text.index("/"), "a nonzero denominator")
    return QQ(numerator, denominator)


def format_rational(value: Rational) -> str:
    value = qq(value)
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def is_integral(value: Rational) -> bool:
    return int(qq(value).denominator) == 1

