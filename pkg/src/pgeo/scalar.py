"""Exact rationals.

:class:`fractions.Fraction` already keeps a reduced, positive-denominator
representation over Python's unbounded ints, so ``Scalar`` is an alias and
this module adds the handful of helpers the geometry needs.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DivisionByZero

Scalar = Fraction

_TOKEN = re.compile(r"^[+-]?\d+(/\d+)?$")


def normalize(n: int, d: int) -> Fraction:
    if d == 0:
        raise DivisionByZero(f"zero denominator in {n}/{d}")
    return Fraction(n, d)


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"not an exact scalar: {x!r}")
    return Fraction(x)


def sign(x) -> int:
    x = as_scalar(x)
    return (x > 0) - (x < 0)


def pos_part(x) -> Fraction:
    """max(x, 0)."""
    x = as_scalar(x)
    return x if x > 0 else Fraction(0)


def neg_part(x) -> Fraction:
    """max(-x, 0)."""
    x = as_scalar(x)
    return -x if x < 0 else Fraction(0)


def parse_scalar(text: str) -> Fraction:
    """Parse ``n`` or ``n/d`` with an optional sign and no inner whitespace."""
    text = text.strip()
    if not _TOKEN.match(text):
        raise ValueError(f"malformed scalar {text!r}")
    if "/" in text:
        n, d = text.split("/")
        return normalize(int(n), int(d))
    return Fraction(int(text))


def format_scalar(x) -> str:
    x = as_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_sqrt(x) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = as_scalar(x)
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None
