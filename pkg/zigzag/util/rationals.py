"""Exact rationals and their ``"p/q"`` string form."""

import re
from fractions import Fraction

import sympy

from zigzag.errors import SerializationError

RATIONAL_REGEX = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def as_rational(value):
    """Coerce an int, ``sympy.Rational`` or ``"p/q"`` string into a ``sympy.Rational``."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, int):
        return sympy.Integer(value)
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    raise ValueError("`%s` is not an exact rational." % (value,))


def parse_rational(text):
    """Parse ``"p/q"`` or ``"p"``; the denominator must be nonzero."""
    m = RATIONAL_REGEX.match(text)
    if m is None:
        raise SerializationError("Malformed rational `%s`; expected \"p/q\"." % text)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise SerializationError("Zero denominator in `%s`." % text)
    return sympy.Rational(num, den)


def format_rational(r):
    """Lowest terms, positive denominator, always with a slash: ``"-1/3"``, ``"2/1"``."""
    r = sympy.Rational(r)
    return "%i/%i" % (r.p, r.q)


def parse_rational_list(text):
    """Comma separated rationals, e.g. ``"0,1,1/2"``. Order and duplicates are kept."""
    parts = [p for p in text.split(',') if p.strip()]
    if len(parts) == 0:
        raise SerializationError("Empty list of rationals.")
    return [parse_rational(p) for p in parts]


def order_key(r):
    """Sort key putting smaller absolute values first and, on ties, the positive value first."""
    return (abs(r), bool(r < 0))
