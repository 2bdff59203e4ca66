"""Rational number backend.

Every quantity in this package is an exact rational; there is no floating
point anywhere.  The arithmetic kernel is selected once at import time:

* ``gmpy2.mpq`` (a C extension) when gmpy2 is installed, or
* ``fractions.Fraction`` from the standard library otherwise.

Both expose ``.numerator`` / ``.denominator`` and identical comparison,
hashing and string semantics, so the two backends are interchangeable and
produce byte-identical reports.  Set ``WPROJ_PURE_PYTHON=1`` to force the
pure-Python backend (used by the benchmark in ``benchmarks/``).
"""

from __future__ import annotations

import os
from fractions import Fraction

if os.environ.get("WPROJ_PURE_PYTHON"):
    _mpq = None
else:
    try:
        from gmpy2 import mpq as _mpq
    except ImportError:  # pragma: no cover - depends on environment
        _mpq = None

if _mpq is not None:
    RAT = _mpq
    BACKEND = "gmpy2"
else:
    RAT = Fraction
    BACKEND = "fractions"

ZERO = RAT(0)
ONE = RAT(1)


def rat(num, den=1):
    """Exact rational num/den in the active backend."""
    return RAT(num, den)


def to_rat(value):
    """Coerce an int, Fraction or backend rational into the active backend."""
    if isinstance(value, RAT):
        return value
    if isinstance(value, int):
        return RAT(value)
    return RAT(value.numerator, value.denominator)


def parse_rat(text: str):
    """Parse 'p/q' or 'p' into a rational.  Inverse of :func:`fmt_rat`."""
    num, sep, den = text.partition("/")
    if sep:
        return RAT(int(num), int(den))
    return RAT(int(num))


def fmt_rat(value) -> str:
    """Render a rational as 'p' or 'p/q' (q > 1), identically on both backends."""
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    return "%s/%s" % (num, den)


def ceil_rat(value) -> int:
    """Ceiling of a rational as a plain int."""
    return -((-value.numerator) // value.denominator)


def floor_rat(value) -> int:
    return value.numerator // value.denominator


def is_integer(value) -> bool:
    return value.denominator == 1
