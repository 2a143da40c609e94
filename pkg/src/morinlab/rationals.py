"""Exact rational coefficient type.

All computations in this package are exact vanishing/rank tests at the
origin, so the coefficient field must be the rationals with
arbitrary-precision integers.  gmpy2's mpq is used when available (it is
much faster than fractions.Fraction); the stdlib Fraction is a drop-in
fallback.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    QQ = Fraction

ZERO = QQ(0)
ONE = QQ(1)


def rat(num, den=1):
    """Build an exact rational from ints, strings like '3/2', or rationals."""
    if isinstance(num, str):
        return QQ(Fraction(num))
    if isinstance(num, float):
        raise TypeError("refusing float coefficient %r; pass an exact rational" % num)
    return QQ(num, den) if den != 1 else QQ(num)


def rat_str(q) -> str:
    """Canonical 'p' or 'p/q' rendering."""
    q = QQ(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def sign(q) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0
