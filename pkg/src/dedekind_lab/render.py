"""Presentation helpers: exact rationals to decimal strings.

Everything upstream is exact; rounding only happens here.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational


def round_half_away(x: Fraction, places: int) -> Fraction:
    """Round ``x`` to ``places`` decimals, ties away from zero."""
    scale = 10**places
    y = abs(Fraction(x)) * scale
    q, r = divmod(y.numerator, y.denominator)
    if 2 * r >= y.denominator:
        q += 1
    out = Fraction(q, scale)
    return -out if x < 0 else out


def fixed(x, places: int = 4) -> str:
    """Fixed-point rendering. Fractions are rounded exactly, floats via Decimal."""
    if not isinstance(x, Rational):
        x = Fraction(Decimal(repr(float(x))))
    r = round_half_away(Fraction(x), places)
    sign = "-" if r < 0 else ""
    scaled = abs(r) * 10**places  # integral after rounding
    whole, frac = divmod(scaled.numerator, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def significant(x, digits: int = 7) -> str:
    """``digits`` significant figures with trailing zeros dropped (``%g`` style)."""
    if isinstance(x, Rational):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        with localcontext() as ctx:
            ctx.prec = 50
            x = Decimal(x.numerator) / Decimal(x.denominator)
    return format(float(x), f".{digits}g") if abs(float(x)) < 1e16 else str(x)


def terminating_places(x: Fraction) -> int | None:
    """Number of decimals in the exact expansion of ``x``, or None if it repeats."""
    d = Fraction(x).denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    return max(twos, fives) if d == 1 else None


def table_cell(x: Fraction | None, max_exact_places: int = 2, places: int = 1) -> str:
    """Bounds-table cell: integers as-is, short terminating decimals exactly,
    anything else rounded to ``places`` (e.g. 1439/4 -> 359.75, 179/9 -> 19.9)."""
    if x is None:
        return ""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    p = terminating_places(x)
    if p is not None and p <= max_exact_places:
        return fixed(x, p)
    return fixed(x, places)


def exact(x) -> str:
    """Lossless ``p/q`` (or ``p``) rendering; round-trips through ``Fraction(s)``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def matches_printed(value, printed: str) -> bool:
    """True when ``value`` agrees with a printed decimal to within one unit of its
    last printed digit. Accepts either truncated or rounded printing."""
    p = Fraction(Decimal(printed))
    places = len(printed.split(".")[1]) if "." in printed else 0
    v = value if isinstance(value, Rational) else Fraction(Decimal(repr(float(value))))
    return abs(Fraction(v) - p) < Fraction(1, 10**places)
