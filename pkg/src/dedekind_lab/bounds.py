"""Residual moment D_2 and lower/upper bounds for a * M_2(a; b).

All bounds live at the ``a * M_2`` scale (integers whenever exact) so rows line
up with the published comparison table; ``BoundsReport.m2_scale`` divides by a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import dedekind_sum, floor_power_sum, m2_from_dedekind, reciprocity_rhs
from .errors import DomainError
from .frequency import indicator


def square_pyramid(n: int) -> int:
    """sum_{j=1}^{n-1} j^2 = (n-1) n (2n-1) / 6."""
    return (n - 1) * n * (2 * n - 1) // 6


@dataclass(frozen=True)
class ResidualMoment:
    a: int
    b: int
    l: int
    value: int


def d2(a: int, b: int) -> ResidualMoment:
    """D_2(a; b) = sum_j j^2 I(j), cross-checked against sum_{m<l} floor(mb/l)^2."""
    if b < 2:
        raise DomainError(f"d2 needs b >= 2, got {b}")
    l = a % b
    bits = indicator(a, b).bits
    via_indicator = sum(j * j * bit for j, bit in enumerate(bits))
    via_residue = floor_power_sum(l, b, 2) if l >= 2 else 0
    if via_indicator != via_residue:
        raise ArithmeticError(
            f"D_2 mismatch at a={a}, b={b}: {via_indicator} vs {via_residue}"
        )
    return ResidualMoment(a, b, l, via_indicator)


# (coefficient of q^2, coefficient of q, constant) by b mod l, with q = b // l
_D2_TABLE = {
    2: {0: (1, 0, 0), 1: (1, 0, 0)},
    3: {0: (5, 0, 0), 1: (5, 0, 0), 2: (5, 4, 1)},
    4: {0: (14, 0, 0), 1: (14, 0, 0), 2: (14, 10, 2), 3: (14, 16, 5)},
    5: {0: (30, 0, 0), 1: (30, 0, 0), 2: (30, 14, 2), 3: (30, 26, 6), 4: (30, 40, 14)},
}


def d2_closed_form(l: int, b: int) -> int:
    """Closed-form D_2 for residues l = 2..5 (l = a mod b, so b > l)."""
    if l not in _D2_TABLE:
        raise DomainError(f"closed form only tabulated for l in 2..5, got {l}; use d2()")
    if b <= l:
        raise DomainError(f"need b > l, got b={b}, l={l}")
    q = b // l
    x, y, z = _D2_TABLE[l][b % l]
    return x * q * q + y * q + z


def d2_refined(a: int, b: int) -> tuple[int, bool]:
    """One-step refinement of D_2 through k = b mod l.

    Returns ``(value, exact)``. Exact for k in {0, 1, 2}; for k >= 3 the k = 2
    expression is returned as a lower bound.
    """
    if b < 2:
        raise DomainError(f"d2_refined needs b >= 2, got {b}")
    l = a % b
    if l < 2:
        return 0, True
    q, k = divmod(b, l)
    base = q * q * square_pyramid(l)
    if k <= 1:
        return base, True
    h = l // 2
    if l % 2 == 0:
        extra = Fraction(q) * ((l - 1) * l - Fraction(l * (l - 2), 4)) + Fraction(l, 2)
    else:
        # q multiplies the whole bracket; this matches 4q + 1 and 14q + 2 for l = 3, 5
        extra = q * ((l - 1) * l - h * (1 + h)) + h
    extra = Fraction(extra)
    assert extra.denominator == 1
    return base + int(extra), k == 2


def s1_bound(l: int) -> Fraction:
    """s(1, l) = l/12 - 1/4 + 1/(6l), which bounds |s(b, l)|."""
    return Fraction(l, 12) - Fraction(1, 4) + Fraction(1, 6 * l)


BOUND_NAMES = ("flb1", "flb2", "rlb", "fub", "rub")


@dataclass(frozen=True)
class BoundsReport:
    a: int
    b: int
    l: int
    exact: Fraction
    flb1: Fraction
    flb2: Fraction
    fub: Fraction
    rlb: Fraction | None = None
    rub: Fraction | None = None
    notes: dict = field(default_factory=dict)

    def m2_scale(self) -> dict:
        """Same quantities divided by a, i.e. bounds on M_2 itself."""
        out = {"exact": self.exact / self.a}
        for name in BOUND_NAMES:
            v = getattr(self, name)
            out[name] = None if v is None else v / self.a
        return out

    def row(self) -> tuple:
        return (self.a, self.b, self.exact, self.flb1, self.flb2, self.rlb, self.fub, self.rub)


def bounds_report(a: int, b: int) -> BoundsReport:
    if b < 2 or a < 1:
        raise DomainError(f"bounds need a >= 1, b >= 2, got ({a}, {b})")
    q, l = divmod(a, b)
    exact = Fraction(floor_power_sum(a, b, 2))
    base = q * square_pyramid(b)
    notes = {}
    if l >= 2:
        flb1 = base + (b // l) ** 2 * square_pyramid(l)
        fub = base + (b * b * (l - 1) * (2 * l - 1)) // (6 * l)
    else:
        flb1 = fub = base
    refined, refined_exact = d2_refined(a, b)
    flb2 = base + refined
    if not refined_exact:
        notes["flb2"] = f"lower bound only (b mod l = {b % l} >= 3)"
    rlb = rub = None
    if math.gcd(a, b) != 1:
        notes["rlb"] = notes["rub"] = "needs gcd(a, b) = 1"
    else:
        # l >= 1 here; l = 1 makes both sides exact since s(b, 1) = s(1, 1) = 0
        centre = reciprocity_rhs(a, b) - reciprocity_rhs(b, l)
        rlb = a * m2_from_dedekind(a, b, centre + s1_bound(l))
        rub = a * m2_from_dedekind(a, b, centre - s1_bound(l))
    return BoundsReport(
        a, b, l, exact, Fraction(flb1), Fraction(flb2), Fraction(fub), rlb, rub, notes
    )


def reciprocity_chain(a: int, b: int) -> Fraction:
    """s(b, a) rebuilt as R(a, b) - R(b, l) + s(b, l); equals dedekind_sum(b, a)."""
    l = a % b
    if math.gcd(a, b) != 1 or not 1 <= l < b:
        raise DomainError(f"chain needs coprime (a, b) with 1 <= a mod b, got ({a}, {b})")
    return reciprocity_rhs(a, b) - reciprocity_rhs(b, l) + dedekind_sum(b, l)


# (a, b) inputs of the published comparison table, in printed order
PUBLISHED_TABLE_ROWS = (
    (5, 2), (5, 3), (5, 4), (6, 2), (6, 3), (6, 4), (6, 5), (7, 2), (7, 3), (7, 4),
    (7, 5), (7, 6), (35, 7), (39, 7), (40, 7), (41, 7), (10, 3), (11, 3), (21, 6),
    (20, 6), (11, 7), (10, 9), (11, 9), (12, 9), (13, 9), (14, 9), (15, 9), (16, 9),
    (17, 9), (24, 10),
)
