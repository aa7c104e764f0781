"""Sawtooth function, classical Dedekind sums, moments and generalized sums.

All values are exact ``Fraction`` instances. Floor sums run over
``m = 0 .. a-1``; the ``m = 0`` term is always zero but is kept.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class SumParams:
    """Cube side ``a`` and subdivision counts ``b = (b_1, ..., b_d)``."""

    a: int
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if self.a < 1:
            raise DomainError(f"a must be >= 1, got {self.a}")
        if not self.b:
            raise DomainError("need at least one subdivision count")
        if any(x < 1 for x in self.b):
            raise DomainError(f"every b_i must be >= 1, got {self.b}")

    @property
    def d(self) -> int:
        return len(self.b)


def sawtooth(x) -> Fraction:
    """((x)): fractional part minus 1/2, and 0 at integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dedekind_sum(a: int, b: int) -> Fraction:
    """s(a, b) = sum over k mod b of ((ka/b)) ((k/b)).

    Defined for any integer ``a``; only ``a mod b`` matters.
    """
    if b < 1:
        raise DomainError(f"dedekind_sum needs b >= 1, got b={b}")
    a %= b
    # ((ka/b))((k/b)) with k, ka reduced mod b; k = 0 contributes 0
    total = 0
    for k in range(1, b):
        r = (k * a) % b
        if r:
            total += (2 * r - b) * (2 * k - b)
    return Fraction(total, 4 * b * b)


def reciprocity_rhs(a: int, b: int) -> Fraction:
    """-1/4 + (a/b + 1/(ab) + b/a) / 12, the value of s(a,b) + s(b,a) for coprime a, b."""
    if a < 1 or b < 1:
        raise DomainError("reciprocity_rhs needs positive integers")
    if math.gcd(a, b) != 1:
        raise DomainError(f"reciprocity law needs gcd(a, b) = 1, got ({a}, {b})")
    return Fraction(-1, 4) + Fraction(a * a + 1 + b * b, 12 * a * b)


def floor_power_sum(a: int, b: int, k: int) -> int:
    """sum_{m=0}^{a-1} floor(mb/a)^k as an integer."""
    return sum(((m * b) // a) ** k for m in range(a))


@lru_cache(maxsize=65536)
def moment(a: int, b: int, k: int) -> Fraction:
    """M_k(a; b) = (1/a) sum_{m=0}^{a-1} floor(mb/a)^k."""
    if a < 1 or b < 1:
        raise DomainError(f"moment needs a, b >= 1, got ({a}, {b})")
    if k < 0:
        raise DomainError(f"moment order must be >= 0, got {k}")
    return Fraction(floor_power_sum(a, b, k), a)


def moment_via_m2_bridge(a: int, b: int) -> Fraction:
    """Second moment recovered from the classical sum s(b, a).

    Only valid for coprime ``a, b``; equals ``moment(a, b, 2)``.
    """
    if a < 1 or b < 1:
        raise DomainError("bridge needs positive integers")
    if math.gcd(a, b) != 1:
        raise DomainError(f"bridge formula needs gcd(a, b) = 1, got ({a}, {b})")
    return m2_from_dedekind(a, b, dedekind_sum(b, a))


def m2_from_dedekind(a: int, b: int, s_ba) -> Fraction:
    """Evaluate the M_2 bridge with an arbitrary stand-in for s(b, a).

    Used by the bounds module, which plugs in upper/lower estimates of s(b, a).
    """
    return (
        Fraction((b * b + 1) * (a - 1) * (2 * a - 1), 6 * a * a)
        - Fraction((a - 1) * b, 2 * a)
        - Fraction(2 * b, a) * Fraction(s_ba)
    )


def floor_product_sum(a: int, bs: Sequence[int]) -> int:
    """sum_{m=0}^{a-1} prod_i floor(m b_i / a)."""
    total = 0
    for m in range(a):
        p = 1
        for b in bs:
            p *= (m * b) // a
            if not p:
                break
        total += p
    return total


def generalized_sum(p: SumParams | int, b: Sequence[int] | None = None) -> Fraction:
    """S_d(a; b_1..b_d) = (1/a) sum_m prod_i floor(m b_i / a).

    Accepts either a ``SumParams`` or ``(a, b)`` positionally.
    """
    if not isinstance(p, SumParams):
        p = SumParams(p, tuple(b))
    return Fraction(floor_product_sum(p.a, p.b), p.a)
