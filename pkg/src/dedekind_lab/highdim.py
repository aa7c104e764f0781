"""Moment upper bounds for S_d, the ratios R_3..R_5, and log-convexity of M_r.

A bound is a product over coordinates of ``M_r(a; b_i) ** e``. Each
coordinate's factors satisfy ``sum(r * e) == 1`` (degree-one homogeneity).
Comparisons against S_d raise both sides to the lcm of the exponent
denominators so no roots are ever taken.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Sequence

import mpmath
import numpy as np

from .core import generalized_sum, moment
from .errors import DomainError, InapplicableBoundError
from .frequency import freq1d_direct, freq2d_direct

Factors = tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class BoundRecipe:
    """Per-coordinate moment factors ``((order, exponent), ...)``."""

    name: str
    factors: tuple[Factors, ...]
    symmetric: bool = True

    def __post_init__(self):
        for i, fs in enumerate(self.factors):
            degree = sum(r * Fraction(e) for r, e in fs)
            if degree != 1:
                raise DomainError(f"{self.name}: coordinate {i} has degree {degree}, need 1")

    @property
    def d(self) -> int:
        return len(self.factors)

    def exponent_lcm(self) -> int:
        return math.lcm(*(Fraction(e).denominator for fs in self.factors for _, e in fs))


def _normalize(fs: dict) -> Factors:
    return tuple(sorted((r, Fraction(e)) for r, e in fs.items() if e))


@lru_cache(maxsize=None)
def _halving(n: int, p: int) -> dict:
    """Symmetric exponents bounding E[prod_{i<n} X_i^p] by repeated
    Cauchy-Schwarz, splitting n into floor(n/2) and ceil(n/2)."""
    if n == 1:
        return {p: Fraction(1)}
    return _split(n, n // 2, p)


def _split(n: int, k: int, p: int) -> dict:
    """First split n into k and n - k, halve each side, then average over which
    coordinates land in the k-block."""
    out = defaultdict(Fraction)
    for size, weight in ((k, Fraction(k, n)), (n - k, Fraction(n - k, n))):
        for r, e in _halving(size, 2 * p).items():
            out[r] += weight * e / 2
    return dict(out)


def symmetric_recipe(d: int) -> BoundRecipe:
    """Balanced split, symmetrized. Gives (M2 M4)^(1/6) for d = 3,
    M4^(1/4) for d = 4, (M4^3 M8)^(1/20) for d = 5, and so on."""
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    fs = _normalize(_halving(d, 1))
    return BoundRecipe(f"halving-{d}", (fs,) * d)


def split_recipe(d: int, k: int) -> BoundRecipe:
    """Split d into k and d - k first, then halve; symmetrized.

    ``split_recipe(5, 1)`` is the (M2 M8)^(1/10) bound.
    """
    if not 1 <= k < d:
        raise DomainError(f"need 1 <= k < d, got k={k}, d={d}")
    fs = _normalize(_split(d, k, 1))
    return BoundRecipe(f"split-{k}-{d - k}", (fs,) * d)


def chain3_recipe() -> BoundRecipe:
    """Unsymmetrized d = 3 bound: M2(b1)^(1/2) M4(b2)^(1/4) M4(b3)^(1/4)."""
    return BoundRecipe(
        "chain-3",
        (((2, Fraction(1, 2)),), ((4, Fraction(1, 4)),), ((4, Fraction(1, 4)),)),
        symmetric=False,
    )


def pow2_recipe(k: int) -> BoundRecipe:
    """d = 2^k: prod M_{2^k}^(1/2^k)."""
    d = 2**k
    return BoundRecipe(f"pow2-{d}", (((d, Fraction(1, d)),),) * d)


def three_pow2_recipe(k: int) -> BoundRecipe:
    """d = 3 * 2^k: prod (M_{2^(k+1)} M_{2^(k+2)})^(1/(6 * 2^k))."""
    d, e = 3 * 2**k, Fraction(1, 6 * 2**k)
    return BoundRecipe(f"three-pow2-{d}", (((2 ** (k + 1), e), (2 ** (k + 2), e)),) * d)


def five_pow2_recipe(k: int) -> BoundRecipe:
    """d = 5 * 2^k: prod (M_{2^(k+2)}^3 M_{2^(k+3)})^(1/(20 * 2^k))."""
    d, e = 5 * 2**k, Fraction(1, 20 * 2**k)
    return BoundRecipe(f"five-pow2-{d}", (((2 ** (k + 2), 3 * e), (2 ** (k + 3), e)),) * d)


def recipes_for(d: int) -> list[BoundRecipe]:
    """Every built-in recipe that applies to dimension d."""
    out = [symmetric_recipe(d)] if d >= 2 else []
    out += [split_recipe(d, k) for k in range(1, d // 2 + 1) if k != d // 2]
    if d == 3:
        out.append(chain3_recipe())
    for k in range(0, 8):
        if 2**k == d and k >= 1:
            out.append(pow2_recipe(k))
        if 3 * 2**k == d:
            out.append(three_pow2_recipe(k))
        if 5 * 2**k == d:
            out.append(five_pow2_recipe(k))
    return out


@dataclass(frozen=True)
class UpperBound:
    a: int
    b: tuple[int, ...]
    recipe: BoundRecipe
    terms: tuple[tuple[Fraction, Fraction], ...]  # (moment value, exponent)

    @property
    def log_value(self) -> mpmath.mpf:
        with mpmath.workdps(40):
            return mpmath.fsum(
                e.numerator * mpmath.log(mpmath.mpf(m.numerator) / m.denominator) / e.denominator
                for m, e in self.terms
            )

    @property
    def value(self) -> mpmath.mpf:
        with mpmath.workdps(40):
            return mpmath.exp(self.log_value)

    def __float__(self):
        return float(self.value)

    def powered(self) -> tuple[int, Fraction]:
        """``(L, bound ** L)`` with L the exponent lcm; bound ** L is rational."""
        L = self.recipe.exponent_lcm()
        out = Fraction(1)
        for m, e in self.terms:
            out *= m ** int(e * L)
        return L, out

    def dominates(self, s) -> bool:
        """Exact check of s <= bound (for s >= 0)."""
        s = Fraction(s)
        if s < 0:
            return True
        L, p = self.powered()
        return s**L <= p

    def compare(self, other: "UpperBound") -> int:
        """Sign of self - other, exactly."""
        L1, p1 = self.powered()
        L2, p2 = other.powered()
        L = math.lcm(L1, L2)
        x, y = p1 ** (L // L1), p2 ** (L // L2)
        return (x > y) - (x < y)


def upper_bound(a: int, b: Sequence[int], recipe: BoundRecipe) -> UpperBound:
    b = tuple(b)
    if len(b) != recipe.d:
        raise DomainError(f"recipe {recipe.name} is for d={recipe.d}, got {len(b)} values")
    terms = []
    for bi, fs in zip(b, recipe.factors):
        for r, e in fs:
            m = moment(a, bi, r)
            if not m:
                raise InapplicableBoundError(f"M_{r}({a}; {bi}) = 0")
            terms.append((m, e))
    return UpperBound(a, b, recipe, tuple(terms))


def ratio_d(a: int, b: Sequence[int], d: int | None = None) -> mpmath.mpf:
    """R_d = S_d / symmetric bound, for d = 3, 4, 5 (and beyond)."""
    b = tuple(b)
    d = len(b) if d is None else d
    if d != len(b):
        raise DomainError(f"d={d} but {len(b)} subdivision counts given")
    ub = upper_bound(a, b, symmetric_recipe(d))
    s = generalized_sum(a, b)
    with mpmath.workdps(40):
        return mpmath.mpf(s.numerator) / s.denominator / ub.value


def ratio_d_powered(a: int, b: Sequence[int]) -> Fraction:
    """R_d ** L as an exact rational, for ranking ratios without roots."""
    ub = upper_bound(a, b, symmetric_recipe(len(b)))
    L, p = ub.powered()
    return generalized_sum(a, b) ** L / p


@dataclass
class DominanceReport:
    a_max: int
    b_max: int
    dims: tuple[int, ...]
    checked: int = 0
    exact_checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.violations


def _tuples(recipe: BoundRecipe, b_values):
    if recipe.symmetric:
        return combinations_with_replacement(b_values, recipe.d)
    return product(b_values, repeat=recipe.d)


def dominance_sweep(a_max: int = 40, b_max: int = 20, dims=(3, 4, 5, 6),
                    chunk: int = 8192) -> DominanceReport:
    """S_d <= bound for every recipe in ``recipes_for(d)``, all 2 <= a <= a_max
    and all tuples with 2 <= b_i <= b_max.

    Symmetric recipes are permutation invariant, so multisets suffice. A float
    log screen clears the clear-cut cases; anything within 1e-12 of the bound
    (equality happens for two-valued distributions) is settled exactly.
    """
    rep = DominanceReport(a_max, b_max, tuple(dims))
    b_values = range(2, b_max + 1)
    recipes = [r for d in dims for r in recipes_for(d)]
    for a in range(2, a_max + 1):
        floors = np.array([[(m * b) // a for m in range(a)] for b in range(b_max + 1)], dtype=np.int64)
        logm = {}
        for recipe in recipes:
            weights = np.zeros((recipe.d, b_max + 1))
            for i, fs in enumerate(recipe.factors):
                for b in b_values:
                    for r, e in fs:
                        if (r, b) not in logm:
                            logm[r, b] = math.log(float(moment(a, b, r)))
                        weights[i, b] += float(e) * logm[r, b]
            it = iter(_tuples(recipe, b_values))
            while True:
                block = np.array(_take(it, chunk))
                if not len(block):
                    break
                s = floors[block].prod(axis=1).sum(axis=1)
                log_bound = weights[np.arange(recipe.d), block].sum(axis=1)
                with np.errstate(divide="ignore"):
                    log_s = np.log(s / a)
                rep.checked += len(block)
                for idx in np.nonzero(log_s > log_bound - 1e-12)[0]:
                    bs = tuple(int(x) for x in block[idx])
                    rep.exact_checks += 1
                    if not upper_bound(a, bs, recipe).dominates(generalized_sum(a, bs)):
                        rep.violations.append((a, bs, recipe.name))
    return rep


def _take(it, n):
    out = []
    for x in it:
        out.append(x)
        if len(out) == n:
            break
    return out


@dataclass
class DecompositionReport:
    a: int
    b: int
    c: int
    s2_direct: Fraction
    s2_iterated: Fraction
    conditional_means: dict
    diagonal: bool
    ratio: float | None

    @property
    def ok(self) -> bool:
        return self.s2_direct == self.s2_iterated and self.diagonal


def conditional_decomposition(a: int, b: int, c: int) -> DecompositionReport:
    """S_2 rebuilt as (1/a) sum_j j f(j) E[k | j] from the joint table."""
    if b < 1 or c < 1:
        raise DomainError("b, c must be >= 1")
    joint = freq2d_direct(a, b, c)
    fb = freq1d_direct(a, b).counts
    means = {}
    total = Fraction(0)
    for j, row in enumerate(joint.counts):
        if not fb[j]:
            continue
        means[j] = Fraction(sum(k * n for k, n in enumerate(row)), fb[j])
        total += j * fb[j] * means[j]
    s2 = total / a
    direct = generalized_sum(a, (b, c))
    # b = c: E[k | j] = j and S_2 collapses to M_2
    diag = generalized_sum(a, (b, b)) == moment(a, b, 2)
    if b == c:
        diag = diag and all(m == j for j, m in means.items())
    ratio = None
    mb, mc = moment(a, b, 2), moment(a, c, 2)
    if mb and mc:
        ratio = float(direct) / math.sqrt(float(mb * mc))
    return DecompositionReport(a, b, c, direct, s2, means, diag, ratio)


@dataclass
class LogConvexityReport:
    a: int
    b: int
    r_max: int
    degenerate: bool
    violations: list = field(default_factory=list)
    equalities: list = field(default_factory=list)
    liapounov_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.liapounov_violations


def is_degenerate(a: int, b: int) -> bool:
    """Fewer than two distinct nonzero values of floor(mb/a)."""
    vals = {(m * b) // a for m in range(a)} - {0}
    return len(vals) < 2


def log_convexity_check(a: int, b: int, r_max: int) -> LogConvexityReport:
    """M_2r M_{2r+2} > M_{2r+1}^2 for r = 1..r_max, plus the Liapounov chain
    M_1 < M_2^(1/2) < ... up to order 2 r_max + 2."""
    rep = LogConvexityReport(a, b, r_max, is_degenerate(a, b))
    if rep.degenerate:
        for r in range(1, r_max + 1):
            gap = moment(a, b, 2 * r) * moment(a, b, 2 * r + 2) - moment(a, b, 2 * r + 1) ** 2
            if gap == 0:
                rep.equalities.append(r)
            elif gap < 0:
                rep.violations.append(r)
        return rep
    for r in range(1, r_max + 1):
        gap = moment(a, b, 2 * r) * moment(a, b, 2 * r + 2) - moment(a, b, 2 * r + 1) ** 2
        if gap <= 0:
            rep.violations.append(r)
    # M_r^(1/r) < M_{r+1}^(1/(r+1))  <=>  M_r^(r+1) < M_{r+1}^r
    for r in range(1, 2 * r_max + 2):
        if not moment(a, b, r) ** (r + 1) < moment(a, b, r + 1) ** r:
            rep.liapounov_violations.append(r)
    return rep


# Published S_5 examples: (a, b-tuple)
S5_TABLE_ROWS = (
    (31, (3, 5, 7, 11, 13)),
    (21, (5, 7, 9, 11, 13)),
    (23, (5, 9, 11, 13, 17)),
    (27, (5, 11, 13, 17, 21)),
    (33, (7, 11, 13, 19, 23)),
)
