"""Cauchy-Schwarz ratios R_2 and the cone of floor vectors.

R_2(a; b, c) is the cosine between ``v_b = (floor(mb/a))_{m=1}^{a-1}`` and
``v_c``. Ratios are carried as signed squares (``RatioValue``) so that every
comparison is an exact rational comparison; decimals are display only.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations

from .core import generalized_sum, moment
from .errors import DegenerateRatioError, DomainError
from .render import fixed


@dataclass(frozen=True)
class LatticeVector:
    a: int
    b: int
    entries: tuple[int, ...]

    def dot(self, other: "LatticeVector") -> int:
        return sum(x * y for x, y in zip(self.entries, other.entries))

    @property
    def norm_sq(self) -> int:
        return self.dot(self)


@functools.total_ordering
@dataclass(frozen=True)
class RatioValue:
    """Signed square ``num_sq / den_sq`` of a cosine (num_sq carries S's sign)."""

    num_sq: Fraction
    den_sq: Fraction

    @property
    def squared(self) -> Fraction:
        return self.num_sq / self.den_sq

    @property
    def approx(self) -> Decimal:
        sq = self.squared
        with localcontext() as ctx:
            ctx.prec = 40
            r = (Decimal(abs(sq.numerator)) / Decimal(sq.denominator)).sqrt()
        return -r if sq < 0 else r

    def __float__(self) -> float:
        return float(self.approx)

    def __eq__(self, other):
        if not isinstance(other, RatioValue):
            return NotImplemented
        return self.squared == other.squared

    def __hash__(self):
        return hash(self.squared)

    def __lt__(self, other):
        if not isinstance(other, RatioValue):
            return NotImplemented
        return self.squared < other.squared

    def display(self, places: int = 4) -> str:
        return fixed(Fraction(self.approx), places)

    @classmethod
    def from_cosine_square(cls, sq) -> "RatioValue":
        sq = Fraction(sq)
        return cls(sq, Fraction(1))


@functools.lru_cache(maxsize=65536)
def cone_vector(a: int, b: int) -> LatticeVector:
    if a < 2:
        raise DomainError(f"cone vectors need a >= 2, got {a}")
    if b < 0:
        raise DomainError(f"b must be >= 0, got {b}")
    return LatticeVector(a, b, tuple((m * b) // a for m in range(1, a)))


def ratio2(a: int, b1: int, b2: int) -> RatioValue:
    """R_2(a; b1, b2) = S_2 / sqrt(M_2(b1) M_2(b2)) as an exact signed square."""
    if a < 2:
        raise DomainError(f"ratio2 needs a >= 2, got {a}")
    m1, m2 = moment(a, b1, 2), moment(a, b2, 2)
    if not m1 or not m2:
        raise DegenerateRatioError(f"zero second moment in R_2({a}; {b1}, {b2})")
    s = generalized_sum(a, (b1, b2))
    return RatioValue(s * abs(s), m1 * m2)


def _ratio_from_vectors(x: LatticeVector, y: LatticeVector) -> RatioValue:
    d = x.dot(y)
    return RatioValue(Fraction(d * abs(d)), Fraction(x.norm_sq * y.norm_sq))


def cosine(a: int, b: int, c: int) -> RatioValue:
    """Cosine between v_b and v_c; the same value as ``ratio2`` via integer dots."""
    x, y = cone_vector(a, b), cone_vector(a, c)
    if not x.norm_sq or not y.norm_sq:
        raise DegenerateRatioError(f"zero cone vector in R_2({a}; {b}, {c})")
    return _ratio_from_vectors(x, y)


def ratio_norm(a: int) -> Decimal:
    """sqrt(6a) / (2 sqrt(floor(a/2) (2a^2 - 3a + 1))), the normalizer of the
    closed form for R_2(a; 2, a)."""
    h = a // 2
    with localcontext() as ctx:
        ctx.prec = 40
        return Decimal(6 * a).sqrt() / (2 * Decimal(h * (2 * a * a - 3 * a + 1)).sqrt())


def ratio2_closed_2a(a: int) -> RatioValue:
    """Closed form of R_2(a; 2, a) split by the parity of a."""
    if a < 3:
        raise DomainError(f"closed form needs a >= 3, got {a}")
    h = a // 2
    if a % 2:
        twice_s2 = a - 1 - Fraction(h * (1 + h), a)
    else:
        twice_s2 = a - 1 - Fraction(1, 2) * (Fraction(a, 2) - 1)
    # square of ratio_norm(a), kept rational
    norm_sq = Fraction(6 * a, 4 * h * (2 * a * a - 3 * a + 1))
    return RatioValue.from_cosine_square(twice_s2 * twice_s2 * norm_sq)


def limit_ratio(b: int) -> Decimal:
    """lim_{j -> oo} R_2(jb; b, jb) = sqrt(2)(b-1)(4b+1) / (4b sqrt((b-1)(2b-1)))."""
    if b < 2:
        raise DomainError(f"limit_ratio needs b >= 2, got {b}")
    with localcontext() as ctx:
        ctx.prec = 40
        return (
            Decimal(2).sqrt() * (b - 1) * (4 * b + 1)
            / (4 * b * Decimal((b - 1) * (2 * b - 1)).sqrt())
        )


def limit_ratio_squared(b: int) -> Fraction:
    return Fraction(2 * (b - 1) ** 2 * (4 * b + 1) ** 2, 16 * b * b * (b - 1) * (2 * b - 1))


def ratio2_jb_closed(b: int, j: int) -> RatioValue:
    """Finite-j closed form of R_2(jb; b, jb)."""
    num = (b - 1) * ((4 * b + 1) * j - 3)
    den_sq = 4 * (b - 1) * (2 * b - 1) * (j * b - 1) * (2 * j * b - 1)
    return RatioValue(Fraction(num * abs(num)), Fraction(den_sq))


@dataclass(frozen=True)
class MinRatio:
    a: int
    value: RatioValue
    witness: tuple[int, int]


def min_ratio_candidates(a: int):
    """Reduced candidate pairs: (l, a) and (l, l') with 1 < l < l' < a."""
    inner = range(2, a)
    yield from ((l, a) for l in inner)
    yield from combinations(inner, 2)


def min_ratio(a: int, exhaustive: int = 0) -> MinRatio:
    """min_{b, c >= 2} R_2(a; b, c) via the residue reduction.

    With ``exhaustive = K > 0`` every pair 2 <= b < c <= K a is scanned as well,
    and the smaller of the two minima is returned.
    """
    if a < 3:
        raise DomainError(f"min_ratio needs a >= 3, got {a}")
    vecs = {}

    def vec(b):
        if b not in vecs:
            vecs[b] = cone_vector(a, b)
        return vecs[b]

    pairs = list(min_ratio_candidates(a))
    if exhaustive:
        pairs += [p for p in combinations(range(2, exhaustive * a + 1), 2)]
    best = None
    for b, c in pairs:
        x, y = vec(b), vec(c)
        if not x.norm_sq or not y.norm_sq:
            continue
        r = _ratio_from_vectors(x, y)
        # ties keep the first (lexicographically smallest within each block)
        if best is None or r < best[0]:
            best = (r, (b, c))
    return MinRatio(a, best[0], best[1])


def gram_det3(x: LatticeVector, y: LatticeVector, z: LatticeVector) -> int:
    g = [[u.dot(v) for v in (x, y, z)] for u in (x, y, z)]
    return (
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    )


def a_closed_sq(a: int) -> Fraction:
    """Square of A(a) = R_2(a; 2, a) |v_a| by parity of a."""
    h = a // 2
    if a % 2 == 0:
        return Fraction(2 * a * (3 * a - 2) ** 2, 64)
    return Fraction(((a + h) * (a - 1 - h)) ** 2, 4 * h)


def _b_numerator(a: int) -> Fraction:
    t = a // 3
    if a % 3 == 1:
        return a * (a - 1) - Fraction(3, 2) * t - Fraction(5, 2) * t * t
    return a * (a - 1) - 1 - Fraction(7, 2) * t - Fraction(5, 2) * t * t


def b_closed_sq(a: int) -> Fraction:
    """Square of B(a) = R_2(a; 3, a) |v_a| by a mod 3.

    For a = 3t+1, 3t+2 the denominator is |v_3| = sqrt(5t), sqrt(5t+1).
    """
    t = a // 3
    if a % 3 == 0:
        return Fraction(15 * a * (13 * a - 9) ** 2, 8100)
    return _b_numerator(a) ** 2 / (5 * t + (a % 3 == 2))


def b_printed_sq(a: int) -> Fraction | None:
    """B(a)^2 with the denominators as originally printed, for comparison.

    Returns None when the printed radicand is not positive.
    """
    t = a // 3
    if a % 3 == 0:
        return b_closed_sq(a)
    if a % 3 == 1:
        rad = 4 * (a - 1 - Fraction(7, 2) * t)
    else:
        rad = Fraction(4 * a + 7 - 7 * t)
    return _b_numerator(a) ** 2 / rad if rad > 0 else None


def _direct_scaled_sq(a: int, l: int) -> Fraction:
    """(R_2(a; l, a) |v_a|)^2 = <v_l, v_a>^2 / |v_l|^2."""
    vl, va = cone_vector(a, l), cone_vector(a, a)
    return Fraction(vl.dot(va) ** 2, vl.norm_sq)


@dataclass
class LemmaReport:
    a_max: int
    passed: dict = field(default_factory=dict)
    counterexamples: dict = field(default_factory=dict)
    findings: dict = field(default_factory=dict)

    def ok(self) -> bool:
        return all(self.passed.values())


def lemma_independence(a: int) -> list:
    """Triples (l, l') for which v_a, v_l, v_l' fail to be independent."""
    va = cone_vector(a, a)
    bad = []
    for l, lp in combinations(range(2, a), 2):
        if gram_det3(va, cone_vector(a, l), cone_vector(a, lp)) == 0:
            bad.append((l, lp))
    return bad


def lemma_chain(a: int, kmax: int = 4) -> list:
    """(l, k1, k2) violating R(l, a) < R(l, k2 a + l) < R(l, k1 a + l)."""
    bad = []
    for l in range(2, a):
        base = cosine(a, l, a)
        vals = {k: cosine(a, l, k * a + l) for k in range(1, kmax + 1)}
        for k1, k2 in combinations(range(1, kmax + 1), 2):
            if not (base < vals[k2] < vals[k1]):
                bad.append((l, k1, k2))
    return bad


def two_vs_three(a: int, b: int) -> bool:
    """R_2(a; 2, b) < R_2(a; 3, b)."""
    return cosine(a, 2, b) < cosine(a, 3, b)


def partial_answer_holds(a: int, b: int, c: int) -> bool:
    """R_2(a; b, c) >= min of the three residue candidates.

    Residues 0 and 1 put v_b on the ray of v_a, so they are replaced by a.
    """
    l, lp = b % a, c % a
    l = a if l < 2 else l
    lp = a if lp < 2 else lp
    cands = [cosine(a, lp, a), cosine(a, l, a), cosine(a, lp, l)]
    return cosine(a, b, c) >= min(cands)


def verify_lemmas(a_max: int, b_sample: int = 3) -> LemmaReport:
    """Check the cone lemmas for every a up to ``a_max``.

    ``b_sample`` scales the (b, c) range used for the residue-reduction
    inequality and the 2-vs-3 comparisons: b, c <= b_sample * a.
    """
    if a_max < 4:
        raise DomainError(f"verify_lemmas needs a_max >= 4, got {a_max}")
    rep = LemmaReport(a_max)

    indep = {a: lemma_independence(a) for a in range(4, a_max + 1)}
    indep = {a: v for a, v in indep.items() if v}
    rep.passed["independence"] = not indep
    rep.counterexamples["independence"] = indep

    chain = {a: lemma_chain(a) for a in range(3, a_max + 1)}
    chain = {a: v for a, v in chain.items() if v}
    rep.passed["monotone_chain"] = not chain
    rep.counterexamples["monotone_chain"] = chain

    # 2-vs-3: a = 3, 5 for all b >= 3; a = 4 except b = 6, where it reverses
    bad23 = []
    for a in (3, 4, 5):
        for b in range(3, b_sample * a + 1):
            holds = two_vs_three(a, b)
            expected = not (a == 4 and b == 6)
            if holds != expected:
                bad23.append((a, b))
    rep.passed["two_vs_three_small_a"] = not bad23
    rep.counterexamples["two_vs_three_small_a"] = bad23
    rep.findings["a4_b6"] = (ratio2(4, 2, 6).display(), ratio2(4, 3, 6).display())
    # empirical only for a >= 6
    rep.findings["two_vs_three_a_ge_6_failures"] = [
        (a, b)
        for a in range(6, a_max + 1)
        for b in range(3, b_sample * a + 1)
        if not two_vs_three(a, b)
    ]

    ab_bad, closed_bad, printed_mismatch = [], [], []
    for a in range(4, a_max + 1):
        A, B = a_closed_sq(a), b_closed_sq(a)
        if A != _direct_scaled_sq(a, 2) or B != _direct_scaled_sq(a, 3):
            closed_bad.append(a)
        if not B > A:
            ab_bad.append(a)
        if b_printed_sq(a) != B:
            printed_mismatch.append(a)
    rep.passed["b_greater_than_a"] = not ab_bad
    rep.counterexamples["b_greater_than_a"] = ab_bad
    rep.passed["a_b_closed_forms"] = not closed_bad
    rep.counterexamples["a_b_closed_forms"] = closed_bad
    rep.findings["printed_b_form_mismatches"] = printed_mismatch

    pa_bad = []
    for a in range(3, a_max + 1):
        for b, c in combinations(range(2, b_sample * a + 1), 2):
            if not partial_answer_holds(a, b, c):
                pa_bad.append((a, b, c))
    rep.passed["residue_reduction"] = not pa_bad
    rep.counterexamples["residue_reduction"] = pa_bad
    return rep


@dataclass
class ShiftedReport:
    a: int
    b: int
    l: int
    i: int
    sum_identity: bool
    moment_identity: bool
    monotone: bool
    distances: list


def _weighted_floor_sum(a: int, b: int) -> int:
    """sum_{m=1}^{a-1} m floor(bm/a)."""
    return sum(m * ((b * m) // a) for m in range(1, a))


def shifted_sum_identities(a: int, b: int, l: int, i: int, i_max: int = 50) -> ShiftedReport:
    """Check the c = l + i a expansions of a S_2 and a M_2, and how
    R_2(a; b, l + i a) approaches R_2(a; b, a) for i = 1..i_max."""
    if not 0 <= l < a or i < 1:
        raise DomainError(f"need 0 <= l < a and i >= 1, got l={l}, i={i}")
    c = l + i * a
    lhs = a * generalized_sum(a, (b, c))
    rhs = i * _weighted_floor_sum(a, b) + (a * generalized_sum(a, (b, l)) if l else 0)
    m_lhs = a * moment(a, c, 2)
    m_rhs = (
        i * i * (a - 1) * a * (2 * a - 1) // 6
        + 2 * i * _weighted_floor_sum(a, l)
        + (a * moment(a, l, 2) if l else 0)
    )
    dist = []
    monotone = True
    if moment(a, b, 2):
        lim = ratio2(a, b, a).squared
        dist = [abs(ratio2(a, b, l + k * a).squared - lim) for k in range(1, i_max + 1)]
        monotone = all(x >= y for x, y in zip(dist, dist[1:]))
    return ShiftedReport(a, b, l, i, lhs == rhs, m_lhs == m_rhs, monotone, dist)
