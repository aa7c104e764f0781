import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind_lab import DomainError
from dedekind_lab.bounds import (
    PUBLISHED_TABLE_ROWS,
    bounds_report,
    d2,
    d2_closed_form,
    d2_refined,
    reciprocity_chain,
    s1_bound,
    square_pyramid,
)
from dedekind_lab.core import dedekind_sum, moment

pairs = st.integers(3, 300).flatmap(lambda a: st.tuples(st.just(a), st.integers(2, a - 1)))


def d2_oracle(a, b):
    """sum_j j^2 I(j) from a raw box count."""
    counts = [0] * b
    for m in range(a):
        counts[math.floor(m * b / a)] += 1
    return sum(j * j * (n - a // b) for j, n in enumerate(counts))


@given(pairs)
def test_bound_ordering(ab):
    a, b = ab
    r = bounds_report(a, b)
    assert r.flb1 <= r.flb2 <= r.exact <= r.fub
    assert r.exact == a * moment(a, b, 2)
    if math.gcd(a, b) == 1:
        assert r.rlb <= r.exact <= r.rub
    else:
        assert r.rlb is None and r.rub is None


@given(st.integers(1, 400), st.integers(2, 60))
def test_d2_matches_oracle_and_residue_class(a, b):
    v = d2(a, b)
    assert v.value == d2_oracle(a, b)
    assert v.value == d2(a + b, b).value == d2(a % b + 5 * b, b).value


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_d2_closed_forms(l):
    for b in range(l + 1, 201):
        assert d2_closed_form(l, b) == d2(l, b).value == d2(l + 3 * b, b).value


def test_d2_closed_form_domain():
    with pytest.raises(DomainError):
        d2_closed_form(6, 20)
    with pytest.raises(DomainError):
        d2_closed_form(4, 3)


@pytest.mark.parametrize("l, b, want", [
    (2, 9, 16),
    (3, 8, 5 * 4 + 4 * 2 + 1),
    (4, 10, 14 * 4 + 10 * 2 + 2),
    (5, 12, 30 * 4 + 14 * 2 + 2),
])
def test_refinement_examples(l, b, want):
    assert d2_refined(l, b) == (want, True)


@given(pairs)
def test_refinement_exact_or_lower(ab):
    a, b = ab
    value, exact = d2_refined(a, b)
    truth = d2(a, b).value
    assert value == truth if exact else value <= truth
    l = a % b
    if l >= 2:
        assert exact == (b % l <= 2)


def test_square_pyramid():
    assert [square_pyramid(n) for n in range(1, 6)] == [0, 1, 5, 14, 30]


@given(st.integers(1, 200))
def test_s1_bound_is_dedekind_sum(l):
    assert s1_bound(l) == dedekind_sum(1, l)
    assert all(abs(dedekind_sum(b, l)) <= s1_bound(l) for b in range(l) if math.gcd(b, l) == 1)


@given(pairs.filter(lambda p: math.gcd(*p) == 1 and p[0] % p[1] >= 1))
def test_reciprocity_chain(ab):
    a, b = ab
    assert reciprocity_chain(a, b) == dedekind_sum(b, a)


@pytest.mark.parametrize("a, b, exact, flb1, flb2, rlb, fub, rub", [
    (39, 7, 490, 469, 481, Fraction(973, 2), 497, 490),
    (35, 7, 455, 455, 455, None, 455, None),
    (6, 2, 3, 3, 3, None, 3, None),
])
def test_report_rows(a, b, exact, flb1, flb2, rlb, fub, rub):
    r = bounds_report(a, b)
    assert r.row() == (a, b, exact, flb1, flb2, rlb, fub, rub)
    assert r.m2_scale()["exact"] == Fraction(exact, a)


def test_flb2_note_when_only_a_lower_bound():
    assert "flb2" in bounds_report(14, 9).notes
    assert "flb2" in bounds_report(39, 7).notes
    assert "flb2" not in bounds_report(40, 7).notes


def test_table_rows_are_thirty():
    assert len(PUBLISHED_TABLE_ROWS) == 30 == len(set(PUBLISHED_TABLE_ROWS))
