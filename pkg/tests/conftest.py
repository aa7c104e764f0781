import math
from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def saw(x: Fraction) -> Fraction:
    """((x)) straight from floor(), independent of the library."""
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dedekind_oracle(a: int, b: int) -> Fraction:
    return sum((saw(Fraction(k * a, b)) * saw(Fraction(k, b)) for k in range(b)), Fraction(0))


def moment_oracle(a: int, b: int, k: int) -> Fraction:
    return Fraction(sum(math.floor(Fraction(m * b, a)) ** k for m in range(a)), a)


def mixed_oracle(a: int, bs) -> Fraction:
    return Fraction(sum(math.prod(math.floor(Fraction(m * b, a)) for b in bs) for m in range(a)), a)


@pytest.fixture
def oracles():
    return {"saw": saw, "s": dedekind_oracle, "M": moment_oracle, "S": mixed_oracle}
