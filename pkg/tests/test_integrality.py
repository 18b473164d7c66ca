import random
from fractions import Fraction
from math import factorial, gcd

import pytest

from ratio_lab.integrality import (
    RatioSpec,
    family_membership,
    is_integral,
    landau_min_max,
    norm_quarter_check,
    to_list,
    valuation_oracle,
)
from ratio_lab.lists import involute, make_list, norm

F = Fraction

CHEB = RatioSpec(numerator=(30, 1), denominator=(15, 10, 6))


def test_spec_validation():
    with pytest.raises(ValueError):
        RatioSpec(numerator=(2, 2), denominator=(1, 1, 2))  # shared entry
    with pytest.raises(ValueError):
        RatioSpec(numerator=(3,), denominator=(1,))  # sums differ
    with pytest.raises(ValueError):
        RatioSpec(numerator=(0, 3), denominator=(1, 2))


def test_to_list():
    a = to_list(CHEB)
    assert a == make_list([1, -6, -10, -15, 30])
    assert a.total == 0 and a.length == 5
    assert to_list(RatioSpec(numerator=(2,), denominator=(1, 1))) == make_list([-1, -1, 2])


def test_landau_chebyshev():
    assert landau_min_max(CHEB) == (0, 1)
    assert is_integral(CHEB)


def test_landau_non_example():
    bad = RatioSpec(numerator=(2, 3), denominator=(1, 4))
    lo, hi = landau_min_max(bad)
    assert lo == -1  # attained at x = 1/4
    assert not is_integral(bad)


def test_landau_binomial_family():
    # every K=1 spec ({a+b};{a,b}) is the binomial coefficient C((a+b)n, an)
    assert is_integral(RatioSpec(numerator=(3,), denominator=(1, 2)))
    assert is_integral(RatioSpec(numerator=(5,), denominator=(2, 3)))


def test_landau_reflection_and_range():
    rng = random.Random(2)
    specs = [CHEB, RatioSpec(numerator=(4, 6), denominator=(2, 3, 5))]
    for r in specs:
        lo, hi = landau_min_max(r)
        assert 0 <= lo and hi <= r.D
        # f(x) + f(-x) = D away from breakpoints
        from ratio_lab.integrality import _f_at

        for _ in range(25):
            x = F(rng.randint(1, 100), 101)
            assert _f_at(r, x) + _f_at(r, -x) == r.D


def test_norm_quarter_check():
    a = make_list([1, -6, -10, -15, 30])
    spec = norm_quarter_check(a)
    assert spec == CHEB
    assert norm_quarter_check(make_list([-1, -1, 2])) is not None
    assert norm_quarter_check(make_list([1, 2, -3])) is not None
    with pytest.raises(ValueError):
        norm_quarter_check(make_list([1, -3, 9, -27, 81]))  # sum not zero
    # an odd sum-zero list with norm > 1/4 is rejected, not an error
    b = make_list([1, 7, -2, -2, -4])
    assert b.total == 0 and b.length == 5
    assert norm(b) > F(1, 4)
    assert norm_quarter_check(b) is None


def test_quarter_norm_matches_landau_small():
    rng = random.Random(9)
    checked = 0
    while checked < 60:
        body = [rng.choice([-1, 1]) * rng.randint(1, 30) for _ in range(4)]
        last = -sum(body)
        if last == 0:
            continue
        a = make_list(body + [last])
        if a.length != 5 or a.total != 0 or not a.is_primitive():
            continue
        quarter = norm(a) == F(1, 4)
        pos = tuple(e for e in a.elements if e > 0)
        neg = tuple(-e for e in a.elements if e < 0)
        if len(pos) > len(neg):
            pos, neg = neg, pos
        if len(neg) != len(pos) + 1:
            assert not quarter
            checked += 1
            continue
        integral = is_integral(RatioSpec(numerator=pos, denominator=neg))
        assert integral == quarter
        checked += 1


def test_involution_closure_on_integral_lists():
    for raw in ([1, -6, -10, -15, 30], [2, -1, -1], [2, 9, -1, -4, -6]):
        a = make_list(raw)
        assert norm_quarter_check(a) is not None
        bar = involute(a)
        flipped = bar.negate()
        assert norm_quarter_check(bar) is not None or norm_quarter_check(flipped) is not None


def test_valuation_oracle_pass_and_fail():
    assert valuation_oracle(CHEB, n_max=60) is None
    bad = RatioSpec(numerator=(2, 3), denominator=(1, 4))
    hit = valuation_oracle(bad, n_max=10)
    assert hit is not None
    n, p = hit
    # confirm the reported violation with plain factorials
    num = factorial(2 * n) * factorial(3 * n)
    den = factorial(1 * n) * factorial(4 * n)
    assert num % den != 0


def test_valuation_oracle_smallest_failure_is_frozen():
    # 2!3!/(1!4!) = 1/2 already fails at n = 1
    bad = RatioSpec(numerator=(2, 3), denominator=(1, 4))
    first = next(
        n
        for n in range(1, 11)
        if (factorial(2 * n) * factorial(3 * n)) % (factorial(n) * factorial(4 * n))
    )
    assert first == 1
    assert valuation_oracle(bad, n_max=10)[0] == first


def test_valuation_oracle_on_families():
    rng = random.Random(4)
    for _ in range(10):
        a = rng.randint(1, 9)
        b = rng.randint(1, 9)
        if gcd(a, b) != 1:
            continue
        fam1 = RatioSpec(numerator=(a + b,), denominator=(a, b)) if a != b else None
        if fam1 and a + b not in (a, b):
            assert valuation_oracle(fam1, n_max=40) is None


def test_family_membership():
    assert family_membership(make_list([-1, -1, 2])) == "family1"
    assert family_membership(make_list([4, 6, -2, -3, -5])) == "family2"
    assert family_membership(make_list([6, 1, -3, -2, -2])) == "family3"
    assert family_membership(make_list([1, -6, -10, -15, 30])) == "sporadic"
