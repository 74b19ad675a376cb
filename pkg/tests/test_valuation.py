from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from squareprod import (
    DomainError,
    Prime,
    asymptotic_ratio,
    compute_term,
    digit_sum,
    legendre_factorial_valuation,
    op_count,
    reset_op_count,
    valuation_closed_form,
    valuation_oracle,
    vp_int,
)

FIRST_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

small_primes = st.sampled_from(FIRST_PRIMES)


def floor_sum_valuation(m, p):
    # independent route to the factorial exponent: sum of floor(m / p^i)
    total = 0
    power = p
    while power <= m:
        total += m // power
        power *= p
    return total


def test_prime_certification():
    assert Prime(2).p == 2
    assert Prime(1000003).p == 1000003
    for bad in (0, 1, 4, 9, 1000001):
        with pytest.raises(DomainError):
            Prime(bad)
    with pytest.raises(DomainError):
        Prime(1 << 64)  # limit of the deterministic witness set


def test_vp_int_examples():
    assert vp_int(1, 2) == 0
    assert vp_int(8640, 2) == 6    # 8640 = 2^6 * 135
    assert vp_int(4900, 7) == 2
    assert vp_int(4900, 11) == 0
    with pytest.raises(DomainError):
        vp_int(0, 2)


@given(st.integers(min_value=0, max_value=40),
       st.integers(min_value=1, max_value=10 ** 9),
       small_primes)
def test_vp_int_roundtrip(e, m, p):
    while m % p == 0:
        m //= p
    assert vp_int(m * p ** e, p) == e


def test_digit_sum_examples():
    assert digit_sum(0, 5) == 0
    assert digit_sum(10, 3) == 2    # 10 = 101 base 3
    assert digit_sum(255, 2) == 8
    assert digit_sum(255, 257) == 255


@given(st.integers(min_value=0, max_value=10 ** 30),
       st.integers(min_value=0, max_value=10 ** 30),
       small_primes)
def test_digit_sum_subadditive(a, b, p):
    assert digit_sum(a + b, p) <= digit_sum(a, p) + digit_sum(b, p)


def test_legendre_examples():
    assert legendre_factorial_valuation(0, 7) == 0
    assert legendre_factorial_valuation(10, 2) == 8   # 5 + 2 + 1
    assert legendre_factorial_valuation(9, 3) == 4    # 3 + 1


def test_legendre_matches_floor_sum_and_factorials():
    for p in FIRST_PRIMES:
        for m in range(0, 1001):
            assert legendre_factorial_valuation(m, p) == floor_sum_valuation(m, p)
    fact = 1
    for m in range(1, 151):
        fact *= m
        for p in (2, 3, 7):
            assert legendre_factorial_valuation(m, p) == vp_int(fact, p)


def test_closed_form_examples():
    b = valuation_closed_form(5, 2)
    assert b.total == 6
    assert [v for _, v in b.summands] == [8, -2, 0]
    assert b.family == "p2-odd-n"

    b = valuation_closed_form(4, 2)
    assert b.total == 3
    assert [v for _, v in b.summands] == [4, -2, 1]
    assert b.family == "p2-even-n"

    assert valuation_closed_form(4, 3).total == 2
    assert valuation_closed_form(6, 5).total == 2
    assert valuation_closed_form(3, 1000003).total == 0

    with pytest.raises(DomainError):
        valuation_closed_form(1, 2)
    with pytest.raises(DomainError):
        valuation_closed_form(10, 6)  # composite modulus refused


def test_closed_form_total_is_sum_of_summands():
    for n in range(2, 60):
        for p in (2, 3, 5, 7):
            b = valuation_closed_form(n, p)
            assert b.total == sum(v for _, v in b.summands)
            assert b.total >= 0


def test_oracle_examples():
    assert valuation_oracle(2, 2) == 0   # term is 3
    assert valuation_oracle(8, 2) == 10  # 914457600 = (2^5 * 945)^2
    assert valuation_oracle(5, 3) == 3
    with pytest.raises(DomainError):
        valuation_oracle(1, 2)


def test_closed_form_matches_oracle_small_grid():
    for p in FIRST_PRIMES:
        prime = Prime(p)
        for n in range(2, 400):
            assert valuation_closed_form(n, prime).total == valuation_oracle(n, prime)


@given(st.integers(min_value=2, max_value=3000), small_primes)
@settings(max_examples=200, deadline=None)
def test_closed_form_matches_oracle_random(n, p):
    assert valuation_closed_form(n, p).total == valuation_oracle(n, p)


def test_closed_form_matches_materialized_terms():
    for n in range(2, 121):
        value = compute_term(n).value
        for p in (2, 3, 5, 7, 11):
            assert valuation_closed_form(n, p).total == vp_int(value, p)


def test_odd_prime_fraction_is_exact():
    # (p-1) always divides n-1 minus the digit sum of n-1
    for p in (3, 5, 7, 11, 13):
        for n in range(2, 500):
            assert (n - 1 - digit_sum(n - 1, p)) % (p - 1) == 0


def test_ratio_examples():
    r = asymptotic_ratio(1025, 2)
    assert r.valuation == 2046
    assert r.ratio == Fraction(1023, 1025)

    r = asymptotic_ratio(2, 3)
    assert r.ratio == Fraction(1, 2)

    r = asymptotic_ratio(10 ** 6, 2)
    assert abs(r.ratio - 1) < Fraction(1, 10 ** 4)


def test_ratio_bound_holds_everywhere_sampled():
    for p in (2, 3, 5, 13):
        for n in list(range(2, 200)) + [10 ** 3, 10 ** 4 + 1, 10 ** 5]:
            r = asymptotic_ratio(n, p)
            assert abs(r.ratio - 1) <= r.deviation_bound


def test_ratio_bound_shrinks():
    bounds = [asymptotic_ratio(10 ** e, 3).deviation_bound for e in range(2, 7)]
    assert all(b2 < b1 for b1, b2 in zip(bounds, bounds[1:]))


def test_op_counter_tracks_divisions():
    reset_op_count()
    digit_sum(255, 2)
    assert op_count() == 8
    reset_op_count()
    vp_int(12, 2)
    assert op_count() == 3  # two successful divisions plus the failing probe
    reset_op_count()
    base = op_count()
    valuation_closed_form(10 ** 9, 2)
    assert base == 0 and op_count() < 100


def test_oracle_cost_scales_linearly():
    reset_op_count()
    valuation_oracle(2000, 2)
    small = op_count()
    reset_op_count()
    valuation_oracle(4000, 2)
    large = op_count()
    assert small > 2000
    assert 1.8 * small < large < 2.2 * small


def test_accepts_prime_objects_and_plain_ints():
    prime = Prime(7)
    assert vp_int(49, prime) == vp_int(49, 7) == 2
    assert digit_sum(50, prime) == digit_sum(50, 7)
    assert asymptotic_ratio(500, prime) == asymptotic_ratio(500, 7)
