import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from squareprod import (
    DomainError,
    compute_term,
    integer_sqrt,
    is_perfect_square,
    split_square_cofactor,
    square_candidate,
)


def brute_term(n):
    value = 1
    for k in range(2, n + 1):
        value *= k * k - 1
    return value


def test_first_terms_by_direct_multiplication():
    assert compute_term(2).value == 3
    assert compute_term(3).value == 3 * 8
    assert compute_term(5).value == 8640
    # 3*8*15*24*35*48*63
    assert compute_term(8).value == 914457600


def test_term_squareness_verdicts():
    t = compute_term(8)
    assert t.is_square
    assert t.sqrt_witness == 30240
    assert t.sqrt_witness ** 2 == t.value
    for n in (2, 3, 5, 7):
        t = compute_term(n)
        assert not t.is_square
        assert t.sqrt_witness is None


def test_term_rejects_indices_below_start():
    with pytest.raises(DomainError):
        compute_term(1)
    with pytest.raises(DomainError):
        compute_term(0)


def test_term_ratio_recurrence():
    # consecutive terms differ by exactly n^2 - 1
    prev = compute_term(2).value
    for n in range(3, 601):
        cur = compute_term(n).value
        assert cur == prev * (n * n - 1)
        prev = cur


@pytest.mark.parametrize("x,expected", [(0, 0), (1, 1), (144, 12), (914457601, 30240)])
def test_integer_sqrt_known_values(x, expected):
    assert integer_sqrt(x) == expected


def test_integer_sqrt_small_range():
    for x in range(0, 20000):
        r = integer_sqrt(x)
        assert r * r <= x < (r + 1) * (r + 1)


def test_integer_sqrt_sweep_to_a_million():
    r = 0
    for x in range(10 ** 6 + 1):
        if (r + 1) * (r + 1) <= x:  # running floor root as the reference
            r += 1
        assert integer_sqrt(x) == r


def test_integer_sqrt_rejects_negative():
    with pytest.raises(DomainError):
        integer_sqrt(-1)


@given(st.integers(min_value=0, max_value=1 << 512))
@settings(max_examples=300)
def test_integer_sqrt_matches_math_isqrt(x):
    assert integer_sqrt(x) == math.isqrt(x)


@given(st.integers(min_value=0, max_value=1 << 256))
def test_integer_sqrt_bracketing(x):
    r = integer_sqrt(x)
    assert r * r <= x
    assert (r + 1) * (r + 1) > x


def test_integer_sqrt_huge_exact_square():
    root = 3 ** 400 + 7
    assert integer_sqrt(root * root) == root
    assert integer_sqrt(root * root - 1) == root - 1


@given(st.integers(min_value=0, max_value=1 << 128))
def test_square_candidate_never_rejects_squares(r):
    assert square_candidate(r * r)


@pytest.mark.parametrize("x,expected", [
    (0, True),
    (1, True),
    (24, False),
    (4900, True),     # 70^2 = 2*49*50
    (914457600, True),
    (914457601, False),
])
def test_is_perfect_square(x, expected):
    assert is_perfect_square(x) == expected


def test_is_perfect_square_dense_range():
    squares = {i * i for i in range(200)}
    for x in range(200 * 200):
        assert is_perfect_square(x) == (x in squares)


def test_split_examples():
    s = split_square_cofactor(8)
    assert (s.core, s.root, s.exact) == (144, 2520, True)
    assert s.core * s.root ** 2 == 914457600
    s = split_square_cofactor(5)
    assert (s.core, s.root) == (60, 12)
    assert 60 * 144 == 8640


def test_split_start_edge():
    # at n=2 the empty cofactor product does not multiply back to the term,
    # so the split is flagged inexact there; n=3 is the first literal one
    s = split_square_cofactor(2)
    assert (s.core, s.root, s.exact) == (12, 1, False)
    assert s.core * s.root ** 2 != compute_term(2).value
    s = split_square_cofactor(3)
    assert (s.core, s.root, s.exact) == (24, 1, True)
    with pytest.raises(DomainError):
        split_square_cofactor(1)


def test_split_identity_holds_from_three_up():
    for n in range(3, 400):
        s = split_square_cofactor(n)
        assert s.core == 2 * n * (n + 1)
        assert s.core * s.root ** 2 == brute_term(n)


def test_split_identity_full_range():
    # incremental accumulators make the n <= 2000 sweep affordable; the
    # split function itself is bound in at a few checkpoints
    product = 3  # term at n=2
    root = 1     # empty cofactor product at n=3
    for n in range(3, 2001):
        product *= n * n - 1
        if n > 3:
            root *= n - 1
        assert product == 2 * n * (n + 1) * root * root
        if n in (3, 100, 1000, 2000):
            s = split_square_cofactor(n)
            assert (s.core, s.root, s.exact) == (2 * n * (n + 1), root, True)
            assert product == compute_term(n).value


def test_squareness_equivalent_to_core_squareness():
    # the term is a square exactly when 2n(n+1) is, including at n=2
    for n in range(2, 400):
        assert compute_term(n).is_square == is_perfect_square(2 * n * (n + 1))
