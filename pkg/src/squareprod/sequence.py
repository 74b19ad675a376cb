"""Exact arithmetic for the product sequence term(n) = (2^2-1)(3^2-1)...(n^2-1).

Everything here is integer-only: no floats are used anywhere, so results are
exact at any magnitude (term(5000) has tens of thousands of digits).
"""

from dataclasses import dataclass

from .errors import DomainError

# Residues that perfect squares can take mod 64 and mod 63.  Checking both
# rejects ~95% of non-squares before the full root extraction.
_SQUARES_MOD_64 = frozenset((i * i) & 63 for i in range(64))
_SQUARES_MOD_63 = frozenset((i * i) % 63 for i in range(63))


@dataclass(frozen=True)
class TermResult:
    """One sequence term with its squareness verdict."""

    n: int
    value: int
    is_square: bool
    sqrt_witness: int | None  # present iff is_square; witness**2 == value


@dataclass(frozen=True)
class SquareSplit:
    """Decomposition value = core * root**2 with core = 2n(n+1).

    The identity holds for n >= 3 (`exact` is True); at n = 2 the split is
    still reported (core=12, root=1) but does not multiply back to the term,
    so `exact` is False there.  Either way the term is a perfect square
    exactly when 2n(n+1) is.
    """

    n: int
    core: int
    root: int
    exact: bool


def integer_sqrt(x: int) -> int:
    """Floor square root by Newton/Heron iteration on exact integers.

    The initial over-estimate comes from the bit length, sharpened by
    recursing on the high bits for large inputs; the loop stops once the
    iterate stabilises, at which point it equals floor(sqrt(x)).
    """
    if x < 0:
        raise DomainError("integer_sqrt: input must be nonnegative")
    if x < 2:
        return x
    b = x.bit_length()
    if b <= 64:
        r = 1 << ((b + 1) >> 1)  # 2^ceil(b/2) >= sqrt(x)
    else:
        # floor root of the top bits, rounded up, is a certified over-estimate
        h = b >> 2
        r = (integer_sqrt(x >> (2 * h)) + 1) << h
    s = (r + x // r) >> 1
    while s < r:
        r = s
        s = (r + x // r) >> 1
    return r


def square_candidate(x: int) -> bool:
    """Cheap residue filter: False means x is certainly not a perfect square."""
    return (x & 63) in _SQUARES_MOD_64 and x % 63 in _SQUARES_MOD_63


def is_perfect_square(x: int) -> bool:
    if x < 0:
        return False
    if not square_candidate(x):
        return False
    r = integer_sqrt(x)
    return r * r == x


def compute_term(n: int) -> TermResult:
    """Exact product of k^2 - 1 for k = 2..n, with squareness verdict.

    This is the incremental ground truth the closed forms are checked
    against, so it deliberately multiplies factor by factor.
    """
    if n < 2:
        raise DomainError("index must be >= 2 (sequence starts at n = 2)")
    value = 1
    for k in range(2, n + 1):
        value *= k * k - 1
    root = integer_sqrt(value)
    square = root * root == value
    return TermResult(n=n, value=value, is_square=square,
                      sqrt_witness=root if square else None)


def split_square_cofactor(n: int) -> SquareSplit:
    """Split the term as 2n(n+1) times the square of 3*4*...*(n-1)."""
    if n < 2:
        raise DomainError("index must be >= 2 (sequence starts at n = 2)")
    core = 2 * n * (n + 1)
    root = 1
    for k in range(3, n):
        root *= k
    return SquareSplit(n=n, core=core, root=root, exact=n >= 3)
