"""Pell pairs for the unit 1 + sqrt(2), and the square-index enumeration.

The indices n at which the running product (2^2-1)...(n^2-1) is a perfect
square are exactly the ones generated from powers (1+sqrt(2))^k: odd k gives
n = x^2, even k gives n = 2y^2, where x + y*sqrt(2) = (1+sqrt(2))^k.  Walking
the recurrence therefore enumerates all square indices up to N in O(log N)
steps, instead of testing each n.
"""

from collections.abc import Iterator
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class PellPair:
    """(x, y) with x + y*sqrt(2) = (1 + sqrt(2))**k; satisfies x^2 - 2y^2 = (-1)^k."""

    k: int
    x: int
    y: int


@dataclass(frozen=True)
class SquareIndex:
    """A certified index n whose sequence term is a perfect square.

    For odd k: n = root_a^2 and (n+1)/2 = root_b^2.
    For even k: n = 2*root_b^2 and n+1 = root_a^2.
    In both cases 2n(n+1) = (2*root_a*root_b)^2.
    """

    k: int
    n: int
    parity: str  # parity of k: "odd" | "even"
    root_a: int
    root_b: int


def pell_pair(k: int) -> PellPair:
    """Power of the fundamental unit via the recurrence (x, y) -> (x+2y, x+y)."""
    if k < 0:
        raise DomainError("pell_pair: exponent must be nonnegative")
    x, y = 1, 0
    for _ in range(k):
        x, y = x + 2 * y, x + y
    return PellPair(k=k, x=x, y=y)


def binomial_sum_odd(k: int) -> int:
    """Sum of 2^(j/2) * C(k, j) over even j < k; equals pell_pair(k).x for odd k."""
    if k < 1 or k % 2 == 0:
        raise DomainError("binomial_sum_odd: k must be an odd positive integer")
    return _weighted_binomial_sum(k, parity=0)


def binomial_sum_even(k: int) -> int:
    """Sum of 2^((j-1)/2) * C(k, j) over odd j < k; equals pell_pair(k).y for even k."""
    if k < 2 or k % 2 == 1:
        raise DomainError("binomial_sum_even: k must be an even positive integer")
    return _weighted_binomial_sum(k, parity=1)


def _weighted_binomial_sum(k: int, parity: int) -> int:
    # C(k, j+1) = C(k, j) * (k-j) // (j+1), exact at every step
    total = 0
    c = 1
    for j in range(k):
        if j & 1 == parity:
            total += (1 << ((j - parity) >> 1)) * c
        c = c * (k - j) // (j + 1)
    return total


def _index_from_pair(pair: PellPair) -> SquareIndex:
    if pair.k & 1:
        n = pair.x * pair.x  # n odd, (n+1)/2 = y^2
        return SquareIndex(k=pair.k, n=n, parity="odd", root_a=pair.x, root_b=pair.y)
    n = 2 * pair.y * pair.y  # n even, n+1 = x^2
    return SquareIndex(k=pair.k, n=n, parity="even", root_a=pair.x, root_b=pair.y)


def square_index_from_k(k: int) -> SquareIndex:
    """Certified square index generated by the k-th power of the unit.

    k = 1 would give n = 1, below the sequence's first index, so k >= 2.
    """
    if k < 2:
        raise DomainError("square_index_from_k: k must be >= 2")
    return _index_from_pair(pell_pair(k))


def iter_square_indices() -> Iterator[SquareIndex]:
    """All square indices in increasing order, from k = 2 on."""
    x, y = 3, 2
    k = 2
    while True:
        yield _index_from_pair(PellPair(k=k, x=x, y=y))
        x, y = x + 2 * y, x + y
        k += 1


def enumerate_square_indices(max_n: int) -> list[SquareIndex]:
    """Every index n <= max_n whose term is a perfect square (none below 8)."""
    out = []
    for idx in iter_square_indices():
        if idx.n > max_n:
            break
        out.append(idx)
    return out


def first_square_indices(count: int) -> list[SquareIndex]:
    if count < 0:
        raise DomainError("first_square_indices: count must be nonnegative")
    out = []
    for idx in iter_square_indices():
        if len(out) == count:
            break
        out.append(idx)
    return out
