"""Prime-power divisibility of the sequence terms, in logarithmic time.

The exponent of a prime p in term(n) is available without ever forming the
term: digit sums and small valuations of n-sized inputs suffice, so the cost
is O(log n) divisions.  A linear summation oracle over the individual factors
is provided for cross-checking, plus an exact-rational report of how close
the exponent is to its limit 2n/(p-1).

All primitives count the base-p divisions they perform in a module counter
(`reset_op_count` / `op_count`), which is how the logarithmic-vs-linear
behaviour is asserted without wall-clock timing.  The counter is plain
instrumentation and not thread-safe.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

# Witness set making Miller-Rabin deterministic for everything below 3.3e24,
# which covers the supported 64-bit prime range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PRIME_LIMIT = 1 << 64

_ops = 0  # divisions / digit extractions performed by the primitives


def reset_op_count() -> None:
    global _ops
    _ops = 0


def op_count() -> int:
    return _ops


@lru_cache(maxsize=None)
def _is_prime_u64(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = ((d & -d).bit_length()) - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Prime:
    """A certified prime; construction runs a deterministic primality check."""

    p: int

    def __post_init__(self):
        if self.p >= _PRIME_LIMIT:
            raise DomainError("Prime: only primes below 2^64 are supported")
        if not _is_prime_u64(self.p):
            raise DomainError(f"Prime: {self.p} is not prime")


def _prime_value(p: Prime | int) -> int:
    if isinstance(p, Prime):
        return p.p
    return Prime(p).p


@dataclass(frozen=True)
class ValuationBreakdown:
    """Exponent of p in term(n), with the closed form's labelled summands.

    family is "p2-odd-n" / "p2-even-n" for p = 2 (split on the parity of n)
    and "odd-p" for odd primes; total is always the sum of the summands.
    """

    n: int
    p: int
    family: str
    summands: tuple[tuple[str, int], ...]
    total: int


@dataclass(frozen=True)
class RatioReport:
    """Exact rational ratio of the exponent to its limit 2n/(p-1).

    deviation_bound is a proven upper bound on |ratio - 1| assembled from
    the digit-sum and valuation bounds s_p(m) <= (p-1)(floor(log_p m) + 2)
    and v_p(m) <= floor(log_p m); always |ratio - 1| <= deviation_bound.
    """

    n: int
    p: int
    valuation: int
    ratio: Fraction
    deviation_bound: Fraction


def _vp(x: int, q: int) -> int:
    global _ops
    e = 0
    while True:
        _ops += 1
        x, r = divmod(x, q)
        if r:
            return e
        e += 1


def _digit_sum(x: int, q: int) -> int:
    global _ops
    total = 0
    while x:
        _ops += 1
        x, d = divmod(x, q)
        total += d
    return total


def _floor_log(x: int, q: int) -> int:
    # largest e with q**e <= x, by repeated division; x >= 1
    global _ops
    e = 0
    while x >= q:
        _ops += 1
        x //= q
        e += 1
    return e


def vp_int(x: int, p: Prime | int) -> int:
    """Largest e such that p**e divides x (x >= 1)."""
    q = _prime_value(p)
    if x <= 0:
        raise DomainError("vp_int: x must be >= 1")
    return _vp(x, q)


def digit_sum(x: int, p: Prime | int) -> int:
    """Sum of the digits of x written in base p."""
    q = _prime_value(p)
    if x < 0:
        raise DomainError("digit_sum: x must be nonnegative")
    return _digit_sum(x, q)


def legendre_factorial_valuation(m: int, p: Prime | int) -> int:
    """Exponent of p in m!, as (m - digit_sum(m)) / (p - 1); exact division."""
    q = _prime_value(p)
    if m < 0:
        raise DomainError("legendre_factorial_valuation: m must be nonnegative")
    return (m - _digit_sum(m, q)) // (q - 1)


def valuation_closed_form(n: int, p: Prime | int) -> ValuationBreakdown:
    """Exponent of p in term(n) without forming the term; O(log n) divisions.

    p = 2 splits on the parity of n:
      n odd:  (2n-2) - 2*s2((n-1)/2) + v2((n+1)/2)
      n even: (2n-4) - 2*s2(n/2-1)   + v2(n/2)
    odd p:    vp(n) + vp(n+1) + 2*(n-1-sp(n-1))/(p-1)
    """
    q = _prime_value(p)
    if n < 2:
        raise DomainError("index must be >= 2 (sequence starts at n = 2)")
    if q == 2:
        if n & 1:
            summands = (
                ("2n-2", 2 * n - 2),
                ("-2*s2((n-1)/2)", -2 * _digit_sum((n - 1) >> 1, 2)),
                ("v2((n+1)/2)", _vp((n + 1) >> 1, 2)),
            )
            family = "p2-odd-n"
        else:
            summands = (
                ("2n-4", 2 * n - 4),
                ("-2*s2(n/2-1)", -2 * _digit_sum((n >> 1) - 1, 2)),
                ("v2(n/2)", _vp(n >> 1, 2)),
            )
            family = "p2-even-n"
    else:
        summands = (
            ("vp(n)", _vp(n, q)),
            ("vp(n+1)", _vp(n + 1, q)),
            # equals 2 * (exponent of p in (n-1)!); the division is exact
            ("2*(n-1-sp(n-1))/(p-1)", 2 * (n - 1 - _digit_sum(n - 1, q)) // (q - 1)),
        )
        family = "odd-p"
    total = sum(v for _, v in summands)
    return ValuationBreakdown(n=n, p=q, family=family, summands=summands, total=total)


def valuation_oracle(n: int, p: Prime | int) -> int:
    """Same exponent by summing over the factors (k-1)(k+1); linear in n.

    Independent of the closed form: never forms the term, never uses digit
    sums, just per-factor valuations.
    """
    q = _prime_value(p)
    if n < 2:
        raise DomainError("index must be >= 2 (sequence starts at n = 2)")
    total = 0
    for k in range(2, n + 1):
        total += _vp(k - 1, q) + _vp(k + 1, q)
    return total


def asymptotic_ratio(n: int, p: Prime | int) -> RatioReport:
    """Exact ratio of the exponent to 2n/(p-1), with a proven deviation bound."""
    q = _prime_value(p)
    breakdown = valuation_closed_form(n, q)
    ratio = Fraction(breakdown.total * (q - 1), 2 * n)

    if q == 2:
        if n & 1:
            half_low, half_high = (n - 1) >> 1, (n + 1) >> 1
            bound = Fraction(1, n)
        else:
            half_low, half_high = (n >> 1) - 1, n >> 1
            bound = Fraction(2, n)
        if half_low >= 1:
            bound += Fraction(_floor_log(half_low, 2) + 2, n)
        bound += Fraction(_floor_log(half_high, 2), 2 * n)
    else:
        bound = Fraction(1, n)
        bound += Fraction((q - 1) * (_floor_log(n - 1, q) + 2), n)
        bound += Fraction((q - 1) * (_floor_log(n, q) + _floor_log(n + 1, q)), 2 * n)

    assert abs(ratio - 1) <= bound
    return RatioReport(n=n, p=q, valuation=breakdown.total, ratio=ratio,
                       deviation_bound=bound)
