"""Exhaustive square scans over generalized quadratic-factor products.

Two families are supported: factors k^2 - a^2 (starting at k = a+1) and
factors k^2 + a (starting at k = 1), for any shift a >= 1.  The scan is a
plain finite sweep; a hit at n certifies that the product of all factors up
to n is a perfect square, and nothing is claimed beyond max_n.

The two kinds get different squareness machinery:

* minus: every factor splits as (k-a)(k+a) with both parts <= max_n + a, so
  the scan tracks exact prime exponents through a smallest-prime-factor
  sieve.  The product is square exactly when every exponent is even, and a
  hit is certified by rebuilding the product and checking it against the
  square of the reconstructed root.  (Residue filters are useless here: once
  the scan passes k = m the product is 0 mod m for every fixed modulus, so
  each step would need a full multi-megabit root extraction.)

* plus: factors do not split, so the running product is kept directly and
  each step runs the residue filter before an exact root extraction.  The
  filter stays effective because, e.g. for a = 1, no factor k^2 + 1 is ever
  divisible by 3 or 7.
"""

from dataclasses import dataclass

from .errors import DomainError
from .sequence import integer_sqrt, square_candidate


@dataclass(frozen=True)
class SequenceSpec:
    """Descriptor of a product sequence: factor shape and shift parameter."""

    kind: str  # "minus" (k^2 - a^2) | "plus" (k^2 + a)
    a: int

    def __post_init__(self):
        if self.kind not in ("minus", "plus"):
            raise DomainError(f"SequenceSpec: unknown kind {self.kind!r}")
        if self.a < 1:
            raise DomainError("SequenceSpec: shift parameter a must be >= 1")

    @property
    def start(self) -> int:
        """First index: a+1 for the minus kind (first factor 2a+1), else 1."""
        return self.a + 1 if self.kind == "minus" else 1

    def factor(self, k: int) -> int:
        if self.kind == "minus":
            return k * k - self.a * self.a
        return k * k + self.a


@dataclass(frozen=True)
class SearchHit:
    spec: SequenceSpec
    n: int
    sqrt_witness: int  # sqrt_witness**2 equals the product up to n


def search_squares(spec: SequenceSpec, max_n: int) -> list[SearchHit]:
    """All n in [start, max_n] where the running product is a perfect square.

    Exhaustive within the range; hits come out in increasing n.  The running
    product strictly increases (every factor is >= 2), so each n is tested
    once against a strictly larger value.
    """
    if max_n < spec.start:
        raise DomainError(f"max_n must be >= the start index {spec.start}")
    if spec.kind == "minus":
        return _scan_factored(spec, max_n)
    return _scan_direct(spec, max_n)


def _scan_direct(spec: SequenceSpec, max_n: int) -> list[SearchHit]:
    hits = []
    product = 1
    for k in range(spec.start, max_n + 1):
        product *= spec.factor(k)
        if square_candidate(product):
            root = integer_sqrt(product)
            if root * root == product:
                hits.append(SearchHit(spec=spec, n=k, sqrt_witness=root))
    return hits


def _smallest_factor_sieve(limit: int) -> list[int]:
    spf = list(range(limit + 1))
    i = 2
    while i * i <= limit:
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return spf


def _balanced_product(values: list[int]) -> int:
    if not values:
        return 1
    layer = values
    while len(layer) > 1:
        nxt = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) & 1:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def _scan_factored(spec: SequenceSpec, max_n: int) -> list[SearchHit]:
    a = spec.a
    spf = _smallest_factor_sieve(max_n + a)
    exponents: dict[int, int] = {}
    odd_exponents: set[int] = set()
    factors: list[int] = []
    hits = []
    for k in range(spec.start, max_n + 1):
        factors.append(spec.factor(k))
        for m in (k - a, k + a):
            while m > 1:
                q = spf[m]
                e = 0
                while m % q == 0:
                    m //= q
                    e += 1
                exponents[q] = exponents.get(q, 0) + e
                if e & 1:
                    # toggle parity
                    if q in odd_exponents:
                        odd_exponents.remove(q)
                    else:
                        odd_exponents.add(q)
        if not odd_exponents:
            hits.append(SearchHit(spec=spec, n=k,
                                  sqrt_witness=_certified_root(exponents, factors)))
    return hits


def _certified_root(exponents: dict[int, int], factors: list[int]) -> int:
    root = _balanced_product([q ** (e >> 1) for q, e in exponents.items() if e >= 2])
    product = _balanced_product(factors)
    if root * root != product:
        raise AssertionError("factor bookkeeping lost a prime; scan is broken")
    return root
