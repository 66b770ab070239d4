"""Exact elementary number theory: factorization, multiplicative functions, prime sieves."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import isqrt, prod

import numpy as np

from .errors import DomainError, ResourceBudgetError

# Largest limit primes_up_to() accepts unless a caller passes its own budget.
PRIME_TABLE_BUDGET = 2 * 10**8
DEFAULT_SEGMENT_SIZE = 2**20
# Trial division stops being reasonable past this size.
FACTORIZE_LIMIT = 10**18

__all__ = [
    "FactoredInteger",
    "PrimeTable",
    "factorize",
    "mobius",
    "totient",
    "radical",
    "divisors",
    "primes_up_to",
    "is_prime",
]


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its canonical factorization.

    ``factors`` is a tuple of ``(prime, exponent)`` pairs with strictly
    increasing primes. Values too large for trial division can be built with
    :meth:`from_factors` when the factorization is known by construction.
    """

    value: int
    factors: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.value < 1:
            raise DomainError(f"FactoredInteger needs a positive value, got {self.value}")
        if prod(p**e for p, e in self.factors) != self.value:
            raise DomainError(f"factors {self.factors} do not multiply to {self.value}")
        primes = [p for p, _ in self.factors]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise DomainError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise DomainError("exponents must be >= 1")

    @classmethod
    def from_factors(cls, factors) -> FactoredInteger:
        merged: dict[int, int] = {}
        for p, e in factors:
            merged[p] = merged.get(p, 0) + e
        items = tuple(sorted((p, e) for p, e in merged.items() if e))
        return cls(prod(p**e for p, e in items), items)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __int__(self):
        return self.value


def _simple_sieve(limit: int) -> np.ndarray:
    """Primes <= limit as an int64 array (plain Eratosthenes, used for base primes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    return np.flatnonzero(flags).astype(np.int64)


_SMALL_PRIMES = [int(p) for p in _simple_sieve(2**16)]


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """All primes up to ``limit``; the smallest-prime-factor array is built lazily."""

    limit: int
    primes: np.ndarray

    def __len__(self):
        return len(self.primes)

    @cached_property
    def spf(self) -> np.ndarray:
        """``spf[k]`` is the least prime factor of k for 2 <= k <= limit (spf[0]=0, spf[1]=1)."""
        dtype = np.int32 if self.limit < 2**31 else np.int64
        spf = np.zeros(self.limit + 1, dtype=dtype)
        spf[1] = 1
        for p in self.primes[self.primes <= isqrt(self.limit)]:
            p = int(p)
            tail = spf[p * p :: p]
            tail[tail == 0] = p
        unset = spf == 0
        unset[0] = False
        spf[unset] = np.flatnonzero(unset)
        return spf

    def __contains__(self, k: int) -> bool:
        i = np.searchsorted(self.primes, k)
        return bool(i < len(self.primes) and self.primes[i] == k)


def _sieve_segment(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    flags = np.ones(hi - lo, dtype=bool)
    if lo < 2:
        flags[: 2 - lo] = False
    for p in base:
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, -(-lo // p) * p)
        flags[start - lo :: p] = False
    return np.flatnonzero(flags).astype(np.int64) + lo


def primes_up_to(
    limit: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    budget: int | None = None,
    workers: int = 1,
) -> PrimeTable:
    """Segmented sieve of Eratosthenes.

    Segments are independent, so with ``workers > 1`` they are sieved on a
    thread pool and concatenated in order; the result is identical to the
    sequential run.
    """
    if limit < 2:
        raise DomainError(f"primes_up_to needs limit >= 2, got {limit}")
    budget = PRIME_TABLE_BUDGET if budget is None else budget
    if limit > budget:
        raise ResourceBudgetError(f"prime table limit {limit} exceeds budget {budget}")
    base = _simple_sieve(isqrt(limit))
    bounds = [(lo, min(lo + segment_size, limit + 1)) for lo in range(0, limit + 1, segment_size)]
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _sieve_segment(b[0], b[1], base), bounds))
    else:
        parts = [_sieve_segment(lo, hi, base) for lo, hi in bounds]
    return PrimeTable(limit, np.concatenate(parts))


def _as_int(n) -> int:
    return n.value if isinstance(n, FactoredInteger) else int(n)


@lru_cache(maxsize=1 << 16)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    else:
        # 6k +/- 1 wheel past the tabulated primes
        k = (_SMALL_PRIMES[-1] // 6 + 1) * 6
        while (k - 1) * (k - 1) <= n:
            for d in (k - 1, k + 1):
                if n % d == 0:
                    e = 0
                    while n % d == 0:
                        n //= d
                        e += 1
                    out.append((d, e))
            k += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n) -> FactoredInteger:
    """Canonical factorization by trial division; ``factorize(1)`` has no factors."""
    if isinstance(n, FactoredInteger):
        return n
    n = int(n)
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    if n > FACTORIZE_LIMIT:
        raise ResourceBudgetError(
            f"{n} exceeds the trial-division limit {FACTORIZE_LIMIT}; "
            "build it with FactoredInteger.from_factors"
        )
    return FactoredInteger(n, _factor_tuple(n))


def is_prime(n: int) -> bool:
    n = int(n)
    if n < 2:
        return False
    f = factorize(n).factors
    return len(f) == 1 and f[0][1] == 1


def mobius(n) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


@lru_cache(maxsize=1 << 16)
def _totient(n: int) -> int:
    t = n
    for p, _ in _factor_tuple(n):
        t = t // p * (p - 1)
    return t


def totient(n) -> int:
    if isinstance(n, FactoredInteger):
        t = n.value
        for p, _ in n.factors:
            t = t // p * (p - 1)
        return t
    n = int(n)
    if n < 1:
        raise DomainError(f"totient needs n >= 1, got {n}")
    return _totient(n)


def radical(n) -> int:
    """Product of the distinct primes of n (n >= 3); keeps the factor 2 when n is even."""
    value = _as_int(n)
    if value < 3:
        raise DomainError(f"radical is defined here for n >= 3, got {value}")
    return prod(factorize(n).primes)


def divisors(n) -> list[int]:
    """Sorted positive divisors."""
    ds = [1]
    for p, e in factorize(n).factors:
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)
