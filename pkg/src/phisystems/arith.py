"""Sieve-backed arithmetic functions.

A smallest-prime-factor array over [2, limit] is the factorization
backbone: the prime-power valuation nu_p, the count nu of prime divisors
with multiplicity, Euler's totient phi, primality, and the prime-counting
function pi all read off it. Queries above the table limit fall back to
trial division, so every result stays exact.

Tables are immutable after construction and safe to share across threads
or forked worker processes.
"""

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "DEFAULT_MEMORY_BUDGET",
    "MemoryBudgetError",
    "PrimePi",
    "SpfTable",
    "build_spf",
]

DEFAULT_MEMORY_BUDGET = 2 << 30  # bytes; spf cells are 4 bytes each

_SPF_DTYPE = np.uint32


class MemoryBudgetError(Exception):
    """A requested table would exceed the configured memory budget."""


def _check_natural(a: int) -> None:
    if a < 1:
        raise ValueError(f"argument must be a natural number >= 1, got {a}")


@dataclass(eq=False)
class SpfTable:
    """Smallest-prime-factor table over [2, limit].

    ``spf[a]`` is the least prime dividing ``a``, so ``spf[a] == a``
    exactly when ``a`` is prime. Derived views (primality mask, prime
    list, nu table) are cached lazily on first use; call :meth:`warm`
    before forking workers that will share them.
    """

    limit: int
    spf: np.ndarray

    @cached_property
    def is_prime_mask(self) -> np.ndarray:
        mask = self.spf == np.arange(self.limit + 1, dtype=_SPF_DTYPE)
        mask[0] = False
        mask[1] = False
        return mask

    @cached_property
    def is_prime_bytes(self) -> bytes:
        # bytes indexing is markedly faster than numpy scalar indexing
        # in pure-Python scan loops
        return self.is_prime_mask.tobytes()

    @cached_property
    def primes(self) -> np.ndarray:
        return np.nonzero(self.is_prime_mask)[0].astype(np.int64)

    @cached_property
    def prime_list(self) -> list[int]:
        return [int(p) for p in self.primes]

    @cached_property
    def nu_values(self) -> np.ndarray:
        """nu(a) for every a <= limit, via one sliced pass per prime power."""
        nu = np.zeros(self.limit + 1, dtype=np.int8)
        for p in self.prime_list:
            q = p
            while q <= self.limit:
                nu[q::q] += 1
                q *= p
        return nu

    def warm(self, *, nu: bool = False) -> "SpfTable":
        """Materialize the lazy caches (so forked workers inherit them)."""
        self.is_prime_mask
        self.is_prime_bytes
        self.prime_list
        if nu:
            self.nu_values
        return self

    def primes_upto(self, x: int) -> np.ndarray:
        return self.primes[: int(np.searchsorted(self.primes, x, side="right"))]

    def smallest_factor(self, a: int) -> int:
        if a < 2 or a > self.limit:
            raise ValueError(f"a must be in [2, {self.limit}], got {a}")
        return int(self.spf[a])

    def factorize(self, a: int) -> list[tuple[int, int]]:
        """Prime factorization as ascending (prime, exponent) pairs."""
        _check_natural(a)
        out: list[tuple[int, int]] = []
        if a <= self.limit:
            spf = self.spf
            while a > 1:
                p = int(spf[a])
                e = 0
                while a % p == 0:
                    a //= p
                    e += 1
                out.append((p, e))
            return out
        rem = a
        exhausted_table = True
        for p in self.prime_list:
            if p * p > rem:
                exhausted_table = False
                break
            if rem % p == 0:
                e = 0
                while rem % p == 0:
                    rem //= p
                    e += 1
                out.append((p, e))
        if exhausted_table:
            d = self.limit + 1
            while d * d <= rem:
                if rem % d == 0:
                    e = 0
                    while rem % d == 0:
                        rem //= d
                        e += 1
                    out.append((d, e))
                d += 1
        if rem > 1:
            out.append((rem, 1))
        return out

    def nu_p(self, p: int, a: int) -> int:
        """Exact exponent of the prime p in a; 0 when p does not divide a."""
        _check_natural(a)
        if not self.is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        e = 0
        while a % p == 0:
            a //= p
            e += 1
        return e

    def nu(self, a: int) -> int:
        """Number of prime divisors of a counted with multiplicity."""
        _check_natural(a)
        return sum(e for _, e in self.factorize(a))

    def phi(self, a: int) -> int:
        """Euler's totient, from the factorization (never by counting)."""
        _check_natural(a)
        result = a
        for p, _ in self.factorize(a):
            result = result // p * (p - 1)
        return result

    def is_prime(self, a: int) -> bool:
        _check_natural(a)
        if a <= self.limit:
            return a >= 2 and int(self.spf[a]) == a
        r = math.isqrt(a)
        for p in self.prime_list:
            if p > r:
                return True
            if a % p == 0:
                return False
        d = self.limit + 1
        while d <= r:
            if a % d == 0:
                return False
            d += 1
        return True


@dataclass(eq=False)
class PrimePi:
    """Cumulative prime counts: ``cumulative[x]`` is the number of primes <= x."""

    limit: int
    cumulative: np.ndarray

    @classmethod
    def from_spf(cls, table: SpfTable) -> "PrimePi":
        return cls(table.limit, np.cumsum(table.is_prime_mask, dtype=np.uint32))

    def prime_pi(self, x: int) -> int:
        if x < 0 or x > self.limit:
            raise ValueError(f"x must be in [0, {self.limit}], got {x}")
        return int(self.cumulative[x])

    __call__ = prime_pi


def build_spf(limit: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> SpfTable:
    """Sieve the smallest prime factor of every value in [2, limit]."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit >= 2**32:
        raise MemoryBudgetError(f"limit {limit} exceeds the 32-bit spf cell range")
    needed = 4 * (limit + 1)
    if needed > memory_budget:
        raise MemoryBudgetError(
            f"spf table over [2, {limit}] needs {needed} bytes, "
            f"budget is {memory_budget}"
        )
    spf = np.zeros(limit + 1, dtype=_SPF_DTYPE)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            spf[p] = p
            tail = spf[p * p :: p]
            tail[tail == 0] = p
    untouched = np.nonzero(spf[2:] == 0)[0] + 2
    spf[untouched] = untouched
    return SpfTable(limit=limit, spf=spf)
