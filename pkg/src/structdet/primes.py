"""Prime generation backed by an on-demand segmented sieve.

Indices are 1-based throughout: ``nth_prime(1) == 2``.
"""

from __future__ import annotations

import threading
from math import log

from .errors import DomainError


def _nth_prime_upper_bound(n: int) -> int:
    # p_n < n(ln n + ln ln n) for n >= 6 (Rosser); tiny n handled by the seed.
    if n < 6:
        return 13
    x = float(n)
    return int(x * (log(x) + log(log(x)))) + 1


class PrimeCache:
    """Monotone, append-only cache of primes.

    Holds every prime below ``_sieved_to`` in increasing order and grows by
    sieving further segments on demand. Each segment [lo, hi) keeps
    hi <= lo*lo, so the primes already cached always cover the divisors
    needed to sieve it. Growth happens under a lock; values handed out are
    plain ints, immutable and freely shareable.
    """

    _SEGMENT_CAP = 1 << 22  # bounds per-step memory, not correctness

    def __init__(self) -> None:
        self._primes: list[int] = [2, 3, 5, 7, 11, 13]
        self._sieved_to = 14
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._primes)

    def nth(self, n: int) -> int:
        """Return the n-th prime, 1-based: nth(1) == 2."""
        if n < 1:
            raise DomainError("prime indices are 1-based")
        if n > len(self._primes):
            self._grow(n)
        return self._primes[n - 1]

    def first(self, n: int) -> list[int]:
        """Return the first n primes as a fresh list; empty for n == 0."""
        if n < 0:
            raise DomainError("count must be non-negative")
        if n > len(self._primes):
            self._grow(n)
        return self._primes[:n]

    def _grow(self, count: int) -> None:
        with self._lock:
            while len(self._primes) < count:
                lo = self._sieved_to
                hi = max(2 * lo, _nth_prime_upper_bound(count) + 1)
                hi = min(hi, lo * lo, lo + self._SEGMENT_CAP)
                self._sieve_segment(lo, hi)
                self._sieved_to = hi

    def _sieve_segment(self, lo: int, hi: int) -> None:
        flags = bytearray([1]) * (hi - lo)
        for p in self._primes:
            if p * p >= hi:
                break
            start = max(p * p, lo + (-lo) % p)
            flags[start - lo :: p] = bytes((hi - start + p - 1) // p)
        self._primes.extend(lo + i for i, keep in enumerate(flags) if keep)


_SHARED = PrimeCache()


def nth_prime(n: int) -> int:
    """p_n with p_1 = 2, p_2 = 3, ..."""
    return _SHARED.nth(n)


def first_n_primes(n: int) -> list[int]:
    """[p_1, ..., p_n]."""
    return _SHARED.first(n)
