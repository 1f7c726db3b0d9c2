"""Exact integer arithmetic: primality, prime generation, factorization, gcd.

Everything works on Python ints, so magnitudes are unbounded. Factorization
is deterministic trial division; inputs whose cofactor cannot be certified
within the trial bound raise :class:`BudgetExceeded` instead of falling back
to probabilistic methods.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, Tuple

DEFAULT_TRIAL_BOUND = 10**6

# Miller-Rabin with these bases is exact below this limit.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


class BudgetExceeded(ValueError):
    """Raised when an integer is too large for deterministic treatment."""

    def __init__(self, n: int, bound: int):
        super().__init__(
            f"cannot factor {n} with trial division up to {bound}; "
            "supply its prime support explicitly"
        )
        self.n = n
        self.bound = bound


def _check_positive(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        y = pow(a, d, n)
        if y in (1, n - 1):
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Exact primality test.

    Small inputs use trial division, larger ones Miller-Rabin with a base set
    that is proven exact below ~3.3e24. Beyond that limit there is no
    deterministic guarantee, so :class:`BudgetExceeded` is raised.
    """
    _check_positive(n)
    if n < 4:
        return n > 1
    if n % 2 == 0 or n % 3 == 0:
        return False
    if n < 10**8:
        i = 5
        while i * i <= n:
            if n % i == 0 or n % (i + 2) == 0:
                return False
            i += 6
        return True
    if n >= _MR_LIMIT:
        raise BudgetExceeded(n, _MR_LIMIT)
    return _miller_rabin(n)


@lru_cache(maxsize=8)
def _sieve(limit: int) -> Tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, f in enumerate(flags) if f)


def first_primes(m: int) -> Tuple[int, ...]:
    """The ``m`` smallest primes in increasing order."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return ()
    # p_m < m (ln m + ln ln m) for m >= 6
    limit = 15 if m < 6 else int(m * (math.log(m) + math.log(math.log(m)))) + 1
    return _sieve(limit)[:m]


def factorize(n: int, bound: int = DEFAULT_TRIAL_BOUND) -> Dict[int, int]:
    """Prime-exponent map of ``n`` by trial division with primes up to ``bound``.

    A cofactor left over after trial division is accepted as prime only when
    it is below ``bound**2``; otherwise :class:`BudgetExceeded` is raised.
    """
    _check_positive(n)
    factors: Dict[int, int] = {}
    rest = n
    for p in _sieve(bound):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors[p] = e
    if rest > 1:
        if rest >= bound * bound:
            raise BudgetExceeded(n, bound)
        factors[rest] = factors.get(rest, 0) + 1
    return dict(sorted(factors.items()))


def gcd(a: int, b: int) -> int:
    _check_positive(a)
    _check_positive(b)
    return math.gcd(a, b)


def expand(factors: Dict[int, int]) -> int:
    """Multiply a prime-exponent map back out."""
    n = 1
    for p, e in factors.items():
        n *= p**e
    return n
