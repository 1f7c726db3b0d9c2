import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divgraph.arith import BudgetExceeded, expand, factorize, first_primes, gcd, is_prime


def naive_is_prime(n):
    return n > 1 and all(n % d for d in range(2, n))


def naive_factor(n):
    out, d = {}, 2
    while n > 1:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    return out


def test_is_prime_examples():
    assert is_prime(1) is False
    assert is_prime(13) is True
    assert is_prime(1573) is False
    assert naive_is_prime(1573) is False


def test_is_prime_matches_naive_below_3000():
    assert [n for n in range(1, 3000) if is_prime(n)] == [n for n in range(1, 3000) if naive_is_prime(n)]


@pytest.mark.parametrize("n", [10**9 + 7, 2**61 - 1, 1_000_000_007 * 998_244_353, 3215031751])
def test_is_prime_large(n):
    # 3215031751 is a strong pseudoprime to bases 2, 3, 5, 7.
    expected = n in (10**9 + 7, 2**61 - 1)
    assert is_prime(n) is expected


def test_factorize_examples():
    assert factorize(1) == {}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(1573) == {11: 2, 13: 1} == naive_factor(1573)


def test_factorize_large_within_budget():
    n = 999_983 * 1_000_003
    assert factorize(n) == {999_983: 1, 1_000_003: 1}


def test_factorize_budget_exceeded():
    n = 1_000_003 * 1_000_033
    with pytest.raises(BudgetExceeded):
        factorize(n)
    assert factorize(n, bound=1_000_010) == {1_000_003: 1, 1_000_033: 1}


def test_gcd_examples():
    assert gcd(6, 10) == 2
    assert gcd(7, 1) == 1
    assert gcd(30, 105) == 15


def test_first_primes():
    assert first_primes(0) == ()
    assert first_primes(4) == (2, 3, 5, 7)
    assert first_primes(6) == (2, 3, 5, 7, 11, 13)
    ps = first_primes(500)
    assert len(ps) == 500 and all(is_prime(p) for p in ps)
    assert all(a < b for a, b in zip(ps, ps[1:]))
    assert ps[-1] == 3571


@given(st.integers(min_value=1, max_value=10**12))
@settings(max_examples=300)
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert expand(f) == n
    assert all(is_prime(p) and e >= 1 for p, e in f.items())


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_gcd_is_greatest_common_divisor(a, b):
    g = gcd(a, b)
    assert a % g == 0 and b % g == 0
    common = [d for d in range(1, min(a, b) + 1) if a % d == 0 and b % d == 0]
    assert all(g % d == 0 for d in common)
    assert g == max(common)


def test_rejects_non_positive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(TypeError):
        is_prime(2.0)
    assert math.gcd(5, 5) == gcd(5, 5) == 5
