"""Integer utilities."""

import math
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import squarefree_oracle
from evenoctic.arith import (
    TriBool,
    crt_pair,
    divisors,
    factor,
    integer_root,
    is_prime,
    is_square,
    is_squarefree,
    isqrt,
    next_prime,
    perfect_power,
    primes_upto,
    sqrt_mod_prime,
    trial_bound_from_env,
    valuation,
)


@pytest.mark.parametrize("n, expected", [(16, True), (0, True), (-4, False), (221, False)])
def test_is_square_examples(n, expected):
    assert is_square(n) is expected


def test_is_square_sweep():
    for n in range(2, 10**4 + 1):
        assert is_square(n * n)
        assert not is_square(n * n + 1)


@given(st.integers(min_value=0, max_value=10**60))
def test_isqrt_floor(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) ** 2


def test_isqrt_rejects_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


@pytest.mark.parametrize(
    "n, factors",
    [
        (45, ((3, 2), (5, 1))),
        (2**24 * 17**2, ((2, 24), (17, 2))),
        (4352, ((2, 8), (17, 1))),
        (-12, ((2, 2), (3, 1))),
        (1, ()),
    ],
)
def test_factor_examples(n, factors):
    fr = factor(n, 10**6)
    assert fr.factors == factors
    assert fr.cofactor == 1


def test_factor_zero():
    with pytest.raises(ValueError):
        factor(0)


def test_factor_beyond_trial_bound_uses_rho():
    p, q = 1_000_003, 1_000_033
    fr = factor(p * q * 4, trial_bound=100)
    assert fr.factors == ((2, 2), (p, 1), (q, 1))


def test_factor_large_semiprime():
    p, q = 2**61 - 1, 2**31 - 1
    fr = factor(p * q)
    assert fr.factors == ((q, 1), (p, 1)) and fr.complete


@given(st.integers(min_value=1, max_value=10**15) | st.integers(min_value=-(10**15), max_value=-1))
@settings(max_examples=300)
def test_factor_reassembles(n):
    fr = factor(n)
    assert fr.value() == abs(n)
    ps = fr.primes
    assert list(ps) == sorted(set(ps))
    assert all(is_prime(p) for p in ps)


@pytest.mark.parametrize("n, expected", [(221, TriBool.TRUE), (45, TriBool.FALSE), (1, TriBool.TRUE), (-2, TriBool.TRUE)])
def test_is_squarefree_examples(n, expected):
    assert is_squarefree(n, 10**6) is expected


def test_is_squarefree_zero():
    with pytest.raises(ValueError):
        is_squarefree(0)


@given(st.integers(min_value=-(10**6), max_value=10**6).filter(bool))
@settings(max_examples=2000)
def test_is_squarefree_matches_oracle(n):
    assert is_squarefree(n) is TriBool.of(squarefree_oracle(n))


def test_is_squarefree_exhaustive_small_range():
    for n in range(1, 20001):
        assert is_squarefree(n) is TriBool.of(squarefree_oracle(n))


def test_squarefree_large_square_cofactor():
    p = 1_000_003
    assert is_squarefree(p * p * 3, trial_bound=100) is TriBool.FALSE
    assert is_squarefree(p * 1_000_033, trial_bound=100) is TriBool.TRUE


def test_tribool_has_no_truth_value():
    with pytest.raises(TypeError):
        bool(TriBool.TRUE)


def test_primes_and_helpers():
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert next_prime(13) == 17 and next_prime(1) == 2
    assert valuation(4352, 2) == 8 and valuation(-45, 3) == 2
    assert integer_root(10**30 + 5, 3) == 10**10
    assert perfect_power(3**7) == (3, 7)
    assert perfect_power(12) is None
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert crt_pair(2, 3, 3, 5) == 8


def test_primes_upto_threadsafe():
    results = []

    def work():
        results.append(len(primes_upto(200_000)))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert set(results) == {17984}


@given(st.sampled_from(primes_upto(2000)), st.integers(min_value=0, max_value=10**6))
def test_sqrt_mod_prime(p, n):
    r = sqrt_mod_prime(n, p)
    if r is None:
        assert all((x * x - n) % p for x in range(p))
    else:
        assert (r * r - n) % p == 0


def test_is_prime_vs_sieve():
    table = set(primes_upto(50_000))
    assert all(is_prime(n) is (n in table) for n in range(-5, 50_000))


def test_trial_bound_env(monkeypatch):
    monkeypatch.setenv("OCTIC_TRIAL_BOUND", "5000")
    assert trial_bound_from_env() == 5000
    monkeypatch.delenv("OCTIC_TRIAL_BOUND")
    assert trial_bound_from_env() == 10**6


def test_gcd_sanity():
    # reassembled factorization of a product shares its gcd structure
    a, b = 2**5 * 3 * 7, 2**3 * 7**2
    fa, fb = dict(factor(a).factors), dict(factor(b).factors)
    g = math.prod(p ** min(e, fb.get(p, 0)) for p, e in fa.items())
    assert g == math.gcd(a, b)
