"""Shared fixtures and oracles."""

import itertools

import pytest

from evenoctic.polyring.intpoly import IntPoly


def squarefree_oracle(n: int) -> bool:
    """True iff no d^2 (2 <= d <= 1000) divides n; exact for |n| <= 10**6."""
    n = abs(n)
    d = 2
    while d * d <= n and d <= 1000:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def monic_polys_mod_p(deg: int, p: int):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


def poly_mul_mod(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def poly_divides_mod(g, f, p):
    """Does monic g divide f over F_p? (long division)"""
    r = [c % p for c in f]
    dg = len(g) - 1
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c:
            for i in range(dg + 1):
                r[k - dg + i] = (r[k - dg + i] - c * g[i]) % p
    return not any(r[:dg])


def irreducible_mod_p_oracle(g, p):
    """No monic divisor of degree 1..deg/2, by exhaustive search."""
    d = len(g) - 1
    return all(not poly_divides_mod(h, g, p) for k in range(1, d // 2 + 1) for h in monic_polys_mod_p(k, p))


@pytest.fixture
def P():
    """Build IntPoly from highest-degree-first coefficients."""
    return lambda *c: IntPoly.from_high(c)
