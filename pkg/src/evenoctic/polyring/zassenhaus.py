"""Factorization and irreducibility over Q for small-degree monic polynomials.

Classic Zassenhaus: factor modulo a good prime, Hensel-lift the modular
factors quadratically past the Mignotte bound, then recombine subsets.
"""

from __future__ import annotations

import itertools
import math

from ..arith import primes_upto
from . import gfp
from .disc import discriminant
from .intpoly import IntPoly

MAX_DEGREE = 8
CANDIDATE_PRIMES = 25


# ----------------------------------------------------- arithmetic mod M (any M)


def _mod(f, M):
    return gfp.trim(c % M for c in f)


def _mul(f, g, M):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _mod(out, M)


def _add(f, g, M):
    n = max(len(f), len(g))
    return _mod([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], M)


def _sub(f, g, M):
    n = max(len(f), len(g))
    return _mod([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], M)


def _divmod_monic(f, g, M):
    # g monic modulo M
    r = list(f)
    dg = len(g) - 1
    if len(r) <= dg:
        return [], _mod(r, M)
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k] % M
        if c:
            q[k - dg] = c
            for j in range(dg + 1):
                r[k - dg + j] -= c * g[j]
    return _mod(q, M), _mod(r[:dg], M)


def _xgcd_mod_p(g, h, p):
    """s, t with s*g + t*h = 1 over F_p (g, h coprime), deg s < deg h, deg t < deg g."""
    r0, r1 = gfp.reduce(g, p), gfp.reduce(h, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gfp.divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gfp.sub(s0, gfp.mul(q, s1, p), p)
        t0, t1 = t1, gfp.sub(t0, gfp.mul(q, t1, p), p)
    if len(r0) != 1:
        raise ArithmeticError("factors not coprime modulo p")
    inv = pow(r0[0], -1, p)
    return gfp.scale(s0, inv, p), gfp.scale(t0, inv, p)


def _hensel_step(f, g, h, s, t, m):
    """Lift f = g*h, s*g + t*h = 1 from modulus m to m*m (g, h monic)."""
    M = m * m
    e = _sub(f, _mul(g, h, M), M)
    q, r = _divmod_monic(_mul(s, e, M), h, M)
    g2 = _add(g, _add(_mul(t, e, M), _mul(q, g, M), M), M)
    h2 = _add(h, r, M)
    b = _sub(_add(_mul(s, g2, M), _mul(t, h2, M), M), [1], M)
    c, d = _divmod_monic(_mul(s, b, M), h2, M)
    s2 = _sub(s, d, M)
    t2 = _sub(t, _add(_mul(t, b, M), _mul(c, g2, M), M), M)
    return g2, h2, s2, t2


def hensel_lift(f: list[int], factors: list[list[int]], p: int, target: int) -> tuple[list[list[int]], int]:
    """Lift monic factors of monic f modulo p to a modulus p^(2^j) >= target.

    Returns the lifted factors (same order) and the modulus reached.
    """
    M = p
    while M < target:
        M *= M
    return _lift_tree(_mod(f, M), factors, p, M), M


def _lift_tree(f, factors, p, M):
    if len(factors) == 1:
        return [_mod(f, M)]
    k = len(factors) // 2
    left, right = factors[:k], factors[k:]
    g = [1]
    for x in left:
        g = gfp.mul(g, x, p)
    h = [1]
    for x in right:
        h = gfp.mul(h, x, p)
    s, t = _xgcd_mod_p(g, h, p)
    m = p
    while m < M:
        g, h, s, t = _hensel_step(_mod(f, m * m), g, h, s, t, m)
        m *= m
    return _lift_tree(g, left, p, M) + _lift_tree(h, right, p, M)


# ------------------------------------------------------------ recombination


def mignotte_bound(f: IntPoly) -> int:
    """Integer upper bound on any coefficient of a factor of f: 2^deg * ||f||_2."""
    return (2**f.degree) * (math.isqrt(f.norm2_sq()) + 1)


def _symmetric(f, M):
    half = M // 2
    return IntPoly(c - M if c > half else c for c in f)


def choose_prime(f: IntPoly, disc: int | None = None) -> tuple[int, int]:
    """(p, r): the admissible prime among the first 25 with fewest modular factors.

    Ties go to the smaller prime.  If all 25 divide the discriminant the
    search continues through larger primes until one is admissible.
    """
    if disc is None:
        disc = discriminant(f)
    if disc == 0:
        raise ValueError("polynomial is not squarefree")
    best = None
    primes = primes_upto(97)
    for p in primes:
        if disc % p == 0 or f.lc % p == 0:
            continue
        r = gfp.berlekamp_count(gfp.monic(f.reduce(p), p), p)
        if best is None or r < best[1]:
            best = (p, r)
        if r == 1:
            break
    if best is None:
        limit = 200
        while best is None:
            for p in primes_upto(limit):
                if p > 97 and disc % p:
                    return p, gfp.berlekamp_count(gfp.monic(f.reduce(p), p), p)
            limit *= 2
    return best


def factor_squarefree(f: IntPoly, prime: tuple[int, int] | None = None) -> list[IntPoly]:
    """Irreducible factors over Z of a monic squarefree f (sorted canonically)."""
    if not f.is_monic():
        raise ValueError("polynomial must be monic")
    if f.degree <= 1:
        return [f]
    p, r = prime if prime is not None else choose_prime(f)
    if r == 1:
        return [f]
    modular = [list(g) for g, _ in gfp.factor_mod_p(f, p).factors]
    bound = 2 * mignotte_bound(f) + 1
    lifted, M = hensel_lift(list(f.coeffs), modular, p, bound)
    return _recombine(f, lifted, M)


def _plausible(g: IntPoly, f: IntPoly) -> bool:
    # constant-term divisibility screen before the trial division
    if not g.coeffs:
        return False
    if f[0] == 0:
        return True
    return g[0] != 0 and f[0] % g[0] == 0


def _recombine(f: IntPoly, lifted, M):
    found = []
    remaining = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(remaining):
        hit = None
        for subset in itertools.combinations(remaining, s):
            g = [1]
            for i in subset:
                g = _mul(g, lifted[i], M)
            cand = _symmetric(g, M)
            if _plausible(cand, f) and cand.divides(f):
                hit = subset, cand
                break
            comp = [1]
            for i in remaining:
                if i not in subset:
                    comp = _mul(comp, lifted[i], M)
            cand = _symmetric(comp, M)
            if _plausible(cand, f) and cand.divides(f):
                hit = tuple(i for i in remaining if i not in subset), cand
                break
        if hit is None:
            s += 1
            continue
        subset, g = hit
        found.append(g)
        f, _ = f.divmod_monic(g)
        remaining = [i for i in remaining if i not in subset]
    found.append(f)
    return sorted(found, key=lambda g: (g.degree, g.coeffs))


def is_irreducible_Q(f: IntPoly) -> bool:
    """Irreducibility over Q of a monic integer polynomial of degree <= 8."""
    if not f.is_monic():
        raise ValueError("polynomial must be monic")
    if f.degree > MAX_DEGREE:
        raise ValueError(f"degree {f.degree} exceeds {MAX_DEGREE}")
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    if f[0] == 0:
        return False
    disc = discriminant(f)
    if disc == 0:
        return False  # gcd(f, f') is a proper factor
    p, r = choose_prime(f, disc)
    if r == 1:
        return True
    return len(factor_squarefree(f, (p, r))) == 1
