"""Polynomials over the prime field F_p.

A polynomial is a list of ints in [0, p), lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.  All functions take the
modulus explicitly and never mutate their arguments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..arith import factor as _factor_int

Poly = list


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def reduce(coeffs, p):
    return trim(c % p for c in coeffs)


def is_one(f):
    return len(f) == 1 and f[0] == 1


def deg(f):
    return len(f) - 1


def add(f, g, p):
    n = max(len(f), len(g))
    return trim(((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n))


def sub(f, g, p):
    n = max(len(f), len(g))
    return trim(((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n))


def scale(f, c, p):
    c %= p
    if c == 0:
        return []
    return [x * c % p for x in f]


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(x % p for x in out)


def monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [x * inv % p for x in f]


def divmod_(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) <= dg:
        return [], trim(r)
    inv = pow(g[-1], -1, p)
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k] * inv % p
        if c:
            q[k - dg] = c
            for j in range(dg + 1):
                r[k - dg + j] = (r[k - dg + j] - c * g[j]) % p
    return trim(q), trim(r[:dg])


def rem(f, g, p):
    return divmod_(f, g, p)[1]


def quo(f, g, p):
    q, r = divmod_(f, g, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def gcd(f, g, p):
    """Monic gcd (zero if both are zero)."""
    while g:
        f, g = g, rem(f, g, p)
    return monic(f, p)


def mulmod(f, g, m, p):
    return rem(mul(f, g, p), m, p)


def powmod(f, e, m, p):
    result = [1]
    base = rem(f, m, p)
    while e:
        if e & 1:
            result = mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = mulmod(base, base, m, p)
    return rem(result, m, p)


def derivative(f, p):
    return trim(i * c % p for i, c in enumerate(f) if i)


def evaluate(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def pth_root(f, p):
    # Frobenius is the identity on F_p coefficients.
    return trim(f[i] for i in range(0, len(f), p))


def frobenius_matrix(f, p):
    """Rows x^(i*p) mod f for i < deg f, f monic."""
    n = len(f) - 1
    xp = powmod([0, 1], p, f, p)
    rows = [[1]]
    for _ in range(1, n):
        rows.append(mulmod(rows[-1], xp, f, p))
    return [r + [0] * (n - len(r)) for r in rows]


def apply_frobenius(h, Q, p):
    """h^p mod f given the Frobenius matrix of f."""
    n = len(Q)
    out = [0] * n
    for i, c in enumerate(h):
        if c:
            row = Q[i]
            for j in range(n):
                out[j] += c * row[j]
    return trim(x % p for x in out)


def _rank_mod_p(rows, p):
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [(x - c * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def berlekamp_count(f, p):
    """Number of distinct irreducible factors of a monic squarefree f."""
    n = len(f) - 1
    if n <= 1:
        return n
    Q = frobenius_matrix(f, p)
    for i in range(n):
        Q[i][i] = (Q[i][i] - 1) % p
    return n - _rank_mod_p(Q, p)


def squarefree_decomposition(f, p):
    """[(g, e), ...] with monic squarefree pairwise coprime g and f = lc * prod g^e."""
    f = monic(f, p)
    out: dict[int, list] = {}

    def push(g, e):
        if len(g) > 1:
            out[e] = mul(out[e], g, p) if e in out else g

    def rec(f, mult):
        if len(f) <= 1:
            return
        df = derivative(f, p)
        if not df:
            rec(pth_root(f, p), mult * p)
            return
        c = gcd(f, df, p)
        w = quo(f, c, p)
        i = 1
        while len(w) > 1:
            y = gcd(w, c, p)
            z = quo(w, y, p)
            push(z, i * mult)
            i += 1
            w = y
            c = quo(c, y, p)
        if len(c) > 1:
            rec(pth_root(c, p), mult * p)

    rec(f, 1)
    return [(g, e) for e, g in sorted(out.items())]


def distinct_degree(f, p):
    """[(g_d, d)]: g_d is the product of the degree-d irreducible factors of f.

    f must be monic and squarefree.
    """
    out = []
    if len(f) <= 1:
        return out
    h = [0, 1]
    d = 0
    rest = f
    Q = frobenius_matrix(f, p)
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = apply_frobenius(h, Q, p)  # x^(p^d) mod f
        g = gcd(rest, sub(rem(h, rest, p), [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            rest = quo(rest, g, p)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _trace_map(a, d, m, p):
    # sum_{i<d} a^(2^i) mod m, for p == 2
    t = rem(a, m, p)
    acc = t
    for _ in range(d - 1):
        t = mulmod(t, t, m, p)
        acc = add(acc, t, p)
    return acc


def equal_degree(g, d, p, rng: random.Random):
    """Split monic squarefree g, all of whose factors have degree d."""
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        a = trim(rng.randrange(p) for _ in range(n))
        if len(a) <= 1:
            continue
        if p == 2:
            b = _trace_map(a, d, g, p)
        else:
            b = sub(powmod(a, (p**d - 1) // 2, g, p), [1], p)
        h = gcd(g, b, p)
        if 1 < len(h) < len(g):
            break
    return equal_degree(h, d, p, rng) + equal_degree(quo(g, h, p), d, p, rng)


def is_irreducible(f, p) -> bool:
    """Rabin's test for monic f over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    Q = frobenius_matrix(f, p)
    powers = [[0, 1]]
    for _ in range(n):
        powers.append(apply_frobenius(powers[-1], Q, p))
    if trim(rem(powers[n], f, p)) != [0, 1]:
        return False
    for q, _ in _factor_int(n).factors:
        h = sub(powers[n // q], [0, 1], p)
        if not is_one(gcd(f, h, p)):
            return False
    return True


def canonical_key(f):
    return (len(f), tuple(f))


@dataclass(frozen=True)
class ModPFactorization:
    """``f mod p = unit * prod(g**e)`` with monic irreducible g, canonically sorted."""

    modulus: int
    unit: int
    factors: tuple[tuple[tuple[int, ...], int], ...]

    def expand(self) -> list[int]:
        out = [self.unit % self.modulus]
        for g, e in self.factors:
            for _ in range(e):
                out = mul(out, list(g), self.modulus)
        return out

    @property
    def radical(self) -> list[int]:
        """Product of the distinct irreducible factors."""
        out = [1]
        for g, _ in self.factors:
            out = mul(out, list(g), self.modulus)
        return out

    def degrees(self) -> list[int]:
        return [len(g) - 1 for g, e in self.factors for _ in range(e)]

    def linear_count(self) -> int:
        """Number of linear factors counted with multiplicity."""
        return sum(e for g, e in self.factors if len(g) == 2)


def seeded_rng(coeffs, p) -> random.Random:
    return random.Random(f"{tuple(coeffs)}|{p}")


def factor_mod_p(f, p, verify: bool = True) -> ModPFactorization:
    """Factor an integer polynomial (coefficient sequence or IntPoly) modulo p."""
    coeffs = tuple(getattr(f, "coeffs", f))
    fp = reduce(coeffs, p)
    if not fp:
        raise ValueError(f"polynomial vanishes modulo {p}")
    unit = fp[-1]
    rng = seeded_rng(coeffs, p)
    found = []
    for g, e in squarefree_decomposition(fp, p):
        for h, d in distinct_degree(g, p):
            for irr in equal_degree(h, d, p, rng):
                found.append((tuple(irr), e))
    found.sort(key=lambda ge: canonical_key(ge[0]))
    result = ModPFactorization(p, unit, tuple(found))
    if verify:
        if result.expand() != fp:
            raise AssertionError("factorization does not multiply back")
        for g, _ in found:
            if not is_irreducible(list(g), p):
                raise AssertionError(f"factor {g} not irreducible mod {p}")
    return result


def roots(f, p):
    """Distinct roots in [0, p) of f over F_p, sorted; f must be nonzero mod p."""
    f = monic(reduce(f, p), p)
    if not f:
        raise ValueError("zero polynomial has every root")
    if len(f) == 1:
        return []
    if len(f) == 2:
        return [(-f[0]) % p]
    if p <= 2 * len(f):
        return [x for x in range(p) if evaluate(f, x, p) == 0]
    g = gcd(f, sub(powmod([0, 1], p, f, p), [0, 1], p), p)
    if len(g) <= 1:
        return []
    rng = seeded_rng(f, p)
    lin = equal_degree(g, 1, p, rng)
    return sorted((-h[0]) % p for h in lin)
