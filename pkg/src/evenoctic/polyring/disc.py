"""Resultants and discriminants over Z."""

from __future__ import annotations

import math

from .intpoly import IntPoly


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """lc(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions."""
    r = list(a.coeffs)
    db = b.degree
    lb = b.lc
    delta = a.degree - db
    if delta < 0:
        return a
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        r = [x * lb for x in r]
        if c:
            for j in range(db + 1):
                r[k - db + j] -= c * b.coeffs[j]
        r.pop()
    # one lb factor applied per step; steps = delta + 1
    return IntPoly(r)


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) by the subresultant pseudo-remainder sequence."""
    if a.is_zero() or b.is_zero():
        return 0
    ca, cb = a.content(), b.content()
    if a.lc < 0:
        ca = -ca
    if b.lc < 0:
        cb = -cb
    t = ca ** b.degree * cb ** a.degree
    A = a.exact_div_scalar(ca)
    B = b.exact_div_scalar(cb)
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -1
    if B.degree == 0:
        return s * t * B.lc ** A.degree
    g = h = 1
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = pseudo_remainder(A, B)
        A = B
        if R.is_zero():
            return 0
        B = R.exact_div_scalar(g * h**delta)
        g = A.lc
        if delta == 0:
            pass
        else:
            h = g**delta // h ** (delta - 1)
        if B.degree == 0:
            n = A.degree
            hn = B.lc**n // h ** (n - 1) if n >= 1 else 1
            return s * t * hn


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs a polynomial of degree >= 1")
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, f.lc)
    if r:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return q


def swan_disc(n: int, m: int, A: int, B: int) -> int:
    """Discriminant of the trinomial x^n + A x^m + B (0 < m < n)."""
    if not 0 < m < n:
        raise ValueError("need 0 < m < n")
    d = math.gcd(n, m)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    inner = n ** (n // d) * B ** ((n - m) // d) - (-1) ** (n // d) * (n - m) ** ((n - m) // d) * m ** (
        m // d
    ) * A ** (n // d)
    return sign * B ** (m - 1) * inner**d
