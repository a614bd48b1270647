"""Galois groups of irreducible even octics from coefficient conditions.

Two shapes are handled:

* ``F(x) = x^8 + a x^4 + b``, split three ways on whether b and sqrt(b) are
  squares;
* ``G(x) = x^8 + a x^6 + b x^4 + a x^2 + 1`` (a != 0), driven by
  ``W1 = b + 2 - 2a``, ``W2 = b + 2 + 2a`` and ``W3 = a^2 - 4b + 8``.

Every branch of the relevant decision tree is evaluated.  Exactly one must
fire; anything else raises :class:`ClassificationGap` instead of guessing.
"Square" means square in Z, and an expression with an irrational square root
(including a negative radicand) is never a square.

Callers are responsible for irreducibility; see :mod:`evenoctic.monogenic`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .arith import is_square, isqrt, primes_upto
from .polyring.intpoly import IntPoly, even_reciprocal, even_trinomial


class ClassificationGap(RuntimeError):
    """No branch, or more than one branch, of a decision tree matched."""


class Form(enum.Enum):
    EVEN_TRINOMIAL = "F"
    EVEN_RECIPROCAL = "G"

    @classmethod
    def parse(cls, text: str) -> "Form":
        key = text.strip().upper()
        for f in cls:
            if key in (f.value, f.name):
                return f
        raise ValueError(f"unknown form {text!r}; expected F or G")


@dataclass(frozen=True)
class OcticInput:
    form: Form
    a: int
    b: int

    def __post_init__(self):
        if self.form is Form.EVEN_RECIPROCAL and self.a == 0:
            raise ValueError("the reciprocal form needs a != 0")
        if self.form is Form.EVEN_TRINOMIAL and self.b == 0:
            raise ValueError("the trinomial form needs b != 0")

    def poly(self) -> IntPoly:
        if self.form is Form.EVEN_TRINOMIAL:
            return even_trinomial(self.a, self.b)
        return even_reciprocal(self.a, self.b)


FAMILIAR_NAMES = {
    2: "C2 x C4",
    3: "C2^3",
    4: "D4",
    6: "D8",
    8: "Q8 : C2",
    9: "C2 x D4",
    10: "C2^2 : C4",
    11: "C4 o D4",
    15: "C8 : C2^2",
    16: "C4.D4",
    17: "C4 wr C2",
    18: "C2^2 wr C2",
    22: "D4 o D4",
    26: "Hol(D4)",
}

GROUP_ORDERS = {2: 8, 3: 8, 4: 8, 6: 16, 8: 16, 9: 16, 10: 16, 11: 16, 15: 32, 16: 32, 17: 32, 18: 32, 22: 32, 26: 64}

X_F = (2, 3, 4, 6, 8, 9, 11, 15, 16, 17, 22, 26)
X_G = (2, 3, 4, 9, 10, 18)


@dataclass(frozen=True)
class GaloisLabel:
    x: int

    def __post_init__(self):
        if self.x not in FAMILIAR_NAMES:
            raise ValueError(f"8T{self.x} is not a group arising here")

    @property
    def familiar_name(self) -> str:
        return FAMILIAR_NAMES[self.x]

    @property
    def order(self) -> int:
        return GROUP_ORDERS[self.x]

    @property
    def tag(self) -> str:
        return f"8T{self.x}"

    def __str__(self):
        return self.tag

    @classmethod
    def parse(cls, text: str) -> "GaloisLabel":
        t = text.strip().upper()
        if not t.startswith("8T"):
            raise ValueError(f"bad label {text!r}")
        return cls(int(t[2:]))


@dataclass(frozen=True)
class RadicalExpr:
    """The real number ``u + v*sqrt(r)``."""

    u: int
    v: int = 0
    r: int = 0

    def integer_value(self) -> int | None:
        """The value when it is an integer, else None (irrational or non-real)."""
        if self.v == 0:
            return self.u
        if self.r < 0 or not is_square(self.r):
            return None
        return self.u + self.v * isqrt(self.r)

    def is_square(self) -> bool:
        val = self.integer_value()
        return val is not None and is_square(val)

    def is_nonzero_square(self) -> bool:
        val = self.integer_value()
        return val is not None and val > 0 and is_square(val)

    def scaled(self, k: int) -> "RadicalExpr":
        return RadicalExpr(k * self.u, k * self.v, self.r)


@dataclass(frozen=True)
class WTriple:
    w1: int
    w2: int
    w3: int


def w_triple(a: int, b: int) -> WTriple:
    return WTriple(b + 2 - 2 * a, b + 2 + 2 * a, a * a - 4 * b + 8)


def _decide(branches: dict[int, bool], what: str) -> GaloisLabel:
    fired = [x for x, ok in branches.items() if ok]
    if len(fired) != 1:
        detail = ", ".join(f"8T{x}" for x in fired) or "none"
        raise ClassificationGap(f"{what}: branches fired = {detail}")
    return GaloisLabel(fired[0])


def _exactly(n: int, flags) -> bool:
    return sum(1 for f in flags if f) == n


# --------------------------------------------------------------------- F form


def branches_F(a: int, b: int) -> dict[int, bool]:
    """Truth value of every branch of the F decision tree at (a, b)."""
    if b == 0:
        raise ValueError("b must be nonzero")
    sq = is_square
    if sq(b) and sq(isqrt(b)):
        s = isqrt(b)
        t2, t3, t4 = sq(-a * a + 4 * b), sq(a + 2 * s), sq(a - 2 * s)
        return {2: t2, 3: t3, 4: t4, 9: not (t2 or t3 or t4)}
    if sq(b):
        s = isqrt(b)
        p_plus, p_minus = sq(a + 2 * s), sq(a - 2 * s)
        m_neg, m_pos = sq(-a * s + 2 * b), sq(a * s + 2 * b)
        q_mm = sq(a * s - 2 * b)
        second = [
            sq(-a * a + 4 * b),
            sq(-a * s - 2 * b),
            sq((a * a - 4 * b) * s),
            q_mm,
            sq((4 * b - a * a) * s),
        ]
        first = [p_plus, p_minus, m_neg, m_pos]
        return {
            2: p_plus and q_mm,
            4: (p_plus and m_neg) or (p_minus and m_pos) or (m_neg and m_pos),
            9: (not sq((a * a - 4 * b) * s)) and _exactly(1, first),
            11: (not m_neg) and (not m_pos) and _exactly(1, second),
            22: not any(first + second),
        }
    d = a * a - 4 * b
    if sq(b * d):
        return {16: True, 17: False, 6: False, 8: False, 15: False, 26: False}
    if sq(-d):
        return {16: False, 17: True, 6: False, 8: False, 15: False, 26: False}
    r6 = [RadicalExpr(0, 2, -b), RadicalExpr(4 * b, 2, -b * d), RadicalExpr(4 * b, -2, -b * d)]
    r8 = [RadicalExpr(0, 2 * d, -b), RadicalExpr(-4 * b, 2, -b * d)]
    t6 = any(e.is_nonzero_square() for e in r6)
    t8 = any(e.is_nonzero_square() for e in r8)
    gate = sq(-b) or sq(-b * d)
    return {
        16: False,
        17: False,
        6: t6,
        8: t8,
        15: gate and not (t6 or t8),
        26: not gate,
    }


def classify_F(a: int, b: int) -> GaloisLabel:
    """Galois group of an irreducible x^8 + a x^4 + b."""
    return _decide(branches_F(a, b), f"x^8 + ({a})x^4 + ({b})")


# --------------------------------------------------------------------- G form


def branches_G(a: int, b: int) -> dict[int, bool]:
    """Truth value of every branch of the G decision tree at (a, b)."""
    if a == 0:
        raise ValueError("a must be nonzero")
    w = w_triple(a, b)
    w1, w2, w3 = w.w1, w.w2, w.w3
    singles = [is_square(w1), is_square(w2), is_square(w1 * w2)]
    products = [is_square(w1 * w3), is_square(w2 * w3), is_square(w1 * w2 * w3)]
    out = {
        2: _exactly(2, products),
        3: all(singles),
        10: _exactly(1, products),
        18: not any(singles) and not any(products),
    }
    out[4] = out[9] = False
    if _exactly(1, singles) and not any(products):
        if singles[0]:
            cands = [RadicalExpr(-a + 4, -2, w1).scaled(w2), RadicalExpr(-a + 4, 2, w1).scaled(w2)]
        elif singles[1]:
            cands = [RadicalExpr(-a - 4, -2, w2).scaled(w1), RadicalExpr(-a - 4, 2, w2).scaled(w1)]
        else:
            cands = [
                RadicalExpr(w2 * ((12 - 2 * b - w3) ** 2 - 4 * w1 * w2)),
                RadicalExpr(2 * b + w3 - 12, 2, w1 * w2).scaled(w2),
                RadicalExpr(2 * b + w3 - 12, -2, w1 * w2).scaled(w2),
            ]
        four = _exactly(1, (c.is_square() for c in cands))
        out[4], out[9] = four, not four
    return out


def classify_G(a: int, b: int) -> GaloisLabel:
    """Galois group of an irreducible x^8 + a x^6 + b x^4 + a x^2 + 1 (a != 0)."""
    return _decide(branches_G(a, b), f"x^8 + ({a})x^6 + ({b})x^4 + ({a})x^2 + 1")


def classify(inp: OcticInput) -> GaloisLabel:
    if inp.form is Form.EVEN_TRINOMIAL:
        return classify_F(inp.a, inp.b)
    return classify_G(inp.a, inp.b)


# ---------------------------------------------------------- Chebotarev check


def _mulmod_batch(A, B, f_low, p):
    # A, B: (P, n) residues; f_low: (P, n) low coefficients of the monic modulus.
    P, n = A.shape
    C = np.zeros((P, 2 * n - 1), dtype=np.int64)
    # Residues are below 2**24, so the n-term sums and the reduction steps below
    # stay inside int64 for n <= 8; reduce only where a value is reused.
    for i in range(n):
        C[:, i : i + n] += A[:, i : i + 1] * B
    C %= p[:, None]
    for k in range(2 * n - 2, n - 1, -1):
        c = C[:, k : k + 1] % p[:, None]
        C[:, k - n : k] -= c * f_low
    return C[:, :n] % p[:, None]


def split_completely_mask(f: IntPoly, primes) -> np.ndarray:
    """Boolean mask: f splits into distinct linear factors mod p (x^p = x mod f).

    Works on all primes at once; every prime must be below 2**24 so sums of
    products of residues stay inside int64.
    """
    if not f.is_monic():
        raise ValueError("polynomial must be monic")
    n = f.degree
    p = np.asarray(list(primes), dtype=np.int64)
    if n > 8:
        raise ValueError("degree above 8")
    if p.size and int(p.max()) >= 1 << 24:
        raise ValueError("primes must be below 2**24")
    f_low = np.array([[c % int(q) for c in f.coeffs[:n]] for q in p], dtype=np.int64).reshape(len(p), n)
    base = np.zeros((len(p), n), dtype=np.int64)
    base[:, 1 % n] = 1 if n > 1 else 0
    result = np.zeros((len(p), n), dtype=np.int64)
    result[:, 0] = 1
    e = p.copy()
    while (e > 0).any():
        bit = (e & 1).astype(bool)
        if bit.any():
            prod = _mulmod_batch(result, base, f_low, p)
            result = np.where(bit[:, None], prod, result)
        e >>= 1
        if (e > 0).any():
            base = _mulmod_batch(base, base, f_low, p)
    target = np.zeros((len(p), n), dtype=np.int64)
    target[:, 1] = 1
    return (result == target).all(axis=1)


def chebotarev_ratio(f: IntPoly, bound: int, disc: int) -> tuple[int, int]:
    """(number of primes p <= bound, p not dividing disc, where f splits completely; number tested)."""
    primes = [q for q in primes_upto(bound) if disc % q]
    mask = split_completely_mask(f, primes)
    return int(mask.sum()), len(primes)
