"""Dense univariate polynomials over Z."""

from __future__ import annotations

import math
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Immutable polynomial with integer coefficients, ``coeffs[i]`` of x**i.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(int(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def from_high(cls, coeffs: Sequence[int]) -> "IntPoly":
        """Build from coefficients listed highest degree first."""
        return cls(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, deg: int, c: int = 1) -> "IntPoly":
        return cls([0] * deg + [c])

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    # ------------------------------------------------------------ inspection
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # ------------------------------------------------------------ arithmetic
    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] - other[i] for i in range(n))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod_monic(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division by a divisor with unit leading coefficient (exact over Z)."""
        if divisor.lc not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        r = list(self.coeffs)
        d = divisor.coeffs
        dn = len(d) - 1
        if len(r) <= dn:
            return IntPoly(), self
        q = [0] * (len(r) - dn)
        for k in range(len(r) - 1, dn - 1, -1):
            c = r[k] * d[-1]  # lc is +-1, its own inverse
            if c:
                q[k - dn] = c
                for j in range(dn + 1):
                    r[k - dn + j] -= c * d[j]
        return IntPoly(q), IntPoly(r[:dn])

    def exact_div_scalar(self, s: int) -> "IntPoly":
        if any(c % s for c in self.coeffs):
            raise ArithmeticError(f"{self} not divisible by {s}")
        return IntPoly(c // s for c in self.coeffs)

    def divides(self, other: "IntPoly") -> bool:
        """True iff self | other in Z[x] (self must be monic)."""
        _, r = other.divmod_monic(self)
        return r.is_zero()

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval_mod(self, t: int, m: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * t + c) % m
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose_power(self, k: int) -> "IntPoly":
        """self(x**k)."""
        out = [0] * (k * max(len(self.coeffs) - 1, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly(out)

    def reduce(self, p: int) -> list[int]:
        """Coefficients reduced into [0, p), trimmed (the F_p image)."""
        return list(_trim(c % p for c in self.coeffs))

    def norm2_sq(self) -> int:
        return sum(c * c for c in self.coeffs)

    def primitive_part(self) -> "IntPoly":
        g = self.content()
        if g == 0:
            return self
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)


def _coerce(v) -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly((v,))
    raise TypeError(f"cannot use {type(v).__name__} as IntPoly")


def even_trinomial(a: int, b: int) -> IntPoly:
    """x^8 + a x^4 + b."""
    return IntPoly((b, 0, 0, 0, a, 0, 0, 0, 1))


def even_reciprocal(a: int, b: int) -> IntPoly:
    """x^8 + a x^6 + b x^4 + a x^2 + 1."""
    return IntPoly((1, 0, a, 0, b, 0, a, 0, 1))


def reciprocal_quartic(a: int, b: int) -> IntPoly:
    """x^4 + a x^3 + b x^2 + a x + 1; the even reciprocal octic is this at x^2."""
    return IntPoly((1, a, b, a, 1))
