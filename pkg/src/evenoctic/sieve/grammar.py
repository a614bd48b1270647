"""Parser for factored gate polynomials such as ``(2t+9)(2t-3)(8t-13)``.

Grammar (whitespace is ignored everywhere)::

    product := factor+
    factor  := '(' poly ')'
    poly    := sign? term (sign term)*
    term    := INT ('*'? 't' power?)? | 't' power?
    power   := '^' INT                      (exponent 0..3)
    sign    := '+' | '-'

Each factor is validated: non-constant, degree at most 3, primitive and
irreducible over Z, and not a repeat (up to sign) of another factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..arith import divisors
from ..polyring.intpoly import IntPoly

MAX_FACTOR_DEGREE = 3


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


class ValidationError(ValueError):
    """The parsed product violates a hypothesis of the squarefree-values theorem."""


@dataclass(frozen=True)
class FactoredPoly:
    factors: tuple[IntPoly, ...]
    source_text: str = ""

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def expand(self) -> IntPoly:
        out = IntPoly((1,))
        for f in self.factors:
            out = out * f
        return out

    def __call__(self, t: int) -> int:
        out = 1
        for f in self.factors:
            out *= f(t)
        return out

    def eval_mod(self, t: int, m: int) -> int:
        out = 1
        for f in self.factors:
            out = out * f.eval_mod(t, m) % m
        return out

    def to_str(self) -> str:
        return "".join(f"({f.to_str('t').replace(' ', '')})" for f in self.factors)

    def __str__(self):
        return self.to_str()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def product(self) -> list[IntPoly]:
        out = []
        if not self.peek():
            self.error("empty input")
        while self.peek():
            out.append(self.factor())
        return out

    def factor(self) -> IntPoly:
        self.expect("(")
        p = self.poly()
        self.expect(")")
        return p

    def poly(self) -> IntPoly:
        coeffs = [0] * (MAX_FACTOR_DEGREE + 1)
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            c, k = self.term()
            coeffs[k] += sign * c
            nxt = self.peek()
            if nxt in ("+", "-") and nxt:
                sign = -1 if nxt == "-" else 1
                self.pos += 1
                continue
            break
        return IntPoly(coeffs)

    def term(self) -> tuple[int, int]:
        ch = self.peek()
        if ch.isdigit():
            c = self.integer()
            nxt = self.peek()
            if nxt == "*":
                self.pos += 1
                if self.peek() != "t":
                    self.error("expected 't' after '*'")
            if self.peek() == "t":
                self.pos += 1
                return c, self.power()
            return c, 0
        if ch == "t":
            self.pos += 1
            return 1, self.power()
        self.error("expected a term")

    def power(self) -> int:
        if self.peek() != "^":
            return 1
        self.pos += 1
        at = self.pos
        k = self.integer()
        if k > MAX_FACTOR_DEGREE:
            self.pos = at
            self.error(f"exponent {k} exceeds {MAX_FACTOR_DEGREE}")
        return k


def has_rational_root(f: IntPoly) -> bool:
    """Rational root test for an integer polynomial with nonzero constant term."""
    c0, lc = f[0], f.lc
    if c0 == 0:
        return True
    for p in divisors(abs(c0)):
        for q in divisors(abs(lc)):
            for s in (1, -1):
                r = Fraction(s * p, q)
                acc = Fraction(0)
                for c in reversed(f.coeffs):
                    acc = acc * r + c
                if acc == 0:
                    return True
    return False


def _normalized(f: IntPoly) -> IntPoly:
    return -f if f.lc < 0 else f


def validate(factors, text: str = "") -> FactoredPoly:
    seen = set()
    for f in factors:
        if f.degree < 1:
            raise ValidationError(f"factor {f.to_str('t')} is constant")
        if f.degree > MAX_FACTOR_DEGREE:
            raise ValidationError(f"factor {f.to_str('t')} has degree above {MAX_FACTOR_DEGREE}")
        if gcd(*f.coeffs) != 1:
            raise ValidationError(f"factor {f.to_str('t')} is not primitive, hence reducible over Z")
        if f.degree > 1 and has_rational_root(f):
            raise ValidationError(f"factor {f.to_str('t')} is reducible over Z")
        key = _normalized(f)
        if key in seen:
            raise ValidationError(f"factor {f.to_str('t')} is repeated; factors must be distinct")
        seen.add(key)
    return FactoredPoly(tuple(factors), text)


def parse_factored(text: str) -> FactoredPoly:
    """Parse and validate a product of parenthesized polynomials in t."""
    return validate(_Parser(text).product(), text)
