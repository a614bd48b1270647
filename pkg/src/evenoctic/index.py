"""Index divisibility at a prime: Dedekind's criterion and the trinomial shortcut.

Both tests answer the same question, whether q divides [Z_K : Z[theta]], and
return a certificate recording every intermediate quantity so a reader can
replay the decision by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polyring import gfp
from .polyring.disc import swan_disc
from .polyring.gfp import ModPFactorization, factor_mod_p
from .polyring.intpoly import IntPoly, even_trinomial


@dataclass(frozen=True)
class DedekindCertificate:
    prime: int
    factorization: ModPFactorization
    h1: IntPoly
    h2: IntPoly
    F: IntPoly
    gcd_mod_q: tuple[int, ...]
    divides_index: bool

    @property
    def passes(self) -> bool:
        """True when q does not divide the index."""
        return not self.divides_index

    def to_dict(self) -> dict:
        return {
            "kind": "dedekind",
            "prime": self.prime,
            "factors_mod_q": [[list(g), e] for g, e in self.factorization.factors],
            "h1": list(self.h1.coeffs),
            "h2": list(self.h2.coeffs),
            "F": list(self.F.coeffs),
            "gcd_mod_q": list(self.gcd_mod_q),
            "divides_index": self.divides_index,
        }


def _check_lift(h: IntPoly, target: list[int], q: int, name: str) -> None:
    if not h.is_monic():
        raise ValueError(f"{name} must be monic")
    if h.reduce(q) != target:
        raise ValueError(f"{name} does not reduce to the required residue mod {q}")


def dedekind_at(T: IntPoly, q: int, lifts: tuple[IntPoly, IntPoly] | None = None) -> DedekindCertificate:
    """Dedekind's criterion for monic T at the prime q.

    By default h1 and h2 are the canonical lifts with coefficients in [0, q).
    ``lifts`` overrides them with any other monic lifts of the same residues;
    the verdict does not depend on the choice.
    """
    if not T.is_monic():
        raise ValueError("Dedekind's criterion needs a monic polynomial")
    fac = factor_mod_p(T, q)
    rad = fac.radical
    cofactor = gfp.quo(T.reduce(q), rad, q)
    if lifts is None:
        h1, h2 = IntPoly(rad), IntPoly(cofactor)
    else:
        h1, h2 = lifts
        _check_lift(h1, rad, q, "h1")
        _check_lift(h2, cofactor, q, "h2")
    F = (h1 * h2 - T).exact_div_scalar(q)
    g = gfp.gcd(gfp.gcd(F.reduce(q), rad, q), cofactor, q)
    return DedekindCertificate(
        prime=q,
        factorization=fac,
        h1=h1,
        h2=h2,
        F=F,
        gcd_mod_q=tuple(g),
        divides_index=len(g) > 1,
    )


# ------------------------------------------------------------------ JKS octic


@dataclass(frozen=True)
class JKSClauseResult:
    prime: int
    clause: int
    passes: bool
    data: dict = field(default_factory=dict)

    @property
    def divides_index(self) -> bool:
        return not self.passes

    def to_dict(self) -> dict:
        return {
            "kind": "jks",
            "prime": self.prime,
            "clause": self.clause,
            "pass": self.passes,
            "data": {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(self.data.items())},
        }


def _exact_power(q: int, n: int) -> int:
    """q**j with q**j || n."""
    out = 1
    while n % q == 0:
        n //= q
        out *= q
    return out


def jks_at(a: int, b: int, q: int) -> JKSClauseResult:
    """The five-clause index test for x^8 + a x^4 + b at a prime q dividing its discriminant."""
    disc = swan_disc(8, 4, a, b)
    if disc == 0:
        raise ValueError("x^8 + a x^4 + b has zero discriminant")
    if disc % q:
        raise ValueError(f"{q} does not divide the discriminant")
    qa, qb = a % q == 0, b % q == 0
    if qa and qb:
        return JKSClauseResult(q, 1, b % (q * q) != 0)
    if qa:
        # For odd q this branch never divides the discriminant, so only q = 2 reaches it.
        a2 = a // q
        b1 = (b + (-b) ** _exact_power(q, 8)) // q
        ok = (a2 % q == 0 and b1 % q != 0) or (a2 * (-b * a2 * a2 - b1 * b1)) % q != 0
        return JKSClauseResult(q, 2, ok, {"a2": a2, "b1": b1})
    if qb:
        a1 = (a + (-a) ** _exact_power(q, 4)) // q
        b2 = b // q
        ok = (a1 % q == 0 and b2 % q != 0) or (a1 * b2**3 * (-a * a1 + b2)) % q != 0
        return JKSClauseResult(q, 3, ok, {"a1": a1, "b2": b2})
    if q == 2:
        x = IntPoly.x()
        H1 = IntPoly((b, a, 1))
        H2 = (a * x**4 + b + (-a * x - b) ** 4).exact_div_scalar(2)
        h1, h2 = H1.reduce(2), H2.reduce(2)
        g = gfp.gcd(h1, h2, 2) if h2 else gfp.monic(h1, 2)
        return JKSClauseResult(q, 4, len(g) == 1, {"H1_mod_2": tuple(h1), "H2_mod_2": tuple(h2)})
    return JKSClauseResult(q, 5, (a * a - 4 * b) % (q * q) != 0)


def dedekind_on_trinomial(a: int, b: int, q: int) -> DedekindCertificate:
    """Dedekind's criterion on x^8 + a x^4 + b; the independent check for :func:`jks_at`."""
    return dedekind_at(even_trinomial(a, b), q)
