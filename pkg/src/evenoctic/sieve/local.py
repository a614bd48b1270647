"""Local data of a gate polynomial G at a prime l: rho_G(l^2), obstructions, C_G.

``rho`` counts unit roots of G modulo l^2 by lifting the roots modulo l:
writing z = r + k*l, Taylor expansion gives G(z) = G(r) + k*l*G'(r) (mod l^2),
so each root r mod l contributes one lift, l lifts, or none.
``rho_bruteforce`` evaluates G at every unit and is kept as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

import numpy as np

from ..arith import primes_upto
from ..polyring import gfp
from .grammar import FactoredPoly


def roots_mod(G: FactoredPoly, ell: int) -> list[int]:
    """Distinct roots of G modulo ell."""
    found: set[int] = set()
    for f in G.factors:
        fp = f.reduce(ell)
        if len(fp) > 1:
            found.update(gfp.roots(fp, ell))
    return sorted(found)


def unit_roots_mod_square(G: FactoredPoly, ell: int) -> list[int]:
    """Sorted z in (Z/l^2)* with G(z) = 0 mod l^2."""
    m = ell * ell
    Gx = G.expand()
    dG = Gx.derivative()
    out = []
    for r in roots_mod(G, ell):
        if r == 0:
            continue
        g0 = (Gx.eval_mod(r, m) // ell) % ell
        g1 = dG.eval_mod(r, ell)
        if g1:
            k = (-g0 * pow(g1, -1, ell)) % ell
            out.append(r + k * ell)
        elif g0 == 0:
            out.extend(r + k * ell for k in range(ell))
    return sorted(out)


def rho(G: FactoredPoly, ell: int) -> int:
    """rho_G(l^2): number of units z mod l^2 with G(z) = 0 mod l^2."""
    return len(unit_roots_mod_square(G, ell))


def rho_bruteforce(G: FactoredPoly, ell: int) -> int:
    """rho_G(l^2) by evaluating G at all l(l-1) units (l^2 below 10**8)."""
    m = ell * ell
    if m > 10**8:
        raise ValueError("exhaustive rho limited to l^2 <= 10**8")
    z = np.arange(m, dtype=np.int64)
    z = z[z % ell != 0]
    val = np.ones_like(z)
    for f in G.factors:
        acc = np.zeros_like(z)
        for c in reversed(f.coeffs):
            acc = (acc * z + c) % m
        val = val * acc % m
    return int((val == 0).sum())


def linear_factor_count(G: FactoredPoly, ell: int) -> int:
    """N_l: linear factors of G over F_l, counted with multiplicity."""
    n = 0
    for f in G.factors:
        fp = f.reduce(ell)
        if len(fp) > 1:
            n += gfp.factor_mod_p(fp, ell).linear_count()
    return n


def is_obstructed(G: FactoredPoly, ell: int) -> bool:
    return rho(G, ell) == ell * (ell - 1)


def find_obstruction(G: FactoredPoly) -> int | None:
    """Least prime with a local obstruction, or None.

    Only primes l <= (N_l + 2)/2 can be obstructed, and N_l <= deg G, so the
    search is finite.
    """
    for ell in primes_upto((G.degree + 2) // 2):
        if 2 * ell <= linear_factor_count(G, ell) + 2 and is_obstructed(G, ell):
            return ell
    return None


def obstructions_exhaustive(G: FactoredPoly, bound: int) -> list[int]:
    """Every obstructed prime l <= bound, found by brute-force rho."""
    return [ell for ell in primes_upto(bound) if rho_bruteforce(G, ell) == ell * (ell - 1)]


@dataclass(frozen=True)
class Density:
    """C_G truncated to primes l <= cutoff."""

    value: Fraction
    cutoff: int
    obstruction: int | None

    def decimal(self, digits: int = 12) -> str:
        with localcontext() as ctx:
            ctx.prec = digits
            return str(Decimal(self.value.numerator) / Decimal(self.value.denominator))

    def __float__(self):
        return float(self.value)


def rho_table(G: FactoredPoly, cutoff: int) -> list[tuple[int, int]]:
    return [(ell, rho(G, ell)) for ell in primes_upto(cutoff)]


def density(G: FactoredPoly, cutoff: int) -> Density:
    """prod over primes l <= cutoff of (1 - rho_G(l^2) / (l(l-1)))."""
    if cutoff < 2:
        raise ValueError("cutoff must be at least 2")
    value = Fraction(1)
    for ell, r in rho_table(G, cutoff):
        value *= 1 - Fraction(r, ell * (ell - 1))
    return Density(value, cutoff, find_obstruction(G))
