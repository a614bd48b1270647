"""Exact integer polynomial arithmetic: discriminants, F_p factorization, Zassenhaus."""

from .disc import discriminant, resultant, swan_disc
from .gfp import ModPFactorization, factor_mod_p
from .intpoly import IntPoly, even_reciprocal, even_trinomial, reciprocal_quartic
from .zassenhaus import factor_squarefree, is_irreducible_Q

__all__ = [
    "IntPoly",
    "ModPFactorization",
    "discriminant",
    "even_reciprocal",
    "even_trinomial",
    "factor_mod_p",
    "factor_squarefree",
    "is_irreducible_Q",
    "reciprocal_quartic",
    "resultant",
    "swan_disc",
]
