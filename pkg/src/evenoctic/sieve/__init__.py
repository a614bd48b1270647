"""Squarefree values of gate polynomials: parsing, local densities and counting."""

from .grammar import FactoredPoly, ParseError, ValidationError, parse_factored
from .local import (
    Density,
    density,
    find_obstruction,
    linear_factor_count,
    obstructions_exhaustive,
    rho,
    rho_bruteforce,
    rho_table,
)
from .scan import scan, scan_bruteforce

__all__ = [
    "Density",
    "FactoredPoly",
    "ParseError",
    "ValidationError",
    "density",
    "find_obstruction",
    "linear_factor_count",
    "obstructions_exhaustive",
    "parse_factored",
    "rho",
    "rho_bruteforce",
    "rho_table",
    "scan",
    "scan_bruteforce",
]
