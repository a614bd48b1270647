"""Galois groups and monogenicity of even octic polynomials."""

__version__ = "0.1.0"
