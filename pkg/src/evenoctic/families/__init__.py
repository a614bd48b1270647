"""Finite classification lists and infinite monogenic families."""

from .catalog import (
    CatalogRow,
    RowResult,
    TableReport,
    load_catalog,
    parse_catalog,
    scan_for_label,
    verify_tables,
)
from .infinite import (
    FAMILIES,
    GATE_POLYNOMIALS,
    DistinctnessReport,
    FamilyId,
    FamilySpec,
    Member,
    distinctness,
    enumerate_family,
)

__all__ = [
    "FAMILIES",
    "GATE_POLYNOMIALS",
    "CatalogRow",
    "DistinctnessReport",
    "FamilyId",
    "FamilySpec",
    "Member",
    "RowResult",
    "TableReport",
    "distinctness",
    "enumerate_family",
    "load_catalog",
    "parse_catalog",
    "scan_for_label",
    "verify_tables",
]
