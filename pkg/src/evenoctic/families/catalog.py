"""Finite classification lists and their verification."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources

from ..arith import factor
from ..galois import ClassificationGap, Form, GaloisLabel, OcticInput, branches_F, branches_G
from ..monogenic import Status, analyze
from ..polyring.intpoly import even_reciprocal, even_trinomial
from ..polyring.zassenhaus import is_irreducible_Q

NONE_SCAN_BOUND = 60


@dataclass(frozen=True)
class CatalogRow:
    form: Form
    a: int | None
    b: int | None
    label: GaloisLabel
    monogenic: bool

    @property
    def is_none_row(self) -> bool:
        return self.a is None

    def describe(self) -> str:
        if self.is_none_row:
            return f"{self.form.value} {self.label} none"
        return f"{self.form.value} {self.label} {OcticInput(self.form, self.a, self.b).poly()}"


def catalog_text() -> str:
    return resources.files("evenoctic.families").joinpath("data/catalog.txt").read_text()


def parse_catalog(text: str) -> tuple[CatalogRow, ...]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ValueError(f"catalog line {lineno}: expected 5 columns")
        form, a, b, label, flag = parts
        if (a == "none") != (b == "none"):
            raise ValueError(f"catalog line {lineno}: a and b must both be 'none' or both integers")
        rows.append(
            CatalogRow(
                Form.parse(form),
                None if a == "none" else int(a),
                None if b == "none" else int(b),
                GaloisLabel.parse(label),
                flag == "1",
            )
        )
    return tuple(rows)


def load_catalog() -> tuple[CatalogRow, ...]:
    return parse_catalog(catalog_text())


@dataclass(frozen=True)
class RowResult:
    row: CatalogRow
    passed: bool
    detail: str
    found: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class TableReport:
    rows: tuple[RowResult, ...]
    notes: tuple[str, ...] = field(default=())
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)


def _check_listed(row: CatalogRow) -> RowResult:
    inp = OcticInput(row.form, row.a, row.b)
    try:
        an = analyze(inp)
    except ClassificationGap as exc:
        return RowResult(row, False, f"classification gap: {exc}")
    status = an.verdict.status
    want = Status.MONOGENIC if row.monogenic else Status.NOT_MONOGENIC
    ok = status is want and an.label == row.label
    detail = f"{status.value} {an.label}; disc = {_factored(an.verdict.discriminant)}"
    return RowResult(row, ok, detail)


def _factored(n: int) -> str:
    fr = factor(n)
    sign = "-" if n < 0 else ""
    body = "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fr.factors)
    if fr.cofactor != 1:
        body += f"*[{fr.cofactor}]"
    return sign + body


def scan_for_label(form: Form, x: int, bound: int = NONE_SCAN_BOUND) -> list[tuple[int, int]]:
    """All (a, b) with |a|, |b| <= bound giving a monogenic polynomial with label 8Tx.

    The cheap branch test runs first; only inputs where the 8Tx branch fires
    go through irreducibility, classification and the monogenicity check.
    """
    hits = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if form is Form.EVEN_TRINOMIAL:
                if b == 0 or not branches_F(a, b).get(x, False):
                    continue
                poly = even_trinomial(a, b)
            else:
                if a == 0 or not branches_G(a, b).get(x, False):
                    continue
                poly = even_reciprocal(a, b)
            if not is_irreducible_Q(poly):
                continue
            an = analyze(OcticInput(form, a, b))
            if an.label is not None and an.label.x == x and an.verdict.status is Status.MONOGENIC:
                hits.append((a, b))
    return hits


def _check_none(row: CatalogRow, bound: int) -> RowResult:
    try:
        hits = scan_for_label(row.form, row.label.x, bound)
    except ClassificationGap as exc:
        return RowResult(row, False, f"classification gap: {exc}")
    if hits:
        return RowResult(row, False, f"monogenic instances found: {hits}", tuple(hits))
    return RowResult(row, True, f"none for |a|,|b| <= {bound} (spot check, not a proof)")


def discriminant_notes() -> tuple[str, ...]:
    """Recomputed discriminants for the (+-8, 16) rows."""
    out = []
    for a in (8, -8):
        d = 2**8 * (_w_disc(a, 16)) ** 2
        out.append(f"G ({a},16): disc = {_factored(d)}")
    return tuple(out)


def _w_disc(a: int, b: int) -> int:
    w1, w2, w3 = b + 2 - 2 * a, b + 2 + 2 * a, a * a - 4 * b + 8
    return w1 * w2 * w3 * w3


def verify_tables(none_bound: int = NONE_SCAN_BOUND) -> TableReport:
    """Check every catalog row; "none" rows are scanned over |a|, |b| <= none_bound."""
    t0 = time.perf_counter()
    results = []
    for row in load_catalog():
        results.append(_check_none(row, none_bound) if row.is_none_row else _check_listed(row))
    return TableReport(tuple(results), discriminant_notes(), time.perf_counter() - t0)
