"""Finite catalog and infinite families."""

import pytest

from evenoctic.arith import TriBool
from evenoctic.families import FAMILIES, FamilyId, distinctness, enumerate_family, load_catalog, parse_catalog, scan_for_label
from evenoctic.families.catalog import catalog_text, discriminant_notes
from evenoctic.families.infinite import _gate_8t15
from evenoctic.galois import Form, GaloisLabel, OcticInput, w_triple
from evenoctic.index import jks_at


def test_catalog_contents():
    rows = load_catalog()
    f_rows = [(r.a, r.b, r.label.x) for r in rows if r.form is Form.EVEN_TRINOMIAL and not r.is_none_row]
    assert f_rows == [(0, 1, 2), (-1, 1, 3), (3, 1, 4), (0, 2, 6), (-2, -1, 8), (0, -2, 8), (-4, 2, 16), (4, 2, 16), (-5, 5, 16)]
    assert {r.label.x for r in rows if r.is_none_row and r.form is Form.EVEN_TRINOMIAL} == {11, 22}
    assert {r.label.x for r in rows if r.is_none_row and r.form is Form.EVEN_RECIPROCAL} == {3, 4}
    t10 = [(r.a, r.b) for r in rows if r.form is Form.EVEN_RECIPROCAL and r.label.x == 10]
    assert sorted(t10) == sorted([(8, 16), (-8, 16), (-9, 21), (11, 31), (-11, 31), (9, 19), (-9, 19)])
    assert all(r.monogenic is not r.is_none_row for r in rows)


def test_catalog_is_byte_stable():
    text = catalog_text()
    assert text.endswith("\n") and "\r" not in text
    assert parse_catalog(text) == load_catalog()


def test_catalog_parse_errors():
    with pytest.raises(ValueError):
        parse_catalog("F 1 2 8T2\n")
    with pytest.raises(ValueError):
        parse_catalog("F none 2 8T2 1\n")


def test_8t10_discriminant_arbitration():
    assert discriminant_notes() == ("G (8,16): disc = 2^24*17^2", "G (-8,16): disc = 2^24*17^2")


def test_scan_for_label_finds_known_rows():
    assert (-1, 1) in scan_for_label(Form.EVEN_RECIPROCAL, 2, bound=3)
    assert scan_for_label(Form.EVEN_TRINOMIAL, 11, bound=12) == []


@pytest.mark.parametrize(
    "family, params, coeffs",
    [
        (FamilyId.F_8T9, [3], [(15, 1)]),
        (FamilyId.F_8T17, [1, 2, 3], [(2, 2), (4, 5), (6, 10)]),
        (FamilyId.F_8T26, [5], [(5, 3)]),
        (FamilyId.G_8T9, [19], [(79, 157)]),
        (FamilyId.G_8T18, [7], [(3, 15)]),
        (FamilyId.F_8T15, [1, 3, 5, 6], [(1, -1), (3, -1), (5, -1), (6, -1)]),
    ],
)
def test_enumerate_first_members(family, params, coeffs):
    members = enumerate_family(family, len(params))
    assert [m.parameter for m in members] == params
    assert [(m.input.a, m.input.b) for m in members] == coeffs
    assert all(m.verified for m in members)


def test_enumerate_count_must_be_positive():
    with pytest.raises(ValueError):
        enumerate_family(FamilyId.F_8T9, 0)


def test_family_id_parse():
    assert FamilyId.parse("g_8t18") is FamilyId.G_8T18
    with pytest.raises(ValueError):
        FamilyId.parse("F-8T2")


def test_gate_values():
    spec = FAMILIES[FamilyId.F_8T9]
    assert spec.gate(3) == 13 * 17 and spec.gate_ok(3) is TriBool.TRUE
    assert spec.gate_ok(2) is TriBool.FALSE  # 9 * 13
    assert FAMILIES[FamilyId.G_8T9].gate(3) == 61 * 13 * 9


def test_gate_8t15():
    # a=2: D = 8 has no odd prime; a=4: 4 | a; a=6: D = 40 = 2^3 * 5
    assert _gate_8t15(2) is TriBool.FALSE
    assert _gate_8t15(4) is TriBool.FALSE
    assert _gate_8t15(6) is TriBool.TRUE
    assert _gate_8t15(11) is TriBool.FALSE  # 125
    gated = [a for a in range(1, 60) if _gate_8t15(a) is TriBool.TRUE]
    assert [m.input.a for m in enumerate_family(FamilyId.F_8T15, len(gated))] == gated


def test_8t9_members_clause4_h2():
    for m in enumerate_family(FamilyId.F_8T9, 10):
        r = jks_at(m.input.a, 1, 2)
        assert r.clause == 4 and r.data["H2_mod_2"] == (1, 0, 1)  # (x+1)^2


def test_g8t9_members_w1_is_one():
    for m in enumerate_family(FamilyId.G_8T9, 10):
        p = m.parameter
        w = w_triple(m.input.a, m.input.b)
        assert w.w1 == 1 and w.w2 == 16 * p + 13


def test_distinctness():
    members = enumerate_family(FamilyId.F_8T26, 10)
    rep = distinctness(members)
    assert rep.distinct
    assert list(rep.discriminants) == sorted(rep.discriminants)
    assert all(d == 2**16 * 27 * (m.parameter**2 - 12) ** 4 for d, m in zip(rep.discriminants, members))
    dup = OcticInput(Form.EVEN_TRINOMIAL, 0, 1)
    assert distinctness([dup, dup]).collisions == ((0, 1),)


def test_member_problems_reported():
    from evenoctic.families.infinite import Member
    from evenoctic.monogenic import analyze

    inp = OcticInput(Form.EVEN_TRINOMIAL, 5, 5)
    m = Member(FamilyId.F_8T9, 0, inp, analyze(inp))
    assert not m.verified
    assert "status NotMonogenic" in m.problems
    assert any(p.startswith("label 8T16") for p in m.problems)
    assert GaloisLabel(9) != m.analysis.label
