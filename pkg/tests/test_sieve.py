"""Gate polynomial parsing, local densities and squarefree counts."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evenoctic.arith import primes_upto
from evenoctic.families import GATE_POLYNOMIALS
from evenoctic.polyring import IntPoly
from evenoctic.sieve import (
    ParseError,
    ValidationError,
    density,
    find_obstruction,
    linear_factor_count,
    obstructions_exhaustive,
    parse_factored,
    rho,
    rho_bruteforce,
    scan,
    scan_bruteforce,
)
from evenoctic.sieve.grammar import validate
from evenoctic.sieve.scan import build_plan


# ------------------------------------------------------------------ grammar


def test_parse_examples():
    G = parse_factored("(4t+1)(4t+5)")
    assert [f.coeffs for f in G.factors] == [(1, 4), (5, 4)]
    assert parse_factored("(t^2+1)").factors == (IntPoly([1, 0, 1]),)
    G = parse_factored(" ( 2t + 9 ) (2*t-3)(8t - 13) ")
    assert G.degree == 3 and G(1) == 11 * -1 * -5
    assert parse_factored("(-t^3+t+1)").factors[0] == IntPoly([1, 1, 0, -1])


def test_parse_duplicate_rejected():
    with pytest.raises(ValidationError, match="repeated"):
        parse_factored("(t+1)(t+1)")
    with pytest.raises(ValidationError, match="repeated"):
        parse_factored("(t+1)(-t-1)")


@pytest.mark.parametrize(
    "text, err",
    [
        ("", ParseError),
        ("t+1", ParseError),
        ("(t+1", ParseError),
        ("(t^4+1)", ParseError),
        ("(t+)", ParseError),
        ("(3)", ValidationError),
        ("(2t+4)", ValidationError),
        ("(t^2-1)", ValidationError),
        ("(t^2)", ValidationError),
    ],
)
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_factored(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_factored("(t+1)(t^9)")
    assert info.value.position == 8


def test_to_str_round_trip():
    for g in GATE_POLYNOMIALS:
        G = parse_factored(g)
        assert parse_factored(G.to_str()).factors == G.factors


# --------------------------------------------------------------------- rho


def test_rho_examples():
    assert rho(parse_factored("(t^2+1)"), 2) == 0
    assert rho(parse_factored("(4t+1)(4t+5)"), 2) == 0
    assert rho(parse_factored("(t-1)(t+1)"), 3) == 2


def _random_gate(rng: random.Random):
    while True:
        k = rng.randint(1, 3)
        factors = []
        for _ in range(k):
            d = rng.randint(1, 2)
            c = [rng.randint(-9, 9) for _ in range(d)] + [rng.choice([1, 2, 3, 4, -1, -2])]
            factors.append(IntPoly(c))
        try:
            return validate(factors)
        except ValidationError:
            continue


def test_rho_lifting_matches_bruteforce():
    rng = random.Random(7)
    for _ in range(60):
        G = _random_gate(rng)
        for ell in primes_upto(37):
            assert rho(G, ell) == rho_bruteforce(G, ell), (G.to_str(), ell)


def test_rho_gates_vs_bruteforce():
    for g in GATE_POLYNOMIALS:
        G = parse_factored(g)
        for ell in primes_upto(200):
            assert rho(G, ell) == rho_bruteforce(G, ell)


# ------------------------------------------------------------ obstructions


@pytest.mark.parametrize("g", ["(4t+1)(4t+5)", "(16t+13)(4t+1)(4t-3)", "(2t+9)(2t-3)(8t-13)", "(t^2+1)", "(t^2-12)"])
def test_gates_unobstructed(g):
    G = parse_factored(g)
    assert find_obstruction(G) is None
    assert obstructions_exhaustive(G, 50) == []


def test_obstructed_examples():
    # t(t+1) and (t-1)(t+1) vanish mod 4 at every odd t
    assert find_obstruction(parse_factored("(t-1)(t+1)")) == 2
    assert find_obstruction(parse_factored("(t+1)(t+3)")) == 2
    G = parse_factored("(t-1)(t+1)")
    assert density(G, 100).value == 0 and density(G, 100).obstruction == 2


def test_linear_factor_count():
    G = parse_factored("(2t+9)(2t-3)(t^2+1)")
    assert linear_factor_count(G, 2) == 2  # 2t+9 = 1 and 2t-3 = 1 are constants mod 2; t^2+1 = (t+1)^2
    assert linear_factor_count(G, 5) == 4


# ---------------------------------------------------------------- density


def test_density_examples():
    assert density(parse_factored("(t^2+1)"), 2).value == 1
    expected = math.prod((1 - Fraction(1, ell * (ell - 1)) for ell in (2, 3, 5, 7)), start=Fraction(1))
    assert density(parse_factored("(t-1)"), 10).value == expected
    d = density(parse_factored("(4t+1)(4t+5)"), 1000)
    assert 0 < d.value < 1 and d.obstruction is None
    assert d.decimal(6) == "0.564979"


def test_density_antitone_and_stable():
    for g in GATE_POLYNOMIALS:
        G = parse_factored(g)
        vals = [density(G, c).value for c in (2, 10, 100, 1000, 10_000)]
        assert all(x >= y for x, y in zip(vals, vals[1:]))
        assert abs(vals[-1] - vals[-2]) <= Fraction(1, 1000)


def test_density_rejects_small_cutoff():
    with pytest.raises(ValueError):
        density(parse_factored("(t+1)"), 1)


# ------------------------------------------------------------------- scan


def test_scan_examples():
    assert scan("(t^2+1)", 10, "integers") == 9
    assert scan("(t-1)", 11, "integers") == 7
    G = parse_factored("(4t+1)(4t+5)")
    assert scan(G, 100, "primes") == scan_bruteforce(G, 100, "primes") == 11


@pytest.mark.parametrize("g", GATE_POLYNOMIALS)
@pytest.mark.parametrize("mode", ["primes", "integers"])
def test_scan_vs_bruteforce(g, mode):
    G = parse_factored(g)
    assert scan(G, 3000, mode, chunk=777) == scan_bruteforce(G, 3000, mode)


@given(st.integers(2, 400))
@settings(max_examples=25, deadline=None)
def test_scan_monotone_chunks(X):
    G = parse_factored("(t^2+1)(t+4)")
    assert scan(G, X, "integers", chunk=37) == scan(G, X, "integers") == scan_bruteforce(G, X, "integers")


def test_scan_zero_values_not_squarefree():
    assert scan("(t-5)", 10, "integers") == scan_bruteforce(parse_factored("(t-5)"), 10, "integers")
    assert 5 in build_plan(parse_factored("(t-5)"), 10).zeros


def test_scan_checkpoint_resume(tmp_path):
    ck = tmp_path / "ck.txt"
    full = scan("(t^2+1)", 5000, "integers", chunk=1000, checkpoint=str(ck))
    lines = ck.read_text().splitlines()
    assert lines[0].startswith("# G=(t^2+1) mode=integers X=5000") and len(lines) == 6
    ck.write_text("\n".join(lines[:3]) + "\n")  # pretend only two chunks finished
    assert scan("(t^2+1)", 5000, "integers", chunk=1000, checkpoint=str(ck)) == full
    assert len(ck.read_text().splitlines()) == 6


def test_scan_checkpoint_mismatch(tmp_path):
    ck = tmp_path / "ck.txt"
    scan("(t^2+1)", 100, "integers", checkpoint=str(ck))
    with pytest.raises(ValueError):
        scan("(t^2+1)", 100, "primes", checkpoint=str(ck))


def test_scan_parallel_matches_serial():
    g = "(16t+13)(4t+1)(4t-3)"
    assert scan(g, 200_000, "primes", chunk=50_000, workers=3) == scan(g, 200_000, "primes", chunk=50_000)


def test_scan_argument_errors():
    with pytest.raises(ValueError):
        scan("(t+1)", 1)
    with pytest.raises(ValueError):
        scan("(t+1)", 10, "evens")
