"""The six infinite monogenic families and their squarefree gates."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Callable, Iterator

from ..arith import TriBool, is_squarefree, iter_primes
from ..galois import Form, GaloisLabel, OcticInput
from ..monogenic import Analysis, Status, analyze
from ..polyring.disc import discriminant
from ..sieve.grammar import FactoredPoly, parse_factored

log = logging.getLogger(__name__)


def _odd_part(n: int) -> int:
    n = abs(n)
    while n and n % 2 == 0:
        n //= 2
    return n


def _gate_8t15(a: int) -> TriBool:
    # D = a^2 + 4 must be (odd squarefree) or 2^3 * (odd squarefree), with at
    # least one odd prime; a = 2 (D = 8) gives 8T8 instead.
    if a % 4 == 0:
        return TriBool.FALSE
    d = a * a + 4
    odd = _odd_part(d)
    if odd == 1:
        return TriBool.FALSE
    if a % 2 == 0 and d // odd != 8:
        return TriBool.FALSE
    return is_squarefree(odd)


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    form: Form
    parameter_kind: str  # "prime" or "integer"
    start: int
    gate_text: str
    coefficients: Callable[[int], tuple[int, int]]
    coefficient_map: str
    label: int
    gate_check: Callable[[int], TriBool] | None = None

    @property
    def gate(self) -> FactoredPoly:
        return parse_factored(self.gate_text)

    def gate_ok(self, n: int) -> TriBool:
        if self.gate_check is not None:
            return self.gate_check(n)
        v = self.gate(n)
        if v == 0:
            return TriBool.FALSE
        return is_squarefree(v)

    def parameters(self) -> Iterator[int]:
        if self.parameter_kind == "prime":
            yield from iter_primes(self.start)
        else:
            n = self.start
            while True:
                yield n
                n += 1


class FamilyId(enum.Enum):
    F_8T9 = "F-8T9"
    F_8T15 = "F-8T15"
    F_8T17 = "F-8T17"
    F_8T26 = "F-8T26"
    G_8T9 = "G-8T9"
    G_8T18 = "G-8T18"

    @property
    def spec(self) -> FamilySpec:
        return FAMILIES[self]

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        key = text.strip().upper().replace("_", "-")
        for f in cls:
            if f.value == key:
                return f
        raise ValueError(f"unknown family {text!r}; expected one of {[f.value for f in cls]}")


FAMILIES = {
    FamilyId.F_8T9: FamilySpec(
        "F-8T9", Form.EVEN_TRINOMIAL, "prime", 2, "(4t+1)(4t+5)", lambda p: (4 * p + 3, 1), "a=4p+3, b=1", 9
    ),
    FamilyId.F_8T15: FamilySpec(
        "F-8T15",
        Form.EVEN_TRINOMIAL,
        "integer",
        1,
        "(t^2+4)",
        lambda a: (a, -1),
        "a>0 with 4 !| a, b=-1",
        15,
        _gate_8t15,
    ),
    FamilyId.F_8T17: FamilySpec(
        "F-8T17", Form.EVEN_TRINOMIAL, "integer", 1, "(t^2+1)", lambda t: (2 * t, t * t + 1), "a=2t, b=t^2+1", 17
    ),
    FamilyId.F_8T26: FamilySpec(
        "F-8T26", Form.EVEN_TRINOMIAL, "prime", 5, "(t^2-12)", lambda p: (p, 3), "a=p, b=3", 26
    ),
    FamilyId.G_8T9: FamilySpec(
        "G-8T9",
        Form.EVEN_RECIPROCAL,
        "prime",
        2,
        "(16t+13)(4t+1)(4t-3)",
        lambda p: (4 * p + 3, 8 * p + 5),
        "a=4p+3, b=8p+5",
        9,
    ),
    FamilyId.G_8T18: FamilySpec(
        "G-8T18",
        Form.EVEN_RECIPROCAL,
        "prime",
        3,
        "(2t+9)(2t-3)(8t-13)",
        lambda p: (3, 2 * p + 1),
        "a=3, b=2p+1",
        18,
    ),
}

GATE_POLYNOMIALS = tuple(FAMILIES[f].gate_text for f in FamilyId if f is not FamilyId.F_8T15)


@dataclass(frozen=True)
class Member:
    family: FamilyId
    parameter: int
    input: OcticInput
    analysis: Analysis

    @property
    def problems(self) -> tuple[str, ...]:
        out = []
        st = self.analysis.verdict.status
        if st is Status.NOT_IRREDUCIBLE:
            out.append("reducible")
        elif st is not Status.MONOGENIC:
            out.append(f"status {st.value}")
        want = GaloisLabel(self.family.spec.label)
        if self.analysis.label != want:
            out.append(f"label {self.analysis.label} != {want}")
        return tuple(out)

    @property
    def verified(self) -> bool:
        return not self.problems


def enumerate_family(family: FamilyId, count: int) -> list[Member]:
    """The first ``count`` members in increasing parameter order, each re-verified."""
    if count < 1:
        raise ValueError("count must be positive")
    spec = family.spec
    out = []
    for n in spec.parameters():
        gate = spec.gate_ok(n)
        if gate is TriBool.UNKNOWN:
            log.warning("%s: gate undecided at parameter %d, skipped", spec.tag, n)
            continue
        if gate is TriBool.FALSE:
            continue
        a, b = spec.coefficients(n)
        inp = OcticInput(spec.form, a, b)
        out.append(Member(family, n, inp, analyze(inp)))
        if len(out) == count:
            return out
    return out  # pragma: no cover - parameter streams are infinite


def polynomial_discriminant(inp: OcticInput) -> int:
    return discriminant(inp.poly())


@dataclass(frozen=True)
class DistinctnessReport:
    discriminants: tuple[int, ...]
    collisions: tuple[tuple[int, int], ...]

    @property
    def distinct(self) -> bool:
        return not self.collisions


def distinctness(members) -> DistinctnessReport:
    """Pairwise discriminant comparison; equal fields of monogenic polynomials force equal discriminants."""
    inputs = [m.input if isinstance(m, Member) else m for m in members]
    discs = tuple(polynomial_discriminant(i) for i in inputs)
    seen: dict[int, int] = {}
    collisions = []
    for j, d in enumerate(discs):
        if d in seen:
            collisions.append((seen[d], j))
        else:
            seen[d] = j
    return DistinctnessReport(discs, tuple(collisions))
