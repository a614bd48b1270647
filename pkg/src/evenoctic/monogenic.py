"""Monogenicity verdicts for the two even octic shapes.

A monic irreducible f is monogenic exactly when no prime divides the index
[Z_K : Z[theta]].  Only primes dividing disc(f) can, so each check factors
the discriminant (through its natural pieces) and tests every prime found.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arith import TriBool, factor, is_squarefree, trial_bound_from_env
from .galois import ClassificationGap, Form, GaloisLabel, OcticInput, classify, w_triple
from .index import DedekindCertificate, JKSClauseResult, dedekind_at, jks_at
from .polyring.disc import swan_disc
from .polyring.intpoly import even_reciprocal, even_trinomial
from .polyring.zassenhaus import is_irreducible_Q


class Status(enum.Enum):
    NOT_IRREDUCIBLE = "NotIrreducible"
    MONOGENIC = "Monogenic"
    NOT_MONOGENIC = "NotMonogenic"
    UNKNOWN = "Unknown"


FAST_BAMS = "BAMS-3.1"
FAST_ITEM1 = "MainG2-item1"
FAST_ITEM2 = "MainG2-item2"
FAST_ITEM3 = "MainG2-item3"

Certificate = DedekindCertificate | JKSClauseResult


@dataclass(frozen=True)
class MonogenicityVerdict:
    status: Status
    discriminant: int
    certificates: tuple[tuple[int, Certificate], ...] = ()
    fast_path: str | None = None
    unknown_reason: str | None = None

    @property
    def failing_primes(self) -> tuple[int, ...]:
        return tuple(q for q, c in self.certificates if not c.passes)

    def to_dict(self, verbose: bool = False) -> dict:
        out = {
            "status": self.status.value,
            "discriminant": str(self.discriminant),
            "fast_path": self.fast_path,
            "unknown_reason": self.unknown_reason,
            "failing_primes": list(self.failing_primes),
            "primes_checked": [q for q, _ in self.certificates],
        }
        if verbose:
            out["certificates"] = [c.to_dict() for _, c in self.certificates]
        return out


def _primes_of(values, bound) -> tuple[list[int], int]:
    primes: set[int] = set()
    cofactor = 1
    for v in values:
        if v == 0:
            raise ValueError("zero has no factorization")
        fr = factor(v, bound)
        primes.update(fr.primes)
        cofactor *= fr.cofactor
    return sorted(primes), cofactor


def _verdict_from(disc, certs, cofactor, fast=None) -> MonogenicityVerdict:
    certs = tuple(certs)
    if any(not c.passes for _, c in certs):
        return MonogenicityVerdict(Status.NOT_MONOGENIC, disc, certs, fast)
    if cofactor != 1:
        return MonogenicityVerdict(
            Status.UNKNOWN, disc, certs, fast, f"unfactored discriminant cofactor {cofactor}"
        )
    return MonogenicityVerdict(Status.MONOGENIC, disc, certs, fast)


def check_F(a: int, b: int, trial_bound: int | None = None) -> MonogenicityVerdict:
    """Verdict for x^8 + a x^4 + b via the trinomial index test at every prime of the discriminant."""
    if b == 0:
        return MonogenicityVerdict(Status.NOT_IRREDUCIBLE, 0)
    disc = swan_disc(8, 4, a, b)
    if not is_irreducible_Q(even_trinomial(a, b)):
        return MonogenicityVerdict(Status.NOT_IRREDUCIBLE, disc)
    bound = trial_bound if trial_bound is not None else trial_bound_from_env()
    primes, cofactor = _primes_of((2, b, a * a - 4 * b), bound)
    certs = [(q, jks_at(a, b, q)) for q in primes]
    return _verdict_from(disc, certs, cofactor)


def _mod4(a: int, b: int) -> tuple[int, int]:
    return a % 4, b % 4


def _odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


def g_fast_path(a: int, b: int, trial_bound: int | None = None) -> tuple[Status, str] | None:
    """The sufficient and necessary shortcuts for the reciprocal form, or None.

    Assumes the polynomial is irreducible (so W1, W2, W3 are nonzero).
    """
    w = w_triple(a, b)
    res = _mod4(a, b)
    if res in {(1, 3), (3, 1), (3, 3)} and is_squarefree(w.w1 * w.w2 * w.w3, trial_bound) is TriBool.TRUE:
        return Status.MONOGENIC, FAST_BAMS
    sf1 = is_squarefree(w.w1, trial_bound)
    sf2 = is_squarefree(w.w2, trial_bound)
    if sf1 is TriBool.FALSE or sf2 is TriBool.FALSE:
        return Status.NOT_MONOGENIC, FAST_ITEM1
    if sf1 is TriBool.TRUE and sf2 is TriBool.TRUE:
        odd3 = is_squarefree(_odd_part(w.w3), trial_bound)
        if odd3 is TriBool.FALSE:
            return Status.NOT_MONOGENIC, FAST_ITEM2
        if odd3 is TriBool.TRUE and res in {(0, 1), (2, 3)}:
            return Status.NOT_MONOGENIC, FAST_ITEM3
    return None


def check_G(a: int, b: int, fast_paths: bool = True, trial_bound: int | None = None) -> MonogenicityVerdict:
    """Verdict for x^8 + a x^6 + b x^4 + a x^2 + 1 (a != 0).

    With ``fast_paths`` off every prime of 2*W1*W2*W3 goes through Dedekind's
    criterion; tests use that to confirm the shortcuts.
    """
    if a == 0:
        raise ValueError("the reciprocal form needs a != 0")
    w = w_triple(a, b)
    disc = 2**8 * (w.w1 * w.w2 * w.w3**2) ** 2
    G = even_reciprocal(a, b)
    if not is_irreducible_Q(G):
        return MonogenicityVerdict(Status.NOT_IRREDUCIBLE, disc)
    if fast_paths:
        hit = g_fast_path(a, b, trial_bound)
        if hit is not None:
            return MonogenicityVerdict(hit[0], disc, (), hit[1])
    bound = trial_bound if trial_bound is not None else trial_bound_from_env()
    primes, cofactor = _primes_of((2, w.w1, w.w2, w.w3), bound)
    certs = [(q, dedekind_at(G, q)) for q in primes]
    return _verdict_from(disc, certs, cofactor)


def check(inp: OcticInput, fast_paths: bool = True) -> MonogenicityVerdict:
    if inp.form is Form.EVEN_TRINOMIAL:
        return check_F(inp.a, inp.b)
    return check_G(inp.a, inp.b, fast_paths=fast_paths)


@dataclass(frozen=True)
class Analysis:
    """Verdict plus Galois label (the label is None for reducible input)."""

    input: OcticInput
    verdict: MonogenicityVerdict
    label: GaloisLabel | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def irreducible(self) -> bool:
        return self.verdict.status is not Status.NOT_IRREDUCIBLE

    def to_dict(self, verbose: bool = False) -> dict:
        return {
            "form": self.input.form.value,
            "a": self.input.a,
            "b": self.input.b,
            "polynomial": self.input.poly().to_str(),
            "irreducible": self.irreducible,
            "label": self.label.tag if self.label else None,
            "group": self.label.familiar_name if self.label else None,
            "verdict": self.verdict.to_dict(verbose),
        }


def analyze(inp: OcticInput, fast_paths: bool = True) -> Analysis:
    """Irreducibility, monogenicity and Galois group of one input.

    A :class:`ClassificationGap` propagates; it signals a broken decision tree.
    """
    verdict = check(inp, fast_paths)
    if verdict.status is Status.NOT_IRREDUCIBLE:
        return Analysis(inp, verdict)
    return Analysis(inp, verdict, classify(inp))


__all__ = [
    "Analysis",
    "ClassificationGap",
    "MonogenicityVerdict",
    "Status",
    "analyze",
    "check",
    "check_F",
    "check_G",
    "g_fast_path",
]
