"""Count t <= X (all integers or primes only) with G(t) squarefree.

A square l^2 divides G(t) = prod gamma_i(t) only if l^2 divides one factor or
l divides two different factors, and the latter forces l | Res(gamma_i, gamma_j).
So the scan marks, on a boolean array, every t hit by

* a root of some gamma_i modulo l^2, for l up to sqrt(max |gamma_i(t)|);
* a common root modulo l of two factors, for l dividing their resultant;
* an integer root of some gamma_i (G(t) = 0 counts as not squarefree).

Work is split into chunks; with a checkpoint file finished chunks are
recorded as ``chunk_start chunk_end count`` lines and skipped on resume.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..arith import factor, primes_upto, sqrt_mod_prime
from ..polyring import gfp
from ..polyring.disc import resultant
from ..polyring.intpoly import IntPoly
from .grammar import FactoredPoly, parse_factored

MODES = ("primes", "integers")
DEFAULT_CHUNK = 1_000_000


def _max_abs(f: IntPoly, X: int) -> int:
    return sum(abs(c) * X**i for i, c in enumerate(f.coeffs))


def _roots_mod_prime(f: IntPoly, ell: int) -> list[int]:
    fp = f.reduce(ell)
    if len(fp) <= 1:
        return []
    if len(fp) == 2:
        return [(-fp[0]) * pow(fp[1], -1, ell) % ell]
    if len(fp) == 3 and ell > 2:
        c, b, a = fp
        s = sqrt_mod_prime(b * b - 4 * a * c, ell)
        if s is None:
            return []
        inv = pow(2 * a, -1, ell)
        return sorted({(-b + s) * inv % ell, (-b - s) * inv % ell})
    return gfp.roots(fp, ell)


def _lifts_mod_square(f: IntPoly, df: IntPoly, r: int, ell: int) -> list[int]:
    g0 = (f.eval_mod(r, ell * ell) // ell) % ell
    g1 = df.eval_mod(r, ell)
    if g1:
        return [r + ((-g0 * pow(g1, -1, ell)) % ell) * ell]
    if g0 == 0:
        return [r + k * ell for k in range(ell)]
    return []


@dataclass(frozen=True)
class SievePlan:
    """Residue classes (modulus, residue) whose members have non-squarefree G(t)."""

    classes: tuple[tuple[int, tuple[int, ...]], ...]
    zeros: tuple[int, ...]


def build_plan(G: FactoredPoly, X: int) -> SievePlan:
    by_mod: dict[int, set[int]] = {}
    for f in G.factors:
        df = f.derivative()
        limit = math.isqrt(_max_abs(f, X))
        for ell in primes_upto(limit):
            m = ell * ell
            for r in _roots_mod_prime(f, ell):
                lifts = _lifts_mod_square(f, df, r, ell)
                if lifts:
                    by_mod.setdefault(m, set()).update(lifts)
    for f, g in itertools.combinations(G.factors, 2):
        res = resultant(f, g)
        fr = factor(res)
        if not fr.complete:
            raise ArithmeticError(f"cannot factor resultant {res}")
        for ell in fr.primes:
            common = set(_roots_mod_prime(f, ell)) & set(_roots_mod_prime(g, ell))
            if common:
                by_mod.setdefault(ell, set()).update(common)
    zeros = set()
    for f in G.factors:
        if f.degree == 1 and f[0] % f[1] == 0:
            zeros.add(-f[0] // f[1])
        elif f.degree > 1 and f[0] == 0:
            zeros.add(0)
    classes = tuple(sorted((m, tuple(sorted(rs))) for m, rs in by_mod.items()))
    return SievePlan(classes, tuple(sorted(zeros)))


def _bad_mask(plan: SievePlan, start: int, end: int) -> np.ndarray:
    # bad[i] is True when G(start + i) is not squarefree, for start <= t <= end.
    n = end - start + 1
    bad = np.zeros(n, dtype=bool)
    for m, residues in plan.classes:
        for z in residues:
            first = (z - start) % m
            if first < n:
                bad[first::m] = True
    for z in plan.zeros:
        if start <= z <= end:
            bad[z - start] = True
    return bad


def _prime_mask(start: int, end: int) -> np.ndarray:
    n = end - start + 1
    mask = np.ones(n, dtype=bool)
    for p in primes_upto(math.isqrt(end)):
        first = max(p * p, ((start + p - 1) // p) * p)
        if first <= end:
            mask[first - start :: p] = False
    for t in range(start, min(end, 1) + 1):
        mask[t - start] = False
    return mask


def count_chunk(plan: SievePlan, start: int, end: int, mode: str) -> int:
    good = ~_bad_mask(plan, start, end)
    if mode == "primes":
        good &= _prime_mask(start, end)
    return int(good.sum())


def _chunks(X: int, size: int):
    s = 1
    while s <= X:
        e = min(X, s + size - 1)
        yield s, e
        s = e + 1


def _header(G: FactoredPoly, mode: str, X: int) -> str:
    return f"# G={G.to_str()} mode={mode} X={X}"


def _read_checkpoint(path, header):
    done: dict[tuple[int, int], int] = {}
    if not path or not os.path.exists(path):
        return done
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != header:
        raise ValueError(f"checkpoint {path} belongs to a different scan")
    for line in lines[1:]:
        if line.strip():
            s, e, c = map(int, line.split())
            done[(s, e)] = c
    return done


def _count_job(args):
    plan, s, e, mode = args
    return s, e, count_chunk(plan, s, e, mode)


def scan(
    G: FactoredPoly | str,
    X: int,
    mode: str = "primes",
    chunk: int = DEFAULT_CHUNK,
    checkpoint: str | None = None,
    workers: int = 1,
) -> int:
    """N_G(X): number of t in [1, X] (primes only, or every integer) with G(t) squarefree."""
    if isinstance(G, str):
        G = parse_factored(G)
    if X < 2:
        raise ValueError("X must be at least 2")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    header = _header(G, mode, X)
    done = _read_checkpoint(checkpoint, header)
    if checkpoint and not os.path.exists(checkpoint):
        with open(checkpoint, "w") as fh:
            fh.write(header + "\n")
    plan = build_plan(G, X)
    todo = [(s, e) for s, e in _chunks(X, chunk) if (s, e) not in done]
    jobs = [(plan, s, e, mode) for s, e in todo]

    def record(s, e, c):
        done[(s, e)] = c
        if checkpoint:
            with open(checkpoint, "a") as fh:
                fh.write(f"{s} {e} {c}\n")

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for s, e, c in pool.map(_count_job, jobs):
                record(s, e, c)
    else:
        for job in jobs:
            record(*_count_job(job))
    return sum(done.values())


def scan_bruteforce(G: FactoredPoly, X: int, mode: str = "primes") -> int:
    """Direct oracle: test each G(t) for squarefreeness by factoring."""
    from ..arith import TriBool, is_prime, is_squarefree

    count = 0
    for t in range(1, X + 1):
        if mode == "primes" and not is_prime(t):
            continue
        v = G(t)
        if v != 0 and is_squarefree(v) is TriBool.TRUE:
            count += 1
    return count
