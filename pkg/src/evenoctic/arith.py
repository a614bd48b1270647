"""Integer utilities: squares, valuations, bounded factorization, squarefree tests.

Everything works on Python ints (arbitrary precision).  Factorization is
bounded: trial division up to ``trial_bound``, then Miller-Rabin and
Pollard-Brent on what is left.  A composite that survives all of that is
returned as an unfactored cofactor and callers see :attr:`TriBool.UNKNOWN`.
"""

from __future__ import annotations

import enum
import math
import os
import threading
from dataclasses import dataclass

DEFAULT_TRIAL_BOUND = 10**6

# Strong-pseudoprime witnesses.  The first 13 primes make Miller-Rabin
# deterministic for n < 3317044064679887385961981 (> 2**81); above that
# the test is probabilistic.
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_LIMIT = 3317044064679887385961981

_RHO_MAX_STEPS = 1 << 16
_RHO_SEEDS = 24


def trial_bound_from_env() -> int:
    """Trial bound honoring the ``OCTIC_TRIAL_BOUND`` environment variable."""
    raw = os.environ.get("OCTIC_TRIAL_BOUND")
    if not raw:
        return DEFAULT_TRIAL_BOUND
    bound = int(raw)
    if bound < 2:
        raise ValueError("OCTIC_TRIAL_BOUND must be >= 2")
    return bound


class TriBool(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> "TriBool":
        return cls.TRUE if flag else cls.FALSE

    def __bool__(self):
        # Guard against `if tribool:` silently treating UNKNOWN as truthy.
        raise TypeError("TriBool has no implicit truth value; compare with TriBool.TRUE")


@dataclass(frozen=True)
class FactorResult:
    """Factorization of ``|n|``: ``prod(p**e) * cofactor``.

    ``cofactor`` is 1 when the factorization is complete; otherwise it is a
    composite with no prime factor up to the trial bound.
    """

    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out


# --------------------------------------------------------------------- squares


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError("isqrt of negative number")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def integer_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("integer_root of negative number")
    if n < 2 or k == 1:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def perfect_power(n: int) -> tuple[int, int] | None:
    """Return (r, k) with r**k == n and k >= 2 maximal-ish, or None."""
    if n < 4:
        return None
    for k in _primes_upto(n.bit_length()):
        r = integer_root(n, k)
        if r**k == n:
            inner = perfect_power(r)
            if inner is not None:
                return inner[0], inner[1] * k
            return r, k
    return None


def valuation(n: int, p: int) -> int:
    """Exponent of p in n; n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ------------------------------------------------------------------- primality


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the fixed witness set :data:`MR_WITNESSES`."""
    if n < 2:
        return False
    for p in MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


is_prime = is_probable_prime


_prime_lock = threading.Lock()
_prime_table: list[int] = []
_prime_table_limit = 1


def _sieve(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def _primes_upto(limit: int) -> list[int]:
    if limit <= 1000:
        return _sieve(limit)
    return primes_upto(limit)


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, served from a shared table grown under a lock."""
    global _prime_table, _prime_table_limit
    if limit > _prime_table_limit:
        with _prime_lock:
            if limit > _prime_table_limit:
                new_limit = max(limit, 2 * _prime_table_limit)
                _prime_table = _sieve(new_limit)
                _prime_table_limit = new_limit
    table = _prime_table
    if limit >= _prime_table_limit:
        return list(table)
    import bisect

    return table[: bisect.bisect_right(table, limit)]


def iter_primes(start: int = 2):
    """Yield primes >= start forever."""
    limit = max(1024, 2 * start)
    while True:
        for p in primes_upto(limit):
            if p >= start:
                yield p
                start = p + 1
        limit *= 2


def next_prime(n: int) -> int:
    """Smallest prime > n."""
    k = n + 1
    while not is_prime(k):
        k += 1
    return k


# --------------------------------------------------------------- factorization


def _pollard_brent(n: int, c: int) -> int | None:
    """One Pollard-Brent run with x -> x^2 + c; returns a proper factor or None."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        steps += r
        if steps > _RHO_MAX_STEPS:
            return None
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if 1 < g < n else None


def _split(n: int, trial_bound: int, primes: dict[int, int], leftovers: list[int]) -> None:
    # n > 1 with no prime factor below the small-trial limit.
    if is_prime(n):
        primes[n] = primes.get(n, 0) + 1
        return
    pp = perfect_power(n)
    if pp is not None:
        r, k = pp
        sub: dict[int, int] = {}
        rest: list[int] = []
        _split(r, trial_bound, sub, rest)
        for p, e in sub.items():
            primes[p] = primes.get(p, 0) + e * k
        leftovers.extend(x for x in rest for _ in range(k))
        return
    for c in range(1, _RHO_SEEDS + 1):
        d = _pollard_brent(n, c)
        if d is not None:
            _split(d, trial_bound, primes, leftovers)
            _split(n // d, trial_bound, primes, leftovers)
            return
    # rho gave up: finish trial division to the full bound.
    for p in primes_upto(trial_bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            primes[p] = primes.get(p, 0) + e
            if n > 1:
                _split(n, trial_bound, primes, leftovers)
            return
    if n > 1:
        if is_prime(n):
            primes[n] = primes.get(n, 0) + 1
        else:
            leftovers.append(n)


_SMALL_TRIAL = 2000


def factor(n: int, trial_bound: int | None = None) -> FactorResult:
    """Factor ``|n|`` as far as trial division, Miller-Rabin and Pollard-Brent allow.

    >>> factor(45)
    FactorResult(factors=((3, 2), (5, 1)), cofactor=1)
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    if trial_bound is None:
        trial_bound = trial_bound_from_env()
    n = abs(n)
    found: dict[int, int] = {}
    exhausted = True
    for p in primes_upto(min(trial_bound, _SMALL_TRIAL)):
        if p * p > n:
            exhausted = False
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    leftovers: list[int] = []
    if n > 1:
        if not exhausted:
            found[n] = found.get(n, 0) + 1
        else:
            _split(n, trial_bound, found, leftovers)
    cofactor = math.prod(leftovers)
    return FactorResult(tuple(sorted(found.items())), cofactor)


def prime_divisors(n: int, trial_bound: int | None = None) -> tuple[tuple[int, ...], int]:
    """Distinct primes of n plus the unfactored cofactor (1 if complete)."""
    fr = factor(n, trial_bound)
    return fr.primes, fr.cofactor


def is_squarefree(n: int, trial_bound: int | None = None) -> TriBool:
    if n == 0:
        raise ValueError("squarefree test of 0")
    if trial_bound is None:
        trial_bound = trial_bound_from_env()
    fr = factor(n, trial_bound)
    if any(e > 1 for _, e in fr.factors):
        return TriBool.FALSE
    c = fr.cofactor
    if c == 1:
        return TriBool.TRUE
    if perfect_power(c) is not None:
        return TriBool.FALSE
    # c has no prime factor <= trial_bound, so below trial_bound**3 it is a
    # product of exactly two primes, distinct because c is not a square.
    if c < trial_bound**3:
        return TriBool.TRUE
    return TriBool.UNKNOWN


def divisors(n: int) -> list[int]:
    """Positive divisors of a nonzero n (requires complete factorization)."""
    fr = factor(n)
    if not fr.complete:
        raise ArithmeticError(f"could not factor {n}")
    divs = [1]
    for p, e in fr.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """x with x = r1 mod m1, x = r2 mod m2 for coprime moduli."""
    return (r1 + m1 * ((r2 - r1) * pow(m1, -1, m2) % m2)) % (m1 * m2)


def sqrt_mod_prime(n: int, p: int) -> int | None:
    """A square root of n mod an odd prime p (Tonelli-Shanks), or None."""
    n %= p
    if n == 0:
        return 0
    if p == 2:
        return n
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r
