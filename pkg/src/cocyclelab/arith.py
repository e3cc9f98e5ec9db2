"""Number-theoretic kernel: primes and bounded multiplicative functions.

The Mobius and Liouville functions are tabulated by a segmented sieve
(segments of 2**20 entries, bounded memory up to N ~ 1e8) and stored as
signed 8-bit values.  Completely multiplicative complex functions
(n**(it), Dirichlet characters) are evaluated on demand instead of being
tabulated.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

SEGMENT_SIZE = 1 << 20

_MAX_SIEVE = 10**9  # hard cap; index arithmetic is validated against it


@dataclass(frozen=True)
class MultFnTable:
    """Values of a bounded multiplicative function on 1..upper_bound.

    ``values`` is indexed directly by n (entry 0 is unused and set to 0).
    """

    name: str
    upper_bound: int
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.upper_bound + 1,):
            raise ValueError("values must have length upper_bound + 1")

    def __getitem__(self, n: int):
        if not 1 <= n <= self.upper_bound:
            raise IndexError(f"n={n} outside 1..{self.upper_bound}")
        return self.values[n]


def _check_bound(n: int, minimum: int = 1) -> int:
    n = int(n)
    if n < minimum:
        raise ValueError(f"bound must be >= {minimum}, got {n}")
    if n > _MAX_SIEVE:
        raise OverflowError(f"sieve bound {n} exceeds supported maximum {_MAX_SIEVE}")
    return n


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n, ascending (plain Eratosthenes on a bit array)."""
    n = _check_bound(n, minimum=2)
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(n) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.nonzero(is_prime)[0].astype(np.int64)


def _sieve_segment(lo: int, hi: int, base_primes: np.ndarray, liouville: bool) -> np.ndarray:
    """Sign table for [lo, hi): mu or lambda restricted to the segment.

    Divides out every base prime (p <= sqrt(hi)), tracking the remaining
    cofactor; an unfinished cofactor > 1 is a single prime factor > sqrt(hi).
    """
    size = hi - lo
    sign = np.ones(size, dtype=np.int8)
    cofactor = np.arange(lo, hi, dtype=np.int64)
    if lo == 0:
        cofactor[0] = 1  # n = 0 placeholder, fixed up below
    for p in base_primes:
        p = int(p)
        if p * p >= hi:
            break
        start = (-lo) % p
        if lo == 0:
            start = p  # skip the n = 0 placeholder
        idx = np.arange(start, size, p, dtype=np.int64)
        if liouville:
            # toggle once per factor of p, multiplicity included
            while idx.size:
                sign[idx] = -sign[idx]
                cofactor[idx] //= p
                idx = idx[cofactor[idx] % p == 0]
        else:
            sign[idx] = -sign[idx]
            cofactor[idx] //= p
            # entries with a squared factor are dead for mu
            sign[(-lo) % (p * p) :: p * p] = 0
    # a leftover cofactor > 1 is a single prime factor above sqrt(hi)
    tail = cofactor > 1
    sign[tail] = -sign[tail]
    if lo == 0:
        sign[0] = 0
    return sign


def _sieve_table(n: int, liouville: bool, workers: int = 1) -> np.ndarray:
    n = _check_bound(n)
    base = primes_up_to(max(isqrt(n) + 1, 2))
    spans = [(lo, min(lo + SEGMENT_SIZE, n + 1)) for lo in range(0, n + 1, SEGMENT_SIZE)]
    if workers > 1 and len(spans) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(_segment_worker, [(lo, hi, base, liouville) for lo, hi in spans])
            )
    else:
        parts = [_sieve_segment(lo, hi, base, liouville) for lo, hi in spans]
    # deterministic concatenation in segment order regardless of worker count
    return np.concatenate(parts)


def _segment_worker(args):
    return _sieve_segment(*args)


def mobius_sieve(n: int, workers: int = 1) -> MultFnTable:
    """mu(n) for 1 <= n <= N via a segmented smallest-prime-factor sieve."""
    return MultFnTable("mobius", n, _sieve_table(n, liouville=False, workers=workers))


def liouville_sieve(n: int, workers: int = 1) -> MultFnTable:
    """lambda(n) = (-1)**Omega(n), prime factors counted with multiplicity."""
    return MultFnTable("liouville", n, _sieve_table(n, liouville=True, workers=workers))


def nit_function(t: float, n: int) -> MultFnTable:
    """The completely multiplicative function n -> n**(it) = exp(i t log n).

    Tabulated on demand; these unimodular tables are the standard examples of
    bounded multiplicative functions whose Cesaro averages do not converge.
    """
    n = _check_bound(n)
    values = np.zeros(n + 1, dtype=np.complex128)
    values[1:] = np.exp(1j * t * np.log(np.arange(1, n + 1, dtype=np.float64)))
    return MultFnTable(f"nit[t={t:g}]", n, values)


@dataclass(frozen=True)
class DirichletCharacter:
    """Periodic completely multiplicative function given by a value table.

    ``table[r]`` is the value at residues r mod q; values at non-coprime
    residues must be 0.
    """

    modulus: int
    table: tuple

    def __call__(self, n: int):
        return self.table[n % self.modulus]

    def sample(self, n: int) -> MultFnTable:
        values = np.zeros(n + 1, dtype=np.complex128)
        reps = np.asarray(self.table, dtype=np.complex128)
        values[1:] = reps[np.arange(1, n + 1) % self.modulus]
        return MultFnTable(f"character[q={self.modulus}]", n, values)


def principal_character(q: int) -> DirichletCharacter:
    table = tuple(1.0 if gcd(r, q) == 1 else 0.0 for r in range(q))
    return DirichletCharacter(q, table)


def legendre_character(p: int) -> DirichletCharacter:
    """Quadratic character mod an odd prime p (Legendre symbol)."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    table = [0.0] * p
    for r in range(1, p):
        s = pow(r, (p - 1) // 2, p)
        table[r] = 1.0 if s == 1 else -1.0
    return DirichletCharacter(p, tuple(table))
