"""Primes, Bernoulli and Euler numbers modulo p, and the Fermat quotient of 2."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .padic import CappedPadic

__all__ = [
    "primes_in_range",
    "is_prime",
    "bernoulli_exact",
    "euler_exact",
    "bernoulli_table_mod_p",
    "bernoulli_mod_p",
    "bernoulli_p3_recurrence",
    "bernoulli_p3_powersum",
    "bernoulli_p3",
    "euler_p3",
    "fermat_quotient2",
    "SpecialValues",
    "special_values",
    "RECURRENCE_LIMIT",
]

# above this the O(p log p) power-sum route is the default
RECURRENCE_LIMIT = 1500


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes in ``[lo, hi]``, ascending."""
    if lo > hi:
        raise ValueError("lo must be <= hi")
    if hi < 2:
        return []
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return [int(x) for x in np.flatnonzero(sieve[max(lo, 0) :])  + max(lo, 0)]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_prime(p: int, least: int = 5) -> None:
    if p < least or not is_prime(p):
        raise ValueError(f"expected a prime >= {least}, got {p}")


@lru_cache(maxsize=None)
def bernoulli_exact(n: int) -> Fraction:
    """B_n over the rationals (convention B_1 = -1/2). Meant for small n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    s = sum(comb(n + 1, j) * bernoulli_exact(j) for j in range(n))
    return -s / (n + 1)


@lru_cache(maxsize=None)
def euler_exact(n: int) -> int:
    """Euler number E_n (integer; zero for odd n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2:
        return 0
    m = n // 2
    if m == 0:
        return 1
    return -sum(comb(n, 2 * k) * euler_exact(2 * k) for k in range(m))


@lru_cache(maxsize=None)
def bernoulli_table_mod_p(p: int) -> tuple[int, ...]:
    """B_0, ..., B_{p-3} reduced mod p via sum_{j<=n} C(n+1, j) B_j = 0.

    Every division is by n + 1 <= p - 2, a unit.  No B_j in range has p in
    its denominator (von Staudt-Clausen), so the reduction is well defined.
    """
    _check_prime(p)
    top = p - 3
    B = np.zeros(top + 1, dtype=np.int64)
    B[0] = 1
    if top >= 1:
        B[1] = (-pow(2, -1, p)) % p
    # row holds C(n+1, j) mod p, j = 0..n+1
    row = np.zeros(top + 2, dtype=np.int64)
    row[0] = 1
    row[1] = 1
    for n in range(1, top + 1):
        # advance row from C(n, .) to C(n+1, .)
        row[1 : n + 2] = (row[1 : n + 2] + row[0 : n + 1]) % p
        if n >= 2 and n % 2 == 0:
            s = int(np.dot(row[:n] % p, B[:n]) % p)
            B[n] = (-s * pow(n + 1, -1, p)) % p
    return tuple(int(b) for b in B)


def bernoulli_mod_p(n: int, p: int) -> int:
    """B_n mod p for 0 <= n <= p - 3."""
    if not 0 <= n <= p - 3:
        raise ValueError(f"index {n} outside 0..{p - 3}")
    return bernoulli_table_mod_p(p)[n]


def bernoulli_p3_recurrence(p: int) -> int:
    return bernoulli_table_mod_p(p)[p - 3]


@lru_cache(maxsize=None)
def bernoulli_p3_powersum(p: int) -> int:
    """B_{p-3} mod p from the power sum 1^{p-3} + ... + (p-1)^{p-3}.

    Faulhaber's formula gives that power sum as p*B_{p-3} modulo p^2, so a
    single exact division by p recovers the Bernoulli residue.
    """
    _check_prime(p)
    m = p - 3
    s = sum(pow(a, m, p * p) for a in range(1, p))
    total = CappedPadic.from_residue(s, p, 2)
    return total.div_exact_p(1).residue(1)


def bernoulli_p3(p: int) -> int:
    if p <= RECURRENCE_LIMIT:
        return bernoulli_p3_recurrence(p)
    return bernoulli_p3_powersum(p)


@lru_cache(maxsize=None)
def euler_table_mod_p(p: int) -> tuple[int, ...]:
    """E_0, E_2, ..., E_{p-3} mod p from sum_k C(2n, 2k) E_{2k} = 0."""
    _check_prime(p)
    top = p - 3
    E = [1]
    row = np.zeros(top + 1, dtype=np.int64)
    row[0] = 1
    for m in range(1, top + 1):
        row[1 : m + 1] = (row[1 : m + 1] + row[0:m]) % p
        if m % 2 == 0:
            evens = row[0:m:2]
            E.append(int(-int(np.dot(evens, np.array(E, dtype=np.int64)) % p) % p))
    return tuple(E)


def euler_p3(p: int) -> int:
    """E_{p-3} mod p."""
    return euler_table_mod_p(p)[(p - 3) // 2]


def fermat_quotient2(p: int, e: int) -> CappedPadic:
    """q_p(2) = (2^{p-1} - 1)/p, known modulo p^e."""
    _check_prime(p)
    two = CappedPadic.from_integer(2, p, e + 1)
    return (two ** (p - 1) - 1).div_exact_p(1)


@dataclass(frozen=True)
class SpecialValues:
    p: int
    bernoulli_p3: int
    euler_p3: int
    fermat_q2: CappedPadic


def special_values(p: int, e: int = 3, cross_check: bool = True) -> SpecialValues:
    """Bundle of B_{p-3}, E_{p-3} (mod p) and q_p(2) (mod p^e).

    With ``cross_check`` both Bernoulli algorithms run and must agree.
    """
    b = bernoulli_p3(p)
    if cross_check:
        other = bernoulli_p3_powersum(p) if p <= RECURRENCE_LIMIT else bernoulli_p3_recurrence(p)
        if other != b:
            raise ArithmeticError(f"Bernoulli algorithms disagree at p={p}: {b} vs {other}")
    return SpecialValues(p, b, euler_p3(p), fermat_quotient2(p, e))
