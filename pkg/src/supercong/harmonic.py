"""Alternating multiple harmonic sums, exactly and modulo prime powers.

``H(a_1, ..., a_m; n)`` sums ``prod sign(a_i)**k_i / k_i**|a_i|`` over
``1 <= k_1 < ... < k_m <= n``.  ``H_n`` is ``H(1; n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .padic import CappedPadic, ValuationError

__all__ = [
    "MhsIndex",
    "mhs_exact",
    "mhs_mod",
    "unit_inverses",
    "harmonic_prefix",
    "HarmonicStreams",
    "prefix_streams",
    "odd_harmonic",
    "odd_harmonic_exact",
]


@dataclass(frozen=True)
class MhsIndex:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if not exps:
            raise ValueError("an MHS index needs at least one exponent")
        if any(a == 0 for a in exps):
            raise ValueError(f"exponents must be nonzero: {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, *exponents: int) -> "MhsIndex":
        return cls(tuple(exponents))

    @property
    def depth(self) -> int:
        return len(self.exponents)

    @property
    def weight(self) -> int:
        return sum(abs(a) for a in self.exponents)

    def __str__(self) -> str:
        return "H(" + ",".join(str(a) for a in self.exponents) + ")"


def _as_index(a) -> MhsIndex:
    if isinstance(a, MhsIndex):
        return a
    if isinstance(a, int):
        return MhsIndex((a,))
    return MhsIndex(tuple(a))


def mhs_exact(a, n: int) -> Fraction:
    """Brute-force H(a; n) over all increasing index tuples.  Oracle scale only.

    Terms are accumulated as integers over the common denominator
    lcm(1..n)^weight, which keeps the enumeration cheap.
    """
    a = _as_index(a)
    if n < a.depth:
        return Fraction(0)
    L = lcm(*range(1, n + 1))
    powers = [[L ** abs(ai) // k ** abs(ai) if k else 0 for k in range(n + 1)] for ai in a.exponents]
    total = 0
    for ks in combinations(range(1, n + 1), a.depth):
        t = 1
        for ai, pw, k in zip(a.exponents, powers, ks):
            t *= pw[k]
            if ai < 0 and k % 2:
                t = -t
        total += t
    return Fraction(total, L**a.weight)


def unit_inverses(n: int, p: int, e: int) -> list[int]:
    """Inverses of 1..n modulo p^e (index 0 unused), one modular inversion total."""
    mod = p**e
    if n >= p:
        raise ValuationError(f"{p} divides some k <= {n}")
    prefix = [1] * (n + 1)
    for k in range(1, n + 1):
        prefix[k] = prefix[k - 1] * k % mod
    inv = [0] * (n + 1)
    acc = pow(prefix[n], -1, mod) if n else 1
    for k in range(n, 0, -1):
        inv[k] = acc * prefix[k - 1] % mod
        acc = acc * k % mod
    return inv


def mhs_mod(a, n: int, p: int, e: int) -> CappedPadic:
    """H(a; n) modulo p^e for n < p.

    Prefix accumulators T_j (depth-j partial sums with largest index <= k)
    are updated in descending j so each k enters a tuple at most once.
    """
    a = _as_index(a)
    if n >= p:
        raise ValuationError(f"H(...; {n}) has denominators divisible by {p}")
    mod = p**e
    inv = unit_inverses(n, p, e)
    m = a.depth
    T = [1] + [0] * m
    for k in range(1, n + 1):
        ik = inv[k]
        for j in range(m, 0, -1):
            aj = a.exponents[j - 1]
            t = T[j - 1] * pow(ik, abs(aj), mod)
            if aj < 0 and k % 2:
                t = -t
            T[j] = (T[j] + t) % mod
    return CappedPadic.from_residue(T[m], p, e)


def harmonic_prefix(p: int, e: int, n: int) -> tuple[list[int], list[int]]:
    """Residues of H_j and H(2; j) modulo p^e for j = 0..n (n < p)."""
    mod = p**e
    inv = unit_inverses(n, p, e)
    h1 = [0] * (n + 1)
    h2 = [0] * (n + 1)
    for j in range(1, n + 1):
        ij = inv[j]
        h1[j] = (h1[j - 1] + ij) % mod
        h2[j] = (h2[j - 1] + ij * ij) % mod
    return h1, h2


@dataclass(frozen=True)
class HarmonicStreams:
    """Per-k harmonic prefixes, each a list indexed by k = 0..n_max."""

    p: int
    e: int
    h_k: list
    h_2k: list
    h2_k: list
    h2_2k: list
    h_2k_minus_2: list
    h2_2k_minus_2: list


def prefix_streams(p: int, e: int, n_max: int) -> HarmonicStreams:
    """H_k, H_{2k}, H(2;k), H(2;2k), H_{2k-2}, H(2;2k-2) for k <= n_max.

    The k = 0 slot of the ``2k - 2`` streams is unused and set to zero.
    """
    if 2 * n_max >= p:
        raise ValuationError(f"2*{n_max} >= {p}: H_(2k) would need a non-unit inverse")
    h1, h2 = harmonic_prefix(p, e, 2 * n_max)

    def wrap(xs):
        return [CappedPadic.from_residue(x, p, e) for x in xs]

    ks = range(n_max + 1)
    return HarmonicStreams(
        p,
        e,
        wrap(h1[: n_max + 1]),
        wrap(h1[2 * k] for k in ks),
        wrap(h2[: n_max + 1]),
        wrap(h2[2 * k] for k in ks),
        wrap(h1[max(2 * k - 2, 0)] for k in ks),
        wrap(h2[max(2 * k - 2, 0)] for k in ks),
    )


def odd_harmonic_exact(n: int) -> Fraction:
    return sum((Fraction(1, 2 * k - 1) for k in range(1, n + 1)), Fraction(0))


def odd_harmonic(n: int, p: int, e: int) -> CappedPadic:
    """sum_{k=1}^{n} 1/(2k - 1) modulo p^e."""
    mod = p**e
    s = 0
    for k in range(1, n + 1):
        d = 2 * k - 1
        if d % p == 0:
            raise ValuationError(f"denominator {d} divisible by {p}")
        s += pow(d, -1, mod)
    return CappedPadic.from_residue(s, p, e)
