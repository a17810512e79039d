"""Exact instance certificates for the WZ pair and the rewriting of G.

Why a finite grid suffices for the pair identity
------------------------------------------------
On the region ``n >= k >= 1`` every term is a nonzero multiple of F(n, k),
and dividing through gives ratios that are rational functions:

    F(n,k-1)/F(n,k) = (6n-2k+3)(2n-2k+1)(2k-1) / (2(6n-2k+1)(2n+2k-1)(n-k+1))
    G(n,k)/F(n,k)   = 16 n^2 / ((2n+2k-1)(6n-2k+1))
    G(n+1,k)/F(n,k) = (2n+1)(2n-2k+1) / (2(6n-2k+1)(n-k+1))

Clearing the common denominator 2(6n-2k+1)(2n+2k-1)(n-k+1) turns the
identity into P(n, k) = 0 with P of total degree at most 3.  In the
coordinates (m, k) = (n - k, k), a polynomial of degree <= 3 in each
variable that vanishes on {0..3} x {1..4} vanishes identically, so any grid
with n_max >= 7 is a complete certificate for this region.  On the diagonal
n = k - 1 the identity reads F(k-1, k-1) = G(k, k), whose ratio simplifies
to the constant 1; below it both sides are zero.  ``term_ratios`` exposes
the three rational functions so tests can confirm them against the terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .binomial import F_eval, G_eval, WzPoint, rising_factorial

__all__ = [
    "Certificate",
    "verify_wz_pair",
    "verify_telescoping",
    "verify_pochhammer_identities",
    "verify_g_rewrite",
    "g_rewrite_forms",
    "term_ratios",
]

HALF = Fraction(1, 2)


@dataclass
class Certificate:
    name: str
    ok: bool
    checked: int
    counterexample: tuple | None = None
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


_F = lru_cache(maxsize=None)(F_eval)
_G = lru_cache(maxsize=None)(G_eval)


def verify_wz_pair(n_max: int) -> Certificate:
    """F(n,k-1) - F(n,k) == G(n+1,k) - G(n,k) for 0 <= n <= n_max, 1 <= k <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    checked = 0
    for n in range(n_max + 1):
        for k in range(1, n_max + 1):
            lhs = _F(n, k - 1) - _F(n, k)
            rhs = _G(n + 1, k) - _G(n, k)
            checked += 1
            if lhs != rhs:
                return Certificate("wz_pair", False, checked, (WzPoint(n, k), lhs, rhs))
    return Certificate("wz_pair", True, checked)


def verify_telescoping(p: int) -> Certificate:
    """Check the summed pair identity over n, k <= (p-1)/2, column by column.

    Each column k must satisfy sum_n [F(n,k-1) - F(n,k)] = G((p+1)/2, k)
    (G(0, k) = 0), and the total must give
    sum_n F(n, 0) = F(h, h) + sum_k G((p+1)/2, k) with h = (p-1)/2.
    """
    if p < 5:
        raise ValueError("p must be >= 5")
    h = (p - 1) // 2
    checked = 0
    for k in range(1, h + 1):
        col = sum((_F(n, k - 1) - _F(n, k) for n in range(h + 1)), Fraction(0))
        checked += 1
        if col != _G(h + 1, k) - _G(0, k):
            return Certificate("wz_telescoping", False, checked, (k, col, _G(h + 1, k)))
    lhs = sum((_F(n, 0) for n in range(h + 1)), Fraction(0))
    rhs = _F(h, h) + sum((_G(h + 1, k) for k in range(1, h + 1)), Fraction(0))
    checked += 1
    if lhs != rhs:
        return Certificate("wz_telescoping", False, checked, (p, lhs, rhs))
    return Certificate("wz_telescoping", True, checked, detail={"p": p, "sum": lhs})


def verify_pochhammer_identities(n_max: int, k_max: int) -> Certificate:
    """The three half-integer Pochhammer identities used to rewrite G."""
    checked = 0
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            a = rising_factorial(HALF, n + k) / factorial(n + k)
            b = Fraction(comb(2 * n + 2 * k, n + k), 4 ** (n + k))
            checked += 1
            if a != b:
                return Certificate("wz_pochhammer", False, checked, ("ratio", n, k, a, b))
            a = rising_factorial(HALF, n + k)
            b = rising_factorial(HALF, n) * rising_factorial(HALF + n, k)
            checked += 1
            if a != b:
                return Certificate("wz_pochhammer", False, checked, ("split", n, k, a, b))
            if 1 <= k <= n:
                a = rising_factorial(HALF, n - k) * rising_factorial(HALF + n - k, k - 1)
                b = rising_factorial(HALF, n - 1)
                checked += 1
                if a != b:
                    return Certificate("wz_pochhammer", False, checked, ("shift", n, k, a, b))
    return Certificate("wz_pochhammer", True, checked)


def g_rewrite_forms(n: int, k: int) -> list[Fraction]:
    """The four successive expressions for G(n, k), valid for 1 <= k <= n.

    In the last form the n!^2 of the earlier ones has cancelled against
    (1/2)_n (1/2)_{n-1}; keeping it would be off by exactly n!^2.
    """
    nf2 = factorial(n) ** 2
    cn = comb(2 * n, n)
    cnk = comb(n, k)
    c2k = comb(2 * k, k)
    lin = 2 * n + 2 * k - 1
    two = Fraction(2)
    poch = rising_factorial
    first = Fraction(
        n * n * cn * comb(2 * n + 2 * k, n + k) * comb(2 * n - 2 * k, n - k) * comb(n + k, n),
        lin * c2k,
    ) / two ** (8 * n - 2 * k - 4)
    second = (
        n * n * cn * poch(HALF, n + k) * poch(HALF, n - k) * cnk
        / (two ** (4 * n - 4 - 2 * k) * nf2 * lin * c2k)
    )
    third = (
        n * n * cn * poch(HALF, n) * poch(HALF, n - 1) * poch(HALF + n, k) * cnk
        / (two ** (4 * n - 4 - 2 * k) * nf2 * poch(HALF + n - k, k - 1) * lin * c2k)
    )
    fourth = (
        n * cn**2 * comb(2 * n - 2, n - 1) * poch(HALF + n, k) * cnk
        / (two ** (8 * n - 6 - 2 * k) * poch(HALF + n - k, k - 1) * lin * c2k)
    )
    return [first, second, third, fourth]


def verify_g_rewrite(n_max: int, k_max: int) -> Certificate:
    """All four forms of G(n, k) agree (and equal G_eval) for 1 <= k <= n."""
    checked = 0
    for n in range(1, n_max + 1):
        for k in range(1, min(n, k_max) + 1):
            forms = g_rewrite_forms(n, k)
            checked += 1
            if any(f != _G(n, k) for f in forms):
                return Certificate("wz_g_rewrite", False, checked, (WzPoint(n, k), forms))
    return Certificate("wz_g_rewrite", True, checked)


def term_ratios(n: int, k: int) -> tuple[Fraction, Fraction, Fraction]:
    """Closed-form ratios F(n,k-1)/F(n,k), G(n,k)/F(n,k), G(n+1,k)/F(n,k) for n >= k >= 1."""
    r1 = Fraction(
        (6 * n - 2 * k + 3) * (2 * n - 2 * k + 1) * (2 * k - 1),
        2 * (6 * n - 2 * k + 1) * (2 * n + 2 * k - 1) * (n - k + 1),
    )
    r2 = Fraction(16 * n * n, (2 * n + 2 * k - 1) * (6 * n - 2 * k + 1))
    r3 = Fraction(
        (2 * n + 1) * (2 * n - 2 * k + 1),
        2 * (6 * n - 2 * k + 1) * (n - k + 1),
    )
    return r1, r2, r3
