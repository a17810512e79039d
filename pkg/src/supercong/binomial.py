"""Central binomial sums, Pochhammer symbols and the WZ pair (F, G).

    F(n, k) = (6n - 2k + 1) / 2^(8n - 2k)
              * C(2n, n) C(2n+2k, n+k) C(2n-2k, n-k) C(n+k, n) / C(2k, k)

    G(n, k) = n^2 C(2n, n) C(2n+2k, n+k) C(2n-2k, n-k) C(n+k, n)
              / (2^(8n - 2k - 4) (2n + 2k - 1) C(2k, k))

Both vanish for n < k.  Exact evaluators return :class:`~fractions.Fraction`;
the ``*_mod`` twins compute the binomials as exact integers and reduce them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .padic import CappedPadic

__all__ = [
    "WzPoint",
    "binom_exact",
    "central_binom_stream",
    "sum_256",
    "sum_256_exact",
    "sum_16",
    "sum_16_exact",
    "rising_factorial",
    "rising_factorial_mod",
    "F_eval",
    "G_eval",
    "F_mod",
    "G_mod",
    "F_half_half",
]


@dataclass(frozen=True, order=True)
class WzPoint:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError(f"WZ points are nonnegative: {self}")


def binom_exact(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


def central_binom_stream(p: int, e: int, n_max: int) -> list[CappedPadic]:
    """C(2n, n) for n = 0..n_max, each with ``e`` digits of relative precision.

    Uses C(2n+2, n+1) = C(2n, n) * 2(2n+1)/(n+1).  Factors divisible by p
    change the valuation and leave the relative precision intact.
    """
    one = CappedPadic.from_integer(1, p, e)
    out = [one]
    c = one
    for n in range(n_max):
        num = CappedPadic.from_integer(2 * (2 * n + 1), p, e)
        den = CappedPadic.from_integer(n + 1, p, e)
        c = c * num / den
        out.append(c)
    return out


def _weighted_central_sum(p, e, upper, weight, ratio):
    binoms = central_binom_stream(p, e, upper)
    step = CappedPadic.from_integer(ratio, p, e).invert()
    scale = CappedPadic.from_integer(1, p, e)
    total = CappedPadic.zero(p, e)
    for n, c in enumerate(binoms):
        w = CappedPadic.from_integer(weight(n), p, e)
        total = total + w * c * c * c * scale
        scale = scale * step
    return total


def sum_256(p: int, e: int, upper: int) -> CappedPadic:
    """sum_{n=0}^{upper} (6n+1) C(2n,n)^3 / 256^n reduced at relative precision e."""
    return _weighted_central_sum(p, e, upper, lambda n: 6 * n + 1, 256)


def sum_256_exact(upper: int) -> Fraction:
    return sum(
        (Fraction((6 * n + 1) * comb(2 * n, n) ** 3, 256**n) for n in range(upper + 1)),
        Fraction(0),
    )


def sum_16(p: int, e: int, upper: int | None = None) -> CappedPadic:
    """sum_{n=0}^{upper} (3n+1) C(2n,n)^3 / 16^n; ``upper`` defaults to p - 1."""
    if upper is None:
        upper = p - 1
    return _weighted_central_sum(p, e, upper, lambda n: 3 * n + 1, 16)


def sum_16_exact(upper: int) -> Fraction:
    return sum(
        (Fraction((3 * n + 1) * comb(2 * n, n) ** 3, 16**n) for n in range(upper + 1)),
        Fraction(0),
    )


def rising_factorial(x, k: int) -> Fraction:
    """(x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


def rising_factorial_mod(x, k: int, p: int, e: int) -> CappedPadic:
    """(x)_k with every factor reduced as a p-integral rational."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = Fraction(x)
    out = CappedPadic.from_integer(1, p, e)
    for i in range(k):
        out = out * CappedPadic.from_rational(x + i, p, e)
    return out


def _pt(n, k=None):
    if isinstance(n, WzPoint):
        return n.n, n.k
    return n, k


def _fg_parts(n, k):
    # numerator and denominator integers shared by F and G (power of 2 aside)
    num = comb(2 * n, n) * comb(2 * n + 2 * k, n + k) * comb(2 * n - 2 * k, n - k) * comb(n + k, n)
    return num, comb(2 * k, k)


def F_eval(n, k=None) -> Fraction:
    n, k = _pt(n, k)
    if n < k:
        return Fraction(0)
    num, den = _fg_parts(n, k)
    return Fraction((6 * n - 2 * k + 1) * num, den) / Fraction(2) ** (8 * n - 2 * k)


def G_eval(n, k=None) -> Fraction:
    n, k = _pt(n, k)
    if n < k or n == 0:
        return Fraction(0)
    num, den = _fg_parts(n, k)
    return Fraction(n * n * num, den * (2 * n + 2 * k - 1)) / Fraction(2) ** (8 * n - 2 * k - 4)


def _reduce_ratio(num: int, den: int, p: int, e: int) -> CappedPadic:
    if num == 0:
        return CappedPadic.zero(p, e)
    return CappedPadic.from_integer(num, p, e) / CappedPadic.from_integer(den, p, e)


def F_mod(n: int, k: int, p: int, e: int) -> CappedPadic:
    """F(n, k) with relative precision e; ValuationError if p divides the denominator too often."""
    if n < k:
        return CappedPadic.zero(p, e)
    num, den = _fg_parts(n, k)
    two_exp = 8 * n - 2 * k
    return _reduce_ratio((6 * n - 2 * k + 1) * num, den * 2**two_exp, p, e)


def G_mod(n: int, k: int, p: int, e: int) -> CappedPadic:
    if n < k or n == 0:
        return CappedPadic.zero(p, e)
    num, den = _fg_parts(n, k)
    # 8n - 2k - 4 >= 2 whenever 1 <= n and k <= n
    two_exp = 8 * n - 2 * k - 4
    return _reduce_ratio(n * n * num, den * (2 * n + 2 * k - 1) * 2**two_exp, p, e)


def F_half_half(p: int, e: int) -> CappedPadic:
    """F((p-1)/2, (p-1)/2) = p C(2p-1, p-1) C(p-1, (p-1)/2) / 2^(3p-3).

    The binomials are unit-valued; the explicit factor p sets valuation 1.
    """
    h = (p - 1) // 2
    top = CappedPadic.from_integer(p * comb(2 * p - 1, p - 1) * comb(p - 1, h), p, e)
    two = CappedPadic.from_integer(2, p, e)
    return top * (two ** (3 * p - 3)).invert()
