"""Exact rationals and capped-precision p-adic numbers.

A :class:`CappedPadic` stores ``p**v * u`` where the unit ``u`` is known
modulo ``p**e``; the value is therefore known modulo ``p**(v + e)``, its
*absolute precision*.  Zero is a value whose valuation equals its absolute
precision (nothing nonzero is known below that power of ``p``).

Negative valuations are never represented: every quantity this package
reduces is p-integral, and a computation that would leave the integers is
a bug in the caller, reported as :class:`ValuationError`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = [
    "BigRational",
    "CappedPadic",
    "PrecisionError",
    "ValuationError",
    "valuation",
    "congruent",
]

BigRational = Fraction


class PrecisionError(ArithmeticError):
    """Not enough p-adic precision is left to decide a question."""


class ValuationError(ArithmeticError):
    """A value has smaller p-adic valuation than the operation requires."""


def valuation(x: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


class CappedPadic:
    __slots__ = ("p", "v", "u", "e")

    def __init__(self, p: int, v: int, u: int, e: int):
        self.p = p
        self.v = v
        self.u = u
        self.e = e

    # -- construction -------------------------------------------------------

    @classmethod
    def _canonical(cls, p: int, x: int, prec: int) -> "CappedPadic":
        # x known modulo p**prec
        if prec < 1:
            raise PrecisionError(f"absolute precision {prec} exhausted")
        mod = p**prec
        x %= mod
        if x == 0:
            return cls(p, prec, 0, 0)
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return cls(p, v, x % p ** (prec - v), prec - v)

    @classmethod
    def zero(cls, p: int, prec: int) -> "CappedPadic":
        """Zero known modulo ``p**prec``."""
        return cls(p, prec, 0, 0)

    @classmethod
    def from_integer(cls, x: int, p: int, e: int) -> "CappedPadic":
        """Exact integer ``x`` with ``e`` digits of relative precision.

        Zero maps to zero at absolute precision ``e``.
        """
        if e < 1:
            raise ValueError("precision exponent must be >= 1")
        x = int(x)
        if x == 0:
            return cls(p, e, 0, 0)
        v = valuation(x, p)
        pe = p**e
        return cls(p, v, (x // p**v) % pe, e)

    @classmethod
    def from_residue(cls, r: int, p: int, prec: int) -> "CappedPadic":
        """Integer known only modulo ``p**prec``."""
        return cls._canonical(p, int(r), prec)

    @classmethod
    def from_rational(cls, r, p: int, e: int) -> "CappedPadic":
        """Reduce a rational with nonnegative p-adic valuation.

        Numerator and denominator are reduced independently, each with
        ``e`` digits of relative precision.
        """
        if e < 1:
            raise ValueError("precision exponent must be >= 1")
        r = Fraction(r)
        num, den = r.numerator, r.denominator
        if num == 0:
            return cls(p, e, 0, 0)
        vn = valuation(num, p)
        vd = valuation(den, p)
        if vn < vd:
            raise ValuationError(f"{r} has negative {p}-adic valuation")
        pe = p**e
        un = (num // p**vn) % pe
        ud = (den // p**vd) % pe
        return cls(p, vn - vd, un * pow(ud, -1, pe) % pe, e)

    def _coerce(self, other) -> "CappedPadic":
        if isinstance(other, CappedPadic):
            if other.p != self.p:
                raise ValueError(f"prime mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, (int, Rational)):
            # exact operand: never the precision bottleneck
            return CappedPadic.from_rational(other, self.p, max(self.prec, 1))
        return NotImplemented

    # -- inspection ---------------------------------------------------------

    @property
    def prec(self) -> int:
        """Absolute precision: the value is known modulo ``p**prec``."""
        return self.v + self.e

    @property
    def is_zero(self) -> bool:
        return self.e == 0

    @property
    def valuation(self) -> int:
        return self.v

    def is_unit(self) -> bool:
        return self.v == 0 and not self.is_zero

    def residue(self, k: int | None = None) -> int:
        """Representative in ``[0, p**k)``; ``k`` defaults to the full precision."""
        if k is None:
            k = self.prec
        if k > self.prec:
            raise PrecisionError(f"value known mod {self.p}^{self.prec}, asked mod {self.p}^{k}")
        if self.is_zero or self.v >= k:
            return 0
        return self.u * self.p**self.v % self.p**k

    def __int__(self) -> int:
        return self.residue()

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "CappedPadic":
        if self.is_zero:
            return self
        return CappedPadic(self.p, self.v, -self.u % self.p**self.e, self.e)

    def __add__(self, other) -> "CappedPadic":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        prec = min(self.prec, other.prec)
        if other.is_zero:
            return CappedPadic._canonical(p, self.u * p**self.v, prec) if prec < self.prec else self
        if self.is_zero:
            return CappedPadic._canonical(p, other.u * p**other.v, prec) if prec < other.prec else other
        if self.v == other.v:
            # common case: both units, or same valuation
            s = self.u + other.u
            rel = prec - self.v
            s %= p**rel
            if s % p:
                return CappedPadic(p, self.v, s, rel)
            return CappedPadic._canonical(p, s * p**self.v, prec)
        return CappedPadic._canonical(p, self.u * p**self.v + other.u * p**other.v, prec)

    __radd__ = __add__

    def __sub__(self, other) -> "CappedPadic":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "CappedPadic":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "CappedPadic":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        if self.is_zero or other.is_zero:
            return CappedPadic(p, min(self.v + other.prec, other.v + self.prec), 0, 0)
        e = min(self.e, other.e)
        return CappedPadic(p, self.v + other.v, self.u * other.u % p**e, e)

    __rmul__ = __mul__

    def invert(self) -> "CappedPadic":
        """Inverse of a unit, to the unit's own precision."""
        if self.is_zero or self.v > 0:
            raise ValuationError(f"cannot invert a non-unit ({self!r})")
        pe = self.p**self.e
        return CappedPadic(self.p, 0, pow(self.u, -1, pe), self.e)

    def __truediv__(self, other) -> "CappedPadic":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise ZeroDivisionError("division by a p-adic zero")
        p = self.p
        if self.is_zero:
            prec = self.prec - other.v
            if prec < 0:
                raise ValuationError("quotient of zero leaves the p-adic integers")
            return CappedPadic(p, prec, 0, 0)
        v = self.v - other.v
        if v < 0:
            raise ValuationError(
                f"quotient has negative valuation ({self.v} - {other.v}) at p={p}"
            )
        e = min(self.e, other.e)
        pe = p**e
        return CappedPadic(p, v, self.u * pow(other.u, -1, pe) % pe, e)

    def __rtruediv__(self, other) -> "CappedPadic":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int) -> "CappedPadic":
        if n < 0:
            return self.invert() ** (-n)
        p = self.p
        if n == 0:
            return CappedPadic(p, 0, 1 % p ** max(self.prec, 1), max(self.prec, 1))
        if self.is_zero:
            return CappedPadic(p, n * self.prec, 0, 0)
        return CappedPadic(p, n * self.v, pow(self.u, n, p**self.e), self.e)

    def div_exact_p(self, t: int = 1) -> "CappedPadic":
        """Divide by ``p**t``; the value must be visibly divisible."""
        if t < 0:
            raise ValueError("t must be nonnegative")
        if self.v < t:
            raise ValuationError(f"valuation {self.v} < {t}: not divisible by {self.p}^{t}")
        if self.is_zero:
            if self.prec - t < 1:
                raise PrecisionError("no precision left after exact division")
            return CappedPadic(self.p, self.v - t, 0, 0)
        return CappedPadic(self.p, self.v - t, self.u, self.e)

    def congruent(self, other, k: int) -> bool:
        return congruent(self, other, k)

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, CappedPadic):
            return NotImplemented
        return (self.p, self.v, self.u, self.e) == (other.p, other.v, other.u, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.v, self.u, self.e))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"CappedPadic(0 + O({self.p}^{self.prec}))"
        return f"CappedPadic({self.p}^{self.v}*{self.u} + O({self.p}^{self.prec}))"

    def __reduce__(self):
        return (CappedPadic, (self.p, self.v, self.u, self.e))


def congruent(a: CappedPadic, b, k: int) -> bool:
    """Decide ``a == b (mod p**k)``.

    Raises :class:`PrecisionError` when either side is known to less than
    ``p**k``; that is never reported as ``False``.
    """
    if not isinstance(b, CappedPadic):
        b = a._coerce(b)
    if a.prec < k or b.prec < k:
        raise PrecisionError(
            f"need precision {k}, have {a.prec} and {b.prec} at p={a.p}"
        )
    return (a - b).v >= k
