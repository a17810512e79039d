"""
Fixed-precision p-adic numbers
==============================

Every value carries its own precision, so an answer is never reported
to more digits than the inputs justify.
"""

from fractions import Fraction

from supercong import CappedPadic, PrecisionError

p = 7

# 1/2 as a 7-adic integer, known modulo 7^4
half = CappedPadic.from_rational(Fraction(1, 2), p, 4)
print(half, "residue", half.residue())

# 49 has valuation 2; times a unit known to 3 digits it is known mod 7^5
x = CappedPadic.from_integer(49, p, 3) * CappedPadic.from_integer(3, p, 3)
print("valuation", x.valuation, "precision", x.prec)

# the Fermat quotient q_p(2) = (2^(p-1) - 1)/p needs one exact division by p
two = CappedPadic.from_integer(2, p, 4)
q = (two ** (p - 1) - 1).div_exact_p(1)
print("q_7(2) =", q.residue(), "mod 7^3 (exact value 9)")

# asking for more digits than are known is an error, not a silent guess
try:
    q.residue(5)
except PrecisionError as exc:
    print("refused:", exc)
