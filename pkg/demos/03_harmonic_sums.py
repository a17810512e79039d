"""
Multiple harmonic sums modulo p^e
=================================

The modular DP against brute-force rationals, then a classical
congruence read off directly.
"""

from supercong import CappedPadic, MhsIndex, mhs_exact, mhs_mod
from supercong.special import bernoulli_p3

p, e = 31, 4

for a in [(1,), (2,), (1, -1), (-2, 1), (1, 1, -1)]:
    fast = mhs_mod(a, 20, p, e).residue()
    exact = mhs_exact(a, 20)
    slow = CappedPadic.from_rational(exact, p, e).residue() if exact else 0
    label = str(MhsIndex(a))[:-1] + "; 20)"
    print(f"{label:<14} dp={fast:>8}  exact={slow:>8}")

# Wolstenholme: H_(p-1) = -p^2/3 B_(p-3) mod p^3
h = mhs_mod(1, p - 1, p, 3)
print("v_p(H_(p-1)) =", h.valuation)
print("H_(p-1)/p^2 =", h.div_exact_p(2).residue(1), " -B/3 =", -bernoulli_p3(p) * pow(3, -1, p) % p)
