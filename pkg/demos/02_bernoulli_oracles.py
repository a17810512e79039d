"""
Two independent routes to B_(p-3) mod p
=======================================

A Pascal-row recurrence over all of B_0..B_(p-3), and a power sum
sum a^(p-3) mod p^2 divided by p.  They share no code, so agreement is
evidence for both.
"""

import numpy as np

from supercong.special import bernoulli_p3_powersum, bernoulli_p3_recurrence, euler_p3, primes_in_range

primes = np.array(primes_in_range(7, 300))
rec = np.array([bernoulli_p3_recurrence(int(p)) for p in primes])
pw = np.array([bernoulli_p3_powersum(int(p)) for p in primes])
print(f"{len(primes)} primes, disagreements: {int((rec != pw).sum())}")

# irregular pairs (p, p-3), where p divides B_(p-3); the first one is p = 16843
print("p | B_(p-3):", primes[rec == 0].tolist())

for p in (13, 37, 101):
    print(p, "B =", bernoulli_p3_recurrence(p), " E =", euler_p3(p))
