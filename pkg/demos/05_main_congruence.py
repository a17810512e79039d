"""
The mod p^5 congruence for the 256^n series
===========================================

sum_{n<=(p-1)/2} (6n+1) C(2n,n)^3 / 256^n
    = (-1)^((p-1)/2) (p + 7/24 p^4 B_(p-3))  mod p^5
"""

import time

from supercong import run_check, sum_256
from supercong.special import primes_in_range

p = 13
s = sum_256(p, 7, (p - 1) // 2)
print(f"p={p}: sum = {s.residue(5)} mod {p}^5")
print(run_check("main_p5", p))

t0 = time.perf_counter()
primes = primes_in_range(5, 600)
statuses = {run_check("main_p5", q).status for q in primes}
print(f"{len(primes)} primes up to 600: {statuses} in {time.perf_counter() - t0:.2f}s")

# the proof's two halves, each checked on its own
for cid in ("lemma31_p5", "lemma39_p5", "gsum_closed_p5"):
    print(cid, run_check(cid, 101).status)
