"""
Conjectural generalisation to sums up to (pm-1)/2
=================================================

For odd m the difference between the long sum and p times the short one
is divisible by p^4, with quotient proportional to B_(p-3).  These runs
are evidence, not proof; the suite reports them separately.
"""

from supercong import SuiteConfig, render_report, run_suite

cfg = SuiteConfig(prime_lo=7, prime_hi=61, check_ids=("conj22",), timing=False)
report = run_suite(cfg)
print(render_report(report, "table", timing=False))
