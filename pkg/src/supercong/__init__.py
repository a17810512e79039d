"""Numerical verification of a mod p^5 supercongruence for a Ramanujan-type series.

The library layers p-adic fixed-precision arithmetic, Bernoulli/Euler
numbers modulo p, multiple harmonic sums, central binomial sums, exact WZ
certificates and a registry of congruence checks.  :mod:`supercong.runner`
drives the registry across prime ranges.
"""

__version__ = "0.1.0"

from .padic import BigRational, CappedPadic, PrecisionError, ValuationError, congruent, valuation
from .special import (
    SpecialValues,
    bernoulli_p3,
    bernoulli_p3_powersum,
    bernoulli_p3_recurrence,
    euler_p3,
    fermat_quotient2,
    special_values,
)
from .harmonic import MhsIndex, mhs_exact, mhs_mod
from .binomial import (
    F_eval,
    F_mod,
    G_eval,
    G_mod,
    WzPoint,
    binom_exact,
    central_binom_stream,
    rising_factorial,
    sum_16,
    sum_256,
    sum_256_exact,
)
from .wz import (
    Certificate,
    verify_g_rewrite,
    verify_pochhammer_identities,
    verify_telescoping,
    verify_wz_pair,
)
from .checks import REGISTRY, CheckDefinition, CheckResult, ramanujan_sanity, run_check, run_conjecture22
from .runner import Report, SuiteConfig, render_report, run_suite

__all__ = [
    "BigRational",
    "CappedPadic",
    "PrecisionError",
    "ValuationError",
    "congruent",
    "valuation",
    "SpecialValues",
    "bernoulli_p3",
    "bernoulli_p3_powersum",
    "bernoulli_p3_recurrence",
    "euler_p3",
    "fermat_quotient2",
    "special_values",
    "MhsIndex",
    "mhs_exact",
    "mhs_mod",
    "F_eval",
    "F_mod",
    "G_eval",
    "G_mod",
    "WzPoint",
    "binom_exact",
    "central_binom_stream",
    "rising_factorial",
    "sum_16",
    "sum_256",
    "sum_256_exact",
    "Certificate",
    "verify_g_rewrite",
    "verify_pochhammer_identities",
    "verify_telescoping",
    "verify_wz_pair",
    "REGISTRY",
    "CheckDefinition",
    "CheckResult",
    "ramanujan_sanity",
    "run_check",
    "run_conjecture22",
    "Report",
    "SuiteConfig",
    "render_report",
    "run_suite",
]
