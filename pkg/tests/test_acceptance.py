"""Acceptance gate: eight criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
written past output capture so they always appear.
"""

import itertools
import os
import time

import pytest

from supercong import special
from supercong.binomial import binom_exact, central_binom_stream, sum_256, sum_256_exact
from supercong.checks import REGISTRY, context, expand_params, ramanujan_sanity, run_check, run_conjecture22
from supercong.cli import main
from supercong.harmonic import mhs_exact, mhs_mod
from supercong.padic import CappedPadic
from supercong.runner import SuiteConfig, render_report, run_suite
from supercong.special import bernoulli_p3_powersum, bernoulli_p3_recurrence, primes_in_range
from supercong.wz import (
    verify_g_rewrite,
    verify_pochhammer_identities,
    verify_telescoping,
    verify_wz_pair,
)


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail, t0):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}  {detail}  ({time.perf_counter() - t0:.1f}s)")
        assert ok, detail

    return emit


def _bad(results):
    return [(r.check_id, r.p, r.params, r.status) for r in results if r.status in ("fail", "precision_error")]


def test_criterion_1_main_theorem(verdict):
    t0 = time.perf_counter()
    primes = primes_in_range(5, 1009)
    bad = [p for p in primes if run_check("main_p5", p).status != "pass"]
    verdict(1, not bad, f"main_p5 mod p^5 over {len(primes)} primes 5..1009, failures={bad[:5]}", t0)


def test_criterion_2_full_registry(verdict):
    t0 = time.perf_counter()
    results = []
    for p in primes_in_range(5, 499):
        for cid, d in REGISTRY.items():
            if d.conjecture:
                continue
            for params in expand_params(d):
                results.append(run_check(cid, p, params))
    bad = _bad(results)
    n_pass = sum(r.status == "pass" for r in results)
    verdict(2, not bad, f"{len(results)} rows over 5..499, pass={n_pass}, fail/precision={bad[:5]}", t0)


def test_criterion_3_wz_certificates(verdict):
    t0 = time.perf_counter()
    certs = [verify_wz_pair(40), verify_pochhammer_identities(20, 20), verify_g_rewrite(20, 20)]
    certs += [verify_telescoping(p) for p in (5, 7, 11, 13, 17, 19)]
    bad = [(c.name, c.counterexample) for c in certs if not c.ok]
    verdict(3, not bad, f"{len(certs)} exact certificates, failures={bad}", t0)


def test_criterion_4_oracle_independence(verdict):
    t0 = time.perf_counter()
    b_bad = [p for p in primes_in_range(7, 499) if bernoulli_p3_recurrence(p) != bernoulli_p3_powersum(p)]
    exps = [a for a in range(-3, 4) if a]
    indices = [ix for d in (1, 2, 3) for ix in itertools.product(exps, repeat=d)]
    m_bad = []
    for ix in indices:
        for n in range(26):
            x = mhs_exact(ix, n)
            for p in (29, 31):
                want = CappedPadic.from_rational(x, p, 12).residue(4) if x else 0
                if mhs_mod(ix, n, p, 4).residue() != want:
                    m_bad.append((ix, n, p))
    ok = not b_bad and not m_bad
    verdict(4, ok, f"Bernoulli disagreements={b_bad}, MHS grid {len(indices)}x26x2 mismatches={m_bad[:5]}", t0)


def test_criterion_5_exact_modular_coherence(verdict):
    t0 = time.perf_counter()
    s_bad = []
    for p in primes_in_range(5, 97):
        h = (p - 1) // 2
        got = sum_256(p, 7, h)
        want = CappedPadic.from_rational(sum_256_exact(h), p, 12)
        if got.residue(5) != want.residue(5):
            s_bad.append(p)
    c_bad = []
    for p in primes_in_range(5, 199):
        stream = central_binom_stream(p, 3, p - 2)
        for n in range(p - 1):
            want = binom_exact(2 * n, n) % p**3
            if stream[n].residue(3) != want:
                c_bad.append((p, n))
    verdict(5, not s_bad and not c_bad, f"sum_256 mismatches={s_bad}, C(2n,n) mismatches={c_bad[:5]}", t0)


def test_criterion_6_conjecture_instances(verdict):
    t0 = time.perf_counter()
    bad, mismatch = [], []
    for p in primes_in_range(7, 199):
        for m in (1, 3, 5):
            r = run_conjecture22(p, m)
            if r.status != "pass":
                bad.append((p, m, r.status))
        main_lhs = int(run_check("main_p5", p).lhs)
        sign = -1 if (p - 1) // 2 % 2 else 1
        if (main_lhs - sign * p) // p**4 % p != int(run_conjecture22(p, 1).lhs):
            mismatch.append(p)
    verdict(6, not bad and not mismatch,
            f"conjecture instances m in (1,3,5), failures={bad[:5]}, m=1 vs main mismatches={mismatch}", t0)


def test_criterion_7_ramanujan(verdict):
    t0 = time.perf_counter()
    s, err = ramanujan_sanity(25)
    verdict(7, err < 1e-12, f"partial sum {s!r}, |S - 4/pi| = {err:.3e}", t0)


def test_criterion_8_determinism_and_exit_codes(verdict, capsys, monkeypatch):
    t0 = time.perf_counter()
    jobs = 8
    base = dict(prime_lo=5, prime_hi=199, timing=False)
    r1 = run_suite(SuiteConfig(jobs=1, **base))
    r8 = run_suite(SuiteConfig(jobs=jobs, **base))
    same = all(render_report(r1, f, timing=False) == render_report(r8, f, timing=False)
               for f in ("json", "csv", "table"))
    codes = (
        main(["run", "--primes", "5..23", "--jobs", "2", "--quiet"]),
        main(["run", "--primes", "2..23"]),
        main(["run", "--checks", "not_a_check"]),
    )
    # a corrupted Bernoulli oracle must surface as exit code 1
    good = special.bernoulli_p3
    context.cache_clear()
    monkeypatch.setattr(special, "bernoulli_p3", lambda p: (good(p) + 1) % p)
    codes += (main(["run", "--primes", "11..13", "--checks", "main_p5"]),)
    monkeypatch.undo()
    context.cache_clear()
    capsys.readouterr()
    ok = same and codes == (0, 2, 2, 1) and r1.summary["fail"] == 0
    verdict(8, ok, f"jobs=1 vs jobs={jobs} identical={same} ({len(r1.results)} results, "
                   f"{os.cpu_count()} cpu), exit codes ok/usage/usage/fail={codes}", t0)
