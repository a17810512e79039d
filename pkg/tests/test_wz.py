from fractions import Fraction

import pytest

from supercong.binomial import F_eval, G_eval
from supercong.wz import (
    g_rewrite_forms,
    term_ratios,
    verify_g_rewrite,
    verify_pochhammer_identities,
    verify_telescoping,
    verify_wz_pair,
)


def test_wz_pair_small():
    cert = verify_wz_pair(12)
    assert cert and cert.checked == 13 * 12


def test_telescoping_p7():
    cert = verify_telescoping(7)
    assert cert.ok and cert.detail["p"] == 7


def test_pochhammer_small():
    assert verify_pochhammer_identities(8, 8)


@pytest.mark.parametrize("n,k,want", [(1, 1, Fraction(1)), (2, 1, Fraction(9, 32)), (3, 2, None)])
def test_g_rewrite_points(n, k, want):
    forms = g_rewrite_forms(n, k)
    assert len(set(forms)) == 1
    assert forms[0] == (want if want is not None else G_eval(n, k))


def test_g_rewrite_grid():
    assert verify_g_rewrite(10, 10)


def test_term_ratios_against_terms():
    for n in range(1, 15):
        for k in range(1, n + 1):
            f = F_eval(n, k)
            r1, r2, r3 = term_ratios(n, k)
            assert F_eval(n, k - 1) == r1 * f
            assert G_eval(n, k) == r2 * f
            assert G_eval(n + 1, k) == r3 * f


def test_cleared_identity_is_zero_polynomial():
    sympy = pytest.importorskip("sympy")
    n, k = sympy.symbols("n k")
    den = 2 * (6 * n - 2 * k + 1) * (2 * n + 2 * k - 1) * (n - k + 1)
    r1 = (6 * n - 2 * k + 3) * (2 * n - 2 * k + 1) * (2 * k - 1) / den
    r2 = 16 * n**2 / ((2 * n + 2 * k - 1) * (6 * n - 2 * k + 1))
    r3 = (2 * n + 1) * (2 * n - 2 * k + 1) / (2 * (6 * n - 2 * k + 1) * (n - k + 1))
    poly = sympy.expand(sympy.cancel((r1 - 1 - r3 + r2) * den))
    assert poly == 0
    # each cleared term has total degree <= 3, the basis of the finite grid bound
    for term in (r1, r3, r2, sympy.Integer(1)):
        assert sympy.Poly(sympy.cancel(term * den), n, k).total_degree() <= 3


def test_broken_pair_is_caught(monkeypatch):
    import supercong.wz as wz

    monkeypatch.setattr(wz, "_G", lambda n, k: G_eval(n, k) + (1 if (n, k) == (3, 2) else 0))
    cert = wz.verify_wz_pair(5)
    assert not cert and cert.counterexample[0].k == 2
