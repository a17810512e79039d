from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from supercong.padic import CappedPadic, PrecisionError, ValuationError, congruent, valuation

P = CappedPadic


def exact(x, p):
    """Reference element with far more precision than anything under test."""
    return P.from_rational(Fraction(x), p, 60)


# -- worked values -----------------------------------------------------------


def test_from_integer_examples():
    a = P.from_integer(10, 5, 3)
    assert (a.v, a.u) == (1, 2)
    assert P.from_integer(0, 7, 2).is_zero
    b = P.from_integer(126, 5, 3)
    assert (b.v, b.u) == (0, 1)


def test_ring_examples():
    s = P.from_integer(5, 5, 3) + P.from_integer(20, 5, 3)
    assert (s.v, s.u) == (2, 1)
    m = P.from_integer(10, 5, 3) * P.from_integer(3, 5, 3)
    assert (m.v, m.u) == (1, 6)
    x = P.from_integer(17, 11, 4)
    assert (x - x).is_zero


@pytest.mark.parametrize("u,p,e,want", [(2, 7, 1, 4), (1, 5, 4, 1), (3, 5, 2, 17)])
def test_invert_examples(u, p, e, want):
    assert P.from_integer(u, p, e).invert().residue() == want


def test_invert_non_unit():
    with pytest.raises(ValuationError):
        P.from_integer(10, 5, 3).invert()


def test_pow_examples():
    assert (P.from_integer(2, 5, 2) ** 4).residue() == 16
    assert (P.from_integer(2, 11, 1) ** 10).residue() == 1
    assert (P.from_integer(7, 13, 3) ** 0).residue() == 1


def test_div_exact_p_examples():
    a = P.from_integer(10, 5, 3).div_exact_p(1)
    assert (a.v, a.u) == (0, 2)
    b = P.from_integer(25, 5, 3).div_exact_p(2)
    assert (b.v, b.u) == (0, 1)
    with pytest.raises(ValuationError):
        P.from_integer(3, 5, 3).div_exact_p(1)


def test_from_rational_examples():
    assert P.from_rational(Fraction(1, 6), 5, 1).residue() == 1
    assert P.from_rational(Fraction(1, 2), 7, 1).residue() == 4
    with pytest.raises(ValuationError):
        P.from_rational(Fraction(1, 5), 5, 1)


def test_congruent_examples():
    assert congruent(P.from_integer(126, 5, 3), P.from_integer(1, 5, 3), 3)
    x = P.from_integer(42, 7, 3)
    assert congruent(x, x, 2)
    assert not congruent(P.from_integer(2, 7, 1), P.from_integer(3, 7, 1), 1)


def test_congruent_demands_precision():
    a = P.from_integer(1, 5, 2)
    with pytest.raises(PrecisionError):
        congruent(a, P.from_integer(1, 5, 5), 3)


def test_precision_tracking():
    # a unit known mod p^2 times p^3 is known mod p^5
    a = P.from_integer(3, 5, 2) * P.from_integer(125, 5, 2)
    assert a.prec == 5
    # the sum is only as good as the coarser summand
    assert (P.from_integer(1, 7, 2) + P.from_integer(1, 7, 4)).prec == 2
    # cancellation keeps absolute precision
    d = P.from_integer(26, 5, 2) - P.from_integer(1, 5, 2)
    assert d.is_zero and d.prec == 2


def test_prime_mismatch():
    with pytest.raises(ValueError):
        P.from_integer(1, 5, 2) + P.from_integer(1, 7, 2)


def test_valuation():
    assert valuation(250, 5) == 3
    assert valuation(-7, 5) == 0
    with pytest.raises(ValueError):
        valuation(0, 3)


# -- properties --------------------------------------------------------------

primes = st.sampled_from([5, 7, 11, 13])
precs = st.integers(min_value=1, max_value=6)


@st.composite
def p_integral(draw, p):
    num = draw(st.integers(min_value=-(10**12), max_value=10**12))
    den = draw(st.integers(min_value=1, max_value=10**6).filter(lambda d: d % p))
    return Fraction(num, den)


@st.composite
def pair(draw):
    p = draw(primes)
    return p, draw(p_integral(p)), draw(p_integral(p)), draw(precs), draw(precs)


@settings(max_examples=300)
@given(pair())
def test_ring_ops_match_rationals(data):
    p, x, y, ex, ey = data
    a, b = P.from_rational(x, p, ex), P.from_rational(y, p, ey)
    for got, want in ((a + b, x + y), (a - b, x - y), (a * b, x * y), (-a, -x)):
        assert congruent(got, exact(want, p), got.prec)


@settings(max_examples=300)
@given(pair())
def test_division_matches_rationals(data):
    p, x, y, ex, ey = data
    assume(y != 0 and valuation(y.numerator, p) == 0)
    q = P.from_rational(x, p, ex) / P.from_rational(y, p, ey)
    assert congruent(q, exact(x / y, p), q.prec)


@given(pair())
def test_from_rational_agrees_with_integer_route(data):
    p, x, _, e, _ = data
    a = P.from_rational(x, p, e)
    b = P.from_integer(x.numerator, p, e + 10) / P.from_integer(x.denominator, p, e + 10)
    assert congruent(a, b, a.prec)


@given(pair())
def test_invert_roundtrip(data):
    p, x, _, e, _ = data
    assume(x != 0 and valuation(x.numerator, p) == 0)
    a = P.from_rational(x, p, e)
    assert (a * a.invert()).residue() == 1


@given(primes, st.integers(min_value=1, max_value=10**9), st.integers(1, 4), precs)
def test_div_exact_p_inverts_scaling(p, n, t, e):
    a = P.from_integer(n, p, e)
    scaled = P.from_integer(n * p**t, p, e)
    back = scaled.div_exact_p(t)
    assert back.v == a.v and back.e == a.e
    assert congruent(back, a, a.prec)


@given(pair(), st.integers(min_value=0, max_value=12))
def test_pow_matches_rationals(data, n):
    p, x, _, e, _ = data
    a = P.from_rational(x, p, e)
    r = a**n
    assert congruent(r, exact(x**n, p), r.prec)


def test_pickle_roundtrip():
    import pickle

    a = P.from_integer(1234, 7, 4)
    assert pickle.loads(pickle.dumps(a)) == a
