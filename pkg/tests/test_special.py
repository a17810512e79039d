from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercong.padic import CappedPadic
from supercong.special import (
    bernoulli_exact,
    bernoulli_mod_p,
    bernoulli_p3_powersum,
    bernoulli_p3_recurrence,
    euler_exact,
    euler_p3,
    fermat_quotient2,
    is_prime,
    primes_in_range,
    special_values,
)


def test_primes_in_range():
    assert primes_in_range(5, 20) == [5, 7, 11, 13, 17, 19]
    assert primes_in_range(24, 28) == []
    assert primes_in_range(7, 7) == [7]


@pytest.mark.parametrize("p,want", [(5, 1), (7, 3), (13, 5)])
def test_bernoulli_recurrence(p, want):
    assert bernoulli_p3_recurrence(p) == want


@pytest.mark.parametrize("p,want", [(7, 3), (11, 4), (13, 5)])
def test_bernoulli_powersum(p, want):
    assert bernoulli_p3_powersum(p) == want


@pytest.mark.parametrize("p,want", [(5, 4), (7, 5), (13, 10)])
def test_euler(p, want):
    assert euler_p3(p) == want


@pytest.mark.parametrize("p,e,want", [(5, 1, 3), (7, 1, 2), (5, 2, 3)])
def test_fermat_quotient(p, e, want):
    q = fermat_quotient2(p, e)
    assert q.prec >= e
    assert q.residue(e) == want


def test_exact_bernoulli_and_euler():
    assert bernoulli_exact(1) == Fraction(-1, 2)
    assert bernoulli_exact(10) == Fraction(5, 66)
    assert bernoulli_exact(7) == 0
    assert [euler_exact(n) for n in range(0, 11, 2)] == [1, -1, 5, -61, 1385, -50521]


@pytest.mark.parametrize("p", primes_in_range(5, 61))
def test_mod_p_tables_match_exact(p):
    for n in range(0, p - 2):
        b = bernoulli_exact(n)
        assert bernoulli_mod_p(n, p) == b.numerator * pow(b.denominator, -1, p) % p
    assert euler_p3(p) == euler_exact(p - 3) % p


@given(st.sampled_from(primes_in_range(7, 400)))
def test_oracles_agree(p):
    assert bernoulli_p3_recurrence(p) == bernoulli_p3_powersum(p)


@given(st.sampled_from(primes_in_range(5, 300)), st.integers(1, 5))
def test_fermat_quotient_exact(p, e):
    q = (2 ** (p - 1) - 1) // p
    assert fermat_quotient2(p, e).residue(e) == q % p**e


def test_special_values_bundle():
    sv = special_values(13)
    assert sv.bernoulli_p3 == 5 and sv.euler_p3 == 10
    assert isinstance(sv.fermat_q2, CappedPadic)


def test_rejects_small_or_composite():
    assert not is_prime(21)
    with pytest.raises(ValueError):
        bernoulli_p3_recurrence(9)
