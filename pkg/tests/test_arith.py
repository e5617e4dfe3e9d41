from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from abundancy.arith import (
    Factorization,
    PrimePower,
    abundancy_index,
    factorize,
    index_of_factorization,
    is_prime,
    sigma,
    sigma_prime_power,
)
from oracles import divisors, is_prime_brute, sigma_brute


@pytest.mark.parametrize(
    "n, pairs",
    [(12, [(2, 2), (3, 1)]), (1, []), (234, [(2, 1), (3, 2), (13, 1)])],
)
def test_factorize_examples(n, pairs):
    assert factorize(n).pairs() == pairs


@pytest.mark.parametrize("bad", [0, -5])
def test_factorize_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        factorize(bad)


def test_factorize_round_trip_to_1e5():
    for n in range(1, 100_001):
        f = factorize(n)
        assert f.value == n
        assert f.primes == sorted(set(f.primes))


def test_is_prime_matches_trial_division():
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if is_prime_brute(n)]


def test_is_prime_rejects_strong_pseudoprimes():
    # strong pseudoprimes to several small bases
    for n in (2047, 3215031751, 3825123056546413051, 318665857834031151167461):
        assert not is_prime(n)
    assert is_prime(2**61 - 1)


@pytest.mark.parametrize(
    "p, e, expected",
    [(3, 8, 9841), (3, 10, 88573), (29, 2, 871), (31, 2, 993)],
)
def test_sigma_prime_power(p, e, expected):
    assert sigma_prime_power(PrimePower(p, e)) == expected


def test_sigma_examples():
    assert sigma(12) == 28
    assert sigma(1) == 1
    assert sigma(234) == sigma_brute(234) == 546


def test_sigma_matches_enumeration_to_1e4():
    for n in range(1, 10_001):
        assert sigma(n) == sigma_brute(n), n


def test_sigma_rejects_zero():
    with pytest.raises(ValueError):
        sigma(0)
    with pytest.raises(ValueError):
        abundancy_index(0)


@pytest.mark.parametrize(
    "n, expected", [(12, Fraction(7, 3)), (234, Fraction(7, 3)), (1, Fraction(1)), (6, Fraction(2))]
)
def test_abundancy_index_examples(n, expected):
    assert abundancy_index(n) == expected


def test_index_of_factorization_examples():
    f = Factorization.of([(3, 4), (5, 2), (7, 2), (11, 2)])
    expected = Fraction(121, 81) * Fraction(31, 25) * Fraction(57, 49) * Fraction(133, 121)
    assert index_of_factorization(f) == expected
    assert index_of_factorization(Factorization()) == 1
    assert index_of_factorization(Factorization.of([(2, 1)])) == Fraction(3, 2)


def test_large_values_stay_exact():
    assert sigma_prime_power(PrimePower(3, 12)) == (3**13 - 1) // 2
    assert PrimePower(29, 4).value == 707281
    assert sigma(3**12 * 29**4) == 797161 * 732541


def test_prime_power_and_factorization_validation():
    with pytest.raises(ValueError):
        PrimePower(9, 2)
    with pytest.raises(ValueError):
        PrimePower(3, 0)
    with pytest.raises(ValueError):
        Factorization((PrimePower(5, 1), PrimePower(3, 1)))
    with pytest.raises(ValueError):
        Factorization.of([(3, 1), (3, 2)])


naturals = st.integers(min_value=1, max_value=10**6)


@settings(max_examples=300)
@given(naturals, naturals)
def test_multiplicativity(a, b):
    if gcd(a, b) != 1:
        return
    assert sigma(a * b) == sigma(a) * sigma(b)
    assert abundancy_index(a * b) == abundancy_index(a) * abundancy_index(b)


@settings(max_examples=200)
@given(st.integers(min_value=2, max_value=20_000), st.data())
def test_divisor_monotonicity(n, data):
    proper = divisors(n)[:-1]
    m = data.draw(st.sampled_from(proper))
    assert abundancy_index(m) < abundancy_index(n)


@settings(max_examples=200)
@given(naturals)
def test_index_of_factorization_agrees(n):
    assert index_of_factorization(factorize(n)) == abundancy_index(n)
