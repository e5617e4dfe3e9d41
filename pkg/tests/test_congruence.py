import pytest

from abundancy.arith import Factorization, PrimePower, factorize, sigma, sigma_prime_power
from abundancy.congruence import (
    ExponentPattern,
    PatternRejected,
    RejectReason,
    ShapeKind,
    classify_shape,
    extract_exponent_pattern,
    sigma_mod4,
    sigma_parity,
)
from oracles import is_prime_brute

ODD_PRIMES_BELOW_100 = [p for p in range(3, 100) if is_prime_brute(p)]


@pytest.mark.parametrize("p, e, r", [(3, 1, 0), (5, 2, 3), (5, 1, 2)])
def test_sigma_mod4_examples(p, e, r):
    assert sigma_mod4(PrimePower(p, e)) == r


@pytest.mark.parametrize("p, e, parity", [(7, 2, "odd"), (7, 3, "even"), (29, 2, "odd")])
def test_sigma_parity_examples(p, e, parity):
    assert sigma_parity(PrimePower(p, e)) == parity


def test_prime_two_rejected():
    with pytest.raises(ValueError):
        sigma_mod4(PrimePower(2, 3))
    with pytest.raises(ValueError):
        sigma_parity(PrimePower(2, 1))


def test_lemma_grid():
    cases = 0
    for p in ODD_PRIMES_BELOW_100:
        for e in range(1, 11):
            s = sum(p**j for j in range(e + 1))
            pp = PrimePower(p, e)
            assert sigma_mod4(pp) == s % 4
            assert sigma_parity(pp) == ("odd" if s % 2 else "even")
            cases += 1
    assert cases == 240


def test_classify_examples():
    assert classify_shape(9).kind is ShapeKind.ODD_SQUARE
    assert classify_shape(9).square_root == 3
    s = classify_shape(8)
    assert (s.kind, s.two_exponent, s.square_root) == (ShapeKind.TWO_POWER_TIMES_SQUARE, 3, 1)
    assert classify_shape(12).kind is ShapeKind.UNCONSTRAINED


def test_corollary_oracle_to_1e5():
    odd_sigma = 0
    for n in range(1, 100_001):
        shape = classify_shape(n)
        if sigma(n) % 2:
            odd_sigma += 1
            assert shape.kind is not ShapeKind.UNCONSTRAINED
            assert shape.reconstruct() == n
            assert shape.square_root % 2 == 1
            if n % 2:
                assert shape.kind is ShapeKind.ODD_SQUARE
            else:
                assert shape.two_exponent >= 1
        else:
            assert shape.kind is ShapeKind.UNCONSTRAINED
    assert odd_sigma > 0


def test_pattern_examples():
    pat = extract_exponent_pattern(Factorization.of([(3, 2), (13, 1)]))
    assert pat == ExponentPattern(13, 1, Factorization.of([(3, 2)]))
    with pytest.raises(PatternRejected) as exc:
        extract_exponent_pattern(Factorization.of([(3, 2), (7, 1)]))
    assert exc.value.reason is RejectReason.PRIME_3_MOD_4
    with pytest.raises(PatternRejected) as exc:
        extract_exponent_pattern(Factorization.of([(47, 1), (67, 1)]))
    assert exc.value.reason is RejectReason.SEVERAL_ODD_EXPONENTS


def test_pattern_reason_order():
    with pytest.raises(PatternRejected) as exc:
        extract_exponent_pattern(Factorization.of([(3, 2), (5, 2)]))
    assert exc.value.reason is RejectReason.NO_ODD_EXPONENT
    with pytest.raises(PatternRejected) as exc:
        extract_exponent_pattern(Factorization.of([(3, 2), (5, 3)]))
    assert exc.value.reason is RejectReason.EXPONENT_3_MOD_4
    with pytest.raises(ValueError):
        extract_exponent_pattern(Factorization.of([(2, 1), (5, 1)]))


def test_pattern_accepts_iff_sigma_2_mod_4():
    for n in range(1, 100_001, 2):
        f = factorize(n)
        try:
            extract_exponent_pattern(f)
            accepted = True
        except PatternRejected:
            accepted = False
        assert accepted == (sigma(n) % 4 == 2), n


def test_q_1_mod_4_with_e_3_mod_4_is_0_mod_4():
    for p in ODD_PRIMES_BELOW_100:
        if p % 4 == 1:
            for e in (3, 7, 11):
                assert sigma_prime_power(PrimePower(p, e)) % 4 == 0
