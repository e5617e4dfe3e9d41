"""The computational content of the classification of friends of 12.

Each check is one arithmetic claim from the case analysis for a
hypothetical n outside {12, 234} with I(n) = 7/3. Pure inference steps
(e.g. 3 sigma(n) = 7 n forcing 3 | n) are not checks; see
docs/certificate_audit.md for the mapping.
"""

from __future__ import annotations

from fractions import Fraction

from .certificate import CertificateCheck, CheckKind

__all__ = ["TARGET", "friends_of_12_certificate", "BUILTIN_CERTIFICATES"]

TARGET = Fraction(7, 3)

_IDX = CheckKind.INDEX_INEQUALITY
_DIV = CheckKind.DIVISIBILITY
_CONG = CheckKind.CONGRUENCE_CLAIM
_EMPTY = CheckKind.EMPTY_WINDOW
_WIN = CheckKind.WINDOW_CONTENTS
_MINP = CheckKind.MIN_PRIME
_MINE = CheckKind.MIN_EXPONENT

# Primes an even k = 2 candidate 2 * 3^b * q1^f1 * q2^f2 may contain.
_K2_PRIMES = (2, 3)
_K2_RANGE = (29, 784)
_B12 = [(2, 1), (3, 12)]


def _idx(id, citation, relation, *, exact=(), sup=(), const=(), bound=TARGET):
    payload = {"exact": list(exact), "sup": list(sup), "relation": relation, "bound": bound}
    if const:
        payload["const"] = list(const)
    return CertificateCheck(id, _IDX, payload, citation)


def _div(id, citation, divisor, prime, exponent, **extra):
    payload = {"divisor": divisor, "prime": prime, "exponent": exponent, **extra}
    return CertificateCheck(id, _DIV, payload, citation)


def _odd_branch() -> list[CertificateCheck]:
    return [
        _idx("odd.m1", "odd n = 3^2a: I < 3/2 < 7/3, so m > 1", "<", sup=[3]),
        _idx("odd.k2", "odd, k <= 2: (3/2)(5/4)(7/6) < 7/3, so k >= 3", "<", sup=[3, 5, 7]),
        _idx(
            "odd.k3.exclude-17",
            "odd, k = 3: (3/2)(5/4)(7/6)(17/16) < 7/3, so p3 < 17",
            "<",
            sup=[3, 5, 7, 17],
        ),
        _idx(
            "odd.k3.exclude-11-13",
            "odd, k = 3: (3/2)(5/4)(11/10)(13/12) < 7/3, so p1 = 5, p2 = 7",
            "<",
            sup=[3, 5, 11, 13],
        ),
        _idx(
            "odd.k3.exclude-11",
            "odd, k = 3, p3 = 11: I(3^4 5^2 7^2 11^2) > 7/3, so a = 1",
            ">",
            exact=[(3, 4), (5, 2), (7, 2), (11, 2)],
        ),
        _div(
            "odd.k3.p11-a1",
            "odd, p3 = 11, a = 1: 13 | sigma(3^2) would force 13 | n",
            13, 3, 2,
            sigma_value=13,
            admissible_primes=[3, 5, 7, 11],
        ),
        _idx(
            "odd.k3.p13-floor",
            "odd, p3 = 13: I(3^6 5^2 7^2 13^2) > 7/3, so a in {1, 2}",
            ">",
            exact=[(3, 6), (5, 2), (7, 2), (13, 2)],
        ),
        _idx(
            "odd.k3.p13-a1",
            "odd, p3 = 13, a = 1: (13/9)(5/4)(7/6)(13/12) < 7/3",
            "<",
            exact=[(3, 2)],
            sup=[5, 7, 13],
        ),
        _div(
            "odd.k3.p13-a2",
            "odd, p3 = 13, a = 2: 11 | sigma(3^4) = 121 would force 11 | n",
            11, 3, 4,
            sigma_value=121,
            admissible_primes=[3, 5, 7, 13],
        ),
    ]


def _even_global() -> list[CertificateCheck]:
    return [
        _idx("even.anchor-12", "even: I(12) = 7/3, so 4 does not divide n", "=", exact=[(2, 2), (3, 1)]),
        _idx("even.m1", "even n = 2 * 3^b: (3/2)(3/2) < 7/3, so m > 1", "<", exact=[(2, 1)], sup=[3]),
        CertificateCheck(
            "even.parity-lemma",
            _CONG,
            {"claim": "lemma_grid", "prime_limit": 100, "max_exponent": 10},
            "sigma(p^e) mod 4 case split for odd p, checked on p < 100, e <= 10",
        ),
        CertificateCheck(
            "even.parity-pattern-234",
            _CONG,
            {"claim": "pattern", "factorization": [(3, 2), (13, 1)], "expect": "accept"},
            "odd part of 234 = 3^2 * 13 has the shape q^e m^2 with q = e = 1 mod 4",
        ),
        _div("even.b2.divisor", "even, b = 2: 13 | sigma(3^2), so 13 | n", 13, 3, 2, sigma_value=13),
        _idx(
            "even.b2.anchor-234",
            "even, b = 2: 234 | n and I(234) = 7/3, so n = 234",
            "=",
            exact=[(2, 1), (3, 2), (13, 1)],
        ),
        _div("even.b4.divisor", "even, b = 4: 11 | sigma(3^4) = 121, so 11 | n", 11, 3, 4, sigma_value=121),
        _idx(
            "even.b4.floor",
            "even, b = 4: I(2 * 3^4 * 11) = (3/2)(121/81)(12/11) > 7/3",
            ">",
            exact=[(2, 1), (3, 4), (11, 1)],
        ),
        CertificateCheck(
            "even.q1-min",
            _MINP,
            {"target": TARGET, "fixed": [(2, 1), (3, 6)], "relation": "=", "value": 29},
            "even, b >= 6: (q1+1)/q1 <= 1134/1093 gives q1 > 26, so q1 >= 29",
        ),
        _idx("even.k1", "even, k = 1: (3/2)(3/2)(29/28) < 7/3, so k >= 2", "<", exact=[(2, 1)], sup=[3, 29]),
    ]


def _even_k2_setup() -> list[CertificateCheck]:
    admissible = {"admissible_primes": list(_K2_PRIMES), "admissible_range": list(_K2_RANGE)}
    return [
        _idx(
            "even.window.floor-ratio",
            "k = 2 window constant: (7/3)(2/3)(2 * 3^6)/(3^7 - 1) = 1134/1093",
            "=",
            exact=[(2, 1), (3, 6)],
            const=[Fraction(1134, 1093)],
        ),
        _idx(
            "even.window.sup-ratio",
            "k = 2 window constant: (7/3)(2/3)(2/3) = 28/27",
            "=",
            exact=[(2, 1)],
            sup=[3],
            const=[Fraction(28, 27)],
        ),
        CertificateCheck(
            "even.q1-candidates",
            _WIN,
            {"candidates": [29, 31, 37, 41, 43, 47, 53], "limit": 1000},
            "k = 2: q1 < q2 < 756/(q1 - 28) + 28 leaves q1 in {29, ..., 53}",
        ),
        _div(
            "even.b6",
            "k = 2, b = 6: 1093 = sigma(3^6) divides n, yet q2 < 784",
            1093, 3, 6,
            sigma_value=1093,
            **admissible,
        ),
        _div(
            "even.b8",
            "k = 2, b = 8: 13 | 9841 = sigma(3^8), yet 13 < 29",
            13, 3, 8,
            sigma_value=9841,
            **admissible,
        ),
        _div(
            "even.b10",
            "k = 2, b = 10: 23 | 88573 = sigma(3^10), yet 23 < 29",
            23, 3, 10,
            sigma_value=88573,
            **admissible,
        ),
    ]


def _window(q1, lo, hi, primes=None) -> CertificateCheck:
    payload = {"q1": q1, "stated_lower": lo, "stated_upper": hi}
    if primes is not None:
        payload["primes"] = primes
    return CertificateCheck(
        f"even.q1-{q1}.window-bounds",
        _WIN,
        payload,
        f"k = 2, q1 = {q1}: window for q2 is {lo} < q2 < {hi}",
    )


def _floor(q1, f1, gt) -> CertificateCheck:
    return CertificateCheck(
        f"even.q1-{q1}.floor",
        _MINP,
        {"target": TARGET, "fixed": _B12 + [(q1, f1)], "relation": ">", "value": gt},
        f"k = 2, q1 = {q1}: I(2 * 3^12 * {q1}^{f1} * q2) <= 7/3 forces q2 > {gt}",
    )


def _empty(id, lo, hi, citation) -> CertificateCheck:
    return CertificateCheck(id, _EMPTY, {"lower": Fraction(lo), "upper": Fraction(hi)}, citation)


def _min_exp(q1, forbidden, value, filter=(1, (0,))) -> CertificateCheck:
    return CertificateCheck(
        f"even.q1-{q1}.min-exponent",
        _MINE,
        {
            "target": TARGET,
            "fixed": _B12,
            "q": q1,
            "forbidden": forbidden,
            "filter": filter,
            "relation": ">=",
            "value": value,
        },
        f"k = 2, q1 = {q1}: excluded exponents leave f1 >= {value}",
    )


def _even_q1_cases() -> list[CertificateCheck]:
    return [
        # q1 = 29
        _window(29, 341, 784),
        _div(
            "even.q1-29.f1-1",
            "q1 = 29, f1 = 1: 5 | sigma(29) = 30, yet 5 < 29",
            5, 29, 1,
            sigma_value=30,
            admissible_primes=[2, 3, 29],
            admissible_range=[342, 784],
        ),
        _div(
            "even.q1-29.f1-2",
            "q1 = 29, f1 = 2: 13 | 871 = sigma(29^2), yet 13 < 29",
            13, 29, 2,
            sigma_value=871,
            admissible_primes=[2, 3, 29],
            admissible_range=[342, 784],
        ),
        _min_exp(29, [5, 13], 3),
        _floor(29, 3, 781),
        _empty("even.q1-29.empty", 781, 784, "q1 = 29: no prime strictly between 781 and 784"),
        # q1 = 31
        _window(31, 196, 280),
        _div(
            "even.q1-31.f1-2",
            "q1 = 31, f1 = 2: 331 | 993 = sigma(31^2), yet q2 < 280",
            331, 31, 2,
            sigma_value=993,
            admissible_primes=[2, 3, 31],
            admissible_range=[197, 280],
        ),
        _min_exp(31, [331], 4, filter=(2, (0,))),
        _floor(31, 4, 278),
        _empty("even.q1-31.empty", 278, 280, "q1 = 31: no prime strictly between 278 and 280"),
        # q1 = 37
        _window(37, 97, 112),
        _div(
            "even.q1-37.f1-1",
            "q1 = 37, f1 = 1: 19 | sigma(37) = 38, yet 19 < 29",
            19, 37, 1,
            sigma_value=38,
            admissible_primes=[2, 3, 37],
            admissible_range=[98, 112],
        ),
        _min_exp(37, [19], 2),
        _floor(37, 2, 110),
        _empty("even.q1-37.empty", 110, 112, "q1 = 37: no prime strictly between 110 and 112"),
        # q1 = 41
        _window(41, 78, 86, primes=[79, 83]),
        CertificateCheck(
            "even.q1-41.parity",
            _CONG,
            {"claim": "carriers", "primes": [3, 41, 79, 83], "expect": [41], "max_exponent": 6},
            "q1 = 41: 79 = 83 = 3 mod 4, so f1 = 1 mod 4 and f2 is even",
        ),
        _idx(
            "even.q1-41.q2-79",
            "q1 = 41: I(2 * 3^12 * 41 * 79^2) > 7/3, so q2 != 79",
            ">",
            exact=[(2, 1), (3, 12), (41, 1), (79, 2)],
        ),
        _idx(
            "even.q1-41.q2-83-floor",
            "q1 = 41, q2 = 83: I(2 * 3^12 * 41^5 * 83^2) > 7/3, so f1 = 1",
            ">",
            exact=[(2, 1), (3, 12), (41, 5), (83, 2)],
        ),
        _idx(
            "even.q1-41.q2-83-sup",
            "q1 = 41, q2 = 83, f1 = 1: (3/2)(42/41)(3/2)(83/82) < 7/3",
            "<",
            exact=[(2, 1), (41, 1)],
            sup=[3, 83],
        ),
        # q1 = 43
        _window(43, 71, 78, primes=[73]),
        _idx(
            "even.q1-43.floor",
            "q1 = 43, q2 = 73, f1 even: I(2 * 3^12 * 43^2 * 73) > 7/3",
            ">",
            exact=[(2, 1), (3, 12), (43, 2), (73, 1)],
        ),
        # q1 = 47
        _window(47, 62, 68, primes=[67]),
        CertificateCheck(
            "even.q1-47.parity",
            _CONG,
            {"claim": "carriers", "primes": [3, 47, 67], "expect": [], "max_exponent": 8},
            "q1 = 47, q2 = 67: 3 = 47 = 67 = 3 mod 4, so sigma(n/2) is odd or 0 mod 4",
        ),
        # q1 = 53
        _window(53, 54, 59, primes=[]),
        _empty("even.q1-53.window", 54, 59, "q1 = 53: no prime strictly between 54 and 59"),
    ]


def friends_of_12_certificate() -> list[CertificateCheck]:
    """Fresh copy of the full check list, in proof order."""
    return _odd_branch() + _even_global() + _even_k2_setup() + _even_q1_cases()


BUILTIN_CERTIFICATES = {"friends-of-12": friends_of_12_certificate}
