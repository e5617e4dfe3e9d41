"""Index bounds and prime windows.

I(q^e) increases with e from (q+1)/q towards q/(q-1) and decreases with q,
so products of those two limits bound the index of any integer with a
given prime support. The two-prime window bounds the second unknown prime
of an even candidate 2 * 3^b * q1^f1 * q2^f2 with b >= 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, isqrt
from typing import Callable, Iterable, Sequence

from .arith import Factorization, PrimePower, index_of_factorization, is_prime, sigma_prime_power

__all__ = [
    "IndexBounds",
    "PrimeWindow",
    "ExponentFilter",
    "index_sup",
    "index_floor",
    "index_bounds",
    "min_prime_bound",
    "min_prime_threshold",
    "primes_in_interval",
    "two_prime_window",
    "prime_pair_window",
    "q1_candidates",
    "min_exponent_bound",
    "FLOOR_RATIO",
    "SUP_RATIO",
]

# Pinned constants for target 7/3 with b >= 6: 7/3 / I(2*3^6) and 7/3 / (3/2 * 3/2).
FLOOR_RATIO = Fraction(1134, 1093)
SUP_RATIO = Fraction(28, 27)

EXPONENT_CAP = 64


@dataclass(frozen=True)
class IndexBounds:
    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")


@dataclass(frozen=True)
class PrimeWindow:
    """Primes strictly between two exact rational endpoints."""

    lower: Fraction
    upper: Fraction
    primes: tuple[int, ...]

    @property
    def interval_nonempty(self) -> bool:
        return self.lower < self.upper


@dataclass(frozen=True)
class ExponentFilter:
    """Admit e when e mod ``modulus`` lies in ``residues``."""

    modulus: int = 1
    residues: frozenset[int] = frozenset({0})

    def __call__(self, e: int) -> bool:
        return e % self.modulus in self.residues

    @classmethod
    def any(cls) -> "ExponentFilter":
        return cls()

    @classmethod
    def even(cls) -> "ExponentFilter":
        return cls(2, frozenset({0}))


def _as_parts(parts: Iterable[PrimePower | tuple[int, int]]) -> Factorization:
    return parts if isinstance(parts, Factorization) else Factorization.of(parts)


def index_sup(primes: Iterable[int]) -> Fraction:
    """Product of q/(q-1): a strict upper bound on I(n) for n with this support."""
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    out = Fraction(1)
    for q in primes:
        if not is_prime(q):
            raise ValueError(f"{q} is not prime")
        out *= Fraction(q, q - 1)
    return out


def index_floor(parts: Iterable[PrimePower | tuple[int, int]]) -> Fraction:
    """I at the given exponents, a lower bound for every larger exponent choice."""
    return index_of_factorization(_as_parts(parts))


def index_bounds(parts: Iterable[PrimePower | tuple[int, int]]) -> IndexBounds:
    f = _as_parts(parts)
    return IndexBounds(index_floor(f), index_sup(f.primes))


def min_prime_bound(target: Fraction, fixed: Iterable[PrimePower | tuple[int, int]]) -> int:
    """Least prime q above every fixed prime with floor(fixed) * (q+1)/q <= target."""
    f = _as_parts(fixed)
    base = index_floor(f)
    if base >= target:
        raise ValueError(f"fixed part already reaches the target: {base} >= {target}")
    # (q+1)/q <= r  <=>  q >= 1/(r-1)
    threshold = 1 / (Fraction(target) / base - 1)
    q = max([ceil(threshold)] + [p + 1 for p in f.primes])
    q = max(q, 2)
    while not is_prime(q):
        q += 1
    return q


def min_prime_threshold(target: Fraction, fixed: Iterable[PrimePower | tuple[int, int]]) -> Fraction:
    """The exact rational t with floor(fixed) * (q+1)/q <= target iff q >= t."""
    base = index_floor(_as_parts(fixed))
    if base >= target:
        raise ValueError(f"fixed part already reaches the target: {base} >= {target}")
    return 1 / (Fraction(target) / base - 1)


@lru_cache(maxsize=8)
def _base_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, v in enumerate(sieve) if v)


def _primes_between(lo: int, hi: int) -> list[int]:
    """Primes in the closed range [lo, hi] by a segmented sieve."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    seg = bytearray(b"\x01") * (hi - lo + 1)
    for p in _base_primes(isqrt(hi)):
        start = max(p * p, -(-lo // p) * p)
        if start > hi:
            continue
        seg[start - lo :: p] = bytes(len(range(start, hi + 1, p)))
    return [lo + i for i, v in enumerate(seg) if v]


def primes_in_interval(lower: Fraction | int, upper: Fraction | int) -> list[int]:
    lower, upper = Fraction(lower), Fraction(upper)
    return _primes_between(floor(lower) + 1, ceil(upper) - 1)


def _window(q1: int, lower: Fraction, upper: Fraction) -> PrimeWindow:
    lower = max(lower, Fraction(q1))
    return PrimeWindow(lower, upper, tuple(primes_in_interval(lower, upper)))


def two_prime_window(q1: int) -> PrimeWindow:
    """Window for q2 given q1, using the pinned closed forms.

    q2 >= 1239462/(1681 q1 - 44813) + 1093/41 and q2 < 756/(q1 - 28) + 28.
    """
    if q1 <= 28:
        raise ValueError(f"q1 must exceed 28, got {q1}")
    if not is_prime(q1):
        raise ValueError(f"{q1} is not prime")
    lower = Fraction(1239462, 1681 * q1 - 44813) + Fraction(1093, 41)
    upper = Fraction(756, q1 - 28) + 28
    return _window(q1, lower, upper)


def prime_pair_window(q1: int, floor_ratio: Fraction, sup_ratio: Fraction) -> PrimeWindow:
    """Window for q2 > q1 from (1+1/q1)(1+1/q2) <= floor_ratio and
    q1/(q1-1) * q2/(q2-1) > sup_ratio.

    two_prime_window is the special case floor_ratio=1134/1093, sup_ratio=28/27.
    """
    if not is_prime(q1):
        raise ValueError(f"{q1} is not prime")
    c, d = Fraction(floor_ratio), Fraction(sup_ratio)
    lower_den = (c - 1) * q1 - 1
    upper_den = d * (q1 - 1) - q1
    if lower_den <= 0 or upper_den <= 0:
        raise ValueError(f"q1={q1} leaves the window unbounded")
    lower = (q1 + 1) / lower_den
    upper = d * (q1 - 1) / upper_den
    return _window(q1, lower, upper)


def q1_candidates(limit: int = 1000) -> list[int]:
    """Primes q1 >= 29 whose window (q1, upper) is a nonempty real interval.

    The upper endpoint decreases in q1 and falls below q1 once
    (q1 - 28)^2 >= 756, so any limit past 56 gives the complete set.
    """
    return [q for q in _primes_between(29, limit) if two_prime_window(q).interval_nonempty]


def min_exponent_bound(
    target: Fraction,
    fixed: Iterable[PrimePower | tuple[int, int]],
    q: int,
    forbidden_divisors: Sequence[int],
    exponent_filter: Callable[[int], bool] = ExponentFilter.any(),
    cap: int = EXPONENT_CAP,
) -> int:
    """Least e passing the filter such that no forbidden divisor divides sigma(q^e)."""
    f = _as_parts(fixed)
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q in f.primes:
        raise ValueError(f"{q} is already among the fixed primes")
    if index_floor(f) >= target:
        raise ValueError("fixed part already reaches the target")
    for e in range(1, cap + 1):
        if not exponent_filter(e):
            continue
        s = sigma_prime_power(PrimePower(q, e))
        if not any(s % d == 0 for d in forbidden_divisors):
            return e
    raise ValueError(f"no admissible exponent for {q} up to {cap}")
