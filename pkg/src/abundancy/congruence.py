"""Parity and mod-4 structure of sigma on odd prime powers.

For an odd prime p:

* sigma(p^e) is odd exactly when e is even;
* p = 3 (mod 4) and e odd gives sigma(p^e) = 0 (mod 4);
* p = 1 (mod 4) gives sigma(p^e) = e + 1 (mod 4).

Consequently an integer with odd sigma is a square or 2^f times a square,
and sigma(m) = 2 (mod 4) for odd m forces exactly one odd exponent, carried
by a prime q with q = e = 1 (mod 4).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .arith import Factorization, PrimePower, sigma

__all__ = [
    "ShapeKind",
    "SquareShape",
    "ExponentPattern",
    "RejectReason",
    "PatternRejected",
    "sigma_mod4",
    "sigma_parity",
    "classify_shape",
    "extract_exponent_pattern",
]


def _require_odd(pp: PrimePower) -> None:
    if pp.prime == 2:
        raise ValueError("only odd primes are covered")


def sigma_mod4(pp: PrimePower) -> int:
    _require_odd(pp)
    e = pp.exponent
    if pp.prime % 4 == 1:
        return (e + 1) % 4
    # p = 3 (mod 4): the terms alternate 1, -1, 1, ... mod 4
    return 0 if e % 2 else 1


def sigma_parity(pp: PrimePower) -> str:
    """Return ``"odd"`` or ``"even"``."""
    _require_odd(pp)
    return "odd" if pp.exponent % 2 == 0 else "even"


class ShapeKind(str, enum.Enum):
    ODD_SQUARE = "OddSquare"
    TWO_POWER_TIMES_SQUARE = "TwoPowerTimesSquare"
    UNCONSTRAINED = "Unconstrained"


@dataclass(frozen=True)
class SquareShape:
    kind: ShapeKind
    square_root: int | None = None
    two_exponent: int | None = None

    def reconstruct(self) -> int | None:
        if self.kind is ShapeKind.ODD_SQUARE:
            return self.square_root**2
        if self.kind is ShapeKind.TWO_POWER_TIMES_SQUARE:
            return 2**self.two_exponent * self.square_root**2
        return None


def classify_shape(n: int) -> SquareShape:
    if sigma(n) % 2 == 0:
        return SquareShape(ShapeKind.UNCONSTRAINED)
    f = (n & -n).bit_length() - 1
    odd = n >> f
    k = isqrt(odd)
    if k * k != odd:
        raise ArithmeticError(f"sigma({n}) is odd but its odd part is not a square")
    if f == 0:
        return SquareShape(ShapeKind.ODD_SQUARE, square_root=k)
    return SquareShape(ShapeKind.TWO_POWER_TIMES_SQUARE, square_root=k, two_exponent=f)


@dataclass(frozen=True)
class ExponentPattern:
    odd_prime: int
    odd_exponent: int
    square_part: Factorization


class RejectReason(str, enum.Enum):
    NO_ODD_EXPONENT = "no odd exponent"
    SEVERAL_ODD_EXPONENTS = "two or more odd exponents"
    PRIME_3_MOD_4 = "odd-exponent prime is 3 mod 4"
    EXPONENT_3_MOD_4 = "odd exponent is 3 mod 4"


class PatternRejected(ValueError):
    def __init__(self, reason: RejectReason, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason.value}{': ' + detail if detail else ''}")


def extract_exponent_pattern(f: Factorization) -> ExponentPattern:
    """Split an odd factorization into q^e times a square.

    Raises PatternRejected with the first violated condition, checked in
    the order listed by RejectReason.
    """
    if 2 in f.primes:
        raise ValueError("factorization must be odd")
    odd = [pp for pp in f if pp.exponent % 2]
    if not odd:
        raise PatternRejected(RejectReason.NO_ODD_EXPONENT, str(f))
    if len(odd) > 1:
        raise PatternRejected(
            RejectReason.SEVERAL_ODD_EXPONENTS, ", ".join(str(pp) for pp in odd)
        )
    (qe,) = odd
    if qe.prime % 4 == 3:
        raise PatternRejected(RejectReason.PRIME_3_MOD_4, str(qe))
    if qe.exponent % 4 == 3:
        raise PatternRejected(RejectReason.EXPONENT_3_MOD_4, str(qe))
    square = Factorization(tuple(pp for pp in f if pp is not qe))
    return ExponentPattern(qe.prime, qe.exponent, square)
