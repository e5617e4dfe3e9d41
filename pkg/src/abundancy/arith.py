"""Exact arithmetic: primality, factorization, sigma and the abundancy index.

Naturals are plain ``int`` and rationals are :class:`fractions.Fraction`,
which is always kept in lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "PrimePower",
    "Factorization",
    "is_prime",
    "factorize",
    "sigma_prime_power",
    "sigma",
    "abundancy_index",
    "index_of_factorization",
]

# Bases 2..41 make Miller-Rabin deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Raises ValueError above the range where the fixed base set is proven,
    rather than returning a probabilistic answer.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} is outside the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, order=True)
class PrimePower:
    prime: int
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise ValueError(f"exponent must be >= 1, got {self.exponent}")
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @property
    def value(self) -> int:
        return self.prime**self.exponent

    def __str__(self) -> str:
        return str(self.prime) if self.exponent == 1 else f"{self.prime}^{self.exponent}"


@dataclass(frozen=True)
class Factorization:
    """Prime powers with strictly increasing primes."""

    parts: tuple[PrimePower, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for a, b in zip(parts, parts[1:]):
            if a.prime >= b.prime:
                raise ValueError("primes must be distinct and ascending")

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int] | PrimePower]) -> "Factorization":
        """Build from (prime, exponent) pairs in any order."""
        parts = [p if isinstance(p, PrimePower) else PrimePower(*p) for p in pairs]
        return cls(tuple(sorted(parts)))

    @property
    def value(self) -> int:
        out = 1
        for pp in self.parts:
            out *= pp.value
        return out

    @property
    def primes(self) -> list[int]:
        return [pp.prime for pp in self.parts]

    def pairs(self) -> list[tuple[int, int]]:
        return [(pp.prime, pp.exponent) for pp in self.parts]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "*".join(str(pp) for pp in self.parts) or "1"


def _require_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")


def factorize(n: int) -> Factorization:
    """Trial division by 2, 3 and then 6k +/- 1 up to sqrt(n)."""
    _require_positive(n)
    pairs: list[tuple[int, int]] = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
    p, step = 5, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(PrimePower(p, e) for p, e in pairs))


def sigma_prime_power(pp: PrimePower) -> int:
    p, e = pp.prime, pp.exponent
    return (p ** (e + 1) - 1) // (p - 1)


def sigma(n: int) -> int:
    _require_positive(n)
    out = 1
    for pp in factorize(n):
        out *= sigma_prime_power(pp)
    return out


def abundancy_index(n: int) -> Fraction:
    return Fraction(sigma(n), n)


def index_of_factorization(f: Factorization) -> Fraction:
    out = Fraction(1)
    for pp in f:
        out *= Fraction(sigma_prime_power(pp), pp.value)
    return out

