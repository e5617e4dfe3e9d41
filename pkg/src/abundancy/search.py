"""Sieve-based friend search.

sigma over a range [lo, hi] is accumulated from divisor pairs (d, m/d) with
d <= sqrt(hi), so each segment needs only its own table. A friend n of t
satisfies sigma(n) * b == a * n where a/b = I(t) in lowest terms, and
b | n follows, so only multiples of b are compared.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from .arith import abundancy_index, factorize

__all__ = [
    "SearchReport",
    "PrunedScan",
    "ResourceCeilingError",
    "memory_ceiling",
    "sieve_sigma",
    "sigma_segment",
    "brute_force_friends",
    "search_partitioned",
    "pruned_odd_scan",
]

DEFAULT_MEMORY_CEILING = 2**31
MEMORY_CEILING_ENV = "ABUNDANCY_MEMORY_CEILING"
_INT64_MAX = np.iinfo(np.int64).max


class ResourceCeilingError(ValueError):
    pass


def memory_ceiling() -> int:
    """Sieve table budget in bytes; the environment variable overrides the default."""
    raw = os.environ.get(MEMORY_CEILING_ENV)
    if raw is None:
        return DEFAULT_MEMORY_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ResourceCeilingError(f"{MEMORY_CEILING_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise ResourceCeilingError(f"{MEMORY_CEILING_ENV} must be positive")
    return value


@dataclass
class SearchReport:
    target: int
    target_index: Fraction
    bound: int
    friends_found: list[int] = field(default_factory=list)
    scanned: int = 0
    elapsed: float = 0.0  # seconds

    @property
    def elapsed_ms(self) -> int:
        return round(self.elapsed * 1000)


@dataclass
class PrunedScan:
    bound: int
    friends_found: list[int]
    tested: int


def _check_ceiling(count: int, ceiling: int | None) -> None:
    ceiling = memory_ceiling() if ceiling is None else ceiling
    need = count * np.dtype(np.int64).itemsize
    if need > ceiling:
        raise ResourceCeilingError(
            f"sieve of {count} entries needs {need} bytes, ceiling is {ceiling}"
        )


def sigma_segment(lo: int, hi: int, ceiling: int | None = None) -> np.ndarray:
    """sigma(n) for lo <= n <= hi as an int64 array indexed by n - lo."""
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    _check_ceiling(hi - lo + 1, ceiling)
    # sigma(n) < n * (1 + ln n) keeps every entry far below int64 at sieve scale
    if hi * (2 + hi.bit_length()) > _INT64_MAX:
        raise ResourceCeilingError(f"sigma values up to {hi} overflow int64")
    out = np.zeros(hi - lo + 1, dtype=np.int64)
    for d in range(1, isqrt(hi) + 1):
        start = max(d * d, -(-lo // d) * d)
        if start > hi:
            continue
        m = np.arange(start, hi + 1, d, dtype=np.int64)
        out[m - lo] += d + m // d
        if start == d * d:
            out[start - lo] -= d
    return out


def sieve_sigma(bound: int, ceiling: int | None = None) -> np.ndarray:
    """Table with table[n] = sigma(n) for 1 <= n <= bound (table[0] is 0)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    _check_ceiling(bound + 1, ceiling)
    table = np.zeros(bound + 1, dtype=np.int64)
    table[1:] = sigma_segment(1, bound, ceiling)
    return table


def _scan_range(lo: int, hi: int, target: int, num: int, den: int, ceiling: int | None) -> list[int]:
    sig = sigma_segment(lo, hi, ceiling)
    first = -(-lo // den) * den
    if first > hi:
        return []
    n = np.arange(first, hi + 1, den, dtype=np.int64)
    # sigma(n) * den == num * n  and  den | n  <=>  sigma(n) == num * (n / den)
    hits = n[sig[n - lo] == num * (n // den)]
    return [int(x) for x in hits if x != target]


def _ranges(bound: int, partitions: int) -> list[tuple[int, int]]:
    size = -(-bound // partitions)
    return [(lo, min(lo + size - 1, bound)) for lo in range(1, bound + 1, size)]


def search_partitioned(
    target: int,
    bound: int,
    partitions: int = 1,
    jobs: int = 1,
    ceiling: int | None = None,
) -> SearchReport:
    """All friends of ``target`` up to ``bound``, scanning contiguous ranges.

    Ranges may run on ``jobs`` threads; results are merged in range order.
    """
    if target < 2:
        raise ValueError("target must be >= 2")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if partitions < 1 or jobs < 1:
        raise ValueError("partitions and jobs must be >= 1")
    started = time.perf_counter()
    index = abundancy_index(target)
    num, den = index.numerator, index.denominator
    if num * (bound // den + 1) > _INT64_MAX:
        raise ResourceCeilingError("cross-multiplication overflows int64")
    ranges = _ranges(bound, partitions)
    if jobs == 1 or len(ranges) == 1:
        parts = [_scan_range(lo, hi, target, num, den, ceiling) for lo, hi in ranges]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_scan_range, lo, hi, target, num, den, ceiling) for lo, hi in ranges
            ]
            parts = [f.result() for f in futures]
    friends = [n for part in parts for n in part]
    return SearchReport(
        target=target,
        target_index=index,
        bound=bound,
        friends_found=friends,
        scanned=bound,
        elapsed=time.perf_counter() - started,
    )


def brute_force_friends(target: int, bound: int, ceiling: int | None = None) -> SearchReport:
    return search_partitioned(target, bound, partitions=1, ceiling=ceiling)


def pruned_odd_scan(bound: int) -> PrunedScan:
    """Test odd n = m^2 <= bound with 3 | m and m having >= 5 distinct primes.

    Only those shapes can be odd friends of 12; m runs over 3 (mod 6).
    """
    if bound < 9:
        raise ValueError("bound must be >= 9")
    friends: list[int] = []
    tested = 0
    # 3*5*7*11*13 is the least admissible root
    for m in range(15015, isqrt(bound) + 1, 6):
        f = factorize(m)
        if len(f) < 5:
            continue
        n = m * m
        tested += 1
        s = 1
        for pp in f:
            p, e = pp.prime, 2 * pp.exponent
            s *= (p ** (e + 1) - 1) // (p - 1)
        if 3 * s == 7 * n:
            friends.append(n)
    return PrunedScan(bound, friends, tested)
