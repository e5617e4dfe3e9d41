"""Replay of arithmetic proof steps as independent, exact checks.

A check is a kind plus a plain-data payload. Evaluation never raises: a
malformed payload fails its own check with a diagnostic and the run goes on.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import floor
from typing import Any, Callable

from .arith import Factorization, PrimePower, index_of_factorization, sigma_prime_power
from .bounds import (
    ExponentFilter,
    index_sup,
    min_exponent_bound,
    min_prime_bound,
    min_prime_threshold,
    primes_in_interval,
    q1_candidates,
    two_prime_window,
)
from .congruence import PatternRejected, extract_exponent_pattern, sigma_mod4

__all__ = [
    "CheckKind",
    "CertificateCheck",
    "CheckResult",
    "CertificateReport",
    "RELATIONS",
    "flip_relation",
    "evaluate_check",
    "run_certificate",
]


class CheckKind(str, enum.Enum):
    INDEX_INEQUALITY = "IndexInequality"
    DIVISIBILITY = "Divisibility"
    CONGRUENCE_CLAIM = "CongruenceClaim"
    EMPTY_WINDOW = "EmptyWindow"
    WINDOW_CONTENTS = "WindowContents"
    MIN_PRIME = "MinPrime"
    MIN_EXPONENT = "MinExponent"


RELATIONS: dict[str, Callable[[Any, Any], bool]] = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}
_NEGATED = {"<": ">=", ">=": "<", ">": "<=", "<=": ">", "=": "!=", "!=": "="}


def flip_relation(rel: str) -> str:
    """The complementary relation, so a flipped check always changes verdict."""
    return _NEGATED[rel]


@dataclass(frozen=True)
class CertificateCheck:
    id: str
    kind: CheckKind
    payload: dict[str, Any]
    citation: str

    def with_payload(self, **changes: Any) -> "CertificateCheck":
        return replace(self, payload={**self.payload, **changes})


@dataclass
class CheckResult:
    check: CertificateCheck
    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)
    diagnostic: str | None = None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class CertificateReport:
    name: str
    results: list[CheckResult]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]


def _compare(a: Any, rel: str, b: Any) -> bool:
    try:
        return RELATIONS[rel](a, b)
    except KeyError:
        raise ValueError(f"unknown relation {rel!r}") from None


def _fact(pairs) -> Factorization:
    return Factorization.of(tuple(p) for p in pairs)


def _index_inequality(p: dict) -> tuple[bool, dict]:
    exact = _fact(p.get("exact", ()))
    value = index_of_factorization(exact) * index_sup(p.get("sup", ()))
    for c in p.get("const", ()):
        value *= Fraction(c)
    bound = Fraction(p["bound"])
    return _compare(value, p["relation"], bound), {"value": value, "bound": bound}


def _admissible(d: int, p: dict) -> bool:
    if d in p.get("admissible_primes", ()):
        return True
    rng = p.get("admissible_range")
    return rng is not None and rng[0] <= d < rng[1]


def _divisibility(p: dict) -> tuple[bool, dict]:
    d = p["divisor"]
    s = sigma_prime_power(PrimePower(p["prime"], p["exponent"]))
    ok = s % d == 0
    witness: dict[str, Any] = {"sigma": s, "divisor": d, "remainder": s % d}
    if "sigma_value" in p:
        ok = ok and s == p["sigma_value"]
    if "admissible_primes" in p or "admissible_range" in p:
        allowed = _admissible(d, p)
        witness["divisor_admissible"] = allowed
        ok = ok and not allowed
    return ok, witness


def _pattern_verdict(f: Factorization) -> str:
    try:
        extract_exponent_pattern(f)
    except PatternRejected as exc:
        return exc.reason.value
    return "accept"


def _congruence(p: dict) -> tuple[bool, dict]:
    claim = p["claim"]
    if claim == "sigma_mod4":
        pp = PrimePower(p["prime"], p["exponent"])
        lemma = sigma_mod4(pp)
        direct = sigma_prime_power(pp) % 4
        return lemma == direct == p["residue"], {"lemma": lemma, "direct": direct}
    if claim == "lemma_grid":
        bad = []
        cases = 0
        for q in primes_in_interval(2, p["prime_limit"]):
            for e in range(1, p["max_exponent"] + 1):
                cases += 1
                pp = PrimePower(q, e)
                if sigma_mod4(pp) != sigma_prime_power(pp) % 4:
                    bad.append([q, e])
        return not bad, {"cases": cases, "mismatches": bad}
    if claim == "pattern":
        got = _pattern_verdict(_fact(p["factorization"]))
        return got == p["expect"], {"verdict": got}
    if claim == "carriers":
        # Which primes can carry the single odd exponent: checked both by the
        # residue rule and by enumerating small exponent assignments.
        primes = p["primes"]
        carriers = [q for q in primes if q % 4 == 1]
        assignments = 0
        misplaced = []
        for exps in itertools.product(range(1, p["max_exponent"] + 1), repeat=len(primes)):
            assignments += 1
            f = Factorization.of(zip(primes, exps))
            s = 1
            for pp in f:
                s *= sigma_prime_power(pp)
            accepted = _pattern_verdict(f) == "accept"
            if accepted != (s % 4 == 2):
                misplaced.append(list(exps))
            elif accepted:
                (q,) = [pp.prime for pp in f if pp.exponent % 2]
                if q not in p["expect"]:
                    misplaced.append(list(exps))
        ok = carriers == list(p["expect"]) and not misplaced
        return ok, {"carriers": carriers, "assignments": assignments, "misplaced": misplaced}
    raise ValueError(f"unknown congruence claim {claim!r}")


def _empty_window(p: dict) -> tuple[bool, dict]:
    primes = primes_in_interval(Fraction(p["lower"]), Fraction(p["upper"]))
    return not primes, {"primes": primes}


def _window_contents(p: dict) -> tuple[bool, dict]:
    if "candidates" in p:
        got = q1_candidates(p.get("limit", 1000))
        return got == list(p["candidates"]), {"candidates": got}
    q1 = p["q1"]
    w = two_prime_window(q1)
    lo, hi = p["stated_lower"], p["stated_upper"]
    from_stated = [q for q in primes_in_interval(lo, hi) if q > q1]
    ok = (
        list(w.primes) == from_stated
        and floor(w.lower) == lo
        and abs(w.upper - hi) < 1
    )
    if "primes" in p:
        ok = ok and list(w.primes) == list(p["primes"])
    return ok, {"lower": w.lower, "upper": w.upper, "primes": list(w.primes)}


def _min_prime(p: dict) -> tuple[bool, dict]:
    target = Fraction(p["target"])
    fixed = _fact(p["fixed"])
    q = min_prime_bound(target, fixed)
    t = min_prime_threshold(target, fixed)
    return _compare(q, p["relation"], p["value"]), {"min_prime": q, "threshold": t}


def _min_exponent(p: dict) -> tuple[bool, dict]:
    mod, residues = p.get("filter", (1, (0,)))
    e = min_exponent_bound(
        Fraction(p["target"]),
        _fact(p["fixed"]),
        p["q"],
        p["forbidden"],
        ExponentFilter(mod, frozenset(residues)),
    )
    return _compare(e, p["relation"], p["value"]), {"min_exponent": e}


_EVALUATORS = {
    CheckKind.INDEX_INEQUALITY: _index_inequality,
    CheckKind.DIVISIBILITY: _divisibility,
    CheckKind.CONGRUENCE_CLAIM: _congruence,
    CheckKind.EMPTY_WINDOW: _empty_window,
    CheckKind.WINDOW_CONTENTS: _window_contents,
    CheckKind.MIN_PRIME: _min_prime,
    CheckKind.MIN_EXPONENT: _min_exponent,
}


def evaluate_check(check: CertificateCheck) -> CheckResult:
    try:
        evaluator = _EVALUATORS[CheckKind(check.kind)]
        passed, witness = evaluator(check.payload)
    except Exception as exc:  # malformed payloads fail only their own check
        return CheckResult(check, False, {}, f"malformed payload: {type(exc).__name__}: {exc}")
    return CheckResult(check, bool(passed), witness)


def run_certificate(
    checks: list[CertificateCheck], name: str = "custom", jobs: int = 1
) -> CertificateReport:
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(evaluate_check, checks))
    else:
        results = [evaluate_check(c) for c in checks]
    return CertificateReport(name, results)
