import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from abundancy.arith import Factorization, index_of_factorization
from abundancy.certificate import (
    CertificateCheck,
    CheckKind,
    flip_relation,
    run_certificate,
)
from abundancy.friends12 import friends_of_12_certificate
from abundancy.report import certificate_report_json, dumps
from oracles import product

GOLDEN = Path(__file__).parent / "golden" / "friends_of_12.json"
T = Fraction(7, 3)


@pytest.fixture(scope="module")
def checks():
    return friends_of_12_certificate()


@pytest.fixture(scope="module")
def report(checks):
    return run_certificate(checks, name="friends-of-12")


def by_id(report, check_id):
    return next(r for r in report.results if r.check.id == check_id)


def test_builtin_all_pass(report):
    assert report.all_passed, [(r.check.id, r.diagnostic) for r in report.failed]


def test_ids_unique_and_stable(checks):
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids))
    golden = json.loads(GOLDEN.read_text(encoding="utf-8"))
    assert ids == [row["id"] for row in golden["checks"]]


def test_report_matches_golden(report):
    assert dumps(certificate_report_json(report)) == GOLDEN.read_text(encoding="utf-8")


def test_named_examples(report):
    r = by_id(report, "odd.k3.exclude-11")
    expected = product([Fraction(121, 81), Fraction(31, 25), Fraction(57, 49), Fraction(133, 121)])
    assert r.passed and r.witness["value"] == expected
    r = by_id(report, "even.b8")
    assert r.passed and r.witness["sigma"] == 9841 and r.witness["remainder"] == 0
    r = by_id(report, "even.q1-53.window")
    assert r.passed and r.witness["primes"] == []


def test_hand_evaluated_witnesses(report):
    # three witnesses recomputed by hand from their defining products
    assert by_id(report, "odd.k2").witness["value"] == Fraction(3, 2) * Fraction(5, 4) * Fraction(7, 6)
    assert by_id(report, "even.b4.floor").witness["value"] == Fraction(3, 2) * Fraction(121, 81) * Fraction(12, 11)
    assert by_id(report, "even.q1-41.q2-83-sup").witness["value"] == (
        Fraction(3, 2) * Fraction(42, 41) * Fraction(3, 2) * Fraction(83, 82)
    )


def test_p13_floor_exceeds_target(report):
    value = by_id(report, "odd.k3.p13-floor").witness["value"]
    assert value == Fraction(1093, 729) * Fraction(31, 25) * Fraction(57, 49) * Fraction(183, 169)
    assert value > T


def test_witness_fidelity(checks, report):
    for res in report.results:
        if res.check.kind is not CheckKind.INDEX_INEQUALITY:
            continue
        p = res.check.payload
        exact = index_of_factorization(Factorization.of(p["exact"]))
        sup = product(Fraction(q, q - 1) for q in p["sup"])
        assert res.witness["value"] == exact * sup * product(p.get("const", []))


def test_empty_list():
    rep = run_certificate([])
    assert rep.all_passed and rep.results == []


def test_falsified_constant(checks):
    target = next(c for c in checks if c.id == "odd.k3.exclude-11")
    mutated = [c.with_payload(bound=Fraction(7, 2)) if c is target else c for c in checks]
    rep = run_certificate(mutated)
    failed = [r.check.id for r in rep.failed]
    assert failed == ["odd.k3.exclude-11"]


@pytest.mark.parametrize("kind", [CheckKind.INDEX_INEQUALITY, CheckKind.MIN_PRIME, CheckKind.MIN_EXPONENT])
def test_mutation_sensitivity(checks, report, kind):
    base = [r.passed for r in report.results]
    targets = [i for i, c in enumerate(checks) if c.kind is kind]
    assert targets
    for i in targets:
        mutated = list(checks)
        mutated[i] = checks[i].with_payload(relation=flip_relation(checks[i].payload["relation"]))
        verdicts = [r.passed for r in run_certificate(mutated).results]
        changed = [j for j, (a, b) in enumerate(zip(base, verdicts)) if a != b]
        assert changed == [i], checks[i].id


def test_order_independence(checks, report):
    verdict = {r.check.id: (r.passed, r.witness) for r in report.results}
    shuffled = list(checks)
    random.Random(7).shuffle(shuffled)
    rep = run_certificate(shuffled)
    assert [r.check.id for r in rep.results] == [c.id for c in shuffled]
    for r in rep.results:
        assert (r.passed, r.witness) == verdict[r.check.id]


def test_parallel_run_keeps_order(checks, report):
    rep = run_certificate(checks, jobs=4)
    assert [(r.check.id, r.passed) for r in rep.results] == [(r.check.id, r.passed) for r in report.results]


@pytest.mark.parametrize(
    "check",
    [
        CertificateCheck("bad.kind", "NoSuchKind", {}, "unknown kind"),
        CertificateCheck("bad.missing", CheckKind.INDEX_INEQUALITY, {"exact": [(3, 1)]}, "no relation"),
        CertificateCheck(
            "bad.relation",
            CheckKind.INDEX_INEQUALITY,
            {"exact": [(3, 1)], "relation": "~", "bound": T},
            "bad relation",
        ),
        CertificateCheck("bad.prime", CheckKind.DIVISIBILITY, {"divisor": 3, "prime": 9, "exponent": 1}, "9"),
        CertificateCheck("bad.claim", CheckKind.CONGRUENCE_CLAIM, {"claim": "nope"}, "unknown claim"),
    ],
)
def test_malformed_payload_fails_only_itself(checks, check):
    rep = run_certificate([check] + checks[:3])
    assert not rep.results[0].passed
    assert rep.results[0].diagnostic.startswith("malformed payload")
    assert all(r.passed for r in rep.results[1:])


def test_divisibility_admissibility():
    ok = CertificateCheck("d", CheckKind.DIVISIBILITY, {"divisor": 13, "prime": 3, "exponent": 2}, "")
    assert run_certificate([ok]).all_passed
    inside = ok.with_payload(admissible_range=[10, 20])
    assert not run_certificate([inside]).all_passed
    wrong_value = ok.with_payload(sigma_value=14)
    assert not run_certificate([wrong_value]).all_passed


def test_congruence_claims():
    def claim(**payload):
        return run_certificate([CertificateCheck("c", CheckKind.CONGRUENCE_CLAIM, payload, "")]).all_passed

    assert claim(claim="sigma_mod4", prime=5, exponent=2, residue=3)
    assert not claim(claim="sigma_mod4", prime=5, exponent=2, residue=1)
    assert claim(claim="pattern", factorization=[(47, 1), (67, 1)], expect="two or more odd exponents")
    assert claim(claim="carriers", primes=[3, 13], expect=[13], max_exponent=5)
    assert not claim(claim="carriers", primes=[3, 13], expect=[], max_exponent=5)


def test_to_jsonable_refuses_floats():
    from abundancy.report import to_jsonable

    with pytest.raises(TypeError):
        to_jsonable({"x": 0.5})
    assert to_jsonable({"r": Fraction(7, 3), "n": [1, 2]}) == {"r": {"num": "7", "den": "3"}, "n": [1, 2]}


def test_audit_table_covers_every_check_once(checks):
    import re

    audit = (Path(__file__).parents[1] / "docs" / "certificate_audit.md").read_text(encoding="utf-8")
    rows = re.findall(r"^\|.*?\| `((?:odd|even)\.[^`]+)` \|", audit, flags=re.M)
    assert sorted(rows) == sorted(c.id for c in checks)
