"""JSON and plain-text rendering of results.

Rationals are emitted as {"num": "...", "den": "..."} decimal strings and
no floats appear anywhere, so parsing and re-dumping is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bounds import PrimeWindow
from .certificate import CertificateReport
from .congruence import SquareShape
from .search import SearchReport

__all__ = [
    "table",
    "rational_json",
    "to_jsonable",
    "dumps",
    "format_rational",
    "search_report_json",
    "search_report_table",
    "certificate_report_json",
    "certificate_report_table",
    "window_json",
    "window_table",
    "shape_json",
    "shape_table",
]


def rational_json(r: Fraction) -> dict[str, str]:
    return {"num": str(r.numerator), "den": str(r.denominator)}


def format_rational(r: Fraction) -> str:
    """Always ``p/q``, including ``1/1``."""
    return f"{r.numerator}/{r.denominator}"


def to_jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return rational_json(value)
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__} exactly")


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def search_report_json(r: SearchReport) -> dict[str, Any]:
    return {
        "target": r.target,
        "target_index": rational_json(r.target_index),
        "bound": r.bound,
        "friends": list(r.friends_found),
        "scanned": r.scanned,
        "elapsed_ms": r.elapsed_ms,
    }


def search_report_table(r: SearchReport) -> str:
    rows = [
        ["target", str(r.target)],
        ["target_index", format_rational(r.target_index)],
        ["bound", str(r.bound)],
        ["friends", ", ".join(map(str, r.friends_found)) or "(none)"],
        ["scanned", str(r.scanned)],
        ["elapsed_ms", str(r.elapsed_ms)],
    ]
    return table(["field", "value"], rows)


def _witness_text(w: dict[str, Any]) -> str:
    parts = []
    for k, v in w.items():
        if isinstance(v, Fraction):
            v = format_rational(v)
        elif isinstance(v, (list, tuple)):
            v = "[" + ", ".join(map(str, v[:8])) + (", ..." if len(v) > 8 else "") + "]"
        parts.append(f"{k}={v}")
    return " ".join(parts)


def certificate_report_json(rep: CertificateReport) -> dict[str, Any]:
    checks = []
    for res in rep.results:
        row = {
            "id": res.check.id,
            "kind": str(getattr(res.check.kind, "value", res.check.kind)),
            "citation": res.check.citation,
            "witness": to_jsonable(res.witness),
            "verdict": res.verdict,
        }
        if res.diagnostic:
            row["diagnostic"] = res.diagnostic
        checks.append(row)
    return {"certificate": rep.name, "all_passed": rep.all_passed, "checks": checks}


def certificate_report_table(rep: CertificateReport) -> str:
    rows = [
        [
            res.check.id,
            str(getattr(res.check.kind, "value", res.check.kind)),
            res.verdict.upper(),
            res.diagnostic or _witness_text(res.witness),
        ]
        for res in rep.results
    ]
    passed = sum(r.passed for r in rep.results)
    summary = f"{rep.name}: {passed}/{len(rep.results)} checks passed\n"
    return table(["id", "kind", "verdict", "witness"], rows) + summary


def window_json(q1: int, w: PrimeWindow) -> dict[str, Any]:
    return {
        "q1": q1,
        "lower": rational_json(w.lower),
        "upper": rational_json(w.upper),
        "primes": list(w.primes),
    }


def window_table(q1: int, w: PrimeWindow) -> str:
    rows = [
        ["q1", str(q1)],
        ["lower", f"{format_rational(w.lower)} (~{w.lower.numerator // w.lower.denominator})"],
        ["upper", f"{format_rational(w.upper)} (~{w.upper.numerator // w.upper.denominator})"],
        ["primes", ", ".join(map(str, w.primes)) or "(none)"],
    ]
    return table(["field", "value"], rows)


def shape_json(n: int, s: SquareShape) -> dict[str, Any]:
    return {
        "n": n,
        "kind": s.kind.value,
        "square_root": s.square_root,
        "two_exponent": s.two_exponent,
    }


def shape_table(n: int, s: SquareShape) -> str:
    rows = [["n", str(n)], ["kind", s.kind.value]]
    if s.square_root is not None:
        rows.append(["square_root", str(s.square_root)])
    if s.two_exponent is not None:
        rows.append(["two_exponent", str(s.two_exponent)])
    return table(["field", "value"], rows)
