"""Structured pass/fail reports shared by the self-check and ledger suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import rational_str

__all__ = ["CheckEntry", "Report", "render_value"]


def render_value(value) -> str:
    """Deterministic string form of a check result (rationals as ``p/q``)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return rational_str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, (tuple, list, frozenset, set)):
        items = list(value)
        if isinstance(value, (frozenset, set)):
            items = sorted(items)
        return "[" + ", ".join(render_value(v) for v in items) + "]"
    if value is None:
        return ""
    if hasattr(value, "coords"):
        return render_value(tuple(value.coords))
    return str(value)


@dataclass(frozen=True)
class CheckEntry:
    check_id: str
    algebra: str
    k: str
    formula: str
    expected: str
    computed: str
    passed: bool

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        where = self.algebra + (f" k={self.k}" if self.k else "")
        tail = "" if self.passed else f"  expected {self.expected}, got {self.computed}"
        return f"[{status}] {self.check_id} ({where}) {self.formula}{tail}"


@dataclass
class Report:
    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, check_id: str, *, algebra: str = "", k=None, formula: str = "",
            expected=None, computed=None) -> bool:
        passed = expected == computed
        self.entries.append(CheckEntry(
            check_id=check_id,
            algebra=algebra,
            k="" if k is None else rational_str(k),
            formula=formula,
            expected=render_value(expected),
            computed=render_value(computed),
            passed=passed,
        ))
        return passed

    def extend(self, other: "Report") -> "Report":
        self.entries.extend(other.entries)
        return self

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def to_json(self) -> list[dict]:
        return [
            {
                "check_id": e.check_id,
                "algebra": e.algebra,
                "k": e.k,
                "formula": e.formula,
                "expected": e.expected,
                "computed": e.computed,
                "pass": e.passed,
            }
            for e in self.entries
        ]
