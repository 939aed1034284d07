"""Structured verification reports.

A :class:`Report` is an ordered bag of :class:`Check` entries.  Checks never
raise on failure; they record a status and, when something breaks, a few
witnesses that show where.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .field import Fp

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"

# cap witness lists so a badly broken table does not produce megabytes
MAX_WITNESSES = 10


def _plain(value: Any) -> Any:
    """Convert scalars and containers into JSON-friendly values."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, Fp):
        return str(value)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


@dataclass
class Check:
    name: str
    status: str = PASS
    witnesses: list = field(default_factory=list)
    values: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def fail(self, witness=None) -> None:
        self.status = FAIL
        if witness is not None and len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)

    def expect(self, condition: bool, witness=None) -> None:
        if not condition:
            self.fail(witness)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "witnesses": _plain(self.witnesses),
            "values": _plain(self.values),
        }


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, status: str = PASS, **values) -> Check:
        check = Check(name, status, values=dict(values))
        self.checks.append(check)
        return check

    def extend(self, other: Report, prefix: str = "") -> Report:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, list(c.witnesses), dict(c.values)))
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def sorted(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.name)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_dict() for c in self.sorted()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for c in self.sorted():
            line = f"{c.status.upper():15s} {c.name}"
            if c.values:
                vals = ", ".join(f"{k}={json.dumps(_plain(v))}" for k, v in sorted(c.values.items()))
                line += f"  [{vals}]"
            lines.append(line)
            for w in c.witnesses:
                lines.append(f"{'':15s}   witness: {json.dumps(_plain(w))}")
        return "\n".join(lines)
