"""Structured verification reports.

Each scenario produces one report: a stable identifier, a pass/fail/error
status, the computed values, the expected values with provenance tags,
a one-line statement of the claim checked, optional flags (a flagged
report still passes but is surfaced in summaries), and free-form notes.
Reports are deterministic apart from the timing field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


PROVENANCE_TAGS = ("published", "derived", "definitional")


@dataclass
class VerificationReport:
    scenario_id: str
    status: str = "pass"            # "pass" | "fail" | "error"
    citation: str = ""              # one-line statement of the claim
    computed: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    flags: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    millis: float = 0.0

    def check(self, key: str, computed, expected, tag: str = "published") -> bool:
        """Record a computed/expected pair; a mismatch fails the report."""
        if tag not in PROVENANCE_TAGS:
            raise ValueError(f"unknown provenance tag {tag!r}")
        self.computed[key] = _plain(computed)
        self.expected[key] = _plain(expected)
        self.provenance[key] = tag
        ok = _plain(computed) == _plain(expected)
        if not ok:
            self.status = "fail"
            self.notes.append(f"mismatch at {key}: computed "
                              f"{_plain(computed)!r}, expected {_plain(expected)!r}")
        return ok

    def require(self, key: str, condition: bool, note: str = "") -> bool:
        """Record a boolean check; False fails the report."""
        self.computed[key] = bool(condition)
        self.expected[key] = True
        self.provenance[key] = "definitional"
        if not condition:
            self.status = "fail"
            if note:
                self.notes.append(note)
        return bool(condition)

    def flag(self, message: str) -> None:
        self.flags.append(message)

    def note(self, message: str) -> None:
        self.notes.append(message)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "id": self.scenario_id,
            "status": self.status,
            "citation": self.citation,
            "computed": self.computed,
            "expected": self.expected,
            "provenance": self.provenance,
            "flags": list(self.flags),
            "notes": list(self.notes),
            "millis": round(self.millis, 3),
        }


def _plain(value):
    """Coerce values into JSON-stable primitives."""
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


def render_json(reports, version: str) -> str:
    passed = sum(1 for r in reports if r.passed)
    failed = sum(1 for r in reports if r.status == "fail")
    errored = sum(1 for r in reports if r.status == "error")
    flagged = sum(1 for r in reports if r.flags)
    doc = {
        "version": version,
        "prime": 7,
        "scenarios": [r.to_dict() for r in reports],
        "summary": {
            "passed": passed,
            "failed": failed + errored,
            "flagged": flagged,
        },
    }
    return json.dumps(doc, indent=2, sort_keys=False)


def render_text(reports, version: str) -> str:
    lines = []
    width = max((len(r.scenario_id) for r in reports), default=10)
    for r in reports:
        mark = {"pass": "ok", "fail": "FAIL", "error": "ERROR"}[r.status]
        flag = " [flagged]" if r.flags else ""
        lines.append(f"{r.scenario_id:<{width}}  {mark}{flag}  {r.citation}")
        for f in r.flags:
            lines.append(f"{'':<{width}}    note: {f}")
        if r.status != "pass":
            for n in r.notes:
                lines.append(f"{'':<{width}}    {n}")
    passed = sum(1 for r in reports if r.passed)
    flagged = sum(1 for r in reports if r.flags)
    lines.append(f"{passed}/{len(reports)} passed"
                 + (f" ({flagged} flagged)" if flagged else ""))
    return "\n".join(lines)
