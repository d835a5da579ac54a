"""Pass/fail reports shared by the validators and the lab harnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    subject: Any  # k, an input string, or a phrase index
    expected: Any
    measured: Any
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "subject": _plain(self.subject),
            "expected": _plain(self.expected),
            "measured": _plain(self.measured),
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    title: str = ""
    checks: list[Check] = field(default_factory=list)
    first_failure: dict | None = None
    meta: dict = field(default_factory=dict)

    def add(self, name, subject, expected, measured, passed=None, payload=None) -> bool:
        if passed is None:
            passed = expected == measured
        passed = bool(passed)
        self.checks.append(Check(name, subject, expected, measured, passed))
        if not passed and self.first_failure is None:
            self.first_failure = {"check": name, "subject": _plain(subject)}
            if payload:
                self.first_failure.update({k: _plain(v) for k, v in payload.items()})
        return passed

    def extend(self, other: "VerificationReport") -> None:
        for c in other.checks:
            self.checks.append(c)
        if self.first_failure is None and other.first_failure is not None:
            self.first_failure = other.first_failure

    @property
    def n_pass(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def n_fail(self) -> int:
        return len(self.checks) - self.n_pass

    @property
    def ok(self) -> bool:
        return self.n_fail == 0

    @property
    def summary(self) -> dict:
        return {"total": len(self.checks), "pass": self.n_pass, "fail": self.n_fail}

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "meta": {k: _plain(v) for k, v in self.meta.items()},
            "summary": self.summary,
            "checks": [c.to_dict() for c in self.checks],
            "first_failure": self.first_failure,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"# {self.title}" if self.title else "# report"]
        for c in self.checks:
            if verbose or not c.passed:
                mark = "PASS" if c.passed else "FAIL"
                lines.append(
                    f"{mark}  {c.name}  [{_short(c.subject)}]  "
                    f"expected={_short(c.expected)} measured={_short(c.measured)}"
                )
        s = self.summary
        lines.append(f"{s['pass']}/{s['total']} checks passed")
        if self.first_failure:
            lines.append("first failure: " + json.dumps(self.first_failure)[:2000])
        return "\n".join(lines)

    def to_tsv(self) -> str:
        rows = ["name\tsubject\texpected\tmeasured\tpass"]
        for c in self.checks:
            rows.append(
                "\t".join([c.name, _short(c.subject), _short(c.expected), _short(c.measured), str(c.passed).lower()])
            )
        return "\n".join(rows)


def _plain(v):
    if isinstance(v, (bytes, bytearray)):
        return v.decode("latin-1")
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


def _short(v, limit=80) -> str:
    s = _plain(v)
    s = s if isinstance(s, str) else json.dumps(s)
    return s if len(s) <= limit else s[: limit - 3] + "..."
