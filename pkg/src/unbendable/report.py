"""Certificate reports and their JSON / Markdown serialisations."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA = 1


def normalize(value: Any) -> Any:
    """Reduce a value to JSON-shaped data with exact numbers.

    Tuples become lists, integral Fractions become ints.  Floats are refused.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize(v) for v in value]
    raise TypeError(f"cannot serialise {type(value).__name__}")


def _natural_key(name: str):
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name)]


@dataclass
class Finding:
    name: str
    value: Any
    passed: bool = True

    def __post_init__(self):
        self.value = normalize(self.value)
        self.passed = bool(self.passed)


@dataclass
class Report:
    command: str
    subject: dict = field(default_factory=dict)
    findings: list[Finding] = field(default_factory=list)

    def __post_init__(self):
        self.subject = normalize(self.subject)
        self.findings.sort(key=lambda f: _natural_key(f.name))

    def add(self, name: str, value: Any, passed: bool = True) -> None:
        self.findings.append(Finding(name, value, passed))
        self.findings.sort(key=lambda f: _natural_key(f.name))

    @property
    def verdict(self) -> str:
        return "pass" if all(f.passed for f in self.findings) else "fail"

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict == "pass" else 1

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "subject": self.subject,
            "findings": [
                {"name": f.name, "value": f.value, "passed": f.passed} for f in self.findings
            ],
            "verdict": self.verdict,
        }


def _encode(obj):
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _decode(obj: dict):
    if set(obj) == {"num", "den"}:
        return Fraction(obj["num"], obj["den"])
    return obj


def to_json(report: Report) -> str:
    return json.dumps(report.to_dict(), default=_encode, indent=2) + "\n"


def from_json(text: str) -> Report:
    data = json.loads(text, object_hook=_decode)
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {data.get('schema')!r}")
    findings = [Finding(f["name"], f["value"], f["passed"]) for f in data["findings"]]
    report = Report(data["command"], data["subject"], findings)
    if report.verdict != data["verdict"]:
        raise ValueError("stored verdict disagrees with findings")
    return report


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in value.items()) + "}"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def to_markdown(report: Report) -> str:
    lines = [f"# {report.command}", ""]
    for key, val in report.subject.items():
        lines.append(f"- **{key}**: {_fmt(val)}")
    if report.subject:
        lines.append("")
    lines += ["| finding | value | result |", "|---|---|---|"]
    for f in report.findings:
        cell = _fmt(f.value).replace("|", "\\|")
        lines.append(f"| {f.name} | {cell} | {'pass' if f.passed else 'FAIL'} |")
    lines += ["", f"**verdict: {report.verdict}**", ""]
    return "\n".join(lines)


def emit(report: Report, fmt: str = "markdown") -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "markdown":
        return to_markdown(report)
    raise ValueError(f"unknown format {fmt!r}")
