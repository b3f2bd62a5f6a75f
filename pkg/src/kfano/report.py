"""Report documents with deterministic JSON and plain-text rendering."""

import json
from dataclasses import dataclass, field
from fractions import Fraction

VERSION = "1.0.0"


def canonical(obj):
    """Convert nested data into JSON-ready values (Fractions as strings, tuples as lists)."""
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    if hasattr(obj, "to_dict"):
        return canonical(obj.to_dict())
    return str(obj)


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    passed: bool

    def to_dict(self):
        return {"name": self.name, "expected": canonical(self.expected),
                "actual": canonical(self.actual), "passed": self.passed}


@dataclass
class ReportDocument:
    case: str
    inputs: dict = field(default_factory=dict)
    invariants: dict = field(default_factory=dict)
    presentations: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    annotations: list = field(default_factory=list)
    version: str = VERSION

    def check(self, name, expected, actual, passed=None):
        if passed is None:
            passed = canonical(expected) == canonical(actual)
        self.checks.append(Check(name, expected, actual, bool(passed)))
        return passed

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "case": self.case,
            "inputs": canonical(self.inputs),
            "invariants": canonical(self.invariants),
            "presentations": canonical(self.presentations),
            "checks": [c.to_dict() for c in self.checks],
            "annotations": list(self.annotations),
            "passed": self.passed,
            "tool_version": self.version,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self):
        lines = [f"case: {self.case}", f"tool version: {self.version}"]
        for title, block in (("inputs", self.inputs), ("invariants", self.invariants)):
            if block:
                lines.append(f"{title}:")
                for k in sorted(block):
                    lines.append(f"  {k}: {_short(canonical(block[k]))}")
        if self.presentations:
            lines.append("presentations:")
            for k in sorted(self.presentations):
                v = canonical(self.presentations[k])
                if isinstance(v, list):
                    lines.append(f"  {k}:")
                    lines.extend(f"    {_short(x)}" for x in v)
                else:
                    lines.append(f"  {k}: {_short(v)}")
        if self.checks:
            lines.append("checks:")
            for c in self.checks:
                lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}")
                if not c.passed:
                    lines.append(f"      expected: {_short(canonical(c.expected))}")
                    lines.append(f"      actual:   {_short(canonical(c.actual))}")
        if self.annotations:
            lines.append("annotations:")
            lines.extend(f"  - {a}" for a in self.annotations)
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _short(v, limit=200):
    s = json.dumps(v, sort_keys=True) if not isinstance(v, str) else v
    return s if len(s) <= limit else s[:limit - 3] + "..."
