import json
from fractions import Fraction

from kfano.report import ReportDocument, canonical


def test_canonical():
    assert canonical(Fraction(44, 3)) == "44/3"
    assert canonical(Fraction(6, 3)) == 2
    assert canonical({(1, 2): [Fraction(1, 2)]}) == {"(1, 2)": ["1/2"]}


def test_checks_and_rendering():
    doc = ReportDocument("demo", inputs={"b": 1, "a": 2})
    assert doc.check("same", [1, 2], (1, 2))
    assert not doc.check("different", 1, 2)
    assert not doc.passed and [c.name for c in doc.failures()] == ["different"]
    text = doc.to_text()
    assert "[FAIL] different" in text and "result: FAIL" in text
    data = json.loads(doc.to_json())
    assert data["passed"] is False and list(data["inputs"]) == ["a", "b"]
    assert doc.to_json() == ReportDocument("demo", inputs={"a": 2, "b": 1}, checks=doc.checks).to_json()


def test_explicit_verdict():
    doc = ReportDocument("demo")
    doc.check("custom comparison", "x", "y", passed=True)
    assert doc.passed
