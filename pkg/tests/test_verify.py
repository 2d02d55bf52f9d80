from octog2 import verify as vf


def test_suites_cover_every_module():
    assert set(vf.SUITES) == {
        "gf8", "scalar", "linalg", "octonion", "derivations", "chevalley", "standard_rep", "weyl_modules",
    }


def test_single_suite_passes():
    report = vf.run_suite("gf8")
    assert report.passed
    assert report.to_text().splitlines()[-1] == "overall: PASS (4/4)"
    assert report.to_json()["passed"] is True


def test_failure_carries_witness(monkeypatch):
    checks = [("always fine", lambda: None), ("broken", lambda: "x = a^3")]
    monkeypatch.setitem(vf.SUITES, "gf8", checks)
    report = vf.run_suite("gf8")
    assert not report.passed
    assert "[FAIL] gf8: broken  -- witness: x = a^3" in report.to_text()
    assert report.checks[1].witness == "x = a^3"


def test_exception_becomes_failure(monkeypatch):
    def boom():
        raise ArithmeticError("1/3 is not integral")

    monkeypatch.setitem(vf.SUITES, "gf8", [("raises", boom)])
    report = vf.run_suite("gf8")
    assert report.checks[0].witness == "ArithmeticError: 1/3 is not integral"


def test_unknown_suite():
    import pytest

    with pytest.raises(KeyError):
        vf.run_suite("nope")
