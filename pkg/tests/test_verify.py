import pytest

from seaweeds.verify import (
    SUITES,
    CheckResult,
    VerifySuiteReport,
    _run,
    run_suite,
)


def test_suite_names():
    assert set(SUITES) == {"formulas", "gf", "recursion", "gcd", "winding", "all"}


def test_recursion_suite_passes():
    report = run_suite("recursion")
    assert report.passed
    assert len(report.checks) == 2
    lines = report.format().splitlines()
    assert all(line.startswith("[PASS]") for line in lines[:-1])
    assert lines[-1] == "suite recursion: passed (2/2)"


def test_gf_suite_passes():
    report = run_suite("gf")
    assert report.passed
    assert {c.name for c in report.checks} >= {
        "denominators are (1-2x)^j",
        "diag3 series vs closed form",
        "two extraction methods agree",
        "series vs reference table",
    }


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_gcd_suite_passes():
    report = run_suite("gcd")
    assert report.passed
    assert len(report.checks) == 3


def test_all_suite_runs_everything():
    report = run_suite("all")
    assert report.suite == "all"
    assert report.passed
    names = [c.name for c in report.checks]
    assert len(names) == len(set(names))  # no duplicated work
    assert len(names) >= 12
    assert "winding: winding index equals graph index" in names
    assert "gcd: two parts over two vs meander" in names


def test_failing_report_formatting():
    checks = (
        CheckResult("good", True, "ok", 0.0),
        CheckResult("bad", False, "broke", 0.01),
    )
    report = VerifySuiteReport("demo", checks)
    assert not report.passed
    text = report.format()
    assert "[FAIL] bad (0.01s): broke" in text
    assert text.splitlines()[-1] == "suite demo: FAILED (1/2)"


def test_run_captures_exceptions():
    checks: list[CheckResult] = []

    def boom():
        raise RuntimeError("nope")

    _run(checks, "boom", boom)
    _run(checks, "fine", lambda: (True, "all good"))
    assert not checks[0].passed
    assert "RuntimeError" in checks[0].detail
    assert checks[1].passed
    assert checks[1].detail == "all good"
