from conflab.core.functions import timed
from conflab.core.polyring import D, L
from conflab.core.structures import Report, Residual, Status


def test_residuals_are_ordered():
    report = Report.from_residuals(
        "jacobi",
        "B2",
        [Residual(("X", "X", "B"), L), Residual(("A", "X", "X"), D + 1)],
        cap=2,
    )
    assert report.status is Status.FAIL
    assert not report.passed
    assert report.witness == "(A,X,X): d + 1"
    assert report.to_record() == {
        "check": "jacobi",
        "target": "B2",
        "status": "fail",
        "witness": "(A,X,X): d + 1",
        "detail": {"cap": 2},
    }


def test_verdicts():
    ok = Report.verdict("series", "B2", True, perfect=True)
    assert ok.passed
    assert ok.witness is None
    broken = Report.verdict("family_membership", "B2", False, witness="k3^2 = 1")
    assert broken.witness == "k3^2 = 1"
    assert broken.to_record()["detail"] is None
    assert Report("closed_form", "Lie(B2)", Status.SKIPPED).passed


def test_timed_sets_elapsed():
    @timed
    def check():
        return [Report.verdict("a", "t", True), Report.verdict("b", "t", True)]

    reports = check()
    assert all(r.elapsed is not None and r.elapsed >= 0 for r in reports)
    assert "elapsed" in reports[0].to_record(timings=True)
    assert "elapsed" not in reports[0].to_record()
