from triacontagonal.claims import amplitude_report, projection_report
from triacontagonal.cli import main


def test_amplitude_report():
    rep = amplitude_report()
    assert rep.passed
    names = [c.name for c in rep.checks]
    assert "octic_roots" in names and "cyclotomic_row_norms_equal" in names


def test_amplitude_report_flags_tight_tolerance():
    from triacontagonal.tolerances import Tolerances

    rep = amplitude_report(Tolerances(residual=0.0))
    assert not rep.passed and rep["octic_roots"].counterexample


def test_projection_report():
    rep = projection_report()
    assert rep.passed
    assert "240 points matched" in rep["golden_ratio_scaling"].detail


def test_report_command(tmp_path):
    out = tmp_path / "report.txt"
    assert main(["report", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.count("status: PASS") == 5
    assert "tolerances: residual=1e-10" in text
    assert text.rstrip().endswith("ALL CLAIMS: PASS")
