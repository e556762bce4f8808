import json

import pytest

from invseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out.strip().splitlines()


class TestCount:
    def test_class_gentree(self, capsys):
        code, lines = run(capsys, "count", "--class", "1176", "--n", "7")
        assert code == 0
        assert lines[0] == "0 1"
        assert lines[-1] == "7 1176"

    def test_patterns_oracle(self, capsys):
        code, lines = run(
            capsys, "count", "--patterns", "001", "--n", "5", "--engine", "oracle"
        )
        assert code == 0
        assert lines[-1] == "5 16"

    def test_triple_selector(self, capsys):
        code, lines = run(capsys, "count", "--triple", ">,<=,!=", "--n", "6")
        assert code == 0
        assert lines[-1] == "6 299"

    def test_n_zero(self, capsys):
        code, lines = run(capsys, "count", "--class", "1016", "--n", "0")
        assert code == 0
        assert lines == ["0 1"]

    def test_json_lines_round_trip(self, capsys):
        code, lines = run(
            capsys, "count", "--class", "733", "--n", "6", "--format", "json-lines"
        )
        rows = [json.loads(l) for l in lines]
        assert [r["count"] for r in rows] == [1, 1, 2, 5, 15, 51, 188]

    def test_unknown_class(self, capsys):
        with pytest.raises(SystemExit):
            main(["count", "--class", "999", "--n", "3"])

    def test_gentree_needs_class(self, capsys):
        with pytest.raises(SystemExit):
            main(["count", "--patterns", "001", "--n", "3", "--engine", "gentree"])

    def test_b_file_regeneration_is_byte_identical(self, capsys):
        _, first = run(capsys, "count", "--class", "214", "--n", "10")
        _, second = run(capsys, "count", "--class", "214", "--n", "10")
        assert first == second


class TestSeries:
    def test_verdict_ok(self, capsys):
        code, lines = run(capsys, "series", "--class", "663A", "--order", "8")
        assert code == 0
        assert lines[-1] == "verdict OK: series matches counts"
        assert lines[-2] == "8 2552"

    def test_verify_minpoly(self, capsys):
        code, lines = run(
            capsys,
            "series", "--class", "1833A", "--order", "10", "--verify-minpoly",
            "--format", "json-lines",
        )
        assert code == 0
        checks = [json.loads(l) for l in lines if '"check"' in l]
        assert all(c["ok"] for c in checks)
        assert any("degree 6" in c["check"] for c in checks)

    def test_catalytic_source(self, capsys):
        code, lines = run(
            capsys, "series", "--class", "1420", "--order", "8", "--source", "catalytic"
        )
        assert code == 0
        assert lines[-1].startswith("verdict OK")

    def test_no_closed_form(self, capsys):
        with pytest.raises(SystemExit):
            main(["series", "--class", "830", "--order", "10"])


class TestClassify:
    def test_summary_lines(self, capsys):
        code, lines = run(capsys, "classify")
        assert code == 0
        assert lines[-3] == "total triples 343"
        assert lines[-2] == "equivalence classes 98"
        assert lines[-1] == "wilf classes 63"

    def test_json_lines(self, capsys):
        code, lines = run(capsys, "classify", "--format", "json-lines")
        rows = [json.loads(l) for l in lines]
        summary = rows[-1]
        assert summary["equivalence_classes"] == 98
        assert summary["wilf_classes"] == 63
        assert sum(r["n_triples"] for r in rows[:-1]) == 343


class TestAsymptotics:
    def test_algebraic(self, capsys):
        code, lines = run(
            capsys,
            "asymptotics", "--class", "1420", "--terms", "120",
            "--format", "json-lines",
        )
        assert code == 0
        row = json.loads(lines[0])
        assert abs(row["mu"] - 5.4) < 1e-6
        assert row["relative_error"] < 1e-6

    def test_stretched(self, capsys):
        code, lines = run(
            capsys,
            "asymptotics", "--class", "759", "--terms", "150",
            "--model", "stretched", "--format", "json-lines",
        )
        assert code == 0
        row = json.loads(lines[0])
        assert row["sigma"] == 0.375
        assert row["base"] == 9.0


class TestWords:
    def test_r1r2(self, capsys):
        code, lines = run(capsys, "words", "--k", "6", "--b", "4", "--rules", "R1R2")
        assert code == 0
        assert "formula 140" in lines
        assert "enumerated 140" in lines

    def test_r1r3_catalan(self, capsys):
        code, lines = run(capsys, "words", "--k", "3", "--b", "3", "--rules", "R1R3")
        assert code == 0
        assert "formula 5" in lines

    def test_r1r3_out_of_support(self, capsys):
        code, lines = run(capsys, "words", "--k", "5", "--b", "2", "--rules", "R1R3")
        assert code == 0
        assert "formula 0" in lines


class TestVerifyAll:
    def test_quick_battery_passes(self, capsys):
        code, lines = run(
            capsys, "verify-all", "--n", "5", "--order", "15", "--max-k", "5"
        )
        assert code == 0
        assert len(lines) == 6
        assert all(l.startswith("PASS") for l in lines)
