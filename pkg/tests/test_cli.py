import json
import subprocess
import sys

import pytest

from parahopf.cli import main

PKG = [sys.executable, "-m", "parahopf"]


def run_cli(*args):
    return subprocess.run(PKG + list(args), capture_output=True, text=True)


class TestNormalFormCommand:
    @pytest.mark.parametrize("ctx,expr,expected", [
        ("boson", "B-1 B+1", "B+1 B-1 + I"),
        ("pb", "I", "I"),
        ("pbg", "g B+1 g", "-1 B+1"),
        ("pbk", "K+ K-", "I"),
        ("free", "B-1 B+1", "B-1 B+1"),
    ])
    def test_examples(self, ctx, expr, expected, capsys):
        assert main(["nf", "--ctx", ctx, expr]) == 0
        assert capsys.readouterr().out.strip() == expected

    def test_parse_error_exit_2(self):
        proc = run_cli("nf", "--ctx", "pb", "B+1 +")
        assert proc.returncode == 2

    def test_foreign_letter_exit_3(self):
        proc = run_cli("nf", "--ctx", "boson", "E(1+,1-)")
        assert proc.returncode == 3


class TestVerifyCommand:
    def test_pb_suite_passes(self, capsys):
        assert main(["verify", "--ctx", "pb", "--max-len", "2",
                     "--max-index", "1"]) == 0
        capsys.readouterr()

    def test_pbg_quasitriangular(self, capsys):
        assert main(["verify", "--ctx", "pbg", "--max-len", "2",
                     "--max-index", "1", "--quasitriangular"]) == 0
        capsys.readouterr()

    def test_pbk_suite(self, capsys):
        assert main(["verify", "--ctx", "pbk", "--max-len", "2",
                     "--max-index", "1"]) == 0
        capsys.readouterr()

    def test_quasitriangular_rejected_for_pbk(self, capsys):
        assert main(["verify", "--ctx", "pbk", "--quasitriangular",
                     "--max-len", "1"]) == 2
        capsys.readouterr()

    def test_json_report_shape(self, capsys):
        assert main(["verify", "--ctx", "pb", "--max-len", "1",
                     "--max-index", "1", "--output", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        header, entries = report[0], report[1:]
        assert header["tool"] == "parahopf"
        assert header["config"]["context"] == "pb"
        assert entries
        assert all({"axiom", "word", "status", "lhs", "rhs", "context"}
                   <= set(e) for e in entries)
        assert all(e["status"] == "pass" for e in entries)


class TestOracleCommand:
    def test_quick_run(self, capsys):
        assert main(["oracle", "--n", "1", "--p", "2", "--cutoff", "6",
                     "--seed", "7", "--words", "30"]) == 0
        capsys.readouterr()

    def test_boson_degeneration_flagged(self, capsys):
        assert main(["oracle", "--n", "1", "--p", "1", "--cutoff", "6",
                     "--words", "12", "--output", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        axioms = {e["axiom"] for e in report[1:]}
        assert "boson_degeneration" in axioms

    def test_dimension_overflow_exit_4(self, capsys):
        assert main(["oracle", "--n", "3", "--p", "4", "--cutoff", "8"]) == 4
        capsys.readouterr()

    def test_seed_determinism(self, tmp_path):
        out1, out2, out3 = (tmp_path / n for n in ("a.json", "b.json", "c.json"))
        for target in (out1, out2):
            assert main(["oracle", "--n", "1", "--p", "2", "--cutoff", "6",
                         "--seed", "11", "--words", "24", "--output", "json",
                         "--out", str(target)]) == 0
        assert main(["oracle", "--n", "1", "--p", "2", "--cutoff", "6",
                     "--seed", "12", "--words", "24", "--output", "json",
                     "--out", str(out3)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        assert out1.read_bytes() != out3.read_bytes()

    def test_out_file_written(self, tmp_path):
        target = tmp_path / "report.json"
        assert main(["verify", "--ctx", "pb", "--max-len", "1",
                     "--max-index", "1", "--output", "json",
                     "--out", str(target)]) == 0
        report = json.loads(target.read_text())
        assert report[0]["tool"] == "parahopf"
