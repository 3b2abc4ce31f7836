import json
import subprocess
import sys

import pytest

from detscheme.cli import main
from detscheme.dimension import DimensionReport
from detscheme.oracle import VerificationRecord


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDim:
    def test_scroll(self, capsys):
        code, out, _ = run(capsys, "dim", "n=4 a=1,1,1 b=0,0")
        assert code == 0
        assert "dim_y: 18" in out
        assert "satisfied" in out

    def test_homogeneous_corollary_shown(self, capsys):
        code, out, _ = run(capsys, "dim", "n=4 a=1,1,1,1 b=0,0,0")
        assert code == 0
        assert "dim_y: 36" in out and "corollary_value: 36" in out

    def test_json_round_trips(self, capsys):
        code, out, _ = run(capsys, "dim", "n=5 a=1,1,1,1 b=0,0", "--format", "json")
        assert code == 0
        report = DimensionReport.from_json(out)
        assert report.dim_y == 29
        assert json.loads(report.to_json()) == json.loads(out)

    def test_condition_failure_names_clause(self, capsys):
        code, out, _ = run(capsys, "dim", "n=3 a=0,0 b=0,0")
        assert code == 3
        assert "alpha_i > beta_i for some i" in out

    def test_structural_error(self, capsys):
        code, _, err = run(capsys, "dim", "n=4 a=1 b=0,0")
        assert code == 2
        assert "error" in err

    def test_hypersurface_note(self, capsys):
        code, out, _ = run(capsys, "dim", "n=3 a=1,2 b=0,0")
        assert code == 0
        assert "codimension 1" in out


class TestFt:
    def test_table_and_identity_line(self, capsys):
        code, out, _ = run(capsys, "ft", "n=4 a=1,1,1 b=0,0", "-1", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[:4] == ["-1\t0", "0\t2", "1\t7", "2\t15"]
        assert lines[4] == "h0_F = 18 == dim_y 18"

    def test_hypersurface_exit_code(self, capsys):
        code, _, err = run(capsys, "ft", "n=3 a=1,2 b=0,0", "0", "2")
        assert code == 4
        assert "codimension 1" in err


class TestVerify:
    def test_scroll_pass(self, capsys, tmp_path):
        out_path = tmp_path / "record.json"
        code, out, _ = run(
            capsys, "verify", "n=4 a=1,1,1 b=0,0", "--out", str(out_path)
        )
        assert code == 0
        assert "RESULT: PASS" in out
        record = VerificationRecord.from_json(out_path.read_text())
        assert record.all_pass and record.formula_dim == 18

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "n=4 a=1,1,1 b=0,0", "--format", "json")
        assert code == 0
        record = VerificationRecord.from_json(out)
        assert record.tangent_dim == 18

    def test_tiny_prime_rejected(self, capsys):
        code, _, err = run(capsys, "verify", "n=4 a=1,1,1 b=0,0", "--prime", "2")
        assert code == 2
        assert "guard" in err

    def test_unstable_bound_exit_code(self, capsys):
        code, _, err = run(capsys, "verify", "n=4 a=1,1,1 b=0,0", "--bound", "2")
        assert code == 6
        assert "bound" in err

    def test_resample_exhaustion_exit_code(self, capsys, monkeypatch):
        import detscheme.oracle as oracle_mod
        from detscheme.oracle import WindowError as WE

        def always_bad(ideal, expected_dim, window_start=None):
            raise WE("forced")

        monkeypatch.setattr(oracle_mod, "fit_hilbert_polynomial", always_bad)
        code, _, err = run(capsys, "verify", "n=4 a=1,1,1 b=0,0")
        assert code == 5
        assert "attempts" in err


class TestCorpus:
    def test_formula_suite(self, capsys, tmp_path):
        out_path = tmp_path / "suite.jsonl"
        code, out, _ = run(
            capsys,
            "corpus", "--kind", "formulas", "--suite-size", "25",
            "--seed", "7", "--out", str(out_path),
        )
        assert code == 0
        assert "25/25 identity passes" in out
        lines = out_path.read_text().strip().splitlines()
        assert len(lines) == 25
        first = json.loads(lines[0])
        assert first["identity"] is True
        assert first["report"]["dim_y"] == first["h0_F"]

    def test_empty_suite(self, capsys, tmp_path):
        out_path = tmp_path / "empty.jsonl"
        code, out, _ = run(
            capsys,
            "corpus", "--kind", "oracle", "--suite-size", "0", "--out", str(out_path),
        )
        assert code == 0
        assert out_path.read_text() == ""

    def test_oracle_single_instance(self, capsys, tmp_path):
        out_path = tmp_path / "one.jsonl"
        code, out, _ = run(
            capsys,
            "corpus", "--kind", "oracle", "--instance", "n=4 a=1,1,1 b=0,0",
            "--out", str(out_path),
        )
        assert code == 0
        assert "1/1 oracle passes" in out
        record = VerificationRecord.from_json(out_path.read_text().strip())
        assert record.all_pass

    def test_worker_pool_preserves_order(self, capsys, tmp_path, monkeypatch):
        # the second instance finishes first; output must stay index-ordered
        monkeypatch.setenv("DETSCHEME_THREADS", "2")
        path = tmp_path / "pool.jsonl"
        code, _, _ = run(
            capsys,
            "corpus", "--kind", "oracle",
            "--instance", "n=4 a=1,1,1 b=0,0",
            "--instance", "n=3 a=1,1 b=0",
            "--out", str(path),
        )
        assert code == 0
        records = [
            VerificationRecord.from_json(line)
            for line in path.read_text().strip().splitlines()
        ]
        assert [r.data.compact() for r in records] == [
            "n=4 a=1,1,1 b=0,0",
            "n=3 a=1,1 b=0",
        ]
        assert all(r.all_pass for r in records)

    def test_deterministic_given_flags(self, capsys, tmp_path):
        paths = [tmp_path / "a.jsonl", tmp_path / "b.jsonl"]
        for path in paths:
            code, _, _ = run(
                capsys,
                "corpus", "--kind", "formulas", "--suite-size", "10",
                "--seed", "3", "--out", str(path),
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestExport:
    def test_files_and_determinism(self, capsys, tmp_path):
        first = tmp_path / "ideal1.txt"
        second = tmp_path / "ideal2.txt"
        for path in (first, second):
            code, _, _ = run(
                capsys, "export", "n=4 a=1,1,1 b=0,0", "--seed", "1", "--out", str(path)
            )
            assert code == 0
        assert first.read_bytes() == second.read_bytes()
        sidecar = json.loads((tmp_path / "ideal1.txt.json").read_text())
        assert sidecar["expected_dim_y"] == 18
        body = [l for l in first.read_text().splitlines() if not l.startswith("#")]
        assert len(body) == 3

    def test_b_one_exports_entries(self, capsys, tmp_path):
        path = tmp_path / "line.txt"
        code, _, _ = run(capsys, "export", "n=3 a=1,1 b=0", "--out", str(path))
        assert code == 0
        body = [l for l in path.read_text().splitlines() if not l.startswith("#")]
        assert len(body) == 2


def test_console_script_installed():
    result = subprocess.run(
        [sys.executable, "-m", "detscheme.cli", "dim", "n=4 a=1,1,1 b=0,0"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "dim_y: 18" in result.stdout
