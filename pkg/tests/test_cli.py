import io
import json
import subprocess
import sys

import pytest

from ncfkit.cli import build_report, main
from ncfkit.verify import SuiteResult


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_and_table(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "0001")
        assert code == 0
        assert "nested canalyzing: yes" in out
        assert "[x1:0 x2:0] b=0" in out
        assert "profile: [2]" in out
        assert "sensitivity: 2" in out
        assert "agrees" in out

    def test_parity_table(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "0110")
        assert code == 0
        assert "no_canalyzing_variable" in out
        assert "sensitivity: 2" in out
        assert "block sensitivity: 2" in out

    def test_json_report_fields(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--json", "0001")
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 2
        assert report["ncf"]["is_ncf"] is True
        assert report["profile"] == [2]
        assert report["layer_number"] == 1
        assert report["sensitivity"] == {
            "formula": 2,
            "oracle": 2,
            "agree": True,
            "witness": [1, 1],
        }
        assert report["block_sensitivity"]["value"] == 2
        assert report["l_block_sensitivity"] == {"1": 2, "2": 2}

    def test_json_byte_identical(self, capsys):
        _, first, _ = run_cli(capsys, "analyze", "--json", "01010100")
        _, second, _ = run_cli(capsys, "analyze", "--json", "01010100")
        assert first == second

    def test_layers_vs_table_reports_match(self, capsys):
        _, by_layers, _ = run_cli(
            capsys,
            "analyze",
            "--json",
            "--format",
            "layers",
            "[x1:0 | x2:0 x3:0] b=0",
        )
        _, by_table, _ = run_cli(capsys, "analyze", "--json", "01010100")
        a, b = json.loads(by_layers), json.loads(by_table)
        a.pop("input")
        b.pop("input")
        assert a == b

    def test_anf_and_hex_formats(self, capsys):
        _, by_anf, _ = run_cli(
            capsys, "analyze", "--json", "--format", "anf", "x1*x2"
        )
        _, by_hex, _ = run_cli(
            capsys, "analyze", "--json", "--format", "hex", "0x1"
        )
        assert json.loads(by_anf)["table"] == "0001"
        assert json.loads(by_hex)["table"] == "0001"

    def test_parse_error_position(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "01x1")
        assert code == 1
        assert "position 2" in err

    def test_skip_marks_above_cap(self, capsys):
        # 13 variables exceeds the block cap but not the sensitivity cap
        text = "0" * (1 << 13)
        code, out, _ = run_cli(capsys, "analyze", "--json", text)
        assert code == 0
        report = json.loads(out)
        assert report["block_sensitivity"] == {"skipped": "cap"}
        assert report["sensitivity"]["oracle"] == 0

    def test_n1_reported_out_of_scope(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--json", "01")
        assert code == 0
        report = json.loads(out)
        assert report["ncf"]["stage"] == "out_of_scope"
        assert "canalyzing" in report["ncf"]["detail"]

    def test_stdin_batch(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("0001\n0110\n"))
        code, out, _ = run_cli(capsys, "analyze", "--json")
        assert code == 0
        lines = [json.loads(chunk) for chunk in _split_json_stream(out)]
        assert len(lines) == 2
        assert lines[0]["ncf"]["is_ncf"] is True
        assert lines[1]["ncf"]["is_ncf"] is False

    def test_l_flag_restricts_section(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "--json", "--l", "2", "01010100"
        )
        assert code == 0
        assert json.loads(out)["l_block_sensitivity"] == {"2": 2}

    def test_l_flag_out_of_range(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--l", "9", "0001")
        assert code == 1
        assert "--l" in err

    def test_json_identical_across_processes(self):
        # different hash seeds must not perturb the serialized report
        outputs = []
        for hash_seed in ("1", "2"):
            proc = subprocess.run(
                [sys.executable, "-m", "ncfkit.cli",
                 "analyze", "--json", "01101001"],
                capture_output=True,
                env={"PYTHONHASHSEED": hash_seed, "PATH": "/usr/bin:/bin"},
            )
            assert proc.returncode == 0, proc.stderr
            outputs.append(proc.stdout)
        assert outputs[0] == outputs[1]


def _split_json_stream(text):
    """Split concatenated pretty-printed JSON objects."""
    chunks, depth, start = [], 0, None
    for i, ch in enumerate(text):
        if ch == "{":
            if depth == 0:
                start = i
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth == 0:
                chunks.append(text[start : i + 1])
    return chunks


class TestRecognize:
    def test_accepts(self, capsys):
        code, out, _ = run_cli(capsys, "recognize", "0001")
        assert code == 0
        assert out.strip() == "[x1:0 x2:0] b=0"

    def test_rejects_with_stage(self, capsys):
        code, out, _ = run_cli(capsys, "recognize", "0110")
        assert code == 0
        assert "no_canalyzing_variable" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "recognize", "--json", "0110")
        info = json.loads(out)
        assert info["is_ncf"] is False
        assert info["stage"] == "no_canalyzing_variable"


class TestEnumerate:
    def test_ncf_stream_n2(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "ncf", "-n", "2")
        lines = out.strip().splitlines()
        assert code == 0
        assert len(lines) == 8
        assert lines[0] == "[x1:0 x2:0] b=0"

    def test_count_only(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "ncf", "-n", "2", "--count-only"
        )
        assert (code, out.strip()) == (0, "8")

    def test_profile_filter(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "enumerate", "ncf", "-n", "3", "--profile", "1,2", "--count-only",
        )
        assert (code, out.strip()) == (0, "48")

    def test_mncf_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "mncf", "-n", "2", "--count-only"
        )
        assert (code, out.strip()) == (0, "4")

    def test_mncf_stream_is_layer_specs(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "mncf", "-n", "2")
        assert out.strip().splitlines() == [
            "[x1:0 x2:0] b=0",
            "[x1:0 x2:0] b=1",
            "[x1:1 x2:1] b=0",
            "[x1:1 x2:1] b=1",
        ]

    def test_cap_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "ncf", "-n", "9")
        assert code == 3
        assert "exceeds cap" in err

    def test_stream_order_is_stable(self, capsys):
        _, first, _ = run_cli(
            capsys, "enumerate", "ncf", "-n", "3", "--profile", "1,2"
        )
        _, second, _ = run_cli(
            capsys, "enumerate", "ncf", "-n", "3", "--profile", "1,2"
        )
        assert first == second
        head = first.splitlines()[:4]
        assert head == [
            "[x1:0 | x2:0 x3:0] b=0",
            "[x1:0 | x2:0 x3:0] b=1",
            "[x1:1 | x2:0 x3:0] b=0",
            "[x1:1 | x2:0 x3:0] b=1",
        ]

    def test_bad_profile(self, capsys):
        code, _, err = run_cli(
            capsys, "enumerate", "ncf", "-n", "3", "--profile", "0,3"
        )
        assert code == 1


class TestCount:
    def test_mncf_json(self, capsys):
        code, out, _ = run_cli(capsys, "count", "mncf", "-n", "4")
        payload = json.loads(out)
        assert code == 0
        assert payload["total"] == 92
        assert payload["per_profile"]["1,1,2"] == 12

    def test_ncf_json(self, capsys):
        code, out, _ = run_cli(capsys, "count", "ncf", "-n", "3")
        payload = json.loads(out)
        assert payload["total"] == 64
        assert payload["per_profile"]["1,2"] == 48

    def test_ncf_profile(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "ncf", "-n", "3", "--profile", "1,2"
        )
        assert json.loads(out)["total"] == 48


class TestVerify:
    def test_single_suite_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "bounds", "--max-n", "8"
        )
        assert code == 0
        assert out.startswith("PASS bounds")

    def test_json_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "mncf", "--max-n", "3", "--json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload[0]["suite"] == "mncf"
        assert payload[0]["passed"] is True

    def test_failure_exit_code(self, capsys, monkeypatch):
        broken = SuiteResult("bounds", checks=1, failures=["synthetic"])
        monkeypatch.setattr(
            "ncfkit.cli.run_suite", lambda *a, **k: broken
        )
        code, out, _ = run_cli(capsys, "verify", "--suite", "bounds")
        assert code == 2
        assert "FAIL bounds" in out
        assert "counterexample: synthetic" in out

    def test_seeded_runs_reproduce(self, capsys):
        args = (
            "verify", "--suite", "invariance",
            "--sample", "25", "--seed", "99", "--json",
        )
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second


class TestUsage:
    def test_unknown_flag_exits_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "--bogus"])
        assert exc.value.code == 1

    def test_missing_command_exits_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 1

    def test_build_report_helper(self):
        report = build_report("0001", "table")
        assert report["monotone"] == "increasing"
        assert report["essential_variables"] == [1, 2]
