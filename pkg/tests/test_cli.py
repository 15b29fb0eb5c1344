import json
import subprocess
import sys

import pytest

PATH_CUT = json.dumps({"n": 3, "kind": "cut",
                       "payload": {"edges": [[0, 1, 1.0], [1, 2, 1.0]]}})


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "choqkit", *args],
                          capture_output=True, text=True)


class TestCheck:
    def test_path_cut_verdicts(self):
        result = run_cli("check", PATH_CUT)
        assert result.returncode == 0
        assert "submodular: yes" in result.stdout
        assert "increasing: no" in result.stdout
        assert "modular: no" in result.stdout

    def test_json_format(self):
        result = run_cli("--format", "json", "check", PATH_CUT)
        report = json.loads(result.stdout)
        assert report["submodular"]["holds"] is True
        assert report["increasing"]["holds"] is False


class TestChoquetEval:
    def test_value(self):
        result = run_cli("--format", "json", "choquet-eval", PATH_CUT,
                         "--function", "[0.5, 1, 0]")
        assert result.returncode == 0
        assert json.loads(result.stdout)["value"] == pytest.approx(1.5)

    def test_chain_csv(self):
        result = run_cli("choquet-eval", PATH_CUT,
                         "--function", "[0.5, 1, 0]", "--chain")
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "threshold,mask,phi,contribution"
        assert len(lines) == 5  # header + 3 levels + value line


class TestVariationAndDecompose:
    def test_variation(self):
        result = run_cli("--format", "json", "variation", PATH_CUT)
        report = json.loads(result.stdout)
        assert report["variation"] == pytest.approx(4.0)
        assert report["chain"][0] == 0 and report["chain"][-1] == 7

    def test_decompose(self):
        result = run_cli("decompose", PATH_CUT)
        report = json.loads(result.stdout)
        assert report["mu"][7] == pytest.approx(2.0)
        assert report["nu"][7] == pytest.approx(2.0)
        assert report["variation"] == pytest.approx(4.0)


class TestUncross:
    def test_trace_and_final_chain(self):
        family = json.dumps({"n": 3, "entries": [[3, 1], [6, 1]]})
        result = run_cli("uncross", family, "--phi", PATH_CUT)
        assert result.returncode == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0].startswith("step,mask_a,mask_b")
        assert "final chain: [[2, 1], [7, 1]]" in result.stdout

    def test_determinism(self):
        family = json.dumps({"n": 4, "entries": [[3, 2], [6, 1], [12, 1], [9, 1]]})
        first = run_cli("uncross", family, "--phi", PATH_CUT.replace('"n": 3', '"n": 4'))
        second = run_cli("uncross", family, "--phi", PATH_CUT.replace('"n": 3', '"n": 4'))
        assert first.stdout == second.stdout


class TestIntervalChoquet:
    def test_value(self):
        payload = json.dumps({
            "phi": {"kind": "concave-of-measure",
                    "breakpoints": [[0.0, 0.0], [0.25, 0.5], [1.0, 1.0]]},
            "f": {"breakpoints": [0.0, 0.25, 1.0], "values": [1.0, 0.0]},
        })
        result = run_cli("--format", "json", "interval-choquet", payload)
        assert json.loads(result.stdout)["value"] == pytest.approx(0.5)


class TestFubini:
    PAYLOAD = json.dumps({
        "lambda": [0.5, 0.5],
        "pi": [1 / 3, 1 / 3, 1 / 3],
        "F": [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0]],
        "phi": {"n": 3, "kind": "matroid-rank",
                "payload": {"matroid": "uniform", "rank": 2}},
    })

    def test_summary(self):
        result = run_cli("fubini", self.PAYLOAD)
        assert result.returncode == 0
        assert "lhs,rhs,slack,holds" in result.stdout

    def test_trace_determinism(self):
        first = run_cli("fubini", self.PAYLOAD, "--steps", "50", "--seed", "9")
        second = run_cli("fubini", self.PAYLOAD, "--steps", "50", "--seed", "9")
        assert first.stdout == second.stdout
        assert first.stdout.splitlines()[0] == "k,what_f_k,running_avg,what_h_k,norm_h_k"

    def test_force_flag_allows_bad_phi(self):
        payload = json.dumps({
            "lambda": [1.0], "pi": [0.5, 0.5], "F": [[0.0, 1.0]],
            "phi": {"n": 2, "kind": "table", "payload": {"values": [0, 0, 0, 1]}},
        })
        rejected = run_cli("fubini", payload)
        assert rejected.returncode == 3
        forced = run_cli("fubini", payload, "--force")
        assert forced.returncode == 0


class TestExitCodes:
    def test_malformed_json(self):
        assert run_cli("check", "{not json").returncode == 2

    def test_schema_error(self):
        assert run_cli("check", '{"n": 2, "kind": "bogus", "payload": {}}'
                       ).returncode == 2

    def test_precondition_violation(self):
        bad = json.dumps({"n": 2, "kind": "table",
                          "payload": {"values": [1, 0, 0, 0]}})
        assert run_cli("check", bad).returncode == 3
