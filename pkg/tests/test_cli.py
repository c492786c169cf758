"""Command line behavior: output formats, exit codes, environment knobs."""
import json
import subprocess
import sys

import pytest

from folbend import cli
from folbend.quadrature import UndecidedError


def run_main(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def run_subprocess(argv, env=None):
    import os
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "folbend", *argv],
        capture_output=True, text=True, env=full_env,
    )


def assert_json_round_trips(text):
    payload = json.loads(text)
    assert payload["schema_version"] == 1
    assert json.dumps(payload, sort_keys=True, indent=2) == text.strip()
    return payload


class TestBendingCommand:
    def test_human_output(self, capsys):
        code, out, _ = run_main(["bending", "--space", "S:5", "--focal", "sub:S:2"], capsys)
        assert code == 0
        assert "B/Vol = 6.000000" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run_main(["bending", "--space", "S:3", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        assert payload["status"] == "finite"
        assert payload["value_per_volume"] == pytest.approx(1.0, rel=1e-7)
        assert payload["space"] == "S:3"

    def test_divergent_verdict_exits_zero(self, capsys):
        code, out, _ = run_main(["bending", "--space", "CP:2", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        assert payload["status"] == "divergent"
        assert payload["divergent_endpoint"] == "mu"
        assert 0.9 <= payload["exponent_estimate"] <= 1.1

    def test_divergent_human_wording(self, capsys):
        code, out, _ = run_main(["bending", "--space", "S:2"], capsys)
        assert code == 0
        assert "Divergent (log) at r=both" in out

    def test_epsilon_window(self, capsys):
        code, out, _ = run_main(
            ["bending", "--space", "S:2", "--epsilon", "0.5", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        assert payload["epsilon"] == 0.5
        assert payload["status"] == "finite"
        assert payload["value"] > 0

    def test_csv_output(self, capsys):
        code, out, _ = run_main(["bending", "--space", "S:4", "--csv"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("space,focal,lambda,status,value_per_volume")
        fields = lines[1].split(",")
        assert fields[0] == "S:4" and fields[3] == "finite"
        assert float(fields[4]) == pytest.approx(0.75, rel=1e-7)

    def test_emit_profile(self, tmp_path, capsys):
        target = tmp_path / "profile.csv"
        code, _, _ = run_main(
            ["bending", "--space", "S:5", "--focal", "sub:S:2",
             "--emit-profile", str(target)], capsys)
        assert code == 0
        lines = target.read_text().strip().splitlines()
        assert lines[0] == "r,alpha_1,alpha_2,theta"
        assert len(lines) == 201

    def test_not_computable_pair(self, capsys):
        code, out, _ = run_main(
            ["bending", "--space", "CP:2", "--focal", "sub:RP:2", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        assert payload["status"] == "not-computable"

    def test_bad_space_is_usage_error(self, capsys):
        code, _, err = run_main(["bending", "--space", "K:4"], capsys)
        assert code == 2
        assert "folbend" in err

    def test_undecided_maps_to_exit_three(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise UndecidedError("cannot reach the requested tolerance")
        monkeypatch.setattr(cli, "total_bending", boom)
        code, _, err = run_main(["bending", "--space", "S:3"], capsys)
        assert code == 3
        assert "undecided" in err


class TestTableCommand:
    def test_reproduces_and_exits_zero(self, capsys):
        code, out, _ = run_main(["table1"], capsys)
        assert code == 0
        assert "table reproduced" in out
        assert "closed form:" in out
        assert "paper" not in out.lower()

    def test_json_payload(self, capsys):
        code, out, _ = run_main(["table1", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        assert payload["all_ok"] is True
        assert len(payload["rows"]) == 19
        by_key = {(r["space"], r["focal"]): r for r in payload["rows"]}
        assert by_key[("CaP2", "point")]["closed_form"] == "139/21"
        assert by_key[("S:2", "point")]["status"] == "DivergenceConfirmed"

    def test_unreachable_tolerance_exits_one(self, capsys):
        code, out, _ = run_main(["table1", "--rtol", "1e-18"], capsys)
        assert code == 1
        assert "FAILED" in out

    def test_lambda_flag(self, capsys):
        code, out, _ = run_main(["table1", "--lambda", "2", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        row = [r for r in payload["rows"]
               if (r["space"], r["focal"]) == ("S:5", "sub:S:2")][0]
        assert row["expected"] == pytest.approx(12.0)
        assert row["status"] == "Reproduced"


class TestOtherCommands:
    def test_torus_json(self, capsys):
        code, out, _ = run_main(["torus", "--R", "2", "--r", "1", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        assert payload["value"] < payload["upper_bound"]

    def test_torus_rejects_bad_radii(self, capsys):
        code, _, err = run_main(["torus", "--R", "1", "--r", "2"], capsys)
        assert code == 2

    def test_complex_radial(self, capsys):
        code, out, _ = run_main(["complex-radial", "--m", "3", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        assert payload["value_per_volume"] == pytest.approx(2.0, rel=1e-7)

    def test_check_integral_all_rows(self, capsys):
        code, out, _ = run_main(["check-integral"], capsys)
        assert code == 0
        assert out.count("[ok]") >= 8

    def test_check_integral_single_divergent_pair(self, capsys):
        code, out, _ = run_main(
            ["check-integral", "--space", "CP:2", "--focal", "point"], capsys)
        assert code == 0
        assert "not applicable" in out

    def test_bounds_output(self, capsys):
        code, out, _ = run_main(["bounds", "--space", "CP:2", "--q", "2",
                                 "--case", "II", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        assert payload["value"] == pytest.approx(2.0)
        assert payload["coefficient"] == "1/2"

    def test_bounds_case_mismatch_is_usage_error(self, capsys):
        code, _, err = run_main(["bounds", "--space", "S:5", "--q", "2",
                                 "--case", "II"], capsys)
        assert code == 2

    def test_minimizer(self, capsys):
        code, out, _ = run_main(["minimizer", "--space", "S:3", "--json"], capsys)
        assert code == 0
        payload = assert_json_round_trips(out)
        assert payload["attains_bound"] is True
        assert payload["slack"] == pytest.approx(0.0, abs=1e-8)

    def test_selfcheck(self, capsys):
        code, out, _ = run_main(["selfcheck"], capsys)
        assert code == 0
        assert "all internal checks passed" in out


class TestProcessLevel:
    def test_module_entry_point(self):
        proc = run_subprocess(["table1", "--rtol", "1e-4"])
        assert proc.returncode == 0
        assert "table reproduced" in proc.stdout

    def test_missing_subcommand_is_usage_error(self):
        proc = run_subprocess([])
        assert proc.returncode == 2

    def test_unknown_flag_is_usage_error(self):
        proc = run_subprocess(["torus", "--R", "2", "--r", "1", "--bogus"])
        assert proc.returncode == 2

    def test_environment_curvature_scale(self):
        proc = run_subprocess(["bending", "--space", "S:3", "--json"],
                              env={"FOLBEND_LAMBDA": "2.0"})
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["value_per_volume"] == pytest.approx(2.0, rel=1e-7)
        assert payload["lambda"] == 2.0

    def test_environment_tolerances_accepted(self):
        proc = run_subprocess(["bending", "--space", "S:3", "--json"],
                              env={"FOLBEND_REL_TOL": "1e-10",
                                   "FOLBEND_ABS_TOL": "1e-13"})
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["error_estimate"] < 1e-9

    def test_flag_overrides_environment(self):
        proc = run_subprocess(["bending", "--space", "S:3", "--lambda", "1.0",
                               "--json"], env={"FOLBEND_LAMBDA": "3.0"})
        payload = json.loads(proc.stdout)
        assert payload["lambda"] == 1.0

    def test_invalid_environment_value(self):
        proc = run_subprocess(["bending", "--space", "S:3"],
                              env={"FOLBEND_LAMBDA": "banana"})
        assert proc.returncode != 0
