import json
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from vortexbell.cli import main


def run_json(capsys, argv):
    code = main(argv)
    payload = json.loads(capsys.readouterr().out)
    return code, payload


def strip_timestamps(obj):
    if isinstance(obj, dict):
        return {
            k: strip_timestamps(v) for k, v in obj.items() if k != "timestamp"
        }
    if isinstance(obj, list):
        return [strip_timestamps(v) for v in obj]
    return obj


class TestBellMax:
    def test_restricted_lowest_vortex(self, capsys):
        code, payload = run_json(
            capsys, ["bell-max", "--n", "1", "--m", "0", "--settings", "restricted"]
        )
        assert code == 0
        assert payload["converged"] is True
        assert payload["best_value"] == pytest.approx(2.17, abs=0.01)
        assert len(payload["argmax"]) == 2
        assert payload["manifest"]["command"] == "bell-max"

    def test_general_lowest_vortex(self, capsys):
        code, payload = run_json(
            capsys, ["bell-max", "--n", "1", "--m", "0", "--settings", "general"]
        )
        assert code == 0
        assert payload["best_value"] == pytest.approx(2.24, abs=0.01)
        assert len(payload["argmax"]) == 8

    def test_ground_mode_bounded(self, capsys):
        code, payload = run_json(
            capsys, ["bell-max", "--n", "0", "--m", "0", "--settings", "restricted"]
        )
        assert code == 0
        assert payload["best_value"] <= 2.0 + 1e-9

    def test_nonconvergence_exit_code(self, capsys):
        code, payload = run_json(
            capsys,
            ["bell-max", "--n", "1", "--m", "0", "--max-iters", "1", "--restarts", "1"],
        )
        assert code == 3
        assert payload["converged"] is False

    def test_json_reproducible_modulo_timestamp(self, capsys):
        argv = ["bell-max", "--n", "1", "--m", "0", "--seed", "777"]
        _, first = run_json(capsys, argv)
        _, second = run_json(capsys, argv)
        assert strip_timestamps(first) == strip_timestamps(second)


class TestBellScan:
    def test_csv_shape_and_header(self, capsys):
        code = main(
            ["bell-scan", "--n", "1", "--m", "0", "--x-min", "0", "--x-max", "2",
             "--samples", "41"]
        )
        out = capsys.readouterr().out
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "x,py,abs_B"
        assert len(lines) == 42
        peak = max(float(line.split(",")[2]) for line in lines[1:])
        assert peak == pytest.approx(2.17, abs=0.02)

    def test_ground_mode_flat_curve(self, capsys):
        main(["bell-scan", "--n", "0", "--m", "0", "--samples", "21"])
        lines = capsys.readouterr().out.strip().split("\n")[1:]
        assert all(float(line.split(",")[2]) <= 2.0 + 1e-12 for line in lines)

    def test_two_sample_scan(self, capsys):
        code = main(["bell-scan", "--n", "1", "--m", "0", "--samples", "2"])
        lines = capsys.readouterr().out.strip().split("\n")
        assert code == 0
        assert len(lines) == 3

    def test_file_output_with_sidecar_manifest(self, tmp_path, capsys):
        out = tmp_path / "scan.csv"
        code = main(
            ["bell-scan", "--n", "1", "--m", "0", "--samples", "11",
             "--out", str(out)]
        )
        assert code == 0
        assert out.read_text().startswith("x,py,abs_B\n")
        manifest = json.loads((tmp_path / "scan.csv.manifest.json").read_text())
        assert manifest["command"] == "bell-scan"
        assert manifest["seed"] == 12345

    def test_byte_identical_reruns(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            main(["bell-scan", "--n", "5", "--m", "0", "--samples", "33",
                  "--out", str(path)])
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_bad_range_is_usage_error(self, capsys):
        code = main(["bell-scan", "--n", "1", "--m", "0", "--x-min", "5", "--x-max", "1"])
        assert code == 2
        assert "usage" in capsys.readouterr().err

    def test_unwritable_path_is_io_error(self, capsys):
        code = main(
            ["bell-scan", "--n", "1", "--m", "0", "--out", "/nonexistent/dir/out.csv"]
        )
        assert code == 4


class TestCorr:
    def test_max_lowest_vortex(self, capsys):
        code, payload = run_json(capsys, ["corr", "--n", "1", "--m", "0", "--max"])
        assert code == 0
        assert payload["c_max"] == pytest.approx(0.5, abs=1e-9)

    def test_max_ground(self, capsys):
        _, payload = run_json(capsys, ["corr", "--n", "0", "--m", "0", "--max"])
        assert payload["c_max"] == pytest.approx(0.0, abs=1e-10)

    def test_max_fourth_vortex(self, capsys):
        _, payload = run_json(capsys, ["corr", "--n", "4", "--m", "0", "--max"])
        assert payload["c_max"] == pytest.approx(0.8, abs=1e-6)

    def test_grid_csv(self, capsys):
        code = main(
            ["corr", "--n", "1", "--m", "0", "--theta-samples", "1",
             "--theta-max", "0", "--phi-samples", "24"]
        )
        out = capsys.readouterr().out
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "theta,phi,c"
        assert len(lines) == 25
        values = [float(line.split(",")[2]) for line in lines[1:]]
        assert max(values) == pytest.approx(0.5, abs=1e-9)

    def test_insufficient_order_is_usage_error(self, capsys):
        code = main(["corr", "--n", "8", "--m", "0", "--max", "--order", "16"])
        assert code == 2


class TestSchmidt:
    def test_lowest_vortex(self, capsys):
        code, payload = run_json(capsys, ["schmidt", "--n", "1", "--m", "0"])
        assert code == 0
        assert len(payload["terms"]) == 2
        for term in payload["terms"]:
            assert term["abs2"] == pytest.approx(0.5, abs=1e-12)
        assert payload["sum_abs2"] == pytest.approx(1.0, abs=1e-10)

    def test_ground(self, capsys):
        _, payload = run_json(capsys, ["schmidt", "--n", "0", "--m", "0"])
        assert len(payload["terms"]) == 1
        assert payload["terms"][0]["abs2"] == pytest.approx(1.0, abs=1e-12)

    def test_balanced_mode_parity(self, capsys):
        _, payload = run_json(capsys, ["schmidt", "--n", "2", "--m", "2"])
        assert len(payload["terms"]) == 5
        for term in payload["terms"]:
            if term["k"] % 2:
                assert term["abs2"] <= 1e-20

    def test_invalid_mode_is_usage_error(self, capsys):
        assert main(["schmidt", "--n", "-1", "--m", "0"]) == 2
        assert main(["schmidt", "--n", "40", "--m", "30"]) == 2


class TestWigner:
    def test_origin_parity_value(self, capsys):
        code = main(
            ["wigner", "--n", "1", "--m", "0", "--grid-min", "0", "--grid-max", "0",
             "--grid-samples", "1"]
        )
        out = capsys.readouterr().out
        lines = out.strip().split("\n")
        assert code == 0
        assert lines[0] == "x,px,y,py,w,pi"
        row = [float(v) for v in lines[1].split(",")]
        assert row[5] == pytest.approx(-1.0, abs=1e-12)

    def test_ground_peak_value(self, capsys):
        main(["wigner", "--n", "0", "--m", "0", "--grid-min", "0", "--grid-max", "0",
              "--grid-samples", "1"])
        row = capsys.readouterr().out.strip().split("\n")[1]
        w = float(row.split(",")[4])
        assert w == pytest.approx(1.0 / math.pi**2, rel=1e-12)

    def test_numeric_agrees_with_closed_form(self, capsys):
        args = ["wigner", "--n", "2", "--m", "1", "--grid-min", "-1", "--grid-max", "1",
                "--grid-samples", "3"]
        main(args)
        closed = capsys.readouterr().out
        main(args + ["--numeric", "--order", "72"])
        numeric = capsys.readouterr().out
        closed_rows = [list(map(float, r.split(","))) for r in closed.strip().split("\n")[1:]]
        numeric_rows = [list(map(float, r.split(","))) for r in numeric.strip().split("\n")[1:]]
        assert len(closed_rows) == len(numeric_rows) == 81
        worst = max(abs(a[4] - b[4]) for a, b in zip(closed_rows, numeric_rows))
        assert worst <= 1e-6

    def test_elliptical_table(self, capsys):
        code = main(
            ["wigner", "--elliptical-t", "0.5", "--grid-min", "0", "--grid-max", "0",
             "--grid-samples", "1"]
        )
        row = capsys.readouterr().out.strip().split("\n")[1]
        assert code == 0
        assert float(row.split(",")[5]) == pytest.approx(1.0, abs=1e-12)

    def test_mode_and_elliptical_flags_conflict(self, capsys):
        code = main(["wigner", "--n", "1", "--m", "0", "--elliptical-t", "0.5"])
        assert code == 2

    def test_numeric_engine_rejects_unresolvable_squeeze(self, capsys):
        # at t = 2 the squeezed field outgrows the default integration box
        code = main(["wigner", "--elliptical-t", "2", "--numeric"])
        assert code == 2
        assert "norm" in capsys.readouterr().err


class TestEllipticalProfile:
    def test_small_profile(self, tmp_path, capsys):
        out = tmp_path / "profile.csv"
        code = main(
            ["elliptical-profile", "--t-min", "0", "--t-max", "0.4", "--t-samples", "3",
             "--restarts", "3", "--out", str(out)]
        )
        footer = json.loads(capsys.readouterr().out)
        assert code == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "t,best_abs_B"
        assert len(lines) == 4
        first = float(lines[1].split(",")[1])
        assert first <= 2.0 + 1e-9
        assert footer["sup_best_abs_B"] == pytest.approx(
            max(float(l.split(",")[1]) for l in lines[1:]), abs=1e-12
        )

    def test_sign_branches_identical(self, capsys):
        argv = ["elliptical-profile", "--t-min", "0.2", "--t-max", "0.4",
                "--t-samples", "2", "--restarts", "2"]
        main(argv + ["--sign", "1"])
        plus = capsys.readouterr().out
        main(argv + ["--sign", "-1"])
        minus = capsys.readouterr().out
        plus_csv = plus.split("{")[0]
        minus_csv = minus.split("{")[0]
        assert plus_csv == minus_csv

    def test_out_of_range_t_is_usage_error(self, capsys):
        assert main(["elliptical-profile", "--t-min", "0", "--t-max", "3"]) == 2


class TestHarness:
    def test_unknown_command_exits_two(self, capsys):
        assert main(["bogus"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0

    def test_console_script_installed(self):
        result = subprocess.run(
            [sys.executable, "-m", "vortexbell", "corr", "--n", "1", "--m", "0", "--max"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert result.returncode == 0
        assert json.loads(result.stdout)["c_max"] == pytest.approx(0.5, abs=1e-9)
