import json
import os

import numpy as np
import pytest

from notseg.cli import main
from notseg.sampler import rng_from_seed


@pytest.fixture
def two_level_csv(tmp_path):
    """Clean two-level series with a shift at t = 60."""
    gen = rng_from_seed(123)
    y = gen.standard_normal(120) * 0.5
    y[60:] += 4.0
    path = tmp_path / "series.csv"
    path.write_text("y\n" + "\n".join(repr(float(v)) for v in y) + "\n")
    return path, y


def run(args):
    return main([str(a) for a in args])


class TestDetect:
    def test_finds_level_shift(self, two_level_csv, tmp_path):
        path, _ = two_level_csv
        out = tmp_path / "out.json"
        rc = run(["detect", "-i", path, "--scenario", "pcws-const",
                  "--m", "100", "--seed", "1", "-o", out])
        assert rc == 0
        doc = json.loads(out.read_text())
        assert doc["schema"] == "notseg/1"
        assert doc["method"] == "not-ssic"
        assert len(doc["change_points"]) == 1
        assert abs(doc["change_points"][0] - 60) <= 2
        assert doc["sigma_hat"] == pytest.approx(0.5, rel=0.3)
        assert {"T", "scenario", "seed", "threshold_used", "n_params",
                "ssic"} <= doc.keys()

    def test_huge_threshold_detects_nothing(self, two_level_csv, tmp_path):
        path, _ = two_level_csv
        out = tmp_path / "out.json"
        rc = run(["detect", "-i", path, "--threshold", "1e18", "--m", "50",
                  "--seed", "1", "-o", out])
        assert rc == 0
        doc = json.loads(out.read_text())
        assert doc["change_points"] == []
        assert doc["method"] == "not-threshold"

    def test_byte_identical_reruns(self, two_level_csv, tmp_path):
        path, _ = two_level_csv
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for out in (a, b):
            assert run(["detect", "-i", path, "--m", "80", "--seed", "42",
                        "-o", out]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_fitted_round_trip(self, two_level_csv, tmp_path):
        path, _ = two_level_csv
        detect_out = tmp_path / "detect.json"
        run(["detect", "-i", path, "--m", "100", "--seed", "1",
             "--fitted", "-o", detect_out])
        fit_out = tmp_path / "fit.json"
        rc = run(["fit", "-i", path, "--from-json", detect_out, "-o", fit_out])
        assert rc == 0
        detected = json.loads(detect_out.read_text())
        fitted = json.loads(fit_out.read_text())
        assert fitted["fitted"] == detected["fitted"]
        assert fitted["change_points"] == detected["change_points"]

    def test_csv_format_is_plot_ready(self, two_level_csv, tmp_path):
        path, y = two_level_csv
        out = tmp_path / "fit.csv"
        run(["detect", "-i", path, "--m", "60", "--seed", "5",
             "--format", "csv", "-o", out])
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "t,y,fitted,sigma_t"
        assert len(lines) == 121

    def test_env_seed_and_flag_priority(self, two_level_csv, tmp_path, monkeypatch):
        path, _ = two_level_csv
        a, b, c = (tmp_path / n for n in ("a.json", "b.json", "c.json"))
        monkeypatch.setenv("NOTSEG_SEED", "42")
        run(["detect", "-i", path, "--m", "80", "-o", a])
        monkeypatch.delenv("NOTSEG_SEED")
        run(["detect", "-i", path, "--m", "80", "--seed", "42", "-o", b])
        run(["detect", "-i", path, "--m", "80", "--seed", "43", "-o", c])
        assert a.read_bytes() == b.read_bytes()
        assert json.loads(a.read_text())["seed"] == 42
        assert json.loads(c.read_text())["seed"] == 43

    def test_malformed_input_exits_2(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("y\n1.0\npotato\n3.0\n")
        assert run(["detect", "-i", bad]) == 2

    def test_missing_file_exits_2(self, tmp_path):
        assert run(["detect", "-i", tmp_path / "nope.csv"]) == 2

    def test_too_short_series_exits_3(self, tmp_path):
        short = tmp_path / "short.csv"
        short.write_text("1.0\n2.0\n3.0\n")
        assert run(["detect", "-i", short, "--scenario", "pcws-lin"]) == 3

    def test_stdin_input(self, two_level_csv, tmp_path, monkeypatch, capsys):
        import io
        path, y = two_level_csv
        monkeypatch.setattr("sys.stdin", io.StringIO(path.read_text()))
        rc = run(["detect", "-i", "-", "--m", "60", "--seed", "2"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["T"] == 120


class TestPath:
    def test_json_output(self, two_level_csv, tmp_path):
        path, _ = two_level_csv
        out = tmp_path / "path.json"
        rc = run(["path", "-i", path, "--m", "100", "--seed", "3", "-o", out])
        assert rc == 0
        doc = json.loads(out.read_text())
        assert doc["thresholds"][0] == 0.0
        assert len(doc["thresholds"]) == len(doc["models"])
        assert doc["final_threshold"] >= doc["thresholds"][-1]

    def test_csv_output(self, two_level_csv, tmp_path):
        path, _ = two_level_csv
        out = tmp_path / "path.csv"
        run(["path", "-i", path, "--m", "100", "--seed", "3",
             "--format", "csv", "-o", out])
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "threshold,q,change_points"


class TestSimulate:
    def test_single_column(self, tmp_path):
        out = tmp_path / "teeth.csv"
        rc = run(["simulate", "--model", "teeth", "--noise", "gauss",
                  "--sd", "1", "--seed", "11", "-o", out])
        assert rc == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "y"
        assert len(lines) == 513

    def test_full_columns(self, tmp_path):
        out = tmp_path / "vol.csv"
        run(["simulate", "--model", "vol", "--full", "--seed", "1", "-o", out])
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "y,f,sigma"
        assert len(lines) == 2049

    def test_simulate_detect_pipeline(self, tmp_path):
        sim = tmp_path / "sim.csv"
        run(["simulate", "--model", "teeth", "--seed", "11", "-o", sim])
        out = tmp_path / "det.json"
        rc = run(["detect", "-i", sim, "--m", "2000", "--seed", "1", "-o", out])
        assert rc == 0
        doc = json.loads(out.read_text())
        assert len(doc["change_points"]) == 7

    def test_bad_model_exits_3(self, tmp_path):
        assert run(["simulate", "--model", "zigzag", "-o", tmp_path / "x.csv"]) == 3


class TestBench:
    def test_single_replicate_report(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        rc = run(["bench", "--model", "teeth", "--noise", "gauss", "--reps", "1",
                  "--m", "500", "--seed", "11", "-o", "rep"])
        assert rc == 0
        doc = json.loads((tmp_path / "rep.json").read_text())
        assert doc["replicates"] == 1
        assert sum(doc["q_diff_hist"].values()) == 1
        table = (tmp_path / "rep.txt").read_text()
        assert "teeth" in table

    def test_bad_noise_exits_3(self, tmp_path):
        assert run(["bench", "--model", "teeth", "--noise", "uniform",
                    "-o", str(tmp_path / "x")]) == 3
