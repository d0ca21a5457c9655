"""CLI verbs, exit codes, file outputs, and the round-trip invariant."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from minkval.cli import build_operator, ConfigError, main
from minkval.geometry import polytope_from_json, polytope_to_json, standard_simplex
from minkval.operators import moment_body


@pytest.fixture
def t2_file(tmp_path):
    path = tmp_path / "t2.json"
    path.write_text(json.dumps(polytope_to_json(standard_simplex(2, 2))))
    return str(path)


@pytest.fixture
def cube_file(tmp_path):
    from minkval.geometry import convex_hull
    cube = convex_hull([(x, y, z) for x in (-1, 1) for y in (-1, 1)
                        for z in (-1, 1)])
    path = tmp_path / "cube.json"
    path.write_text(json.dumps(polytope_to_json(cube)))
    return str(path)


class TestCompute:
    def test_polytope_output_round_trips(self, cube_file, tmp_path):
        out = tmp_path / "out.json"
        rc = main(["compute", "--input", cube_file, "--operator",
                   "linf_projection", "--out", str(out)])
        assert rc == 0
        obj = json.loads(out.read_text())
        assert obj["kind"] == "polytope"
        P = polytope_from_json(obj)
        assert len(P.vertices) == 6

    def test_moment_probe_value(self, t2_file, tmp_path):
        out = tmp_path / "m.json"
        rc = main(["compute", "--input", t2_file, "--operator", "moment",
                   "--params", '{"p": 1, "sign": 1}', "--out", str(out),
                   "--probes", "8"])
        assert rc == 0
        obj = json.loads(out.read_text())
        by_x = {tuple(r["x"]): r["value"] for r in obj["probes"]}
        assert by_x[("1", "0")] == "1/6"
        assert obj["mode"] == "exact" and obj["operator"] == "moment"

    def test_probe_count_honored(self, cube_file, tmp_path):
        out = tmp_path / "p.json"
        main(["compute", "--input", cube_file, "--operator", "projection",
              "--out", str(out), "--probes", "5"])
        assert len(json.loads(out.read_text())["probes"]) == 5

    def test_origin_missing_is_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"n": 2, "vertices": [["1", "1"], ["2", "1"],
                                                        ["1", "2"]]}))
        rc = main(["compute", "--input", str(bad), "--operator", "projection"])
        assert rc == 1

    def test_malformed_json_exit_2(self, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text("{nope")
        rc = main(["compute", "--input", str(bad), "--operator", "projection"])
        assert rc == 2

    def test_unknown_operator_exit_2(self, t2_file):
        rc = main(["compute", "--input", t2_file, "--operator", "warp"])
        assert rc == 2

    def test_family_dimension_error(self, t2_file, tmp_path):
        rc = main(["compute", "--input", t2_file, "--operator",
                   "covariant_l1_3d",
                   "--params", '{"c": [1, 1], "a": [0, 1], "b": [0, 1]}'])
        assert rc == 1

    def test_env_default_mode(self, cube_file, tmp_path, monkeypatch):
        out = tmp_path / "e.json"
        monkeypatch.setenv("EXACT", "0")
        main(["compute", "--input", cube_file, "--operator", "projection",
              "--out", str(out), "--probes", "3"])
        assert json.loads(out.read_text())["mode"] == "float"


class TestVerify:
    def test_small_config_green(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "families": ["projection", "moment"], "dims": [3],
            "lambdas": ["1/2"], "scales": ["1"], "probes": 15, "depth": 1}))
        out = tmp_path / "bundle.json"
        rc = main(["verify", "--input", str(cfg), "--out", str(out)])
        assert rc == 0
        bundle = json.loads(out.read_text())
        assert bundle["ok"] is True

    def test_bad_config_exit_2(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("][")
        assert main(["verify", "--input", str(cfg)]) == 2


class TestCounterexampleVerb:
    def test_runs_and_reports(self, tmp_path, capsys):
        out = tmp_path / "ce.json"
        rc = main(["counterexample", "--out", str(out)])
        assert rc == 0
        text = capsys.readouterr().out
        assert "9" in text and "margin 1" in text
        assert json.loads(out.read_text())["pass"] is True


class TestSuiteVerb:
    def test_emitted_config_feeds_verify(self, tmp_path):
        out = tmp_path / "cfg.json"
        assert main(["suite", "--out", str(out)]) == 0
        cfg = json.loads(out.read_text())
        assert cfg["dims"] == [3, 4] and cfg["probes"] == 500


class TestSlice:
    def test_resolution_rows(self, cube_file, tmp_path):
        out = tmp_path / "s.csv"
        rc = main(["slice", "--input", cube_file, "--operator", "projection",
                   "--probes", "4", "--out", str(out)])
        assert rc == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "theta,support"
        assert len(lines) == 5

    def test_cube_projection_profile(self, cube_file, tmp_path):
        out = tmp_path / "s.csv"
        main(["slice", "--input", cube_file, "--operator", "projection",
              "--probes", "8", "--out", str(out)])
        rows = [line.split(",") for line
                in out.read_text().strip().splitlines()[1:]]
        import math
        for theta_s, h_s in rows:
            theta = float(theta_s)
            expect = 4 * (abs(math.cos(theta)) + abs(math.sin(theta)))
            assert float(h_s) == pytest.approx(expect, abs=1e-6)

    def test_degenerate_plane(self, cube_file):
        rc = main(["slice", "--input", cube_file, "--plane", "1,0,0;2,0,0"])
        assert rc == 1


class TestOperatorResolution:
    def test_params_file(self, tmp_path, t2_file):
        pfile = tmp_path / "params.json"
        pfile.write_text('{"p": 2, "sign": -1}')
        out = tmp_path / "o.json"
        rc = main(["compute", "--input", t2_file, "--operator", "moment",
                   "--params", str(pfile), "--out", str(out), "--probes", "4"])
        assert rc == 0
        obj = json.loads(out.read_text())
        T = standard_simplex(2, 2)
        h = moment_body(T, 2, -1)
        row = obj["probes"][0]
        x = tuple(int(c) for c in row["x"])
        assert Fraction(row["value"]) == h.value(x)

    def test_build_operator_rejects_bad_sign(self):
        with pytest.raises(ConfigError):
            build_operator("moment", {"sign": 2})

    def test_console_script(self, cube_file, tmp_path):
        out = tmp_path / "c.json"
        proc = subprocess.run(
            [sys.executable, "-m", "minkval.cli", "compute", "--input",
             cube_file, "--operator", "polar", "--out", str(out)],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(out.read_text())["kind"] == "polytope"
