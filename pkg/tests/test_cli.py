import csv
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from ptbath.cli import main
from ptbath.gaussian import displace, thermal_state
from ptbath.otto import OttoCycleSpec, stroke_energies
from ptbath.reservoir import PTReservoirSpec
from ptbath.thermalization import entropy_production, evolve, heat_exchanged

NS = "{http://www.w3.org/2000/svg}"


def read_rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(row for row in fh if not row.startswith("#")))


def run(tmp_path, *args):
    return main([*args, "--out", str(tmp_path)])


class TestThermalize:
    def test_defaults(self, tmp_path):
        assert run(tmp_path, "thermalize") == 0
        text = (tmp_path / "thermalize.csv").read_text()
        assert text.splitlines()[0] == "t,gamma_t,epsilon,heat,coherence,entropy,entropy_production,energy"
        assert "\r" not in text
        rows = read_rows(tmp_path / "thermalize.csv")
        eps0 = [r for r in rows if float(r["epsilon"]) == 0.0]
        assert float(eps0[-1]["heat"]) == pytest.approx(2.51665556612699, rel=1e-4)
        assert all(float(r["heat"]) <= 0 for r in rows if float(r["epsilon"]) == 1.0)
        assert (tmp_path / "fig3.svg").exists()

    def test_points_two(self, tmp_path):
        assert run(tmp_path, "thermalize", "--points", "2", "--no-svg") == 0
        assert len(read_rows(tmp_path / "thermalize.csv")) == 2 * 3
        assert not (tmp_path / "fig3.svg").exists()

    def test_repeatable_epsilon(self, tmp_path):
        run(tmp_path, "thermalize", "--points", "3", "--epsilon", "0.2", "--epsilon", "0.7")
        eps = sorted({float(r["epsilon"]) for r in read_rows(tmp_path / "thermalize.csv")})
        assert eps == [0.2, 0.7]

    def test_round_trip(self, tmp_path):
        run(tmp_path, "thermalize", "--points", "11", "--no-svg")
        s0 = displace(thermal_state(2.0), 1.0, 1.0)
        for r in read_rows(tmp_path / "thermalize.csv"):
            spec = PTReservoirSpec(0.2, 1.0, float(r["epsilon"]), 0.1)
            t = float(r["t"])
            assert float(r["heat"]) == pytest.approx(heat_exchanged(s0, spec, t), rel=1e-11, abs=1e-12)
            assert float(r["entropy_production"]) == pytest.approx(
                entropy_production(s0, spec, 0, t), rel=1e-11, abs=1e-12
            )
            st = evolve(s0, spec, t)
            assert float(r["energy"]) == pytest.approx(np.trace(st.sigma) / 4 + st.d @ st.d / 2, rel=1e-11)

    def test_precision(self, tmp_path):
        run(tmp_path, "thermalize", "--points", "2", "--no-svg", "--precision", "4")
        row = read_rows(tmp_path / "thermalize.csv")[1]
        assert row["heat"] == "2.517"


class TestOtto:
    def test_defaults(self, tmp_path):
        assert run(tmp_path, "otto") == 0
        rows = read_rows(tmp_path / "otto.csv")
        assert {r["epsilon_c"] for r in rows} == {"0.866025403784"}
        assert rows[0]["regime"] == "Engine" and float(rows[0]["figure_of_merit"]) == 0.5
        assert float(rows[-1]["epsilon"]) == 2.0
        assert rows[-1]["regime"] == "Refrigerator" and float(rows[-1]["figure_of_merit"]) == 1.0

    def test_round_trip(self, tmp_path):
        run(tmp_path, "otto", "--no-svg")
        for r in read_rows(tmp_path / "otto.csv"):
            res = stroke_energies(OttoCycleSpec(epsilon=float(r["epsilon"])))
            for key in ("w_net", "q2", "q4"):
                assert float(r[key]) == pytest.approx(getattr(res, key), rel=1e-11, abs=1e-15)

    def test_no_window(self, tmp_path):
        assert run(tmp_path, "otto", "--omega-f", "4", "--beta-cold", "2", "--no-svg") == 0
        rows = read_rows(tmp_path / "otto.csv")
        assert all(r["regime"] == "Refrigerator" and r["epsilon_c"] == "" for r in rows)

    def test_fig5_structure(self, tmp_path):
        run(tmp_path, "otto")
        root = ET.parse(tmp_path / "fig5.svg").getroot()
        assert len(root.findall(f".//{NS}polyline")) == 3
        assert len([e for e in root.iter(f"{NS}line") if e.get("class") == "marker"]) == 1


class TestCollide:
    def test_defaults(self, tmp_path):
        assert run(tmp_path, "collide") == 0
        lines = (tmp_path / "collide.csv").read_text().splitlines()
        assert lines[0] == "t,epsilon,max_sigma_err,d_err"
        assert lines[-1].startswith("# naive_rule_order,")
        assert 0.8 <= float(lines[-1].split(",")[1]) <= 1.2
        rows = read_rows(tmp_path / "collide.csv")
        assert max(float(r["max_sigma_err"]) for r in rows) <= 1e-9

    def test_zero_steps(self, tmp_path):
        assert run(tmp_path, "collide", "--steps", "0") == 1


class TestFigures:
    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        assert main(["figures", "--out", str(a)]) == 0
        assert main(["figures", "--out", str(b)]) == 0
        for name in ("fig3.svg", "fig5.svg", "thermalize.csv", "otto.csv"):
            assert (a / name).read_bytes() == (b / name).read_bytes()

    def test_fig3_coherence_ordering(self, tmp_path):
        run(tmp_path, "figures")
        root = ET.parse(tmp_path / "fig3.svg").getroot()
        panel = next(g for g in root.iter(f"{NS}g") if g.get("data-panel") == "coherence")
        curves = {p.get("data-key"): p.get("points").split() for p in panel.iter(f"{NS}polyline")}
        mid = len(curves["eps=0"]) // 2
        y = lambda key: float(curves[key][mid].split(",")[1])
        assert y("eps=1") < y("eps=0")  # svg y grows downward


class TestErrors:
    @pytest.mark.parametrize(
        "args",
        [
            ["thermalize", "--beta", "-1"],
            ["thermalize", "--points", "1"],
            ["thermalize", "--nbar", "-2"],
            ["otto", "--omega-f", "0.5"],
            ["otto", "--eps-min", "-1"],
            ["thermalize", "--beta", "abc"],
            ["thermalize", "--precision", "0"],
            ["bogus"],
        ],
    )
    def test_invalid_exit_1(self, tmp_path, args):
        assert run(tmp_path, *args) == 1

    def test_io_exit_2(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("x")
        assert main(["otto", "--out", str(blocker / "sub")]) == 2


class TestConfigFile:
    def test_flags_override(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# comment\npoints = 3\nepsilon = 0.25, 0.75\nsvg = false\nbeta = 0.4\n")
        assert run(tmp_path, "thermalize", "--config", str(cfg), "--beta", "0.2") == 0
        rows = read_rows(tmp_path / "thermalize.csv")
        assert len(rows) == 6
        assert sorted({float(r["epsilon"]) for r in rows}) == [0.25, 0.75]
        assert not (tmp_path / "fig3.svg").exists()
        spec = PTReservoirSpec(0.2, 1.0, 0.25, 0.1)
        s0 = displace(thermal_state(2.0), 1.0, 1.0)
        assert float(rows[-4]["heat"]) == pytest.approx(heat_exchanged(s0, spec, 100.0), rel=1e-11)

    def test_flag_epsilon_replaces_config(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("epsilon = 0.25\npoints = 2\n")
        run(tmp_path, "thermalize", "--config", str(cfg), "--epsilon", "1.0", "--no-svg")
        assert {r["epsilon"] for r in read_rows(tmp_path / "thermalize.csv")} == {"1"}

    @pytest.mark.parametrize("body", ["nonsense = 1\n", "points\n", "points = many\n"])
    def test_bad_config(self, tmp_path, body):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text(body)
        assert run(tmp_path, "thermalize", "--config", str(cfg)) == 1
