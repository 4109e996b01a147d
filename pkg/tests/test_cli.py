import json
import os

import pytest
from click.testing import CliRunner

from clarcube.cli import main
from clarcube.embfile import write_emb
from clarcube.report import report_json, run_instance_report


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def ladder3_file(tmp_path, ladder3):
    path = tmp_path / "ladder3.emb"
    path.write_text(write_emb(ladder3.graph))
    return str(path)


class TestBasicCommands:
    def test_faces(self, runner, ladder3_file):
        res = runner.invoke(main, ["faces", ladder3_file])
        assert res.exit_code == 0
        assert "3 faces" in res.output
        assert "euler genus 0" in res.output

    def test_faces_corpus_name(self, runner):
        res = runner.invoke(main, ["faces", "coronene"])
        assert res.exit_code == 0
        assert "8 faces" in res.output

    def test_matchings(self, runner, ladder3_file):
        res = runner.invoke(main, ["matchings", ladder3_file, "--list"])
        assert res.exit_code == 0
        assert "3 perfect matchings" in res.output
        assert "M2" in res.output

    def test_resonance_with_dot(self, runner, tmp_path):
        dot = tmp_path / "r.dot"
        res = runner.invoke(main, ["resonance", "ladder4", "--faces",
                                   "inner", "--dot", str(dot)])
        assert res.exit_code == 0
        assert "5 vertices" in res.output
        text = dot.read_text()
        assert text.count(" -- ") == 5

    def test_zz(self, runner):
        res = runner.invoke(main, ["zz", "ladder4", "--faces", "inner"])
        assert res.exit_code == 0
        assert "5 + 5x + x^2" in res.output
        assert "[5, 5, 1]" in res.output

    def test_cubepoly(self, runner):
        res = runner.invoke(main, ["cubepoly", "ladder4", "--faces", "inner"])
        assert res.exit_code == 0
        assert "5 + 5x + x^2" in res.output

    def test_selector_on_file(self, runner, ladder3_file):
        res = runner.invoke(main, ["zz", ladder3_file, "--faces",
                                   "all-even-except 0"])
        assert res.exit_code == 0

    def test_missing_input(self, runner):
        res = runner.invoke(main, ["faces", "nowhere.emb"])
        assert res.exit_code == 2

    def test_bad_selector_exit_2(self, runner):
        res = runner.invoke(main, ["zz", "ladder3", "--faces", "bogus!"])
        assert res.exit_code == 2


class TestCheck:
    def test_pass_exit_0(self, runner):
        res = runner.invoke(main, ["check", "ladder3", "--faces", "inner"])
        assert res.exit_code == 0
        rep = json.loads(res.output)
        assert rep["schema"] == 1
        assert rep["ok"] is True
        assert rep["zz"] == [3, 2]

    def test_full_set_needs_flag(self, runner):
        res = runner.invoke(main, ["check", "ladder3", "--faces", "all"])
        assert res.exit_code == 2

    def test_violation_exit_1(self, runner):
        res = runner.invoke(main, ["check", "ladder3", "--faces", "all",
                                   "--allow-full-face-set"])
        assert res.exit_code == 1
        rep = json.loads(res.output)
        assert rep["ok"] is False
        assert rep["bipartite"]["ok"] is False

    def test_json_and_figures_written(self, runner, tmp_path):
        out = tmp_path / "rep.json"
        figs = tmp_path / "figs"
        res = runner.invoke(main, ["check", "ladder4", "--faces", "inner",
                                   "--json", str(out),
                                   "--figures", str(figs)])
        assert res.exit_code == 0
        assert json.loads(out.read_text())["ok"] is True
        pngs = sorted(os.listdir(figs))
        assert len(pngs) == 2
        assert all(p.endswith(".png") for p in pngs)


class TestCorpusCommands:
    def test_list(self, runner):
        res = runner.invoke(main, ["corpus", "list"])
        assert res.exit_code == 0
        assert "coronene" in res.output
        assert "k4-projective" in res.output

    def test_export_round_trip(self, runner, tmp_path):
        out = tmp_path / "c6.emb"
        res = runner.invoke(main, ["corpus", "export", "c6",
                                   "--out", str(out)])
        assert res.exit_code == 0
        from clarcube.embfile import parse_emb
        g = parse_emb(out.read_text())
        assert g.n_vertices == 6

    def test_run_subset_with_csv(self, runner, tmp_path):
        csv_path = tmp_path / "summary.csv"
        res = runner.invoke(main, ["corpus", "run", "ladder3", "ladder4",
                                   "--csv", str(csv_path)])
        assert res.exit_code == 0
        lines = csv_path.read_text().strip().splitlines()
        assert len(lines) == 5  # header + 2 sets x 2 instances
        assert lines[0].startswith("instance,face_set")
        assert "ladder3/inner: pass" in res.output
        assert "ladder3/all: hypothesis-violated" in res.output

    def test_run_writes_reports_and_figures(self, runner, tmp_path):
        out = tmp_path / "reports"
        figs = tmp_path / "figs"
        res = runner.invoke(main, ["corpus", "run", "c6",
                                   "--out", str(out), "--figures", str(figs)])
        assert res.exit_code == 0
        assert sorted(os.listdir(out)) == ["c6-all.json", "c6-inner.json"]
        assert len(os.listdir(figs)) == 4


class TestGenerateAndHunt:
    def test_generate_emb(self, runner, tmp_path):
        out = tmp_path / "g.emb"
        res = runner.invoke(main, ["generate", "--kind", "benzenoid-patch",
                                   "--size", "3", "--seed", "7",
                                   "--out", str(out)])
        assert res.exit_code == 0
        from clarcube.embfile import parse_emb
        assert parse_emb(out.read_text()).n_vertices == 14

    def test_hunt_small(self, runner, tmp_path):
        csv_path = tmp_path / "hunt.csv"
        res = runner.invoke(main, ["hunt", "--kind", "grid-plane",
                                   "--max-size", "3", "--seeds", "0..2",
                                   "--csv", str(csv_path)])
        assert res.exit_code == 0
        assert "hunted 3 instance(s)" in res.output
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0].startswith("instance,component")
        assert len(lines) >= 4

    def test_hunt_bad_seed_range(self, runner):
        res = runner.invoke(main, ["hunt", "--kind", "grid-plane",
                                   "--seeds", "nope"])
        assert res.exit_code == 2


class TestReportDeterminism:
    def test_byte_identical_reports(self, ladder4):
        a = report_json(run_instance_report(ladder4, "inner"))
        b = report_json(run_instance_report(ladder4, "inner"))
        assert a == b

    def test_coronene_report_fields(self, coronene_inst):
        rep = run_instance_report(coronene_inst, "inner7")
        assert rep["ok"] is True
        comp = rep["components"][0]
        assert comp["isometric"]["ok"] is False
        assert comp["isometric"]["distance"] == 8
        assert comp["isometric"]["hamming"] == 6
        assert comp["partial_cube"] is True
        assert comp["median"]["ok"] is True

    def test_cli_output_matches_api(self, ladder4):
        runner = CliRunner()
        res = runner.invoke(main, ["check", "ladder4", "--faces", "inner"])
        api = report_json(run_instance_report(ladder4, "inner"))
        assert res.output == api
