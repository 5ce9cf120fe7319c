"""Tests for the chromacover command line."""

import pytest

from app.cli import main
from app.core.config import settings
from app.models.enums import ExitCode

DIAMOND = "p edge 4 5\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 3 4\n"
PAW = "p edge 4 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\n"
STAR = "p edge 4 3\ne 1 3\ne 2 3\ne 3 4\n"
NULL = "p edge 4 0\n"
INEQUIVALENT_H = "p edge 4 4\ne 1 3\ne 1 4\ne 2 3\ne 3 4\n"
INEQUIVALENT_K = "p edge 4 4\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n"
FOURFOLD = (
    "p pvg 4 5 4\ne 1 2 2,1,4,3\ne 1 3 1,2,3,4\ne 1 4 2,3,4,1\n"
    "e 2 3 1,2,3,4\ne 3 4 1,2,3,4\n"
)


@pytest.fixture
def files(tmp_path):
    """Write named inputs under tmp_path and return their paths as strings."""

    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def stdout_lines(capsys) -> list[str]:
    return capsys.readouterr().out.splitlines()


class TestChi:
    def test_value(self, files, capsys):
        assert main(["chi", files("diamond.col", DIAMOND)]) == ExitCode.OK
        assert stdout_lines(capsys) == ["chi 3"]

    def test_witness(self, files, capsys):
        assert main(["chi", files("diamond.col", DIAMOND), "--witness"]) == ExitCode.OK
        lines = stdout_lines(capsys)
        assert lines[:2] == ["chi 3", "s 3"]
        assert len(lines) == 6

    def test_size_guard(self, files, capsys, monkeypatch):
        monkeypatch.setattr(settings, "exact_vertex_limit", 3)
        monkeypatch.setattr(settings, "allow_large", False)
        assert main(["chi", files("diamond.col", DIAMOND)]) == ExitCode.SIZE_GUARD
        assert "greedy bound" in capsys.readouterr().err


class TestChiRel:
    def test_direct(self, files, capsys):
        assert main(["chi-rel", files("diamond.col", DIAMOND), files("paw.col", PAW)]) == ExitCode.OK
        assert stdout_lines(capsys) == ["chi_rel 3"]

    def test_both_methods(self, files, capsys):
        code = main(["chi-rel", files("diamond.col", DIAMOND), files("star.col", STAR), "--method", "both"])
        assert code == ExitCode.OK
        assert stdout_lines(capsys) == ["chi_rel direct=2 cover=2"]

    def test_witness(self, files, capsys):
        main(["chi-rel", files("diamond.col", DIAMOND), files("star.col", STAR), "--witness"])
        lines = stdout_lines(capsys)
        assert lines[0] == "chi_rel 2"
        assert "c f" in lines and "c g" in lines

    def test_vertex_count_mismatch(self, files, capsys):
        code = main(["chi-rel", files("diamond.col", DIAMOND), files("k3.col", "p edge 3 0\n")])
        assert code == ExitCode.MISMATCH
        assert capsys.readouterr().err.startswith("error:")

    def test_edge_outside_parent(self, files):
        code = main(["chi-rel", files("diamond.col", DIAMOND), files("h.col", "p edge 4 1\ne 2 4\n")])
        assert code == ExitCode.MISMATCH


class TestCover:
    def test_signing_to_stdout(self, files, capsys):
        sg = files("k3.sg", "p sg 3 3\ne 1 2 -\ne 1 3 -\ne 2 3 -\n")
        assert main(["cover", sg]) == ExitCode.OK
        lines = stdout_lines(capsys)
        assert lines[0] == "c 2-fold cover of a 3-vertex graph"
        assert lines[1] == "p edge 6 6"
        assert lines[-1] == "f 6 3 2"

    def test_voltage_to_files(self, files, capsys, tmp_path):
        out = tmp_path / "cover.col"
        assert main(["cover", files("fourfold.pvg", FOURFOLD), "--out", str(out)]) == ExitCode.OK
        assert "p edge 16 20" in out.read_text().splitlines()
        assert len((tmp_path / "cover.col.fiber").read_text().splitlines()) == 16
        assert stdout_lines(capsys)[0] == f"cover {out} vertices=16 edges=20"

    def test_invalid_voltage(self, files):
        bad = files("bad.pvg", "p pvg 2 1 2\ne 1 2 1,1\n")
        assert main(["cover", bad]) == ExitCode.VOLTAGE


class TestSwitch:
    def test_witness(self, files, capsys):
        code = main(["switch", files("diamond.col", DIAMOND), files("star.col", STAR), files("null.col", NULL)])
        assert code == ExitCode.OK
        assert stdout_lines(capsys) == ["X = {3}"]

    def test_inequivalent(self, files, capsys):
        g = files("diamond.col", DIAMOND)
        assert main(["switch", g, files("h.col", INEQUIVALENT_H), files("k.col", INEQUIVALENT_K)]) == ExitCode.OK
        assert stdout_lines(capsys) == ["inequivalent"]

    def test_switch_class(self, files, capsys):
        assert main(["switch-class", files("diamond.col", DIAMOND), files("paw.col", PAW)]) == ExitCode.OK
        lines = stdout_lines(capsys)
        assert lines[-1] == "class-size 8"
        assert len(lines) == 9
        assert lines[0].startswith("member 1 edges=")


class TestBounds:
    def test_exact(self, files, capsys):
        code = main(["bounds", files("diamond.col", DIAMOND), files("paw.col", PAW), "--exact", "--seed", "5"])
        assert code == ExitCode.OK
        lines = stdout_lines(capsys)
        assert lines[0].startswith("bound switching-class ")
        assert lines[0].endswith("seed=5")
        assert lines[1].startswith("bound quotient ")
        assert lines[-1] == "chi_rel 3"

    def test_partition(self, files, capsys):
        k4 = files("k4.col", "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
        h = files("h.col", "p edge 4 2\ne 1 2\ne 3 4\n")
        part = files("p.txt", "b 1 2\nb 3 4\n")
        assert main(["bounds", k4, h, "--partition", part]) == ExitCode.OK
        lines = stdout_lines(capsys)
        assert "bound induced-union lower=4 upper=4 exhaustive=y seed=0" in [
            line.replace(f"seed={settings.seed}", "seed=0") for line in lines
        ]

    def test_partition_must_induce_h(self, files):
        part = files("p.txt", "b 1 2\nb 3 4\n")
        code = main(["bounds", files("diamond.col", DIAMOND), files("paw.col", PAW), "--partition", part])
        assert code == ExitCode.USAGE


class TestRealize:
    def test_critical_triangle(self, files, capsys, tmp_path):
        out = tmp_path / "h.col"
        assert main(["realize", files("diamond.col", DIAMOND), "3", "--out", str(out)]) == ExitCode.OK
        assert stdout_lines(capsys) == [
            "chi_rel 3 method=critical critical_value=3 edges=[1-3 1-4 3-4]"
        ]
        assert out.read_text().splitlines()[0] == "p edge 4 3"

    def test_out_of_range(self, files):
        assert main(["realize", files("diamond.col", DIAMOND), "7"]) == ExitCode.USAGE


class TestVerify:
    def test_suite_passes(self, capsys):
        assert main(["verify", "thm21", "--max-vertices", "3", "--seed", "2"]) == ExitCode.OK
        assert stdout_lines(capsys)[-1].startswith("suite thm21 pass ")

    def test_suite_names_are_case_insensitive(self):
        assert main(["verify", "THM27", "--max-vertices", "3"]) == ExitCode.OK

    def test_unknown_suite(self, capsys):
        assert main(["verify", "thm99"]) == ExitCode.USAGE
        assert "Available suites" in capsys.readouterr().err


class TestUsage:
    def test_no_command(self):
        assert main([]) == ExitCode.USAGE

    def test_missing_file(self, tmp_path):
        assert main(["chi", str(tmp_path / "absent.col")]) == ExitCode.USAGE

    def test_malformed_graph(self, files, capsys):
        assert main(["chi", files("bad.col", "p edge 2 1\ne 1 3\n")]) == ExitCode.USAGE
        assert "vertex 3" in capsys.readouterr().err
