"""End-to-end command-line behaviour, exit codes, and determinism."""
import json

import pytest

from ohcp import fileio, fixtures
from ohcp.cli import main


@pytest.fixture
def paths(tmp_path):
    out = {}
    out["moebius"] = tmp_path / "moebius.scx"
    out["moebius"].write_text(fileio.write_complex(fixtures.mobius_strip()))
    out["triangle"] = tmp_path / "triangle.scx"
    out["triangle"].write_text("0 1 2\n")
    out["chain"] = tmp_path / "c.chn"
    out["chain"].write_text("1 0 1\n1 1 2\n-1 0 2\n")
    out["tmp"] = tmp_path
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCertification:
    def test_tu_on_moebius(self, paths, capsys):
        code, out, _ = run(capsys, "tu", "--complex", paths["moebius"],
                           "--dim", "1")
        doc = json.loads(out)
        assert code == 0
        assert doc["status"] == "NotTU"
        assert abs(doc["witness_det"]) == 2

    def test_torsion_scan_on_moebius(self, paths, capsys):
        code, out, _ = run(capsys, "torsion-scan", "--complex",
                           paths["moebius"], "--dim", "1")
        doc = json.loads(out)
        assert code == 0
        assert doc["torsion"] is True
        assert doc["torsion_coefficient"] == 2

    def test_torsion_scan_on_disk(self, paths, capsys):
        code, out, _ = run(capsys, "torsion-scan", "--complex",
                           paths["triangle"], "--dim", "1")
        assert code == 0
        assert json.loads(out)["torsion"] is False

    def test_mobius_scan(self, paths, capsys):
        code, out, _ = run(capsys, "mobius-scan", "--complex",
                           paths["moebius"], "--dim", "2")
        assert code == 0
        assert json.loads(out)["found"] is True

    def test_snf_of_shipped_matrix(self, paths, capsys):
        import importlib.resources as res
        mat = res.files("ohcp") / "data" / "moebius_b2.mat"
        code, out, _ = run(capsys, "snf", "--matrix", mat)
        assert code == 0
        assert out.strip() == "1 1 1 1 1 1"

    def test_ht_method_undecided_on_moebius(self, paths, capsys):
        code, _, err = run(capsys, "tu", "--complex", paths["moebius"],
                           "--dim", "1", "--method", "ht")
        assert code == 5
        assert "undecided" in err

    def test_col_cap_undecided(self, paths, capsys):
        code, _, _ = run(capsys, "tu", "--complex", paths["moebius"],
                         "--dim", "1", "--method", "minors", "--col-cap", "2")
        assert code == 5


class TestSolvePipeline:
    def test_solve_and_round_trip(self, paths, capsys):
        out_prefix = paths["tmp"] / "sol"
        code, out, _ = run(capsys, "solve", "--complex", paths["triangle"],
                           "--chain", paths["chain"], "--dim", "1",
                           "--out", out_prefix)
        assert code == 0
        doc = json.loads(out)
        assert doc["objective"] == "0/1"
        assert doc["integral"] is True
        K = fileio.parse_complex(paths["triangle"].read_text())
        written = fileio.parse_chain((paths["tmp"] / "sol.chn").read_text(),
                                     K, 1)
        assert written.is_zero()

    def test_oracle_matches_solve(self, paths, capsys):
        _, solve_out, _ = run(capsys, "solve", "--complex", paths["triangle"],
                              "--chain", paths["chain"], "--dim", "1")
        _, oracle_out, _ = run(capsys, "oracle", "--complex",
                               paths["triangle"], "--chain", paths["chain"],
                               "--dim", "1", "--y-bound", "1")
        a = json.loads(solve_out)
        b = json.loads(oracle_out)
        assert a["objective"] == b["objective"]

    def test_homology(self, paths, capsys):
        code, out, _ = run(capsys, "homology", "--complex", paths["moebius"],
                           "--dim", "1")
        assert code == 0
        assert json.loads(out) == {"betti": 1, "torsion": []}

    def test_boundary(self, paths, capsys):
        code, out, _ = run(capsys, "boundary", "--complex", paths["triangle"],
                           "--dim", "2")
        assert code == 0
        assert out == "3 1\n1\n-1\n1\n"

    def test_parse_error_exit_code(self, paths, capsys):
        bad = paths["tmp"] / "bad.scx"
        bad.write_text("0 0 1\n")
        code, _, err = run(capsys, "tu", "--complex", bad, "--dim", "1")
        assert code == 4
        assert "error" in err

    def test_missing_file_exit_code(self, paths, capsys):
        code, _, _ = run(capsys, "homology", "--complex",
                         paths["tmp"] / "nope.scx", "--dim", "0")
        assert code == 4

    def test_deterministic_output(self, paths, capsys):
        outs = set()
        for _ in range(3):
            _, out, _ = run(capsys, "torsion-scan", "--complex",
                            paths["moebius"], "--dim", "1")
            outs.add(out)
        assert len(outs) == 1

    def test_solve_with_coordinate_weights(self, paths, capsys):
        xyz = paths["tmp"] / "pts.xyz"
        xyz.write_text("0 0 0\n1 3 0\n2 3 4\n")
        code, out, _ = run(capsys, "solve", "--complex", paths["triangle"],
                           "--chain", paths["chain"], "--dim", "1",
                           "--coords", xyz)
        assert code == 0
        assert json.loads(out)["objective"] == "0/1"
