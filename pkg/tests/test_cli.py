"""Command line interface: outputs and exit codes."""

import json

import pytest

from hyperconn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text("1 2\n1 4\n2 3\n3 4\n")
    return str(p)


@pytest.fixture
def p4_file(tmp_path):
    p = tmp_path / "p4.txt"
    p.write_text("1 2\n2 3\n3 4\n")
    return str(p)


class TestPsi:
    def test_c4(self, capsys, c4_file):
        code, out, _ = run(capsys, "psi", c4_file)
        assert code == 0
        assert "psi = 1" in out
        assert "argmax edge" in out

    def test_infinite(self, capsys, p4_file):
        code, out, _ = run(capsys, "psi", p4_file)
        assert code == 0
        assert "psi = inf" in out

    def test_empty_input(self, capsys, tmp_path):
        p = tmp_path / "e.txt"
        p.write_text("")
        code, out, _ = run(capsys, "psi", str(p))
        assert code == 0 and "psi = 0" in out


class TestHomology:
    def test_independence_table(self, capsys, c4_file):
        code, out, _ = run(capsys, "homology", c4_file)
        assert code == 0
        assert "dim 0: betti 1" in out

    def test_complex_mode(self, capsys, tmp_path):
        p = tmp_path / "s1.txt"
        p.write_text("1 2\n2 3\n1 3\n")
        code, out, _ = run(capsys, "homology", str(p), "--complex")
        assert code == 0
        assert "dim 1: betti 1" in out


class TestConn:
    def test_table(self, capsys, c4_file):
        code, out, _ = run(capsys, "conn", c4_file)
        assert code == 0
        for key in ("conn_h", "psi", "k", "epsilon", "degree-bound"):
            assert key in out


class TestDistance:
    def test_adjacent(self, capsys, c4_file):
        code, out, _ = run(capsys, "distance", c4_file, "1,2", "2,3")
        assert code == 0
        assert "distance = 1" in out
        assert "chain:" in out

    def test_infinite(self, capsys, tmp_path):
        p = tmp_path / "two.txt"
        p.write_text("1 2\n3 4\n")
        code, out, _ = run(capsys, "distance", str(p), "1,2", "3,4")
        assert code == 0
        assert "distance = inf" in out

    def test_unknown_label(self, capsys, c4_file):
        code, _, err = run(capsys, "distance", c4_file, "1,9", "2,3")
        assert code == 2
        assert "unknown vertex" in err


class TestCheck:
    def test_flags(self, capsys, p4_file):
        for flag, expect in [
            ("--properly-connected", "properly-connected: yes"),
            ("--triangulated", "triangulated: yes"),
            ("--properly-splitted", "properly-splitted: yes"),
        ]:
            code, out, _ = run(capsys, "check", p4_file, flag)
            assert code == 0 and expect in out

    def test_splitting_edge(self, capsys, p4_file):
        code, out, _ = run(capsys, "check", p4_file, "--splitting-edge", "1,2")
        assert code == 0
        assert "splitting-edge: yes" in out
        assert "splitting vertex: 1" in out

    def test_negative_verdict(self, capsys, tmp_path):
        p = tmp_path / "c5.txt"
        p.write_text("1 2\n2 3\n3 4\n4 5\n1 5\n")
        code, out, _ = run(capsys, "check", str(p), "--splitting-edge", "1,2")
        assert code == 0
        assert "splitting-edge: no" in out


class TestHomotopyType:
    def test_contractible(self, capsys, p4_file):
        code, out, _ = run(capsys, "homotopy-type", p4_file)
        assert code == 0
        assert "contractible" in out
        assert "dimension bound" in out

    def test_not_triangulated_rejected(self, capsys, tmp_path):
        p = tmp_path / "c5.txt"
        p.write_text("1 2\n2 3\n3 4\n4 5\n1 5\n")
        code, _, err = run(capsys, "homotopy-type", str(p))
        assert code == 2
        assert err


class TestFixtureCommand:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "fixture", "c4")
        assert code == 0
        assert out == "1 2\n1 4\n2 3\n3 4\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "fixture", "lutz-acyclic", "--emit", "json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["vertices"]) == 10
        assert len(payload["edges"]) == 31

    def test_unknown(self, capsys):
        code, _, err = run(capsys, "fixture", "nope")
        assert code == 2 and "no fixture" in err


class TestExitCodes:
    def test_parse_error(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("1\n")
        code, _, err = run(capsys, "psi", str(p))
        assert code == 2 and err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "psi", "/no/such/file.txt")
        assert code == 2

    def test_budget_exit(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("HYPERCONN_PSI_BUDGET", "2")
        p = tmp_path / "k6.txt"
        lines = [
            f"{a} {b}\n" for a in range(1, 7) for b in range(a + 1, 7)
        ]
        p.write_text("".join(lines))
        code, _, err = run(capsys, "psi", str(p))
        assert code == 3
        assert "resource" in err.lower() or "budget" in err.lower()

    def test_verify_ok_exit(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "fixtures", "--seed", "1"
        )
        assert code == 0
        assert "overall PASS" in out

    def test_verify_violation_exit(self, capsys, monkeypatch):
        import hyperconn.verify as verify

        real = verify._SUITES["fixtures"]
        monkeypatch.setitem(
            verify._SUITES,
            "fixtures",
            (real[0], lambda p: {"ok": False, "checks": 1, "detail": "forced"}),
        )
        code, out, _ = run(capsys, "verify", "--suite", "fixtures")
        assert code == 4
        assert "FAIL" in out

    def test_verify_json_output(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "splitting-family", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
