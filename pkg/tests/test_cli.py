"""Command-line surface: exit codes, determinism, output shape."""

from __future__ import annotations

import pytest

from sasakian import cli
from sasakian.errors import VerificationError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_g2(capsys):
    code, out, _ = run(capsys, "verify", "G2")
    assert code == 0
    assert "n = 2" in out and "dim M = 11" in out and "Ric = 10 g" in out
    assert "g2-short-root-probe" in out


def test_report_a1(capsys):
    code, out, _ = run(capsys, "report", "A1")
    assert code == 0
    assert "S^3" in out and "| 2 |" in out  # Einstein constant 2 at n = 0


def test_table_contains_families(capsys):
    code, out, _ = run(capsys, "table", "--format", "md", "--max-rank", "8")
    assert code == 0
    for fragment in ["S^{", "SU(", "SO(", "G2/Sp(1)", "F4/Sp(3)", "E6/SU(6)",
                     "E7/Spin(12)", "E8/E7"]:
        assert fragment.replace("S^{", "S^") in out


def test_output_determinism(capsys):
    _, out1, _ = run(capsys, "table", "--format", "json", "--max-rank", "6")
    _, out2, _ = run(capsys, "table", "--format", "json", "--max-rank", "6")
    assert out1 == out2
    _, v1, _ = run(capsys, "verify", "C2", "--format", "json", "--mode", "sampled",
                   "--seed", "5")
    _, v2, _ = run(capsys, "verify", "C2", "--format", "json", "--mode", "sampled",
                   "--seed", "5")
    assert v1 == v2


def test_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "Z9")
    assert code == 2 and "unknown series" in err
    code, _, err = run(capsys, "report", "D3")
    assert code == 2 and "requires rank" in err
    code, _, err = run(capsys, "verify", "A2", "--checks", "bogus")
    assert code == 2 and "unknown checks" in err


def test_argparse_usage_exit_code(capsys):
    code = cli.main(["table", "--format", "xml"])
    assert code == 2


def test_verification_failure_exits_one(capsys, monkeypatch):
    def boom(*a, **k):
        raise VerificationError("einstein", "Ric(0, 0) residual forced for the test")

    monkeypatch.setattr(cli, "curvature_checks", boom)
    code, _, err = run(capsys, "verify", "A1")
    assert code == 1
    assert "einstein" in err


def test_checks_subset(capsys):
    code, out, _ = run(capsys, "verify", "A2", "--checks", "identities,nomizu")
    assert code == 0
    assert "sasaki-identities" in out and "nomizu-operator" in out
    assert "curvature" not in out


def test_verify_all_smoke(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-rank", "2")
    assert code == 0
    # A1, A2, B2, C2, G2
    assert out.count("verify ") == 5


def test_mode_auto_resolution(capsys):
    _, out, _ = run(capsys, "verify", "C2", "--format", "json")
    assert '"mode": "full"' in out
    _, out, _ = run(capsys, "verify", "E7", "--format", "json",
                    "--checks", "datum")
    assert '"mode": "sampled"' in out


def test_roots_command(capsys):
    code, out, _ = run(capsys, "roots", "E8", "--format", "json")
    assert code == 0
    assert '"num_roots": 240' in out
