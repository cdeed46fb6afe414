"""Command-line behaviour: outputs, exit codes, error handling."""

import subprocess
import sys

import pytest

from transop.cli import cli_dispatch
from transop.systemio import fixture_path

FIREFLY = str(fixture_path("firefly.system"))
FIREFLY3 = str(fixture_path("firefly3.system"))
FIREFLY_R2 = str(fixture_path("firefly-r2.system"))

TINY = """\
system tiny
lattice chain2
states s1 s2
prop bot = 0 0
prop top = 1 1
rel s1 s2
"""


def run(argv, capsys):
    code = cli_dispatch(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate(capsys):
    code, out, _ = run(["validate", FIREFLY], capsys)
    assert code == 0
    assert "system firefly: OK" in out
    assert "12 propositions" in out


def test_validate_missing_file(capsys):
    code, _, err = run(["validate", "/no/such/file.system"], capsys)
    assert code == 2
    assert "error:" in err


def test_validate_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.system"
    bad.write_text(TINY + "rel s1 s9\n")
    code, _, err = run(["validate", str(bad)], capsys)
    assert code == 2
    assert "unknown state s9" in err


def test_operators_both(capsys):
    code, out, _ = run(["operators", FIREFLY, "--both"], capsys)
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 24
    assert any(l.startswith("upper b ") and l.split("=")[1].split("#")[0].split()
               == ["1", "1", "0", "0", "0"] for l in lines)
    assert sum(1 for l in lines if l.startswith("upper")) == 12


def test_operators_single_side(capsys):
    code, out, _ = run(["operators", FIREFLY, "--lower"], capsys)
    assert code == 0
    assert all(l.startswith("lower") for l in out.splitlines() if l.strip())


def test_induce(capsys):
    code, out, _ = run(["induce", FIREFLY], capsys)
    assert code == 0
    assert "induced upper relation (7 pairs)" in out
    assert "induced lower relation (11 pairs)" in out
    assert "rel s1 s3" in out


def test_recover_firefly_exits_one(capsys):
    code, out, _ = run(["recover", FIREFLY], capsys)
    assert code == 1
    assert "upper: RECOVERED" in out
    assert "lower: NOT RECOVERED (+4 pairs: (s1,s3) (s2,s2) (s3,s3) (s4,s2))" in out
    assert "extra s1 s3" in out
    assert "extra s4 s2" in out


def test_recover_r2_exits_zero(capsys):
    code, out, _ = run(["recover", FIREFLY_R2], capsys)
    assert code == 0
    assert out.count("RECOVERED") == 2
    assert "NOT" not in out


def test_iterate_lower_first(capsys):
    code, out, _ = run(["iterate", FIREFLY3, "--first", "lower"], capsys)
    assert code == 0
    assert "step 1 lower added: (s1,s3) (s2,s2) (s3,s3) (s4,s2)" in out
    assert "step 2 upper added: (s3,s1)" in out
    assert "step 3 lower added: none" in out
    assert "converged after 4 steps (2 productive)" in out
    assert "fixpoint (13 pairs)" in out


def test_iterate_respects_max_steps(capsys):
    code, out, _ = run(["iterate", FIREFLY3, "--max-steps", "1"], capsys)
    assert code == 1
    assert "not converged" in out


def test_witnesses(capsys):
    code, out, _ = run(["witnesses", FIREFLY], capsys)
    assert code == 1
    assert "upper certification: COMPLETE" in out
    assert "lower certification: INCOMPLETE (failed: s1 s2 s3 s4)" in out
    assert "t=s3: r'" in out
    assert "s=s5: n" in out


def test_witnesses_r2_certified(capsys):
    code, out, _ = run(["witnesses", FIREFLY_R2], capsys)
    assert code == 0
    assert out.count("COMPLETE") == 2


def test_fixpoints_on_tiny_system(tmp_path, capsys):
    path = tmp_path / "tiny.system"
    path.write_text(TINY)
    code, out, _ = run(["fixpoints", str(path)], capsys)
    assert code == 0
    assert "4 fixpoints" in out
    assert "fixpoint 0: (empty)" in out


def test_fixpoints_cap_exceeded(capsys):
    code, _, err = run(["fixpoints", FIREFLY], capsys)
    assert code == 2
    assert "cap" in err


def test_oracle_all_passes(capsys):
    code, out, _ = run(["oracle", "--states", "2", "--suite", "all"], capsys)
    assert code == 0
    assert "theorem3 n=2 |B|=4: PASS (16 relations, 25 maps)" in out
    assert "theorem4 n=2 |B|=4: PASS" in out
    assert out.count("lemma2") == 7
    assert "FAIL" not in out


def test_oracle_single_suite(capsys):
    code, out, _ = run(["oracle", "--states", "1", "--suite", "theorem3"], capsys)
    assert code == 0
    assert out.strip().startswith("theorem3 n=1")


def test_oracle_rejects_large_n(capsys):
    code, _, err = run(["oracle", "--states", "5", "--suite", "theorem3"], capsys)
    assert code == 2
    assert "cap" in err


def test_dot_relation(capsys):
    code, out, _ = run(["dot", FIREFLY, "--what", "relation"], capsys)
    assert code == 0
    assert out.startswith('digraph "firefly"')
    assert '"s5" -> "s5";' in out


def test_dot_hasse(capsys):
    code, out, _ = run(["dot", FIREFLY, "--what", "hasse"], capsys)
    assert code == 0
    assert out.count("->") == 22


def test_bad_usage_exits_two(capsys):
    assert run(["frobnicate"], capsys)[0] == 2
    assert run(["recover"], capsys)[0] == 2
    assert run(["oracle", "--suite", "nonsense"], capsys)[0] == 2
    assert run([], capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "transop", "validate", FIREFLY],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "system firefly: OK" in proc.stdout
