import io

import pytest

from adinkra.cli import run
from adinkra.graph import parse_agf

from conftest import DATA


def call(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def fixture(name):
    return str(DATA / name)


def test_build_families(capsys):
    for family, value, n in (("qn", 3, 8), ("folded", 4, 8), ("k2n", 3, 6), ("knn", 3, 6)):
        code, out, _ = call(capsys, "build", family, value)
        assert code == 0
        assert parse_agf(out).n == n


def test_build_quotient_with_code_file(capsys, tmp_path):
    path = tmp_path / "d6.code"
    path.write_text("111100\n001111\n")
    for argv in (("build", "quotient", 6, "--code", path), ("quotient", 6, "--code", path)):
        code, out, _ = call(capsys, *argv)
        assert code == 0 and parse_agf(out).n == 16
    bad = tmp_path / "bad.code"
    bad.write_text("110000\n")
    code, _, err = call(capsys, "quotient", 6, "--code", bad)
    assert code == 1 and "multiple edge" in err
    code, _, err = call(capsys, "build", "quotient", 6)
    assert code == 2


def test_verify(capsys, monkeypatch):
    code, out, _ = call(capsys, "verify", fixture("adinkra_242.agf"))
    assert code == 0 and "class: ADINKRA" in out
    code, out, _ = call(capsys, "verify", fixture("k4.agf"))
    assert code == 1 and "class: NONE" in out
    _, cube, _ = call(capsys, "build", "qn", 3)
    code, out, _ = call(capsys, "verify", "-", stdin=cube, monkeypatch=monkeypatch)
    assert code == 0 and "class: PRE-ADINKRA" in out


def test_verify_reports_violations(capsys, tmp_path):
    text = (DATA / "adinkra_242.agf").read_text().replace("e 1 4 1 +", "e 1 4 1 -")
    path = tmp_path / "bad.agf"
    path.write_text(text)
    code, out, _ = call(capsys, "verify", path)
    assert code == 1 and "violations:" in out and "totally odd dashing: no" in out


def test_parse_errors_exit_two(capsys, tmp_path):
    path = tmp_path / "loop.agf"
    path.write_text("n 4\ncolors 1\ne 3 3 1\n")
    code, _, err = call(capsys, "verify", path)
    assert code == 2 and "loop" in err
    code, _, err = call(capsys, "verify", tmp_path / "missing.agf")
    assert code == 2 and "cannot read" in err
    assert call(capsys, "nonsense")[0] == 2


def test_analyze(capsys, tmp_path):
    fig = tmp_path / "m.png"
    code, out, _ = call(capsys, "analyze", fixture("q3_twisted.agf"), "--figure", fig)
    assert code == 0
    assert "1,3  4   8" in out and "order: 8" in out and "dihedral: yes" in out
    assert fig.stat().st_size > 0
    code, out, _ = call(capsys, "analyze", fixture("adinkra_242.agf"))
    assert "code (dimension 1): 1111" in out and "doubly even: yes" in out


def test_extract_code(capsys):
    code, out, _ = call(capsys, "extract-code", fixture("k4.agf"))
    assert code == 0 and out.splitlines()[-1] == "111"
    assert out.startswith("#")


def test_dash(capsys, tmp_path):
    q2 = tmp_path / "q2.agf"
    q2.write_text(call(capsys, "build", "qn", 2)[1])
    assert call(capsys, "dash", q2)[1] == "8\n"
    code, out, _ = call(capsys, "dash", q2, "--all")
    assert code == 0 and len(out.split()) == 8 and all(len(s) == 4 for s in out.split())
    code, out, _ = call(capsys, "dash", q2, "--one")
    assert code == 0
    q2_dashed = tmp_path / "q2d.agf"
    q2_dashed.write_text(out)
    assert "totally odd dashing: yes" in call(capsys, "verify", q2_dashed)[1]


def test_dash_folded_six(capsys, tmp_path):
    path = tmp_path / "f6.agf"
    path.write_text(call(capsys, "build", "folded", 6)[1])
    code, out, _ = call(capsys, "dash", path)
    assert code == 1 and "no totally odd dashing exists" in out


def test_heights(capsys, tmp_path):
    fig = tmp_path / "h.png"
    code, out, _ = call(capsys, "heights", fixture("adinkra_242.agf"), "--lower", 7, "--figure", fig)
    assert code == 0 and fig.stat().st_size > 0
    assert parse_agf(out).height == parse_agf((DATA / "adinkra_341.agf").read_text()).height
    code, out, _ = call(capsys, "heights", fixture("adinkra_242.agf"), "--valise")
    assert parse_agf(out).height == (0, 0, 1, 1, 1, 1, 0, 0)
    code, out, _ = call(capsys, "heights", fixture("adinkra_44.agf"), "--set", "7=2,8=2")
    assert code == 0 and parse_agf(out).height == (0, 0, 1, 1, 1, 1, 2, 2)
    code, _, err = call(capsys, "heights", fixture("adinkra_242.agf"), "--raise", 3)
    assert code == 1 and "cannot be raised" in err
    assert call(capsys, "heights", fixture("adinkra_242.agf"), "--set", "7:2")[0] == 2


def test_export(capsys, tmp_path):
    code, out, _ = call(capsys, "export", fixture("k4.agf"), "--format", "latin", "--color-names", "Black,Blue,Red")
    assert out.splitlines()[2] == "Black  4 3 2 1"
    code, out, _ = call(capsys, "export", fixture("k4.agf"), "--format", "matrix", "--csv")
    assert out.splitlines()[1] == "1,0,3,2,1"
    code, out, _ = call(capsys, "export", fixture("adinkra_242.agf"), "--format", "matrix", "--symbolic")
    assert "-x3" in out
    code, out, _ = call(capsys, "export", fixture("adinkra_242.agf"), "--format", "dot")
    assert out.startswith("graph adinkra")
    fig = tmp_path / "a.pdf"
    code, out, _ = call(capsys, "export", fixture("adinkra_242.agf"), "--format", "agf", "--figure", fig)
    assert code == 0 and fig.read_bytes().startswith(b"%PDF")
    assert parse_agf(out) == parse_agf((DATA / "adinkra_242.agf").read_text())


def test_emit_susy(capsys, tmp_path):
    code, out, _ = call(capsys, "emit-susy", fixture("adinkra_341.agf"), "--color", 1)
    assert code == 0 and "Q1(b8) = -1 d/dt f6" in out and len(out.splitlines()) == 8
    code, out, _ = call(capsys, "emit-susy", fixture("adinkra_341.agf"), "--format", "latex")
    assert out.startswith("\\begin{align*}")
    assert call(capsys, "emit-susy", fixture("adinkra_341.agf"), "--color", "x")[0] == 2
    unleveled = tmp_path / "u.agf"
    text = "".join(ln + "\n" for ln in (DATA / "adinkra_242.agf").read_text().splitlines() if not ln.startswith("height"))
    unleveled.write_text(text)
    assert call(capsys, "emit-susy", unleveled)[0] == 0


def test_output_file(capsys, tmp_path):
    target = tmp_path / "q3.agf"
    code, out, _ = call(capsys, "-o", target, "build", "qn", 3)
    assert code == 0 and out == ""
    assert parse_agf(target.read_text()).n == 8


def test_module_entry_point():
    import subprocess
    import sys

    done = subprocess.run([sys.executable, "-m", "adinkra", "build", "qn", "1"], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.startswith("n 2")
