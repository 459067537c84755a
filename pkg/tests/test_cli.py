import json
import subprocess
import sys

import pytest

from monideal.cli import main
from monideal.families import counterexample, veronese
from monideal.io import format_ideal, ideal_to_dict, parse_ideal


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, ideal in [("cex", counterexample()), ("ver", veronese(2, 2))]:
        p = tmp_path / f"{name}.ideal"
        p.write_text(format_ideal(ideal))
        paths[name] = str(p)
    p = tmp_path / "disjoint.ideal"
    p.write_text("n=4\nx1*x2\nx3*x4\n")
    paths["disjoint"] = str(p)
    p = tmp_path / "mixed.ideal"
    p.write_text("n=2\nx1\nx2^2\n")
    paths["mixed"] = str(p)
    p = tmp_path / "bad.ideal"
    p.write_text("n=2\nx1*\n")
    paths["bad"] = str(p)
    p = tmp_path / "padded.ideal"
    p.write_text("n=4\nx2^2\nx2*x4\nx4^2\n")
    paths["padded"] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_counterexample(capsys, files):
    code, out, _ = run(capsys, "invariants", files["cex"])
    assert code == 0
    assert out.startswith("n=6 h=4 unmixed=yes q=4 ")
    assert out.rstrip().endswith("CM=no")


def test_classify_veronese(capsys, files):
    code, out, _ = run(capsys, "classify", files["ver"])
    assert code == 0
    assert out.startswith("verdict=Veronese vars={1,2} d=2 h=2 q=1")


def test_check_witness(capsys, files):
    code, out, _ = run(capsys, "check", files["disjoint"])
    assert code == 0
    assert "polymatroidal=no" in out and "u=x1*x2 v=x3*x4 i=1" in out


def test_invariants_without_linear_quotients(capsys, files):
    code, out, _ = run(capsys, "invariants", files["disjoint"])
    assert code == 0
    assert "no linear quotients" in out and "CM=unknown" in out


def test_radical_round_trip(capsys, files):
    code, out, _ = run(capsys, "radical", files["ver"])
    assert code == 0
    r = parse_ideal(out)
    assert r == parse_ideal("n=2\nx1\nx2\n")
    assert parse_ideal(format_ideal(r)) == r


def test_product(capsys, files):
    code, out, _ = run(capsys, "product", files["ver"], files["ver"])
    assert code == 0
    assert parse_ideal(out) == veronese(4, 2)


def test_path(capsys, files):
    code, out, _ = run(capsys, "path", files["ver"], "x1^2", "x2^2", "2")
    assert code == 0
    assert "j0=1" in out and "x1*x2" in out


def test_shrink(capsys, files):
    _, out, _ = run(capsys, "invariants", files["padded"])
    assert out.startswith("n=4 h=2")
    _, out, _ = run(capsys, "invariants", "--shrink", files["padded"])
    assert out.startswith("n=2 h=2") and "depth=0" in out


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--d", "2", "--cap", "1")
    assert code == 0
    assert out.startswith("ideals=63 polymatroidal=36 violations=0")


def test_enumerate_rows(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "3", "--d", "2", "--cap", "1")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0].split("\t")[0] == "ideal"
    assert len(lines) == 1 + 7
    assert "rows=7" in err


def test_structured_matches_text(capsys, files):
    _, text, _ = run(capsys, "classify", files["cex"])
    _, js, _ = run(capsys, "classify", "--format", "structured", files["cex"])
    rec = json.loads(js)
    fields = dict(kv.split("=", 1) for kv in text.split() if "=" in kv)
    assert fields["verdict"] == rec["verdict"]
    assert int(fields["h"]) == rec["h"] and int(fields["q"]) == rec["q"]
    assert int(fields["dim"]) == rec["dim"] and int(fields["depth"]) == rec["depth"]

    _, text, _ = run(capsys, "invariants", files["cex"])
    _, js, _ = run(capsys, "invariants", "--format", "structured", files["cex"])
    rec = json.loads(js)
    fields = dict(kv.split("=", 1) for kv in text.split() if "=" in kv)
    assert int(fields["h"]) == rec["h"] and int(fields["q"]) == rec["q"]
    assert (fields["CM"] == "yes") == rec["cm"]


def test_structured_input(capsys, tmp_path):
    p = tmp_path / "v.json"
    p.write_text(json.dumps(ideal_to_dict(veronese(2, 2))))
    code, out, _ = run(capsys, "classify", str(p))
    assert code == 0 and out.startswith("verdict=Veronese")


@pytest.mark.parametrize("argv, needle", [
    (["invariants", "{bad}"], "column 4"),
    (["classify", "{mixed}"], "NotEquigenerated"),
    (["invariants", "/nonexistent/file"], "error"),
    (["verify", "--n", "7", "--d", "2", "--cap", "2"], "BudgetExceeded"),
    (["path", "{ver}", "x1^2", "x1^2", "1"], "a_i < b_i"),
])
def test_input_errors_exit_2(capsys, files, argv, needle):
    argv = [a.format(**files) for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert needle in err


def test_degenerate_reported(capsys, tmp_path):
    p = tmp_path / "unit.ideal"
    p.write_text("n=2\n1\n")
    code, _, err = run(capsys, "classify", str(p))
    assert code == 2 and "unit ideal" in err


def test_verify_violation_exit_1(capsys, monkeypatch):
    import monideal.enumeration as enum

    def broken(row, paths=False):
        if row.is_polymatroidal:
            raise enum.VerificationError("planted", row)

    monkeypatch.setattr(enum, "check_row", broken)
    code, out, _ = run(capsys, "verify", "--n", "3", "--d", "2", "--cap", "1")
    assert code == 1 and "violations=1" in out and "planted" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "monideal.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "verify" in proc.stdout
