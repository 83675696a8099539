import json

import pytest

from chamberlocal import corpus
from chamberlocal.cli import main
from chamberlocal.fileformat import ParseError, format_arrangement, parse_arrangement


def write(tmp_path, name, A=None, text=None):
    p = tmp_path / f"{name}.txt"
    p.write_text(text if text is not None else format_arrangement(A, name))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out


@pytest.mark.parametrize("name", sorted(corpus.corpus(extra=True)))
def test_round_trip(name):
    A = corpus.corpus(extra=True)[name]
    assert parse_arrangement(format_arrangement(A, "x")) == A


def test_parse_errors():
    with pytest.raises(ParseError) as e:
        parse_arrangement("dim 2\n1 0 0\n1 x 0\n")
    assert e.value.line == 3
    with pytest.raises(ParseError):
        parse_arrangement("1 0 0\n")
    with pytest.raises(ParseError):
        parse_arrangement("dim 3\n")
    with pytest.raises(ParseError):
        parse_arrangement("# nothing\n")
    with pytest.raises(ParseError) as e:
        parse_arrangement("dim 2\n1 0 0\n0 1 0\n2 0 0\n")
    assert e.value.line is not None
    A = parse_arrangement("# c\ndim 2\n1 0 0   # x\n\n0 1 0\n1 1 1\n")
    assert A == corpus.get("generic3")


def test_cohomology_nontrivial(tmp_path, capsys):
    f = write(tmp_path, "g3", corpus.get("generic3"))
    code, out = run(capsys, "cohomology", f, "--m", "2", "--exponents", "1,1,1")
    doc = json.loads(out.out)
    assert code == 0 and doc["h"][0] == 0 and doc["pass"]
    assert doc["verdicts"]["strictness"]


def test_cohomology_trivial(tmp_path, capsys):
    f = write(tmp_path, "p3", corpus.get("pencil3"))
    code, out = run(capsys, "cohomology", f, "--m", "1")
    doc = json.loads(out.out)
    assert code == 0 and doc["h"] == doc["arrangement"]["betti"] == [1, 3, 2]


def test_cohomology_prime_roots(tmp_path, capsys):
    f = write(tmp_path, "pts", corpus.get("points2"))
    # 2 has order 4 mod 5, so q = (-1, -1)
    code, out = run(capsys, "cohomology", f, "--prime", "5", "--roots", "2,2")
    assert code == 0 and json.loads(out.out)["h"] == [0, 1]
    code, out = run(capsys, "cohomology", f, "--roots", "2,2")
    assert code == 2 and "requires --prime" in out.err
    code, out = run(capsys, "cohomology", f, "--m", "2", "--exponents", "1")
    assert code == 2


def test_sweep_pencil_plus_one(tmp_path, capsys):
    f = write(tmp_path, "pp", corpus.get("pencil3_plus1"))
    code, out = run(capsys, "sweep", f, "--m", "2", "--full")
    doc = json.loads(out.out)
    assert code == 0 and doc["sweep"]["characters"] == 16 and doc["sweep"]["pass"]
    assert len(doc["sweep"]["results"]) == 16
    code, out = run(capsys, "sweep", f, "--m", "2", "--prime")
    assert code == 0 and json.loads(out.out)["sweep"]["field"] == "GF(5)"
    code, out = run(capsys, "sweep", f, "--m", "3", "--limit", "10")
    assert code == 2 and "exceed" in out.err


def test_sweep_table(tmp_path, capsys):
    f = write(tmp_path, "c", corpus.get("cross"))
    code, out = run(capsys, "sweep", f, "--m", "2", "--table")
    assert code == 0 and "h=(0, 0, 0): 3" in out.out and "pass: True" in out.out


def test_analyze(tmp_path, capsys):
    f = write(tmp_path, "s", corpus.get("strip"))
    code, out = run(capsys, "analyze", f)
    doc = json.loads(out.out)
    assert code == 0 and doc["chambers"]["total"] == 6
    assert all(fl["strata_match_betti"] and fl["opposite_degrees"] for fl in doc["flags"])
    code, out = run(capsys, "analyze", f, "--table", "--seeds", "2")
    assert code == 0 and "dimX" in out.out


def test_aomoto(tmp_path, capsys):
    f = write(tmp_path, "p3", corpus.get("pencil3"))
    code, out = run(capsys, "aomoto", f, "--weights", "1,1,1")
    doc = json.loads(out.out)
    assert code == 0 and doc["aomoto_dims"] == [0, 0, 0] and doc["verdicts"]["central_exact"]
    code, out = run(capsys, "aomoto", f, "--weights", "1,2,4", "--field", "7")
    assert code == 0 and json.loads(out.out)["aomoto_dims"] == [0, 1, 1]
    code, out = run(capsys, "aomoto", f, "--weights", "1,1")
    assert code == 2
    code, out = run(capsys, "aomoto", f, "--weights", "1,1,1", "--field", "8")
    assert code == 2


def test_triple(tmp_path, capsys):
    f = write(tmp_path, "g3", corpus.get("generic3"))
    code, out = run(capsys, "triple", f, "--delete", "3", "--m", "2", "--exponents", "1,1,0")
    doc = json.loads(out.out)
    assert code == 0 and doc["betti_additivity"] and doc["report"]["inequality_ok"]
    assert doc["equality_case"] == "hypothesis not triggered"
    code, out = run(capsys, "triple", f, "--delete", "1", "--m", "2", "--exponents", "1,1,0")
    assert code == 2
    code, out = run(capsys, "triple", f, "--delete", "4")
    assert code == 2


def test_errors(tmp_path, capsys):
    bad = write(tmp_path, "bad", text="dim 2\n1 0 0\n2 0 0\n")
    code, out = run(capsys, "cohomology", bad)
    assert code == 2 and "error" in out.err
    code, out = run(capsys, "cohomology", str(tmp_path / "missing.txt"))
    assert code == 2
    with pytest.raises(SystemExit) as e:
        main(["nosuchcommand"])
    assert e.value.code == 2


def test_selftest_file(tmp_path, capsys):
    f = write(tmp_path, "g3", corpus.get("generic3"))
    code, out = run(capsys, "selftest", f)
    assert code == 0 and "FAIL" not in out.out and "PASS" in out.out


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "chamberlocal", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and "sweep" in res.stdout
