import csv
import io
import json
import subprocess
import sys

import pytest

from lsseq import cli
from lsseq.algebra import FieldContext
from lsseq.equivalence import BlockReport
from lsseq.sequences import ls_points


def run(args, capsys):
    code = cli.main(args)
    return code, capsys.readouterr().out


def test_gen_exact_rows(capsys):
    code, out = run(["gen", "--kind", "ls", "--L", "1", "--S", "1", "--count", "5", "--exact"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["value_exact"] for r in rows] == [
        "0 + 0*beta", "0 + 1*beta", "1 + -1*beta", "-1 + 2*beta", "-1 + 3*beta"]
    assert [int(r["index"]) for r in rows] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("L,S", [(1, 1), (2, 2), (3, 0), (1, 2)])
def test_gen_round_trip(L, S, capsys):
    _, out = run(["gen", "--L", str(L), "--S", str(S), "--count", "60", "--exact"], capsys)
    assert cli.parse_gen_csv(out, FieldContext(L, S)) == ls_points(L, S, 60)


def test_gen_other_kinds(capsys):
    _, out = run(["gen", "--kind", "vdc", "--L", "2", "--count", "4", "--exact", "--format", "json"], capsys)
    data = json.loads(out)
    assert [d["value_exact"] for d in data] == ["0 + 0*beta", "1/2 + 0*beta", "1/4 + 0*beta", "3/4 + 0*beta"]
    _, out = run(["gen", "--kind", "vdc", "--L", "2", "--count", "4"], capsys)
    assert [r["value_float"] for r in csv.DictReader(io.StringIO(out))] == ["0.0", "0.5", "0.25", "0.75"]
    _, out = run(["gen", "--kind", "symkron", "--z", "0.25", "--count", "4"], capsys)
    assert [float(r["value_float"]) for r in csv.DictReader(io.StringIO(out))] == [0, 0.25, 0.75, 0.5]
    _, out = run(["gen", "--kind", "kronecker", "--count", "3", "--exact"], capsys)
    assert list(csv.DictReader(io.StringIO(out)))[2]["value_exact"] == "-1 + 2*beta"


def test_bounds_text(capsys):
    code, out = run(["bounds", "--L", "1", "--S", "1"], capsys)
    assert code == 0
    assert "gamma=3.447" in out and "delta=3.007" in out and "delta=3.01" in out
    assert "delta=3.521" in out and "2.776" in out and "unreconciled" in out


def test_bounds_json_and_errors(capsys):
    _, out = run(["bounds", "--L", "10", "--S", "1", "--format", "json"], capsys)
    iz, c2 = json.loads(out)
    assert iz["gamma"] == pytest.approx(22.86, abs=0.01) and iz["printed_delta"] == 9.03
    assert c2["delta"] == pytest.approx(6.248, abs=1e-3)
    with pytest.raises(SystemExit) as e:
        cli.main(["bounds", "--L", "1", "--S", "0"])
    assert e.value.code == 2


def test_verify_pass(capsys):
    code, out = run(["verify", "--L", "2", "--S", "1", "--levels", "8"], capsys)
    data = json.loads(out)
    assert code == 0 and data["passed"] and all(b["passed"] for b in data["blocks"])
    assert len(data["blocks"]) == 8


def test_verify_other_s(capsys):
    code, out = run(["verify", "--L", "3", "--S", "0", "--levels", "5"], capsys)
    assert code == 0 and json.loads(out)["van_der_corput"]
    code, out = run(["verify", "--L", "2", "--S", "2", "--levels", "4"], capsys)
    assert code == 0 and json.loads(out)["passed"]


def test_verify_failure_exit_code(monkeypatch, capsys):
    bad = BlockReport(3, 2, 2, (-1, -1), [5], False)
    monkeypatch.setattr(cli, "verify_lemma2_blocks", lambda L, n: [bad])
    code, out = run(["verify", "--L", "1", "--S", "1", "--levels", "3"], capsys)
    data = json.loads(out)
    assert code == 1 and data["passed"] is False and data["reason"]


def test_disc_csv(capsys):
    code, out = run(["disc", "--kind", "ls", "--L", "1", "--S", "1", "--Ns", "10,100,1000"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and list(rows[0]) == cli.DISC_COLUMNS
    assert [int(r["N"]) for r in rows] == [10, 100, 1000]
    assert all(float(r["D_extreme"]) <= float(r["iz_bound"]) for r in rows)
    _, out = run(["disc", "--kind", "symkron", "--Ns", "5,50"], capsys)
    assert len(list(csv.DictReader(io.StringIO(out)))) == 2


def test_curve_and_probe(capsys):
    _, out = run(["curve", "--L", "2", "--S", "2", "--levels", "5"], capsys)
    assert [int(r["N"]) for r in csv.DictReader(io.StringIO(out))] == [4, 10, 28, 76, 208]
    _, out = run(["probe", "--L", "2", "--S", "2", "--kmax", "20"], capsys)
    data = json.loads(out)
    assert data["max_denominator"] == 1024
    _, out = run(["probe", "--L", "3", "--S", "2", "--kmax", "4", "--format", "csv"], capsys)
    assert out.splitlines()[-1] == "4,8"


def test_cf_and_partition(capsys):
    _, out = run(["cf", "--L", "2", "--S", "1", "--depth", "20"], capsys)
    data = json.loads(out)
    assert data["q"][:6] == [1, 0, 1, 2, 5, 12] and data["coefficients"][1:4] == [2, 2, 2]
    _, out = run(["cf", "--L", "2", "--S", "1", "--depth", "6", "--count", "9"], capsys)
    assert json.loads(out)["ostrowski"]["digits"] == [0, 0, 2, 1]
    _, out = run(["cf", "--L", "1", "--S", "1", "--depth", "4", "--format", "csv"], capsys)
    assert out.splitlines()[0] == "i,a,p,q"
    _, out = run(["partition", "--L", "1", "--S", "1", "--levels", "2"], capsys)
    assert out.splitlines()[0] == "left_exact,left_float,length_exponent"
    _, out = run(["partition", "--L", "1", "--S", "1", "--levels", "3", "--format", "json"], capsys)
    assert json.loads(out)["t"] == 5


def test_usage_errors():
    for argv in (["gen"], ["gen", "--count", "0"], ["nope"], ["gen", "--count", "x"],
                 ["disc"], ["gen", "--count", "50", "--cap", "10"], ["cf", "--S", "0"],
                 ["gen", "--count", "3", "--format", "text"]):
        with pytest.raises(SystemExit) as e:
            cli.main(argv)
        assert e.value.code == 2, argv


def test_out_file(tmp_path, capsys):
    target = tmp_path / "pts.csv"
    assert cli.main(["gen", "--count", "8", "--exact", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert len(target.read_text().splitlines()) == 9


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "lsseq", "disc", "--L", "2", "--S", "1", "--Ns", "10,200"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"N,D_extreme")
