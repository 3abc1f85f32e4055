import csv
import io
import json

import pytest

from nearcentral.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_genus_table_csv(capsys):
    code, out, _ = run(capsys, "genus-table", "--n", "8", "--p", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["n", "p", "g", "count"]
    assert all(r["n"] == "8" and r["p"] == "3" for r in rows)
    assert sum(int(r["count"]) for r in rows) == 720


def test_genus_table_checked_against_brute_force(capsys):
    code, out, _ = run(capsys, "genus-table", "--n", "6", "--brute", "--jobs", "2")
    assert code == 0
    # p = 1 is filled from the face formula
    assert out.splitlines()[1].startswith("6,1,")


def test_genchar_report(capsys):
    # upper index first: gamma^{(2,2),2} at the class ((3,1),1)
    code, out, _ = run(capsys, "genchar", "--rho", "2,2", "--ell", "2", "--mu", "3,1", "--j", "1", "--n", "4")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["value"] for r in rows} == {"-1"}
    assert {"strahov", "oracle", "at-(n-1,1)", "jm-contents"} <= {r["method"] for r in rows}
    code, out, _ = run(capsys, "genchar", "--rho", "3,1", "--ell", "1", "--mu", "2,2", "--j", "2", "--n", "4")
    assert code == 0
    assert {r["value"] for r in csv.DictReader(io.StringIO(out))} == {"-1/3"}


def test_genchar_json(capsys):
    code, out, _ = run(capsys, "genchar", "--rho", "3,2", "--ell", "3", "--mu", "3,2", "--j", "2", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert [list(r) for r in records] == [["method", "value"]] * len(records)
    assert len({r["value"] for r in records}) == 1


def test_output_is_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        assert main(["face-table", "--n", "6", "--format", "json", "--output", str(path)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert capsys.readouterr().out == ""
    records = json.loads(paths[0].read_text())
    assert sum(r["count"] for r in records if r["p"] == 2) == 24


def test_face_table_general_q(capsys):
    code, out, _ = run(capsys, "face-table", "--n", "5", "--p", "2", "--q", "3")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert sum(int(r["count"]) for r in rows) == 36


def test_connection_and_decompose(capsys):
    code, out, _ = run(
        capsys, "connection", "--lam", "2,1", "--i", "1", "--mu", "2,1", "--j", "2", "--nu", "3", "--k", "3", "--brute"
    )
    assert code == 0 and out.splitlines()[1:] == ["characters,1", "brute-force,1"]
    code, out, _ = run(capsys, "decompose", "--lam", "2,1", "--i", "1", "--mu", "2,1", "--j", "2", "--brute")
    assert code == 0 and out.splitlines()[1] == '3,"2,1",1,"2,1",2,1'
    code, out, _ = run(capsys, "decompose", "--n", "4", "--brute")
    assert code == 0 and len(out.splitlines()) == 1 + 49


def test_symmetry(capsys):
    code, out, _ = run(capsys, "symmetry", "--n-max", "12")
    assert code == 0
    assert "false" not in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--n-max", "6")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["suite"] for r in rows} >= {"genchar", "connection", "decompositions", "dipoles"}
    assert all(r["mismatches"] == "0" for r in rows)


@pytest.mark.parametrize(
    "argv",
    [
        ["genus-table", "--n", "5", "--p", "9"],
        ["genchar", "--rho", "3,1", "--ell", "2", "--mu", "4", "--j", "4"],
        ["genchar", "--rho", "3,x", "--ell", "1", "--mu", "4", "--j", "4"],
        ["decompose", "--lam", "2,1", "--i", "1"],
        ["nonsense"],
        ["symmetry", "--n-max", "3"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_resource_guard_exit(capsys):
    code, _, err = run(capsys, "genus-table", "--n", "9", "--p", "2", "--brute", "--max-brute-n", "8")
    assert code == 3 and "refused" in err
    assert run(capsys, "verify", "--suite", "connection", "--n-max", "5", "--max-brute-n", "4")[0] == 3


def test_mismatch_exit(capsys, monkeypatch):
    import nearcentral.cli as cli

    monkeypatch.setattr(cli, "genus_counts", lambda n, p: {0: 1})
    code, _, err = run(capsys, "genus-table", "--n", "5", "--p", "2", "--brute")
    assert code == 1 and "mismatch" in err
