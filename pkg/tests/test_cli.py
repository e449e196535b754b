import json

import pytest

from gridmorse.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_graph_json(capsys):
    code, out = run(capsys, "graph", "--family", "delta", "--m", "2", "--n", "1")
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "delta"
    assert len(data["vertices"]) == 7


def test_graph_determinism(capsys):
    _, out1 = run(capsys, "graph", "--family", "theta", "--m", "3", "--n", "2")
    _, out2 = run(capsys, "graph", "--family", "theta", "--m", "3", "--n", "2")
    assert out1 == out2


def test_complex_output(capsys):
    code, out = run(capsys, "complex", "--family", "cycle", "--n", "6", "--faces")
    assert code == 0
    data = json.loads(out)
    assert data["f_vector"] == [1, 6, 9, 2]
    assert data["reduced_euler"] == -2
    assert len(data["faces"]) == 18


def test_census_csv(capsys):
    code, out = run(capsys, "census", "--m", "2", "--nmax", "10", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m,n,d,count"
    assert "2,4,3,5" in lines
    rows_n = {int(line.split(",")[1]) for line in lines[1:]}
    assert rows_n == set(range(11))


def test_census_oeis_bfile(capsys):
    code, out = run(capsys, "census", "--m", "2", "--nmax", "4", "--oeis")
    assert code == 0
    assert out.strip().splitlines() == ["0 1", "1 -2", "2 1", "3 2", "4 -5"]


def test_morse_subcommand(capsys):
    code, out = run(capsys, "morse", "--family", "delta", "--m", "2", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["census"]["census"] == {"2": 2}
    assert len(data["critical"]) == 2


def test_homology_subcommand(capsys):
    code, out = run(capsys, "homology", "--family", "delta", "--m", "2", "--n", "2")
    assert code == 0
    data = json.loads(out)
    assert {"d": 2, "betti": 1, "torsion": []} in data["dims"]


def test_riordan_subcommand(capsys):
    code, out = run(capsys, "riordan", "--nmax", "15")
    assert code == 0
    assert "ok" in out


def test_scan_subcommand(capsys):
    code, out = run(capsys, "scan", "--nmax", "99")
    assert code == 0
    assert "[48, 61, 74, 84, 87, 90, 94, 97]" in out


def test_verify_subcommand(capsys):
    code, out = run(capsys, "verify", "--m", "2", "--nmax", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.split()[0] in ("PASS", "SKIP") for line in lines[:-1])
    assert lines[-1].endswith("0 failed")


def test_verify_jobs(capsys):
    code1, out1 = run(capsys, "verify", "--m", "2", "--nmax", "2")
    code2, out2 = run(capsys, "verify", "--m", "2", "--nmax", "2", "--jobs", "2")
    assert (code1, code2) == (0, 0)
    assert out1 == out2


def test_usage_errors(capsys):
    code, _ = run(capsys, "graph", "--family", "star", "--n", "2")
    assert code == 2
    code, _ = run(capsys, "graph", "--family", "path", "--n", "-4")
    assert code == 2


def test_capacity_exit_code(capsys):
    code, _ = run(capsys, "complex", "--family", "star", "--m", "3", "--n", "12",
                  "--face-cap", "1000")
    assert code == 3


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("MG_FACE_CAP", "1000")
    code, _ = run(capsys, "complex", "--family", "star", "--m", "3", "--n", "12")
    assert code == 3


def test_out_file(tmp_path, capsys):
    target = tmp_path / "graph.json"
    code, out = run(capsys, "graph", "--family", "path", "--n", "3",
                    "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["family"] == "path"


def test_bad_subcommand_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["nonesuch"])
    assert err.value.code == 2
