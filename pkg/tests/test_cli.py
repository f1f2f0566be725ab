import json

import pytest

from grlcodes.cli import main


@pytest.fixture()
def a1_spec_file(tmp_path):
    spec = {
        "field": "3^4", "k": 5, "l": 2,
        "alpha": ["g^18", "g^34", "g^50", "g^66", "g^2"],
        "v": ["g^0"] * 5,
        "A": [["g^1", "g^2"], ["g^3", "g^5"]],
    }
    path = tmp_path / "a1.json"
    path.write_text(json.dumps(spec))
    return str(path)


def test_report_a1(a1_spec_file, capsys):
    rc = main(["report", "--spec", a1_spec_file])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    rep = out["report"]
    assert (rep["n"], rep["k"], rep["d"]) == (7, 5, 3)
    assert rep["label"] == "MDS"
    assert rep["hull_euclidean"]["is_lcd"]
    assert rep["nongrs"]["verdict"] == "non_grs"
    assert out["manifest"]["modulus"] == [2, 0, 0, 2, 1]


def test_report_rejects_singular_tail(tmp_path, capsys):
    spec = {
        "field": "7", "k": 3, "l": 2,
        "alpha": ["0", "1", "g^1", "g^2"],
        "v": ["1"] * 4,
        "A": [["1", "1"], ["1", "1"]],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(spec))
    rc = main(["report", "--spec", str(path)])
    err = capsys.readouterr().err
    assert rc == 2
    assert "GL_l" in err


def test_report_csv(a1_spec_file, capsys):
    rc = main(["report", "--spec", a1_spec_file, "--csv"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert out[0] == "n,k,d,label,hull_e,hull_h"
    assert out[1].startswith("7,5,3,MDS,0,")


def test_appendix_a_table(capsys):
    rc = main(["appendix", "A"])
    out = capsys.readouterr().out
    assert rc == 0
    lines = [l for l in out.splitlines() if "PASS" in l or "FAIL" in l]
    assert len(lines) == 9
    assert all("PASS" in l for l in lines)
    assert "9/9 rows pass" in out


def test_appendix_json_deterministic(tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(["appendix", "A", "--json", "--out", str(out1)]) == 0
    assert main(["appendix", "A", "--json", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    rows = json.loads(out1.read_text())["rows"]
    assert len(rows) == 9 and all(r["passed"] for r in rows)
    assert all("source_claim" in r for r in rows)


def test_sweep_cell(tmp_path, capsys):
    out = tmp_path / "audits.json"
    rc = main(["sweep", "--family", "E1", "--q", "81", "--k", "5", "--l", "2",
               "--delta", "2", "--samples", "5", "--seed", "7",
               "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_text())
    assert data["count"] == 5 and data["all_passed"]
    assert data["manifest"]["seed"] == 7
    # byte-identical on the same seed
    out2 = tmp_path / "audits2.json"
    main(["sweep", "--family", "E1", "--q", "81", "--k", "5", "--l", "2",
          "--delta", "2", "--samples", "5", "--seed", "7", "--out", str(out2)])
    assert out.read_bytes() == out2.read_bytes()


def test_sweep_family_over_q(capsys):
    rc = main(["sweep", "--family", "H1", "--q", "9", "--samples", "2",
               "--seed", "3", "--budget", "500"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0 and out["all_passed"] and out["count"] > 0


def test_count_command(capsys):
    rc = main(["count", "--q", "5", "--k", "2", "--c", "0"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert out[0] == "9"
    assert "agree" in out[1]
    rc = main(["count", "--q", "5", "--k", "2", "--c", "0", "--nonzero"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0 and out[0] == "8"


def test_nongrs_command(a1_spec_file, capsys):
    rc = main(["nongrs", "--spec", a1_spec_file])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert out["certificate"]["verdict"] == "non_grs"


def test_eaqecc_command(a1_spec_file, capsys):
    rc = main(["eaqecc", "--spec", a1_spec_file])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    prim, dual = out["eaqecc"]["euclidean"]
    assert (prim["n"], prim["k"], prim["d"], prim["c"]) == (7, 5, 3, 2)
    assert (dual["n"], dual["k"], dual["d"], dual["c"]) == (7, 2, 6, 5)
    assert prim["mds"] and dual["mds"]


def test_sweep_two_block_cell_needs_shifts(capsys):
    rc = main(["sweep", "--family", "E3", "--q", "31", "--k", "5", "--l", "2",
               "--samples", "2", "--seed", "1"])
    assert rc == 2
    assert "--s and --t" in capsys.readouterr().err
    rc = main(["sweep", "--family", "E3", "--q", "31", "--k", "5", "--l", "2",
               "--s", "1", "--t", "9", "--samples", "2", "--seed", "1"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0 and out["all_passed"] and out["count"] == 2


def test_report_hermitian_spec(tmp_path, capsys):
    spec = {
        "field": "3^4", "k": 8, "l": 2,
        "alpha": [f"g^{10 * i + 1}" for i in range(1, 9)],
        "v": ["1"] * 8,
        "A": [["g^1", "g^2"], ["g^3", "g^5"]],
    }
    path = tmp_path / "b1.json"
    path.write_text(json.dumps(spec))
    rc = main(["report", "--spec", str(path), "--no-nongrs"])
    rep = json.loads(capsys.readouterr().out)["report"]
    assert rc == 0
    assert (rep["n"], rep["k"], rep["d"]) == (10, 8, 3)
    assert rep["hull_hermitian"]["is_lcd"]
    assert rep["eaqecc"]["hermitian"][0]["c"] == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--family", "Z9", "--q", "5"])
    assert exc.value.code == 2
