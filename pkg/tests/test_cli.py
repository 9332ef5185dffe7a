import json

from branchkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_dim(capsys):
    code, out = run_cli(capsys, "dim", "--series", "C", "--n", "2", "--m", "1,0")
    assert code == 0
    assert json.loads(out) == {"dim": 4}


def test_unknown_series_is_status_2(capsys):
    code, out = run_cli(capsys, "tableaux", "--series", "X", "--n", "2", "--m", "1,0")
    assert code == 2
    assert json.loads(out)["error"]["code"] == "invalid_request"


def test_invalid_weight_is_status_2(capsys):
    code, out = run_cli(capsys, "dim", "--series", "C", "--n", "2", "--m", "0,1")
    assert code == 2
    assert "error" in json.loads(out)


def test_hv_check(capsys):
    code, out = run_cli(
        capsys, "hv", "--series", "B", "--n", "2", "--m", "1/2,1/2", "--check", "--seed", "3"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["pass"] is True
    exps = {f["exp"] for t in doc["polynomial"]["terms"] for f in t["factors"]}
    assert exps == {"1/2"}


def test_verify_exit_status_and_determinism(capsys):
    args = ("verify", "--series", "D", "--n", "2", "--m", "1,0", "--trials", "8", "--seed", "2")
    code1, out1 = run_cli(capsys, *args)
    code2, out2 = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["pass"] is True


def test_basis_out_file_and_act_round_trip(tmp_path, capsys):
    basis_path = tmp_path / "basis.json"
    code, _ = run_cli(
        capsys,
        "basis", "--series", "C", "--n", "2", "--m", "1,0", "--out", str(basis_path),
    )
    assert code == 0
    doc = json.loads(basis_path.read_text())
    assert doc["count"] == 3
    poly_path = tmp_path / "poly.json"
    poly_path.write_text(json.dumps(doc["items"][0]["polynomial"]))
    code, out = run_cli(
        capsys,
        "act", "--series", "C", "--n", "2", "--op", "L:-2,-1", "--poly", str(poly_path),
    )
    assert code == 0
    assert "polynomial" in json.loads(out)


def test_relations_cli(capsys):
    code, out = run_cli(
        capsys, "relations", "--series", "C", "--n", "2", "--trials", "10", "--seed", "1"
    )
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_env_seed_fallback(capsys, monkeypatch):
    monkeypatch.setenv("BRANCHKIT_SEED", "11")
    code, out = run_cli(
        capsys, "verify", "--series", "C", "--n", "2", "--m", "1,0", "--trials", "5"
    )
    assert code == 0
    monkeypatch.setenv("BRANCHKIT_SEED", "11")
    _, out2 = run_cli(
        capsys, "verify", "--series", "C", "--n", "2", "--m", "1,0", "--trials", "5", "--seed", "11"
    )
    assert out == out2


def test_pretty_format(capsys):
    code, out = run_cli(
        capsys, "dim", "--series", "C", "--n", "2", "--m", "1,0", "--format", "pretty"
    )
    assert code == 0 and out.startswith("{\n")
