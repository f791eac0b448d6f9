import csv
import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from tokenspectra.cli import RunConfig, main, parse_range
from tokenspectra.errors import ValidationError
from tokenspectra.formats import parse_edge_list, parse_graph6
from tokenspectra.graphs import Graph, complete


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("tokenspectra").joinpath("report.schema.json").read_text())


@pytest.fixture
def p3(tmp_path):
    path = tmp_path / "p3.edges"
    path.write_text("3 2\n1 2\n2 3\n")
    return str(path)


def test_parse_range():
    assert parse_range("3") == [3]
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("2,5..6") == [2, 5, 6]
    with pytest.raises(ValidationError):
        parse_range("a..b")


def test_run_config_validation():
    with pytest.raises(ValidationError):
        RunConfig("spectrum", tol=0.0)
    with pytest.raises(ValidationError):
        RunConfig("spectrum", max_dim=0)
    with pytest.raises(ValidationError):
        RunConfig("bogus")


def test_spectrum_johnson(capsys):
    code, out, _ = run(["spectrum", "--family", "complete", "--n", "4", "--k", "2"], capsys)
    assert code == 0
    assert "0 ×1; 4 ×3; 6 ×2" in out.splitlines()
    assert "non-trivial: 6 ×2" in out


def test_spectrum_json_and_csv(capsys):
    code, out, _ = run(["spectrum", "--family", "complete", "--n", "4", "--k", "2", "--format", "json"], capsys)
    doc = json.loads(out)["spectra"][0]
    assert doc["spectrum"] == [[0.0, 1], [4.0, 3], [6.0, 2]]
    assert doc["nontrivial"] == [[6.0, 2]]
    code, out, _ = run(["spectrum", "--family", "path", "--n", "4", "--k", "2", "--format", "csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert sum(int(r["multiplicity"]) for r in rows if r["part"] == "full") == 6
    assert sum(int(r["multiplicity"]) for r in rows if r["part"] == "nontrivial") == 2


def test_token_edge_list(p3, capsys):
    code, out, _ = run(["token", "--input", p3, "--k", "2"], capsys)
    assert code == 0
    assert parse_edge_list(out) == Graph(3, frozenset({(1, 2), (2, 3)}))
    code, out, _ = run(["token", "--input", p3, "--k", "2", "--format", "json"], capsys)
    doc = json.loads(out)
    assert doc["vertices"] == [[1, 2], [1, 3], [2, 3]] and doc["edges"] == [[1, 2], [2, 3]]


def test_token_graph6(capsys):
    code, out, _ = run(["token", "--family", "complete", "--n", "5", "--k", "2", "--emit", "graph6"], capsys)
    g = parse_graph6(out.strip())
    assert g.n == 10 and g.m == 30


def test_family(capsys):
    code, out, _ = run(["family", "--family", "disjoint_cliques", "--m", "2", "--s", "3", "--emit", "graph6"], capsys)
    assert code == 0 and parse_graph6(out.strip()).m == 6


def test_verify_johnson(capsys):
    code, out, _ = run(["verify", "--check", "johnson", "--n", "8", "--k", "3"], capsys)
    assert code == 0 and out.startswith("PASS johnson")


def test_verify_all_json_schema(capsys, schema):
    code, out, err = run(["verify", "--family", "cycle", "--n", "6", "--k", "1..3", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["summary"]["failed"] == 0
    assert {r["check_name"] for r in doc["reports"]} >= {"garland", "step", "global", "aldous", "fiedler"}
    for r in doc["reports"]:
        assert r["version"] and "seed" in r and "tol" in r and "timing" in r
    assert "summary:" in err


def test_clamped_flag(capsys):
    code, out, _ = run(["verify", "--check", "step", "--family", "path", "--n", "5", "--k", "1..3",
                        "--format", "json"], capsys)
    reports = json.loads(out)["reports"]
    assert [r["parameters"]["k"] for r in reports] == [2]
    assert reports[0]["clamped"] is True


def test_sweep_input_file_csv(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("C~\nCr\nDQw\n")
    code, out, err = run(["sweep", "--input", str(corpus), "--k", "1..2", "--check", "complement",
                          "--format", "csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6 and all(r["passed"] == "True" for r in rows)
    assert "6 passed" in err


def test_sweep_jobs_match_serial(capsys):
    args = ["sweep", "--family", "erdos_renyi", "--n", "5..7", "--count", "6", "--seed", "4",
            "--k", "1..3", "--check", "global", "--format", "json"]
    _, serial, _ = run(args, capsys)
    _, parallel, _ = run(args + ["--jobs", "3"], capsys)
    assert serial == parallel


def test_failing_check_exit_code(monkeypatch, capsys):
    from tokenspectra import verify

    def broken(g, k, tol=1e-6):
        return verify.VerificationReport("containment", False, parameters={"n": g.n, "k": k})

    monkeypatch.setitem(verify.GRAPH_CHECKS, "containment", (broken, 1, lambda n: n // 2))
    code, out, _ = run(["verify", "--check", "containment", "--family", "path", "--n", "4", "--k", "2"], capsys)
    assert code == 1 and out.startswith("FAIL")


def test_usage_errors(tmp_path, capsys):
    code, _, err = run(["spectrum", "--k", "2"], capsys)
    assert code == 2 and err.startswith("ERROR:2:")
    bad = tmp_path / "bad.edges"
    bad.write_text("3 1\n2 1\n")
    code, _, err = run(["spectrum", "--input", str(bad), "--k", "1"], capsys)
    assert code == 2 and "u < v" in err
    code, _, err = run(["verify", "--check", "extremal", "--m", "2", "--s", "3", "--k", "3"], capsys)
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--check", "nonsense"])
    assert exc.value.code == 2
    assert capsys.readouterr().err.startswith("ERROR:2:")


def test_size_guard_exit_code(capsys):
    code, out, err = run(["spectrum", "--family", "complete", "--n", "20", "--k", "10"], capsys)
    assert code == 3 and out == "" and err.startswith("ERROR:3:")
    code, _, err = run(["verify", "--check", "johnson", "--n", "12", "--k", "6", "--max-dim", "500"], capsys)
    assert code == 3


def test_size_guard_env_and_flag_precedence(monkeypatch, capsys):
    monkeypatch.setenv("TOKEN_SPECTRA_MAX_DIM", "10")
    code, _, _ = run(["spectrum", "--family", "complete", "--n", "6", "--k", "2"], capsys)
    assert code == 3
    code, _, _ = run(["spectrum", "--family", "complete", "--n", "6", "--k", "2", "--max-dim", "15"], capsys)
    assert code == 0


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out, _ = run(["family", "--family", "complete", "--n", "4", "--output", str(target)], capsys)
    assert out == "" and parse_edge_list(target.read_text()) == complete(4)


def test_subprocess_determinism(tmp_path):
    cmd = [sys.executable, "-m", "tokenspectra", "sweep", "--family", "atlas", "--n", "4..5",
           "--connected", "--k", "1..2", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and len(a) > 1000
