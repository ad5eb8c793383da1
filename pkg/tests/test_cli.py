import json

from sympcoh.cli import EXIT_INCONSISTENT, EXIT_INPUT, EXIT_MATH, EXIT_OK, main
from sympcoh.errors import InternalInconsistencyError


def test_compute_corpus_text(capsys):
    assert main(["compute", "example1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "model example1" in out
    assert "hard Lefschetz: False" in out


def test_compute_json(capsys):
    assert main(["compute", "example2", "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["betti"] == [1, 2, 3, 4, 3, 2, 1]
    assert data["hlc"]["overall"] is True
    assert data["dd_lambda_lemma"] is True


def test_compute_degree_filter(capsys):
    assert main(["compute", "example1", "--json", "--degree", "3"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert all(entry["degree"] == 3 for entry in data["decompositions"])


def test_compute_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["compute", "torus6", "--json", "--out", str(target)]) == EXIT_OK
    data = json.loads(target.read_text())
    assert data["model"]["name"] == "torus6"
    assert capsys.readouterr().out == ""


def test_compute_model_file(tmp_path, capsys):
    path = tmp_path / "kt.model"
    path.write_text("structure = 0,0,0,12\nomega = 13+42\n")
    assert main(["compute", str(path), "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["model"]["name"] == "kt"
    assert data["properties"]["nilpotent"] is True
    assert data["hlc"]["overall"] is False


def test_unknown_model_is_input_error(capsys):
    assert main(["compute", "nonexistent"]) == EXIT_INPUT
    assert "error:" in capsys.readouterr().err


def test_bad_grammar_is_input_error(tmp_path, capsys):
    path = tmp_path / "broken.model"
    path.write_text("structure = 0,0,12+\n")
    assert main(["compute", str(path)]) == EXIT_INPUT


def test_jacobi_violation_is_math_error(tmp_path, capsys):
    path = tmp_path / "notjacobi.model"
    path.write_text("structure = 0,0,0,12,13,14+25\nomega = 16+25+34\n")
    assert main(["compute", str(path)]) == EXIT_MATH
    assert "validation error" in capsys.readouterr().err


def test_degenerate_omega_is_math_error(tmp_path, capsys):
    path = tmp_path / "degenerate.model"
    path.write_text("structure = 0,0,0,0\nomega = 12\n")
    assert main(["compute", str(path)]) == EXIT_MATH


def test_odd_dimension_is_math_error(tmp_path):
    path = tmp_path / "odd.model"
    path.write_text("structure = 0,0,0\nomega = 12\n")
    assert main(["compute", str(path)]) == EXIT_MATH


def test_internal_inconsistency_maps_to_exit_3(monkeypatch, capsys):
    def explode(model):
        raise InternalInconsistencyError("synthetic failure")

    monkeypatch.setattr("sympcoh.cli.run_compute", explode)
    assert main(["compute", "example1"]) == EXIT_INCONSISTENT
    assert "internal inconsistency" in capsys.readouterr().err


def test_verify_small_run(capsys):
    assert main(["verify", "--seed", "3", "--dim", "4", "--count", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "all checks passed" in out
    assert "theorem_h2_full_direct" in out


def test_verify_failure_exits_3(monkeypatch, capsys):
    from sympcoh.verify import CheckResult, VerifySummary

    def fake_verify(seed, dims, count_per_dim):
        failing = CheckResult("synthetic")
        failing.record(False, "broken on purpose")
        return VerifySummary(seed=seed, structures=["x"], results={"synthetic": failing})

    monkeypatch.setattr("sympcoh.cli.run_verify", fake_verify)
    assert main(["verify"]) == EXIT_INCONSISTENT
    assert "FAILURES DETECTED" in capsys.readouterr().out


def test_verify_rejects_odd_dim(capsys):
    assert main(["verify", "--dim", "5"]) == EXIT_INPUT


def test_corpus_list(capsys):
    assert main(["corpus", "--list"]) == EXIT_OK
    out = capsys.readouterr().out
    for name in ("torus6", "example1", "example2", "example3", "example4"):
        assert name in out
