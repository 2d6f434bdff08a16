import json

import pytest

from mzhopf import cli, verify


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "[2] sh [2]")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "element"
    assert doc["terms"] == [
        {"coeff": "4", "comp": [3, 1]},
        {"coeff": "2", "comp": [2, 2]},
    ]


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", "[2] st [2]", "--format", "text")
    assert code == 0
    assert out.strip() == "[4] + 2*[2,2]"


def test_coprod_sides(capsys):
    code, out, _ = run(capsys, "coprod", "[1,2]", "--format", "text")
    assert code == 0
    assert "- [2](x)[1]" in out
    code, out, _ = run(capsys, "coprod", "[1,2]", "--side", "dec", "--format", "text")
    assert code == 0
    assert "- " not in out
    assert "[1](x)[2]" in out


def test_coprod_json_records(capsys):
    code, out, _ = run(capsys, "coprod", "[2,1]")
    doc = json.loads(out)
    assert doc["kind"] == "tensor"
    assert doc["rank"] == 2
    assert {"coeff": "1", "comp": [[2], [1]]} in doc["terms"]


def test_antipode_both_algebras(capsys):
    code, out, _ = run(capsys, "antipode", "[1,1]", "--format", "text")
    assert code == 0 and out.strip() == "[1,1]"
    code, out, _ = run(capsys, "antipode", "[1,1]", "--algebra", "qsh", "--format", "text")
    assert code == 0 and out.strip() == "[2] + [1,1]"


def test_psi_and_inverse_roundtrip(capsys):
    code, out, _ = run(capsys, "psi", "[1,1]", "--format", "text")
    assert code == 0 and out.strip() == "1/2*[2] + [1,1]"
    code, out, _ = run(capsys, "psi-inv", "1/2*[2] + [1,1]", "--format", "text")
    assert code == 0 and out.strip() == "[1,1]"


def test_matrix_formats(capsys):
    code, out, _ = run(capsys, "matrix", "--weight", "2")
    assert code == 0
    assert "[1,1]" in out and "1/2" in out
    code, out, _ = run(capsys, "matrix", "--weight", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "[2],[1,1]"
    code, out, _ = run(capsys, "matrix", "--weight", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["weight"] == 2
    assert doc["entries"][0] == ["1/2", "1/2"]
    assert doc["entries"][1] == ["0", "1"]


def test_mzv(capsys):
    code, out, _ = run(capsys, "mzv", "[2]", "--terms", "10", "--format", "text")
    assert code == 0
    assert abs(float(out.strip()) - 1.5497677311665408) < 1e-12
    code, out, _ = run(capsys, "mzv", "2,1", "--terms", "100")
    doc = json.loads(out)
    assert doc["composition"] == [2, 1]
    assert doc["terms"] == 100


def test_verify_suite_capped(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "order", "--max-weight", "4")
    assert code == 0
    assert "[PASS] order/weight-4-chain" in out
    assert "checks passed" in out


def test_verify_report_file(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verify", "--suite", "rota-baxter", "--max-weight", "3",
        "--report", str(report),
    )
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc[0]["suite"] == "rota-baxter"
    assert doc[0]["passed"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    fake = [verify.CheckResult("demo", "always-fails", False, "broken on purpose")]
    monkeypatch.setattr(cli.verify, "run_suite", lambda name, cap: fake)
    code, out, _ = run(capsys, "verify", "--suite", "order")
    assert code == 7
    assert "[FAIL] demo/always-fails -- broken on purpose" in out


def test_usage_error_exit_code(capsys):
    assert cli.main([]) == 2
    assert cli.main(["matrix"]) == 2  # --weight is required
    assert cli.main(["verify", "--suite", "nope"]) == 2
    capsys.readouterr()


def test_syntax_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "[2] ++")
    assert code == 3
    assert "error:" in err


def test_domain_error_exit_codes(capsys):
    code, _, err = run(capsys, "mzv", "[1,2]")
    assert code == 4 and "not admissible" in err
    code, _, err = run(capsys, "mzv", "[abc]")
    assert code == 4
    code, _, err = run(capsys, "mzv", "1")
    assert code == 4


def test_coverage_error_exit_code(capsys):
    code, _, err = run(capsys, "matrix", "--weight", "5", "--horizon", "3")
    assert code == 5
    assert "weight" in err


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0
    capsys.readouterr()


CHAR_SINGULAR = {
    "label": "vanishing",
    "max_weight": 2,
    "values": {"[1]": "1", "[2]": "0", "[1,1]": "1/2"},
}


def test_singular_character_exit_code(tmp_path, capsys):
    path = tmp_path / "chi.json"
    path.write_text(json.dumps(CHAR_SINGULAR))
    code, _, err = run(capsys, "psi-inv", "[2]", "--char-file", str(path))
    assert code == 6
    assert "[2]" in err
    # forward application still works
    code, out, _ = run(capsys, "psi", "[1,1]", "--char-file", str(path), "--format", "text")
    assert code == 0
    assert out.strip() == "1/2*[2] + [1,1]"


def test_invalid_character_file_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "max_weight": 2,
        "values": {"[1]": "1", "[2]": "1", "[1,1]": "1"},
    }))
    code, _, err = run(capsys, "psi", "[1,1]", "--char-file", str(path))
    assert code == 8
    assert "not multiplicative" in err


def test_missing_character_file_exit_code(capsys, tmp_path):
    code, _, err = run(capsys, "psi", "[2]", "--char-file", str(tmp_path / "none.json"))
    assert code == 9


def test_report_write_failure_exit_code(capsys, tmp_path):
    bad = tmp_path / "missing-dir" / "report.json"
    code, _, _ = run(
        capsys, "verify", "--suite", "rota-baxter", "--max-weight", "2",
        "--report", str(bad),
    )
    assert code == 9
