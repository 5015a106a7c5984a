import json

import pytest

from gvand.cli import main

SQUARE = {"n": 2, "exponents": [[2, 0], [0, 2], [2, 2]]}
TRIANGLE = {"n": 2, "exponents": [[0, 0], [1, 0], [0, 1]]}
STAIRCASE = {"n": 1, "exponents": [[0], [1], [2]]}
LINE = {"n": 2, "exponents": [[0, 0], [1, 1], [2, 2]]}


@pytest.fixture
def support_file(tmp_path):
    def write(data, name="support.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return write


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decide_json(support_file, capsys):
    code, out, err = _run(capsys, ["decide", "--input", support_file(SQUARE), "--char", "2"])
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["command"] == "decide"
    assert payload["characteristic"] == 2
    assert payload["certificate"]["verdict"] == "power_of_irreducible"
    assert payload["certificate"]["power_r"] == 1
    assert payload["certificate"]["reduced_support"]["exponents"] == [[1, 0], [0, 1], [1, 1]]


def test_decide_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(TRIANGLE)))
    code, out, _ = _run(capsys, ["decide"])
    assert code == 0
    assert json.loads(out)["certificate"]["verdict"] == "irreducible"


def test_expand_square_support(support_file, capsys):
    code, out, _ = _run(capsys, ["expand", "--input", support_file(SQUARE)])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["determinant"]) == 6
    assert payload["signs"] == [0, 1, 0]
    assert len(payload["minors"]) == 3
    assert payload["variables"][:2] == ["X_1_1", "X_1_2"]
    coeffs = sorted(term["coeff"] for term in payload["determinant"])
    assert coeffs == ["-1", "-1", "-1", "1", "1", "1"]


def test_tropical_scaled_triangle(support_file, capsys):
    path = support_file({"n": 2, "exponents": [[0, 0], [2, 0], [0, 2]]})
    code, out, _ = _run(capsys, ["tropical", "--input", path, "--seed", "7"])
    assert code == 0
    payload = json.loads(out)
    assert payload["seed"] == 7
    cert = payload["certificate"]
    assert cert["verdict"] == "reducible"
    assert cert["multiplicity_gcd"] == 2
    assert cert["lifting"]["seed"] == 7
    assert [c["name"] for c in cert["conditions"]] == ["span", "content", "scale"]


def test_verify_happy_path(support_file, capsys):
    code, out, _ = _run(capsys, ["verify", "--input", support_file(TRIANGLE)])
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["verification"]["ok"] is True
    assert payload["oracles"]["tropical_agreement"]["ok"] is True
    assert payload["oracles"]["polygon"]["status"] == "indecomposable"
    assert payload["oracles"]["jacobian_evidence"]["conclusive"] is True


def test_verify_single_coordinate_runs_classical(support_file, capsys):
    code, out, _ = _run(capsys, ["verify", "--input", support_file(STAIRCASE)])
    assert code == 0
    payload = json.loads(out)
    assert payload["oracles"]["classical_divisibility"]["ok"] is True
    assert payload["oracles"]["classical_divisibility"]["quotient_terms"] == 1


def test_oracle_leibniz(support_file, capsys):
    code, out, _ = _run(
        capsys, ["oracle", "--check", "leibniz", "--input", support_file(SQUARE), "--char", "3"]
    )
    assert code == 0
    assert json.loads(out)["report"]["ok"] is True


def test_oracle_classical(support_file, capsys):
    code, out, _ = _run(capsys, ["oracle", "--check", "classical", "--input", support_file(STAIRCASE)])
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["ok"] is True
    assert payload["report"]["quotient_terms"] == 1


def test_oracle_line(support_file, capsys):
    code, out, _ = _run(
        capsys, ["oracle", "--check", "line", "--input", support_file(LINE), "--char", "3"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["ok"] is True
    assert payload["report"]["n_factors"] >= 2


def test_oracle_line_needs_small_prime(support_file, capsys):
    code, _, err = _run(
        capsys, ["oracle", "--check", "line", "--input", support_file(LINE), "--char", "7"]
    )
    assert code == 2
    assert "char" in err


def test_oracle_jacobian(support_file, capsys):
    code, out, _ = _run(
        capsys,
        ["oracle", "--check", "jacobian", "--input", support_file(TRIANGLE), "--trials", "2"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["conclusive"] is True
    assert payload["report"]["target_rank"] == 2


def test_oracle_polygon(support_file, capsys):
    code, out, _ = _run(capsys, ["oracle", "--check", "polygon", "--input", support_file(TRIANGLE)])
    assert code == 0
    assert json.loads(out)["report"]["status"] == "indecomposable"


#### exit code 2: malformed input and caps ####


def test_missing_file_is_input_error(capsys):
    code, out, err = _run(capsys, ["decide", "--input", "/nonexistent/support.json"])
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_invalid_json_is_input_error(support_file, capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = _run(capsys, ["decide", "--input", str(path)])
    assert code == 2
    assert "invalid JSON" in err


def test_schema_errors_name_the_field(support_file, capsys):
    code, _, err = _run(capsys, ["decide", "--input", support_file({"n": 2})])
    assert code == 2
    assert "support.exponents" in err
    code, _, err = _run(
        capsys, ["decide", "--input", support_file({"n": 2, "exponents": [[1, -1]]})]
    )
    assert code == 2
    assert "support.exponents[0][1]" in err


def test_composite_characteristic_rejected(support_file, capsys):
    code, _, err = _run(capsys, ["decide", "--input", support_file(SQUARE), "--char", "6"])
    assert code == 2
    assert "char" in err


def test_size_caps_are_input_errors(support_file, capsys):
    big = {"n": 1, "exponents": [[k] for k in range(13)]}
    code, _, err = _run(capsys, ["decide", "--input", support_file(big)])
    assert code == 2
    assert "exceeds the cap" in err
    code, _, err = _run(
        capsys, ["decide", "--input", support_file(STAIRCASE), "--max-n", "2"]
    )
    assert code == 2
    wide = {"n": 9, "exponents": [[0] * 8 + [1]]}
    code, _, err = _run(capsys, ["decide", "--input", support_file(wide)])
    assert code == 2
    assert "support.n" in err


def test_max_n_cannot_exceed_hard_cap(support_file, capsys):
    code, _, err = _run(
        capsys, ["decide", "--input", support_file(STAIRCASE), "--max-n", "20"]
    )
    assert code == 2
    assert "max-n" in err


def test_negative_seed_rejected(support_file, capsys):
    code, _, err = _run(capsys, ["decide", "--input", support_file(SQUARE), "--seed", "-1"])
    assert code == 2
    assert "seed" in err


#### text format ####


def test_text_format_renders_same_data(support_file, capsys):
    path = support_file(SQUARE)
    code, text_out, _ = _run(capsys, ["decide", "--input", path, "--format", "text"])
    assert code == 0
    assert "verdict: irreducible" in text_out
    assert "command: decide" in text_out
    assert not text_out.startswith("{")
    code, json_out, _ = _run(capsys, ["decide", "--input", path])
    payload = json.loads(json_out)
    assert payload["certificate"]["verdict"] == "irreducible"


#### determinism ####


@pytest.mark.parametrize(
    "argv_tail",
    [
        ["decide", "--char", "2"],
        ["expand"],
        ["tropical", "--seed", "13"],
        ["verify", "--seed", "13"],
        ["oracle", "--check", "jacobian", "--seed", "13"],
    ],
)
def test_byte_identical_reruns(support_file, capsys, argv_tail):
    path = support_file(SQUARE)
    argv = argv_tail[:1] + ["--input", path] + argv_tail[1:]
    code1, out1, _ = _run(capsys, argv)
    code2, out2, _ = _run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_seed_is_echoed(support_file, capsys):
    code, out, _ = _run(
        capsys, ["tropical", "--input", support_file(TRIANGLE), "--seed", "42"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["seed"] == 42
    assert payload["certificate"]["seed"] == 42
