import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from hadamard_paley.cli import main
from hadamard_paley.constructions import ext_paley2, paley1, sylvester, twin_prime_construction
from hadamard_paley.matrix_file import MatrixFile, MatrixFormatError, parse_text, render_json, render_text
from hadamard_paley.sign_matrix import is_hadamard


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write_matrix(path, M, method=None):
    path.write_text(render_text(MatrixFile(np.asarray(M, dtype=np.int8), method)))
    return path


# -- construct ----------------------------------------------------------------

def test_construct_ext_paley2_order_40(capsys):
    code, out, _ = run(capsys, "construct", "--method", "ext-paley2", "--q", 9, "--k", 1)
    assert code == 0
    assert out.startswith("# order=40 method=ext-paley2 q=9 k=1 sign=+1\n")
    mf = parse_text(out)
    assert mf.order == 40 and is_hadamard(mf.matrix)
    assert np.array_equal(mf.matrix, ext_paley2(9, 1))


def test_construct_paley1_bad_q(capsys):
    code, out, err = run(capsys, "construct", "--method", "paley1", "--q", 8)
    assert code == 1
    assert out == ""
    assert "q=8" in err and "odd prime power" in err


def test_construct_paley1_names_residue_condition(capsys):
    code, _, err = run(capsys, "construct", "--method", "paley1", "--q", 5)
    assert code == 1
    assert "q ≡ 3 (mod 4) required" in err


def test_construct_twin_prime_default_seed(capsys):
    code, out, _ = run(capsys, "construct", "--method", "twin-prime", "--p", 3, "--q", 5)
    assert code == 0
    mf = parse_text(out)
    assert mf.order == 16
    assert mf.params["n"] == 1
    assert np.array_equal(mf.matrix, twin_prime_construction(3, 5))


def test_construct_with_seed_file(tmp_path, capsys):
    seed = write_matrix(tmp_path / "h2.txt", sylvester(1))
    code, out, _ = run(capsys, "construct", "--method", "ext-paley1", "--q", 11, "--seed", seed)
    assert code == 0
    mf = parse_text(out)
    assert mf.order == 24 and is_hadamard(mf.matrix)


def test_construct_kronecker_needs_two_seeds(tmp_path, capsys):
    seed = write_matrix(tmp_path / "h2.txt", sylvester(1))
    code, _, err = run(capsys, "construct", "--method", "kronecker", "--seed", seed)
    assert code == 1 and "two --seed" in err
    code, out, _ = run(capsys, "construct", "--method", "kronecker", "--seed", seed, "--seed", seed)
    assert code == 0 and parse_text(out).order == 4


def test_construct_missing_parameter(capsys):
    code, _, err = run(capsys, "construct", "--method", "paley2")
    assert code == 1 and "--q" in err


def test_construct_rejects_non_hadamard_seed(tmp_path, capsys):
    seed = write_matrix(tmp_path / "j2.txt", np.ones((2, 2)))
    code, _, err = run(capsys, "construct", "--method", "ext-paley1", "--q", 3, "--seed", seed)
    assert code == 1 and "not a Hadamard" in err


def test_construct_out_file_and_json(tmp_path, capsys):
    out_path = tmp_path / "p.json"
    code, out, _ = run(capsys, "construct", "--method", "paley1", "--q", 7, "--format", "json", "--out", out_path)
    assert code == 0 and out == ""
    obj = json.loads(out_path.read_text())
    assert list(obj)[:5] == ["order", "method", "params", "verdict", "spectra"]
    assert obj["order"] == 8 and obj["verdict"] == "HADAMARD"
    assert np.array_equal(parse_text(out_path.read_text()).matrix, paley1(7))


@pytest.mark.parametrize("argv", [
    ("construct", "--method", "ext-paley2", "--q", 9, "--k", 1),
    ("construct", "--method", "twin-prime", "--p", 5, "--n", 2),
    ("plan", 24),
    ("construct", "--method", "paley2", "--q", 9, "--format", "json"),
])
def test_outputs_are_byte_identical_across_runs(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


# -- verify -------------------------------------------------------------------

def test_verify_sylvester16(tmp_path, capsys):
    path = write_matrix(tmp_path / "h16.txt", sylvester(4))
    code, out, _ = run(capsys, "verify", path)
    assert (code, out) == (0, "order 16: HADAMARD\n")


def test_verify_flipped_entry(tmp_path, capsys):
    H = sylvester(3).copy()
    H[3, 5] *= -1
    path = write_matrix(tmp_path / "bad.txt", H)
    code, out, _ = run(capsys, "verify", path)
    assert (code, out) == (2, "order 8: NOT HADAMARD\n")


def test_verify_conference_file(tmp_path, capsys):
    path = tmp_path / "c.txt"
    # J - I is not a conference matrix
    path.write_text("0++\n+0+\n++0\n")
    code, out, _ = run(capsys, "verify", path)
    assert code == 2
    path.write_text("0+-\n-0+\n+-0\n")
    code, out, _ = run(capsys, "verify", path)
    assert (code, out) == (0, "order 3: CONFERENCE\n")


def test_verify_json(tmp_path, capsys):
    path = write_matrix(tmp_path / "h.txt", sylvester(2), method="sylvester")
    code, out, _ = run(capsys, "verify", path, "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["verdict"] == "HADAMARD" and obj["order"] == 4


# -- parse errors ----------------------------------------------------------------

@pytest.mark.parametrize("text, where", [
    ("++\n+x\n", ":2:2:"),
    ("+++\n+-\n+--\n", ":2:3:"),
    ("# order=3\n++\n+-\n", ":2:1:"),
    ("", ":1:1:"),
    ('{"matrix": [', ":1:"),
])
def test_parse_errors_have_positions(tmp_path, capsys, text, where):
    path = tmp_path / "m.txt"
    path.write_text(text)
    code, out, err = run(capsys, "verify", path)
    assert code == 1 and out == ""
    assert f"{path}{where}" in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "verify", tmp_path / "none.txt")
    assert code == 1 and "cannot read" in err


def test_usage_error_exit_1(capsys):
    code, _, _ = run(capsys, "construct", "--method", "nonsense")
    assert code == 1


# -- normalize / spectrum / compare ---------------------------------------------------

def test_normalize_and_spectrum(tmp_path, capsys):
    path = tmp_path / "h.txt"
    path.write_text("++++\n+--+\n++--\n+-+-\n")
    code, out, _ = run(capsys, "normalize", path)
    assert (code, out) == (0, "++++\n++--\n+-+-\n+--+\n")
    code, out, _ = run(capsys, "spectrum", path)
    assert (code, out) == (0, "[0, 1, 3, 2]\n[0, 1, 3, 2]\n")


def test_normalize_plain(tmp_path, capsys):
    path = tmp_path / "h.txt"
    path.write_text("+-\n++\n")
    code, out, _ = run(capsys, "normalize", "--plain", path)
    assert (code, out) == (0, "++\n+-\n")


def test_spectrum_rejects_non_hadamard(tmp_path, capsys):
    path = write_matrix(tmp_path / "j.txt", np.ones((2, 2)))
    code, _, err = run(capsys, "spectrum", path)
    assert code == 2 and "not a Hadamard" in err


def test_compare_report(tmp_path, capsys):
    a = write_matrix(tmp_path / "a.txt", sylvester(2))
    b = write_matrix(tmp_path / "b.txt", paley1(3))
    code, out, _ = run(capsys, "compare", a, b)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "order 4"
    assert lines[1] == "H1 rows [0, 1, 3, 2]"
    assert lines[-2:] == ["spectra-equal: true", "verdict: possibly-isomorphic"]
    code, out, _ = run(capsys, "compare", a, b, "--format", "json")
    obj = json.loads(out)
    assert obj["verdict"] == "possibly-isomorphic" and obj["spectra_equal"] is True


def test_compare_order_mismatch(tmp_path, capsys):
    a = write_matrix(tmp_path / "a.txt", sylvester(2))
    b = write_matrix(tmp_path / "b.txt", sylvester(3))
    code, _, err = run(capsys, "compare", a, b)
    assert code == 1 and "order mismatch" in err


# -- plan -----------------------------------------------------------------------

def test_plan_24(capsys):
    code, out, _ = run(capsys, "plan", 24)
    assert code == 0
    lines = out.splitlines()
    assert any(line.startswith("ext-paley1 q=11 n=2") for line in lines)
    assert any(line.startswith("ext-paley2 q=5 k=1") for line in lines)
    assert len(lines) == len(set(lines))


def test_plan_bad_order(capsys):
    code, _, err = run(capsys, "plan", 6)
    assert code == 1 and err


def test_plan_json(capsys):
    code, out, _ = run(capsys, "plan", 16, "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["order"] == 16 and "twin-prime p=3 q=5 n=1 seed=(sylvester m=0)" in obj["recipes"]


# -- round trip -----------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.integers(1, 256).flatmap(
    lambda n: hnp.arrays(np.int8, (n, n), elements=st.sampled_from([-1, 1]))))
def test_text_round_trip(M):
    mf = MatrixFile(M, "sylvester", {"m": 3})
    back = parse_text(render_text(mf))
    assert np.array_equal(back.matrix, M)
    assert back.method == "sylvester" and back.params == {"m": 3}
    assert np.array_equal(parse_text(render_json(mf)).matrix, M)


def test_round_trip_with_zeros_and_seed_header():
    M = np.array([[0, 1, -1], [-1, 0, 1], [1, -1, 0]], dtype=np.int8)
    params = {"q": 3, "n": 2, "seed": "sylvester m=1"}
    mf = parse_text(render_text(MatrixFile(M, "ext-paley1", params)))
    assert np.array_equal(mf.matrix, M) and mf.params == params


def test_parse_error_is_matrix_format_error():
    with pytest.raises(MatrixFormatError, match=r"<string>:2:2: invalid character"):
        parse_text("++\n-x\n")
