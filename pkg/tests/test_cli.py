"""End-to-end checks of the command-line interface: file loading, the
operation calculator, law runs, projection, quotients, and exit codes."""

import json
import subprocess
import sys

import pytest

from orthoql.cli import InstanceFile, load_instances, main, save_instances
from orthoql.scalars import Field

GOOD = {
    "field": "Q",
    "ambient_dim": 3,
    "subspaces": {
        "A": {"basis": [["1", "0", "0"]]},
        "B": {"basis": [["0", "1", "0"]]},
        "Plane": {"basis": [["1", "0", "0"], ["0", "1", "0"]]},
        "Axis": {"basis": [["0", "0", "1"]]},
        "Zero": {"basis": []},
        "Full": {"basis": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]},
    },
    "ortho": {
        "L": {"one": "A", "zero": "B"},
        "M": {"one": "Plane", "zero": "Axis"},
        "Bottom": {"one": "Zero", "zero": "Full"},
    },
    "operators": {
        "T": {
            "dom": "Plane",
            "matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        }
    },
}


@pytest.fixture
def good_file(tmp_path):
    path = tmp_path / "instances.json"
    path.write_text(json.dumps(GOOD))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


# --- the op calculator ---------------------------------------------------

def test_subspace_meet(good_file, capsys):
    code, out = run(capsys, "op", "meet", "Plane", "B", "--file", good_file)
    assert code == 0
    assert "(0/1, 1/1, 0/1)" in out


def test_pair_negation_accepts_the_prefixed_name(good_file, capsys):
    code, out = run(capsys, "op", "oneg", "L", "--file", good_file)
    assert code == 0
    one_block = out.split("zero:")[0]
    assert "(0/1, 1/1, 0/1)" in one_block


def test_implication_from_the_bottom_pair(good_file, capsys):
    code, out = run(capsys, "op", "implies", "Bottom", "L", "--file", good_file)
    assert code == 0
    # Everything follows from the bottom pair: the result is the top pair.
    one_block, zero_block = out.split("zero:")
    assert one_block.count("(") == 3
    assert "(empty)" in zero_block


def test_empty_result_prints_a_placeholder(good_file, capsys):
    code, out = run(capsys, "op", "meet", "A", "B", "--file", good_file)
    assert code == 0
    assert "(empty)" in out


def test_op_rejects_bad_expressions(good_file, capsys):
    for argv in (
        ["op", "frobnicate", "A", "B"],
        ["op", "meet", "A"],
        ["op", "meet", "A", "Nope"],
        ["op", "meet", "A", "L"],
        ["op", "meet", "(A", "B)"],
    ):
        code, _ = run(capsys, *argv, "--file", good_file)
        assert code == 2


def test_json_format_is_valid_json(good_file, capsys):
    code, out = run(
        capsys, "op", "join", "A", "B", "--file", good_file, "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["basis"] == [["1/1", "0/1", "0/1"], ["0/1", "1/1", "0/1"]]


# --- law runs --------------------------------------------------------------

def test_check_file_instances(good_file, capsys):
    code, out = run(capsys, "check", "--file", good_file, "--laws", "complql")
    assert code == 0
    assert "result: ok" in out


def test_check_random_instances(capsys):
    code, out = run(
        capsys, "check", "--random", "3", "25", "42", "--laws", "clql"
    )
    assert code == 0
    assert "result: ok" in out


def test_gaussian_instance_files(tmp_path, capsys):
    qi = {
        "field": "Qi",
        "ambient_dim": 2,
        "subspaces": {
            "A": {"basis": [["1", "1i"]]},
            "B": {"basis": [["1", "-1i"]]},
        },
        "ortho": {"P": {"one": "A", "zero": "B"}},
        "operators": {},
    }
    path = tmp_path / "qi.json"
    path.write_text(json.dumps(qi))
    code, out = run(capsys, "check", "--file", str(path), "--laws", "complql")
    assert code == 0
    assert "result: ok" in out
    code, out = run(capsys, "op", "neg", "A", "--file", str(path))
    assert code == 0
    assert "0/1-1/1i" in out


def test_expected_failures_do_not_fail_the_run(capsys):
    code, out = run(
        capsys, "check", "--random", "2", "0", "0", "--laws", "distributivity"
    )
    assert code == 0
    assert "[expected-fail]" in out
    assert "violations=1" in out


def test_check_json_payload(capsys):
    code, out = run(
        capsys,
        "check",
        "--random", "3", "10", "5",
        "--laws", "order",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["unexpected_violations"] == 0
    assert payload["laws"]["lescomp1_i"]["violations"] == []


def test_check_stdout_is_deterministic(capsys):
    argv = ["check", "--random", "3", "20", "11", "--laws", "all"]
    code1, out1 = run(capsys, *argv)
    code2, out2 = run(capsys, *argv)
    assert (code1, code2) == (0, 0)
    assert out1 == out2


def test_unknown_selector(good_file, capsys):
    code, _ = run(capsys, "check", "--file", good_file, "--laws", "zorn")
    assert code == 2


# --- project and quotient ---------------------------------------------------

def test_project_splits(good_file, capsys):
    code, out = run(capsys, "project", "L", "(2,3,0)", "--file", good_file)
    assert code == 0
    assert "one_part:  (2/1, 0/1, 0/1)" in out
    assert "zero_part: (0/1, 3/1, 0/1)" in out


def test_project_outside_the_domain(good_file, capsys):
    code, out = run(capsys, "project", "L", "(0,0,1)", "--file", good_file)
    assert code == 0
    assert "NotInDomain" in out


def test_quotient_identifies_one_shifts(good_file, capsys):
    code, out = run(
        capsys, "quotient", "L", "(2,3,0)", "(5,3,0)", "--file", good_file
    )
    assert code == 0
    assert "equal: true" in out
    assert "inner: 9/1" in out


def test_quotient_rejects_outsiders(good_file, capsys):
    code, out = run(
        capsys, "quotient", "L", "(0,0,1)", "(0,0,1)", "--file", good_file
    )
    assert code == 0
    assert "NotInDomain" in out


# --- roundtrip ----------------------------------------------------------------

def test_roundtrip_file(good_file, capsys):
    code, out = run(capsys, "roundtrip", "--file", good_file)
    assert code == 0
    assert "result: ok (3 instances)" in out
    assert "MISMATCH" not in out


def test_roundtrip_random(capsys):
    code, out = run(capsys, "roundtrip", "--random", "3", "12", "3")
    assert code == 0
    assert "result: ok (12 instances)" in out


# --- input validation -----------------------------------------------------------

def test_input_errors_exit_2(tmp_path, capsys):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    assert run(capsys, "check", "--file", str(bad_json))[0] == 2
    assert run(capsys, "check", "--file", str(tmp_path / "missing.json"))[0] == 2

    skew = dict(GOOD, ortho={"X": {"one": "A", "zero": "Full"}})
    skew_path = tmp_path / "skew.json"
    skew_path.write_text(json.dumps(skew))
    assert run(capsys, "check", "--file", str(skew_path))[0] == 2

    imag = json.loads(json.dumps(GOOD))
    imag["subspaces"]["A"]["basis"] = [["1+2i", "0", "0"]]
    imag_path = tmp_path / "imag.json"
    imag_path.write_text(json.dumps(imag))
    assert run(capsys, "check", "--file", str(imag_path))[0] == 2


def test_file_and_random_conflict(good_file, capsys):
    code, _ = run(
        capsys, "check", "--file", good_file, "--random", "3", "5", "1"
    )
    assert code == 2


def test_missing_source(capsys):
    assert run(capsys, "project", "L", "(1,0,0)")[0] == 2


# --- persistence ------------------------------------------------------------------

def test_save_and_reload_preserves_instances(good_file, tmp_path):
    inst = load_instances(good_file)
    out_path = str(tmp_path / "saved.json")
    save_instances(inst, out_path)
    back = load_instances(out_path)
    assert back.field is Field.Q and back.ambient_dim == 3
    for name, sub in inst.subspaces.items():
        assert back.subspaces[name] == sub
    for name, pair in inst.ortho.items():
        assert back.ortho[name] == pair
    for name, op in inst.operators.items():
        assert back.operators[name] == op


def test_save_handles_anonymous_components(tmp_path):
    inst = load_instances_from_parts(tmp_path)
    out_path = str(tmp_path / "anon.json")
    save_instances(inst, out_path)
    back = load_instances(out_path)
    assert back.ortho["P"] == inst.ortho["P"]


def load_instances_from_parts(tmp_path):
    from orthoql.ortho import OrthoSubspace
    from orthoql.subspace import Subspace

    inst = InstanceFile(Field.Q, 2)
    pair = OrthoSubspace(
        Subspace(Field.Q, 2, [[1, 0]]), Subspace(Field.Q, 2, [[0, 1]])
    )
    inst.ortho["P"] = pair
    return inst


# --- module entry point --------------------------------------------------------------

def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "orthoql", "check", "--random", "2", "5", "1", "--laws", "clql"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "result: ok" in proc.stdout
    assert "elapsed:" in proc.stderr
