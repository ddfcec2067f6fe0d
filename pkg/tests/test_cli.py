import json

import pytest

from spinpic import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_class_thetanull(capsys):
    code, out, _ = run(capsys, "class", "thetanull", "-g", "3")
    assert code == 0
    assert out.strip() == "1/4*lambda - 1/16*a0 - 1/2*b1"


def test_class_bn_and_d(capsys):
    code, out, _ = run(capsys, "class", "bn", "-g", "9")
    assert code == 0
    assert out.strip() == "12*lambda - 5/3*d0 - 8*d1 - 14*d2 - 18*d3 - 20*d4"
    code, out, _ = run(capsys, "class", "D", "-g", "9")
    assert code == 0
    assert out.strip() == "12*lambda - 5/3*d0 - 8*d1 - 14*d2 - 18*d3 - 20*d4"


def test_class_bn_prime_genus_fails_usage(capsys):
    code, _, err = run(capsys, "class", "bn", "-g", "10")
    assert code == 2
    assert "prime" in err


def test_class_d_incomplete_fails_usage(capsys):
    code, _, err = run(capsys, "class", "D", "-g", "10")
    assert code == 2
    assert "slope" in err


def test_pair_r_canonical(capsys):
    code, out, _ = run(capsys, "pair", "R", "canonical-s", "-g", "7")
    assert code == 0
    assert out.strip() == "-7296"


def test_pair_expression(capsys):
    code, out, _ = run(capsys, "pair", "G2", "1/4*lambda - 1/2*b2", "-g", "5")
    assert code == 0
    assert out.strip() == "1"


def test_pair_unknown_curve(capsys):
    code, _, err = run(capsys, "pair", "F9", "thetanull", "-g", "5")
    assert code == 2
    assert "unknown curve" in err


def test_pair_side_mismatch(capsys):
    code, _, err = run(capsys, "pair", "B", "thetanull", "-g", "5")
    assert code == 2


def test_pair_dump(capsys):
    code, out, _ = run(capsys, "pair", "--dump", "-g", "3")
    assert code == 0
    table = json.loads(out)
    assert table["B"] == {"lambda": "4", "d0": "36", "d1": "0"}
    assert table["H0"]["b0s"] == "-2"
    assert set(table) == {"B", "R", "F0", "G0", "H0", "F1", "G1"}


def test_counts(capsys):
    code, out, _ = run(capsys, "counts", "-g", "3")
    assert code == 0
    assert "even component degree 36" in out
    assert "deg(A0/d0) = 16" in out
    assert "FAIL" not in out


def test_solve_thetanull_match(capsys):
    code, out, _ = run(capsys, "solve-thetanull", "-g", "5")
    assert code == 0
    assert "MATCH" in out and "MISMATCH" not in out
    assert "Lbar = 1/4, A0bar = 1/16, B0bar = 0" in out


def test_classify_json_genus8(capsys):
    code, out, _ = run(capsys, "classify", "-g", "8", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "KAPPA_NONNEGATIVE"
    assert doc["nu"] == "0"


def test_classify_human_genus7(capsys):
    code, out, _ = run(capsys, "classify", "-g", "7")
    assert code == 0
    assert "UNIRULED" in out
    assert "R . K = -7296" in out


def test_classify_divisor_file(capsys, tmp_path):
    path = tmp_path / "divisor.json"
    path.write_text(json.dumps({
        "name": "k3-with-boundary",
        "genus": 10,
        "a": "7",
        "b0": "1",
        "b": ["2", "2", "2", "2", "2"],
    }))
    code, out, _ = run(capsys, "classify", "-g", "10", "--divisor-file", str(path))
    assert code == 0
    assert "GENERAL_TYPE" in out
    assert "CONDITIONAL" not in out


def test_classify_divisor_file_slope_violation(capsys, tmp_path):
    path = tmp_path / "divisor.json"
    path.write_text(json.dumps({"name": "steep", "genus": 10, "a": "8", "b0": "1"}))
    code, _, err = run(capsys, "classify", "-g", "10", "--divisor-file", str(path))
    assert code == 1
    assert "slope" in err


def test_verify_small_range(capsys):
    code, out, _ = run(capsys, "verify", "--from", "3", "--to", "5")
    assert code == 0
    assert "genus 3" in out and "genus 5" in out
    assert "OK" in out


def test_verify_json_round_trips_byte_identically(capsys):
    code, out, _ = run(capsys, "verify", "--from", "3", "--to", "4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "OK"
    assert doc["failures"] == []
    assert doc["genus-range"] == [3, 4]
    assert json.dumps(doc, indent=2, sort_keys=True) == out.strip()


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "class", "nope", "-g", "5")[0] == 2
    assert run(capsys, "classify", "-g", "2")[0] == 2
    assert run(capsys, "verify", "--from", "2", "--to", "4")[0] == 2
    assert run(capsys, "pair", "-g", "5")[0] == 2


def test_bad_class_expression_exits_two(capsys):
    code, _, err = run(capsys, "pair", "R", "1/4*nope", "-g", "5")
    assert code == 2
