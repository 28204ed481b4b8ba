import io
import itertools
import json
import subprocess
import sys

import pytest

from monorank.cli import canonical_exponents, run


def call(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv), out)
    return code, out.getvalue()


def monomial_text(exps):
    return "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exps))


SCALED_12 = {
    "target": "12*x0^2*x1^2",
    "degree": 4,
    "terms": [
        {"coeff": "1", "form": ["1", "1"]},
        {"coeff": "1", "form": ["1", "-1"]},
        {"coeff": "-2", "form": ["1", "0"]},
        {"coeff": "-2", "form": ["0", "1"]},
    ],
}


def test_rank_json():
    code, text = call("rank", "x0^2*x1^2*x2^2")
    assert code == 0
    data = json.loads(text)
    assert (data["complex_rank"], data["real_upper"], data["real_lower"]) == (9, 13, 11)
    assert data["equality"] is False


def test_rank_text():
    code, text = call("rank", "--text", "x0*x1^3")
    assert code == 0
    assert "complex rank  4" in text and "real = complex  yes" in text


@pytest.mark.parametrize("bad", ["x0 + x1", "x0^2*", "2*x0*x1", "x0^0*x1", "x0^2*x2", "y0*y1"])
def test_rank_rejects_bad_input(bad, capsys):
    assert call("rank", bad)[0] == 2
    assert "monorank:" in capsys.readouterr().err


def test_usage_errors():
    assert call()[0] == 2
    assert call("nope")[0] == 2
    assert call("rank", "x0*x1", "--json", "--text")[0] == 2
    assert call("decompose", "x0*x1", "--method", "magic")[0] == 2


def test_decompose_binary():
    code, text = call("decompose", "x0*x1")
    assert code == 0
    data = json.loads(text)
    assert data["size"] == 2 == len(data["terms"])
    assert data["method"] == "binary"
    assert data["terms"] == [{"coeff": "1/4", "form": ["1", "1"]}, {"coeff": "-1/4", "form": ["1", "-1"]}]


def test_decompose_forced_method():
    data = json.loads(call("decompose", "x0^2*x1^2*x2^2", "--method", "general-grid")[1])
    assert (data["method"], data["size"]) == ("general-grid", 16)
    assert call("decompose", "x0^2*x1^3", "--method", "a0eq1")[0] == 2


def test_decompose_text():
    code, text = call("decompose", "--text", "x0^2*x1^2*x2^2")
    assert code == 0
    assert text.startswith("x0^2*x1^2*x2^2 = sum of 13 powers of degree 6 (squares)")


def test_verify_scaled_identity(tmp_path):
    path = tmp_path / "dec.json"
    path.write_text(json.dumps(SCALED_12), encoding="utf-8")
    code, text = call("verify", str(path))
    assert code == 0
    assert json.loads(text) == {"target": "x0^2*x1^2", "size": 4, "verified": True}


def test_verify_inline_and_stdin(monkeypatch):
    assert call("verify", json.dumps(SCALED_12))[0] == 0
    assert call("verify", "-", stdin=json.dumps(SCALED_12), monkeypatch=monkeypatch)[0] == 0


def test_verify_perturbed_fails(capsys):
    broken = json.loads(json.dumps(SCALED_12))
    broken["terms"][2]["coeff"] = "-3"
    code, text = call("verify", json.dumps(broken))
    assert code == 1
    assert json.loads(text)["verified"] is False
    assert "expansion minus target" in capsys.readouterr().err


def test_verify_malformed(tmp_path):
    assert call("verify", str(tmp_path / "missing.json"))[0] == 2
    assert call("verify", "{not json")[0] == 2
    assert call("verify", json.dumps({"target": "x0*x1"}))[0] == 2
    assert call("verify", json.dumps({**SCALED_12, "target": "x0 + x1"}))[0] == 2


def test_hermite_object_form():
    system = {"generators": ["X1^3 + 1", "X2^3 + 1"], "a": [2, 2], "a0": 2}
    code, text = call("hermite-count", json.dumps(system))
    assert code == 0
    assert json.loads(text) == {
        "dim": 9,
        "signature": [5, 4, 0],
        "real_points": 1,
        "complex_points": 9,
        "gap_obstruction": True,
    }


def test_hermite_list_form(tmp_path):
    path = tmp_path / "sys.json"
    path.write_text(json.dumps(["X1^3 - X1"]), encoding="utf-8")
    code, text = call("hermite-count", str(path), "--a", "2", "--a0", "0")
    assert code == 0
    data = json.loads(text)
    assert (data["real_points"], data["complex_points"], data["gap_obstruction"]) == (3, 3, False)
    assert call("hermite-count", str(path))[0] == 2


def test_hermite_degree_violation():
    # X1^2 has degree 2 > a1 - a0 = 0
    system = {"generators": ["X1^3 + X1^2"], "a": [2], "a0": 2}
    assert call("hermite-count", json.dumps(system))[0] == 2


def test_hermite_seed():
    code, text = call("hermite-count", "--seed", "5")
    assert code == 0
    data = json.loads(text)
    assert data["real_points"] <= data["complex_points"] <= data["dim"]
    assert call("hermite-count", "--seed", "5")[1] == text
    assert call("hermite-count")[0] == 2
    assert call("hermite-count", "[]", "--seed", "1")[0] == 2


def test_hermite_text():
    code, text = call("hermite-count", "--text", json.dumps({"generators": ["X1^2 + 1"], "a": [1], "a0": 0}))
    assert code == 0
    assert "real points 0 of 2 distinct complex" in text


def test_canonical_exponents_order():
    got = list(canonical_exponents(4, 3))
    assert got == [(1, 1), (1, 2), (1, 3), (2, 2), (1, 1, 1), (1, 1, 2)]


def test_table_streams_rows():
    code, text = call("table", "--max-degree", "5", "--max-vars", "3")
    assert code == 0
    rows = [json.loads(line) for line in text.splitlines()]
    assert [r["exponents"] for r in rows] == [list(e) for e in canonical_exponents(5, 3)]
    assert all(r["complex_rank"] <= r["real_lower"] <= r["real_upper"] for r in rows)


def test_table_certify():
    from monorank.apolarity import Decomposition, verify_decomposition

    code, text = call("table", "--max-degree", "4", "--max-vars", "3", "--certify")
    assert code == 0
    for line in text.splitlines():
        row = json.loads(line)
        dec = Decomposition.from_json(row["decomposition"])
        assert verify_decomposition(dec)
        assert dec.size == row["real_upper"]


def test_table_text_and_bad_bounds():
    code, text = call("table", "--text", "--max-degree", "3", "--max-vars", "2", "--certify")
    assert code == 0 and len(text.splitlines()) == 2
    assert call("table", "--max-degree", "1", "--max-vars", "2")[0] == 2
    assert call("table", "--max-vars", "2")[0] == 2


SWEEP = [e for n in range(1, 4) for e in itertools.combinations_with_replacement(range(1, 5), n + 1)]


@pytest.mark.parametrize("exps", SWEEP)
def test_decompose_verify_round_trip(exps):
    code, text = call("decompose", monomial_text(exps))
    assert code == 0
    assert call("verify", text)[0] == 0


def test_piped_round_trip_and_determinism():
    cmd = [sys.executable, "-m", "monorank"]
    first = subprocess.run(cmd + ["decompose", "x0^2*x1^3*x2^3"], capture_output=True, check=True)
    second = subprocess.run(cmd + ["decompose", "x0^2*x1^3*x2^3"], capture_output=True, check=True)
    assert first.stdout == second.stdout
    piped = subprocess.run(cmd + ["verify", "-"], input=first.stdout, capture_output=True)
    assert piped.returncode == 0
    table = [subprocess.run(cmd + ["table", "--max-degree", "5", "--max-vars", "3"], capture_output=True, check=True).stdout for _ in range(2)]
    assert table[0] == table[1]
