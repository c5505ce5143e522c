import json
import subprocess
import sys

import pytest

from sagbiperm import InitialCone, Witness, make_order, verify_witness
from sagbiperm.cli import run

from conftest import named, random_orders


def call(*argv):
    return run(list(argv))


def call_json(*argv):
    code, out, err = run([*argv, "--json"])
    return code, json.loads(out)


def test_analyze_infinite():
    code, data = call_json("analyze", "--gens", "(1 2 3)", "--order", "lex", "--max-degree", "7")
    assert code == 0 and "error" not in data
    assert data["finite"] is False
    assert data["obstruction"] == [1, 2]
    assert data["group_order"] == 3 and data["orbits"] == [[1, 2, 3]]
    assert data["witness"]["point"] == [1, 0, 1]
    counts = {c["degree"]: c["count"] for c in data["irreducible_counts"]}
    assert counts == {1: 1, 2: 1, 3: 2, 4: 0, 5: 1, 6: 0, 7: 1}
    w = Witness.from_json(data["witness"], 3)
    assert verify_witness(InitialCone(named("C3"), make_order("lex", 3)), w, 20)


def test_analyze_finite():
    code, data = call_json("analyze", "--gens", "(1 2),(1 2 3)", "--order", "grevlex")
    assert code == 0
    assert data["finite"] is True and data["witness"] is None
    assert [b["degree"] for b in data["basis"]] == [1, 2, 3]
    assert data["basis"][2]["poly"] == [{"coeff": 1, "exps": [1, 1, 1]}]
    code, out, _ = call("analyze", "--gens", "(1 2),(1 2 3)", "--order", "grevlex")
    assert "finite" in out and "e2(S1) = x1*x2 + x1*x3 + x2*x3" in out


def test_analyze_double_transposition():
    code, data = call_json("analyze", "--gens", "(1 2)(3 4)", "--order", "lex", "--max-degree", "4")
    assert code == 0 and data["finite"] is False


def test_basis_listing():
    code, data = call_json("basis", "--gens", "(1 2 3)", "--max-degree", "5")
    exps = [e["exponent"] for e in data["elements"]]
    assert [2, 0, 1] in exps and [3, 0, 2] in exps
    assert {c["degree"] for c in data["counts"]} == {1, 2, 3, 4, 5}
    code, data = call_json("basis", "--gens", "(1 2);(1 2 3)", "--max-degree", "5")
    assert len(data["elements"]) == 3 and max(e["degree"] for e in data["elements"]) == 3
    code, data = call_json("basis", "--gens", "()", "--n", "1", "--max-degree", "3")
    assert [e["exponent"] for e in data["elements"]] == [[1]]
    assert data["elements"][0]["orbit_sum"] == [{"coeff": 1, "exps": [1]}]


def test_member():
    for vec, want in [("1,0,1", False), ("2,1,0", True), ("1/2,1/3,0", True)]:
        code, data = call_json("member", "--gens", "(1 2 3)", vec)
        assert code == 0 and data["in_cone"] is want
    code, out, err = call("member", "--gens", "(1 2 3)", "1,0")
    assert code == 2 and "expected 3" in err
    code, out, err = call("member", "--gens", "(1 2 3)", "1,x,0")
    assert code == 2


def test_witness_command(tmp_path):
    code, data = call_json("witness", "--gens", "(1 2 3)")
    assert code == 0
    cone = InitialCone(named("C3"), make_order("lex", 3))
    assert verify_witness(cone, Witness.from_json(data, 3), 20)

    code, data = call_json("witness", "--gens", "(1 2)(3 4);(1 3)(2 4)", "--order", "grlex")
    cone = InitialCone(named("V4"), make_order("grlex", 4))
    assert code == 0 and verify_witness(cone, Witness.from_json(data, 4), 20)

    code, data = call_json("witness", "--gens", "(1 2);(1 2 3)")
    assert code == 1 and "cone closed" in data["error"]


def test_witness_matrix_order_file(tmp_path):
    order = random_orders(4, 1, 5)[0]
    path = tmp_path / "order.txt"
    path.write_text("\n".join(" ".join(str(x) for x in r) for r in order.rows) + "\n")
    code, data = call_json("witness", "--gens", "(1 2 3 4)", "--order", f"matrix:{path}")
    assert code == 0
    w = Witness.from_json(data, 4)
    assert verify_witness(InitialCone(named("C4"), order), w, 20)


def test_group_file(tmp_path):
    path = tmp_path / "a4.txt"
    path.write_text("n = 4\n# alternating group\n(1 2 3)\n(2 3 4)\n")
    code, data = call_json("analyze", "--group", str(path), "--max-degree", "3")
    assert code == 0 and data["group_order"] == 12 and data["finite"] is False


def test_sturm():
    code, data = call_json("sturm", "--slope", "1", "--x-max", "5")
    assert data["irreducibles"] == [[k, k + 1] for k in range(6)]
    code, data = call_json("sturm", "--slope", "1", "--x-max", "0")
    assert data["irreducibles"] == [[0, 1]]
    code, out, _ = call("sturm", "--slope", "3/2", "--x-max", "3")
    assert out == "0 1\n1 2\n3 5\n"
    code, out, err = call("sturm", "--slope", "-1")
    assert code == 2


@pytest.mark.parametrize(
    "argv,code",
    [
        (["analyze"], 1),
        (["analyze", "--gens", "(1 2)", "--group", "x"], 1),
        (["frobnicate"], 1),
        (["analyze", "--gens", "(1 2"], 2),
        (["analyze", "--gens", "(1 2)", "--order", "deglex"], 2),
        (["analyze", "--group", "/nonexistent/file"], 2),
        (["analyze", "--gens", "(1 2);(1 2 3 4 5 6 7)", "--cap", "100"], 3),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = run(argv)
    assert got == code
    assert err.startswith("sagbiperm: error:")
    got, out, err = run([*argv, "--json"])
    assert got == code
    assert json.loads(out)["exit_code"] == code


def test_deterministic_output():
    argv = ["analyze", "--gens", "(1 2 3 4);(1 3)", "--order", "grevlex", "--max-degree", "6", "--json"]
    assert run(argv) == run(argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sagbiperm", "member", "--gens", "(1 2 3)", "1,0,1", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["in_cone"] is False
