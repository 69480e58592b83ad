import io
import json
import subprocess
import sys

import pytest

from symlie import LieTable
from symlie.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_construct_matches_unipotent_example():
    code, out, _ = call("construct", "--field", "Q", "--matrix", "[[1,0],[1,1]]", "--w", "[0,1]", "--degree", "2")
    assert code == 0
    t = json.loads(out)
    assert t["dim"] == 3 and t["labels"] == ["x1^2", "x1*x2", "x2^2"]
    assert t["constants"] == [
        {"i": 0, "j": 2, "coeffs": [{"k": 0, "value": "1"}]},
        {"i": 1, "j": 2, "coeffs": [{"k": 0, "value": "1"}, {"k": 1, "value": "1"}]},
    ]
    assert t["provenance"]["lambda"] == "1"


def test_classify_jordan_block():
    code, out, _ = call("classify", "--field", "Qi", "--matrix", "[[5,1],[0,5]]", "--w", "[1,0]", "--degree", "2")
    assert code == 0
    report = json.loads(out)
    assert {k: report[k] for k in ("family", "c")} == {"family": "G3", "c": "5"}
    assert report["witness"]["verified"] is True


def test_non_eigenvector_exits_2():
    code, out, err = call("construct", "--matrix", "[[1,0],[0,2]]", "--w", "[1,1]", "--degree", "2")
    assert code == 2 and out == ""
    assert "eigenvector" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--matrix", "[[1,0],[0,2]]", "--w", "[1,0]"],
        ["construct", "--matrix", "[[1.5,0],[0,2]]", "--w", "[1,0]", "--degree", "1"],
        ["construct", "--matrix", "not json", "--w", "[1,0]", "--degree", "1"],
        ["construct", "--field", "Fp", "--p", "6", "--matrix", "[[1]]", "--w", "[1]", "--degree", "1"],
        ["frobnicate"],
        ["analyze", "{\"dim\": 2}"],
    ],
)
def test_malformed_input_exits_1(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err


def test_domain_and_budget_exit_codes(tmp_path):
    code, _, _ = call("classify", "--field", "Q", "--matrix", "[[0,-1],[1,0]]", "--w", "[0,0]", "--degree", "1")
    assert code == 0  # zero vector: abelian, no eigenvalues needed
    code, _, err = call("classify", "--field", "Qi", "--matrix", "[[0,2],[1,0]]", "--w", "[0,0]", "--degree", "1")
    assert code == 0
    code, _, _ = call("enumerate", "--field", "Fp", "--p", "3", "--n", "2", "--budget", "100")
    assert code == 3


def test_json_round_trip_through_analyze(tmp_path):
    table = tmp_path / "t.json"
    code, _, _ = call(
        "construct", "--field", "Fp", "--p", "5", "--matrix", "[[1,0],[0,2]]", "--w", "[1,0]", "--degree", "2", "--out", str(table)
    )
    assert code == 0
    code, out1, _ = call("analyze", str(table))
    assert code == 0
    t = LieTable.from_json(json.loads(table.read_text()))
    copy = tmp_path / "copy.json"
    copy.write_text(json.dumps(t.to_json(), indent=2) + "\n")
    assert copy.read_bytes() == table.read_bytes()
    code, out2, _ = call("analyze", str(copy))
    assert out1 == out2
    report = json.loads(out1)
    assert report["jacobi"] == "ok" and report["solvable"] is True
    assert report["derived_series"]["dims"] == [3, 2, 0]


def test_output_is_byte_stable():
    argv = ["graded", "--field", "Qi", "--matrix", "[[-1,0],[0,-1]]", "--w", "[1,0]", "--max-degree", "3"]
    assert call(*argv)[1] == call(*argv)[1]


def test_verify_iso_search_and_map(tmp_path):
    paths = []
    for k, A in enumerate(("[[1,0],[0,1]]", "[[1,1],[0,1]]")):
        paths.append(str(tmp_path / f"t{k}.json"))
        call("construct", "--field", "F2", "--matrix", A, "--w", "[1,0]", "--degree", "1", "--out", paths[-1])
    code, out, _ = call("verify-iso", "--source", paths[0], "--target", paths[1])
    report = json.loads(out)
    assert code == 0 and report["isomorphic"] is True
    rows = report["witness"]["map"]["rows"]
    code, out, _ = call("verify-iso", "--source", paths[0], "--target", paths[1], "--map", json.dumps(rows))
    assert json.loads(out)["isomorphic"] is True


def test_enumerate_with_degree_and_csv(tmp_path):
    csv_path = tmp_path / "orbits.csv"
    code, out, _ = call("enumerate", "--field", "Fp", "--p", "2", "--n", "2", "--degree", "1", "--csv", str(csv_path))
    assert code == 0
    report = json.loads(out)
    assert (report["pair_count"], report["orbit_count"]) == (24, 6)
    assert report["iso_classes"]["class_count"] == 2
    assert csv_path.read_text().startswith("index,A,w,size\n")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "symlie.cli", "construct", "--matrix", "[[2,0],[0,6]]", "--w", "[1,0]", "--degree", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["constants"][1]["coeffs"] == [{"k": 2, "value": "-36"}]
