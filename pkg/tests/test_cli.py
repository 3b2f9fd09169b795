import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tukeydepth import InputError, PointSet, parse_document, serialize_document
from tukeydepth.cli import main
from tukeydepth.realizer import rational_regular_polygon


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps({"dim": 2, "points": [[0, 0], [1, 0], [1, 1], [0, 1]]}))
    return str(path)


@pytest.fixture
def pentagon_file(tmp_path):
    P = PointSet(2, tuple(rational_regular_polygon(5)) + ((0, 0),))
    path = tmp_path / "pentagon.json"
    path.write_text(serialize_document(P))
    return str(path)


def test_depth_of_center(capsys, pentagon_file):
    code, doc = run(capsys, "depth", "--input", pentagon_file, "--point", "5")
    assert code == 0 and doc["outputs"]["depth"] == 3


def test_diagonal_depth(capsys, square_file):
    code, doc = run(capsys, "depth", "--input", square_file, "--flat", "0", "2", "--mode", "affine")
    assert code == 0 and doc["outputs"]["depth"] == 3


def test_histogram_with_labels(capsys, square_file):
    code, doc = run(capsys, "histogram", "--input", square_file, "--k", "1")
    assert code == 0
    assert doc["outputs"]["histogram"] == [0, 4, 2]
    assert doc["outputs"]["by_depth"] == {"1": 0, "2": 4, "3": 2}


def test_triangle_histogram(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text('{"dim": 2, "points": [["0.5", 0], [3, "1/3"], [0, 2]]}')
    code, doc = run(capsys, "histogram", "--input", str(path))
    assert code == 0 and doc["outputs"]["histogram"] == [3]


def test_malformed_rational_exits_one(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 2, "points": [["1/0", 0], [1, 1], [2, 0]]}')
    code, doc = run(capsys, "depth", "--input", str(path), "--point", "0")
    assert code == 1 and doc["status"] == "error"


def test_degenerate_exits_three(capsys, tmp_path):
    path = tmp_path / "line.json"
    path.write_text('{"dim": 2, "points": [[0, 0], [1, 1], [2, 2], [0, 5]]}')
    code, doc = run(capsys, "histogram", "--input", str(path))
    assert code == 3 and doc["status"] == "degenerate"


def test_missing_file_exits_one(capsys, tmp_path):
    code, _ = run(capsys, "histogram", "--input", str(tmp_path / "nope.json"))
    assert code == 1


def test_validate(capsys):
    code, doc = run(capsys, "validate", "[3,1]", "--dim", "2")
    assert code == 0 and doc["outputs"]["valid"] is True
    code, doc = run(capsys, "validate", "[2,1]", "-d", "2")
    assert code == 2 and doc["outputs"]["valid"] is False
    code, _ = run(capsys, "validate", "[3,x]", "-d", "2")
    assert code == 1


def test_count_and_enumerate(capsys):
    code, doc = run(capsys, "count", "--n", "9", "--dim", "2")
    assert code == 0 and doc["outputs"]["count"] == "55"
    code, doc = run(capsys, "count", "--n", "5", "--dim", "2", "--l", "2")
    assert doc["outputs"]["count"] == "2"
    code, doc = run(capsys, "enumerate", "--n", "5", "--dim", "2")
    assert doc["outputs"]["histograms"] == [[3, 2], [4, 1], [5]]
    code, doc = run(capsys, "count", "--n", "300", "--dim", "2")
    assert isinstance(doc["outputs"]["count"], str) and len(doc["outputs"]["count"]) > 50


def test_realize_roundtrip(capsys, tmp_path):
    out = str(tmp_path / "r.json")
    code, doc = run(capsys, "realize", "[5,1,1]", "--dim", "2", "--seed", "42", "--output", out)
    assert code == 0
    code, doc = run(capsys, "histogram", "--input", out)
    assert doc["outputs"]["histogram"] == [5, 1, 1]


def test_realize_rejects_infeasible(capsys):
    code, _ = run(capsys, "realize", "[2,1]", "--dim", "2")
    assert code == 1


def test_realize_trace(capsys):
    code, doc = run(capsys, "realize", "[4,1]", "--dim", "2", "--trace")
    assert code == 0 and any("target 2" in line for line in doc["outputs"]["trace"])


def test_check_suites(capsys, square_file):
    code, doc = run(capsys, "check", "--suite", "counting-identities")
    assert code == 0 and doc["status"] == "pass"
    code, doc = run(capsys, "check", "--input", square_file, "--suite", "roundtrip")
    assert code == 0


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    code, _ = run(capsys, "depth", "--point", "0")
    assert code == 1


def test_output_is_deterministic(capsys):
    first = run(capsys, "realize", "[6,1,1]", "--dim", "2", "--seed", "3")
    second = run(capsys, "realize", "[6,1,1]", "--dim", "2", "--seed", "3")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tukeydepth", "count", "--n", "9", "--dim", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and '"55"' in proc.stdout


rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x) < 10**9)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda d: st.lists(st.lists(rationals, min_size=d, max_size=d), min_size=1, max_size=6, unique_by=tuple)))
def test_document_roundtrip(points):
    P = PointSet(len(points[0]), tuple(tuple(p) for p in points))
    text = serialize_document(P, {"seed": 1})
    Q, meta = parse_document(text)
    assert Q == P and meta == {"seed": 1}
    assert serialize_document(Q, meta) == text


def test_decimal_coordinates_are_exact():
    P, _ = parse_document('{"dim": 1, "points": [[0.1], ["2.50"], ["-3/7"]]}')
    assert P.points == ((Fraction(1, 10),), (Fraction(5, 2),), (Fraction(-3, 7),))


@pytest.mark.parametrize("text", ["[]", '{"dim": 0, "points": []}', '{"dim": 2, "points": [[1]]}', '{"dim": 2, "points": [[1, 2]], "x": 1}', "{", '{"dim": 1, "points": [["NaN"]]}'])
def test_bad_documents(text):
    with pytest.raises(InputError):
        parse_document(text)
