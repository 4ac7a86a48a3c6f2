import json
import os
from pathlib import Path

import pytest

import nonroot

CORPUS = Path(os.environ.get("NONROOT_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))


def load(name):
    return json.loads((CORPUS / name).read_text())


def test_certify_f1():
    out = nonroot.certify(load("f1.json"))
    assert out["certificate"]["case"] == "C3"
    assert out["certificate"]["x0"] == "3/4"


def test_certify_finite_with_labels():
    out = nonroot.certify(load("six_point.json"))
    assert out["certificate"]["case"] == "C1"
    assert out["certificate"]["x0"] == "x0"


def test_abstention_reason():
    out = nonroot.certify(load("remark3_f.json"))
    assert out["certificate"] is None
    assert out["reason"] == "inequality_fails"


def test_find_root_and_verify():
    res = nonroot.find_root([1, 2, 0], 2)
    assert res["status"] == "found"
    g = res["witness"]["map"]
    assert nonroot.verify_root([1, 2, 0], g, 2)
    assert [g[g[x]] for x in range(3)] == [1, 2, 0]
    # A 2-cycle has no square root.
    assert nonroot.find_root([1, 0], 2)["status"] == "none"


def test_budget():
    with pytest.raises(nonroot.BudgetExceeded):
        nonroot.find_root([1, 2, 3, 4, 5, 6, 0, 0], 2, budget=1)


def test_ray_square():
    assert nonroot.ray_square_equals(load("remark4_f.json"), load("remark4_g.json"))
    assert not nonroot.ray_square_equals(load("remark4_g.json"), load("remark4_g.json"))


def test_chord_anchors():
    assert nonroot.chord("1/6")[0] == "1"
    assert nonroot.chord("1/2")[0] == "2"
    exact, approx = nonroot.chord("1/4")
    assert exact is None
    assert abs(approx - 2 ** 0.5) < 1e-12


def test_construct_circle():
    out = nonroot.construct(load("circle_rotation_third.json"), "1/2")
    assert out["certificate"]["case"] == "C3"
    assert out["within_epsilon"]
    assert all(c["passed"] for c in out["checks"])


def test_ex4():
    report = nonroot.ex4_report()
    assert len(report) == 5
    assert all(c["passed"] for c in report)


def test_errors():
    with pytest.raises(nonroot.InputError):
        nonroot.certify("{ not json")
    with pytest.raises(nonroot.InputError):
        nonroot.certify({"n": 2, "map": [0, 9]})
    with pytest.raises(nonroot.AdmissibilityError):
        nonroot.certify({"partition": ["0", "1/3", "2/3"], "images": ["0", "1/2", "2/3"]})


def test_cli_in_process():
    code, out, _ = nonroot.run_cli(["certify-pl", "--input", str(CORPUS / "f2.json")])
    assert code == 0
    assert json.loads(out)["certificate"]["x0"] == "1/4"
