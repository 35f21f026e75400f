import json
from fractions import Fraction

import pytest

import oddred


def test_c_induced_n7():
    c = oddred.c_induced(7, [0, 1, 2, 3, 4])
    assert c["constraint"]["rhs"] == 5
    assert max(c["constraint"]["coeffs"].values()) == 3
    assert c["constraint"]["coeffs"]["5-6"] == 1


def test_certificates():
    assert oddred.certify_dominant(7, [0, 1, 2, 3, 4])["face_dim"] == 20
    r = oddred.certify_matching(5, [0, 1, 2])
    assert r["certified"]
    assert (r["polytope_dim"], r["face_dim"]) == (16, 15)


def test_alternating_sums():
    cycle = list(range(7))
    assert oddred.alternating_sum(9, cycle, [7, 8]) == 2
    assert oddred.alternating_sum(9, cycle, [0, 1, 2]) == 7
    assert oddred.alternating_sum(9, cycle, [0, 2]) == 10


def test_matrix_and_low_complexity():
    m = oddred.matrix(9, range(7))
    assert m["report"]["max_abs"] == "5"
    assert m["report"]["distinct"] == 4
    low = oddred.matrix(27, range(25), low_complexity=True)
    assert low["report"]["distinct"] == 43
    assert low["report"]["distinct"] <= low["bound"]
    assert oddred.f_value(5, 3, 9) == 7


def test_counterexample():
    ce = oddred.counterexample()
    assert ce["point"]["values"]["0-5"] == Fraction(2, 3)
    assert oddred.q_membership(ce["graph"], ce["point"])["status"] == "inside"
    assert oddred.solve(ce["graph"])["status"] == "found"


def test_reduction():
    k4 = {"n": 4, "bipartition": None, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]], "red": []}
    assert oddred.max_cut(k4) == 4
    inst = oddred.reduce_maxcut(k4, 4)
    assert inst["alpha"] == Fraction(1, 6)
    assert oddred.q_membership(inst["graph"], inst["point"])["status"] == "label_violation"
    with pytest.raises(ValueError):
        oddred.reduce_maxcut(k4, 9)


def test_bimodularity_and_solver():
    single = {"n": 2, "bipartition": [[0], [1]], "edges": [[0, 1]], "red": [[0, 1]]}
    r = oddred.bimodularity(single)
    assert r["ok"] and r["values"] == ["-2", "0"]
    blue = {"n": 4, "bipartition": [[0, 1], [2, 3]], "edges": [[0, 2], [1, 3]], "red": []}
    assert oddred.solve(blue)["status"] == "no_odd_red_matching"
    with pytest.raises(ValueError):
        oddred.solve("{broken")


def test_cli():
    code, out, _ = oddred.run_cli("facet", "certify-dominant", "--n", 7, "--cycle", "0,1,2,3,4")
    assert code == 0
    assert json.loads(out)["certificate"]["face_dim"] == 20
    assert oddred.run_cli("solve", "--graph", "missing.json")[0] == 65
