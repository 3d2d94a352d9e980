import math

import pytest

import cl30


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def test_labels_and_table():
    assert cl30.D4_LABELS == ["Id", "F1", "F2", "F3", "Rccw", "Rcw", "F1p2", "F1m2"]
    table = cl30.multiplication_table()
    assert len(table) == 8
    assert table[4][4] == "F3"
    assert cl30.d4_multiply("F1", "F2") == "F3"
    assert cl30.d4_multiply("Rccw", "F1") == "F1m2"


def test_unknown_label_raises():
    with pytest.raises(ValueError):
        cl30.d4_multiply("F1", "R90")


def test_geometric_product():
    e1 = [0, 1, 0, 0, 0, 0, 0, 0]
    e2 = [0, 0, 1, 0, 0, 0, 0, 0]
    assert cl30.geometric_product(e1, e2) == [0, 0, 0, 0, 0, 0, 1, 0]
    a = [1, 2, 0.5, -1, 0, 3, 0, 1]
    assert close(cl30.geometric_product(a, cl30.inverse(a)), [1, 0, 0, 0, 0, 0, 0, 0], 1e-12)


def test_rotation_and_composition():
    assert close(cl30.rotate([0, 0, math.pi / 2], [1, 0, 0]), [0, 1, 0])
    axis, angle = cl30.compose([math.pi, 0, 0], [0, math.pi, 0])
    assert close(axis, [0, 0, 1])
    assert abs(angle - math.pi) < 1e-12


def test_group_algebra():
    e12 = cl30.fermion_dyadic(1, 2)
    assert e12 == {"Rccw": 0.5, "F1p2": 0.5}
    assert close(cl30.ga_apply(e12, [3, 4, 5]), [0, 3, 0])


def test_matrix_bridge():
    sigma2 = cl30.pauli_rep([0, 0, 1, 0, 0, 0, 0, 0])
    assert sigma2 == [[0, -1j], [1j, 0]]
    assert close(cl30.cliffor_from_matrix([[1, 2], [3, 4]]), [2.5, 2.5, 0, -1.5, 0, -0.5, 0, 0])
    assert cl30.d4_matrix("Rccw") == [[0, 1], [-1, 0]]
    d = cl30.decompose([[0, -1j], [1j, 0]])
    assert d["fermion"][0][1] == -1j
    assert d["fermion"][1][0] == 1j


def test_chain_and_verify():
    out = cl30.eval_chain("1,0,0", "scale:e2;ket:F1")
    assert close(out, [0, 0, 0, 0, 0, 0, -1, 0])
    checks = cl30.verify()
    assert checks and all(c["passed"] for c in checks)
