import itertools

import numpy as np
import pytest

from ezd import (
    GF,
    QQ,
    NotLocal,
    NotZeroDimensional,
    UnitIdeal,
    build_ring,
    ideal_of,
    inverse_system_ring,
    quotient,
    socle,
)
from ezd.linalg import Subspace
from ezd.poly import monomials_of_degree


def mpower_oracle(ring, i):
    """m^i of a graded ring: span of all monomials of degree i..s+1."""
    rows = [ring.coords_of(ring.poly_ring.monomial(m))
            for d in range(i, ring.socle_degree + 2)
            for m in monomials_of_degree(ring.nvars, d)]
    return Subspace(ring.field, ring.length, rows)


def test_ci2_structure(ci2):
    assert ci2.length == 4
    assert ci2.socle_degree == 2
    assert [s.dim for s in ci2.filtration] == [4, 3, 1, 0]
    for i in range(4):
        assert ci2.mpower(i) == mpower_oracle(ci2, i)


def test_ci3_structure(ci3):
    assert ci3.length == 8 and ci3.socle_degree == 3
    assert ci3.hilbert_function == [1, 3, 3, 1]
    assert sum(ci3.hilbert_function) == ci3.length
    for i in range(5):
        assert ci3.mpower(i) == mpower_oracle(ci3, i)


def test_action_matrices_commute_and_are_nilpotent(ci3):
    F = ci3.field
    for a, b in itertools.combinations(ci3.act, 2):
        assert np.array_equal(F.matmul(a, b), F.matmul(b, a))
    for a in ci3.mult:
        p = F.eye(ci3.length)
        for _ in range(ci3.socle_degree + 1):
            p = F.matmul(p, a)
        assert not np.any(p)


def test_construction_errors(F7):
    with pytest.raises(NotLocal):
        build_ring(F7, ["x"], ["x^2 - x"])
    with pytest.raises(NotZeroDimensional):
        build_ring(F7, ["x", "y"], ["x*y", "x^2"])
    with pytest.raises(UnitIdeal):
        build_ring(F7, ["x"], ["x^2", "x + 1"])


def test_elements(ci2):
    assert ci2.element("x2^2") == ci2.element("-x1^2")
    x, y = ci2.var("x1"), ci2.var("x2")
    assert (x * y).is_zero()
    assert ci2.element("1 + x1").is_unit()
    assert not x.is_unit()
    assert (x + y) * (x + y) == ci2.element("2*x1*x2")


def test_element_coords_are_normal_forms(ci3):
    f = ci3.poly_ring.parse("x2^2 + 3*x1*x2*x3 - x3^3 + 2")
    nf = ci3.gb.normal_form(f)
    assert ci3.element(f).to_poly() == nf
    # evaluation through the action matrices agrees with the normal form
    assert np.array_equal(ci3.evaluate(f), ci3.coords_of(f))


def test_quotients(ci3, ci2):
    q = quotient(ci2, ideal_of(ci2, ["x1"]))
    assert q.length == 2
    assert quotient(ci2, ideal_of(ci2, [])).length == 4
    assert quotient(ci3, ideal_of(ci3, ["x1", "x2", "x3"])).length == 1
    with pytest.raises(UnitIdeal):
        quotient(ci2, ideal_of(ci2, ["1"]))


def test_quotient_length_additivity_and_maps(ci3):
    J = ideal_of(ci3, ["x2"])
    q = quotient(ci3, J)
    assert ci3.length == J.dim + q.length
    a, b = ci3.element("x1 + x3"), ci3.element("x3 + 2*x1*x2")
    assert q.project(a * b) == q.project(a) * q.project(b)
    assert q.project(q.lift(q.project(a))) == q.project(a)
    # the quotient ring presentation knows its own ideal
    assert q.ring.element("x2").is_zero()


def test_inverse_system_examples(F7):
    R = inverse_system_ring(F7, ["X1", "X2", "X3"], "X1*X2*X3")
    assert [str(g) for g in R.gb.generators] == ["X1^2", "X2^2", "X3^2"]
    assert R.length == 8 and socle(R).dim == 1
    for s in range(1, 5):
        P = inverse_system_ring(F7, ["X1"], f"X1^{s}")
        assert P.length == s + 1 and [str(g) for g in P.gb.generators] == [f"X1^{s + 1}"]
    Q = inverse_system_ring(QQ, ["X1", "X2"], "X1^2 + X2^2")
    assert Q.length == 4 and Q.socle_degree == 2 and socle(Q).dim == 1


def test_inverse_system_rejects_bad_forms(F7):
    with pytest.raises(ValueError):
        inverse_system_ring(F7, ["X"], "0")
    with pytest.raises(ValueError):
        inverse_system_ring(F7, ["X", "Y"], "X^2 + Y")


def test_inverse_system_small_characteristic():
    # contraction works where differentiation would kill X^3 in characteristic 3
    R = inverse_system_ring(GF(3), ["X", "Y"], "X^3 + Y^3")
    assert socle(R).dim == 1
    assert R.hilbert_function == [1, 2, 2, 1]
