import pytest

from ezd import GF, QQ, build_ring, inverse_system_ring
from ezd.classify import (
    NotEmbeddedMinimally,
    NotGraded,
    NotMinimalGenerators,
    c21_check,
    classify,
    ideal_generator_degrees,
    minimal_presentation,
    p15_check,
    staircase_hilbert,
    t5_check,
)
from ezd.engine import search


def test_ci2(ci2):
    c = classify(ci2)
    assert c.length == 4 and c.hilbert_function == [1, 2, 1] and c.hilbert_series == [1, 2, 1]
    assert c.ci and c.koszul_ci and c.gorenstein and c.e == 4 and c.log2_bound == 2


def test_ci3(ci3):
    c = classify(ci3)
    assert c.hilbert_function == [1, 3, 3, 1]
    assert c.ci and c.generator_degrees == [2, 2, 2] and c.koszul_ci


def test_cubic(F7):
    c = classify(build_ring(F7, ["x"], ["x^3"]))
    assert c.hilbert_function == [1, 1, 1]
    assert c.ci and not c.quadratic and not c.koszul_ci


def test_non_ci_and_non_gorenstein(F7):
    c = classify(build_ring(F7, ["x", "y"], ["x^2", "x*y", "y^3"]))
    assert not c.gorenstein and c.socle_dim == 2 and not c.ci
    c = classify(build_ring(GF(5), ["x", "y", "z"], ["x*y", "x*z", "y*z", "x^2 - y^2", "x^2 - z^2"]))
    assert c.gorenstein and not c.ci and c.mu_ideal == 5


def test_redundant_generators_do_not_count(F7):
    R = build_ring(F7, ["x", "y"], ["x^2", "y^2", "x^2 + y^2", "x^3", "x*y^2"])
    assert ideal_generator_degrees(R) == [2, 2]
    assert classify(R).ci


def test_not_graded_reports_not_computed(F7):
    R = build_ring(F7, ["x", "y"], ["x^2 - y^3", "x*y"])
    c = classify(R)
    assert not c.graded and c.ci is None and c.koszul_ci is None
    with pytest.raises(NotGraded):
        p15_check(R)


def test_linear_generator(F7):
    R = build_ring(F7, ["x", "y", "z"], ["x - y", "x^2", "z^2"])
    with pytest.raises(NotEmbeddedMinimally):
        classify(R)
    c = classify(R, represent=True)
    assert c.ci and c.koszul_ci and c.hilbert_function == [1, 2, 1]
    M = minimal_presentation(R)
    assert M.nvars == 2 and M.length == R.length


def test_graded_hilbert_agrees_with_staircase(ci3, ci2):
    for R in (ci3, ci2, inverse_system_ring(GF(5), ["X", "Y", "Z"], "X^3 + Y^3 + Z^3")):
        assert staircase_hilbert(R) == R.hilbert_function


def test_ci_length_is_product_of_degrees(F7):
    for gens in (["x^2", "y^3"], ["x*y", "x^3 - y^3"], ["x^3", "y^4"]):
        R = build_ring(F7, ["x", "y"], gens)
        c = classify(R)
        prod = 1
        for d in c.generator_degrees:
            prod *= d
        assert c.ci and prod == R.length


def test_inverse_systems_are_gorenstein():
    for F, vs, form in [
        (GF(7), ["X", "Y"], "X^2*Y + Y^3"),
        (GF(3), ["X", "Y", "Z"], "X*Y*Z + Z^3"),
        (QQ, ["X", "Y"], "X^4 - 2*X*Y^3"),
    ]:
        assert classify(inverse_system_ring(F, vs, form)).gorenstein


def test_t5_examples(ci3):
    res = t5_check(ci3, ["x1", "x2", "x3"])
    assert res.applicable and res.is_sequence and res.quotient_ci == [True] * 4 and res.consistent
    res = t5_check(ci3, ["x2", "x1", "x3"])
    assert not res.is_sequence and not res.quotient_ci[1] and res.consistent
    field = build_ring(GF(7), ["x"], ["x"])
    assert t5_check(field, []).consistent
    with pytest.raises(NotMinimalGenerators):
        t5_check(ci3, ["x1", "x2"])


def test_c21_examples(ci3, ci2, trunc4):
    res = c21_check(ci2, ["x1", "x2"])
    assert res.applicable and res.generates_m and res.ci and all(res.twins_outside_m2)
    wit = search(ci3, "minimal", 3, limit=1)[0]
    res = c21_check(ci3, wit.xs)
    assert res.applicable and res.consistent
    assert not c21_check(trunc4, ["x"]).applicable


def test_p15_examples(ci2, F7):
    res = p15_check(ci2)
    assert res.length2_found and res.koszul_ci and res.part_i
    res = p15_check(build_ring(F7, ["x", "y"], ["x^2", "y^2"]))
    assert res.koszul_ci and res.length2_found
    res = p15_check(inverse_system_ring(F7, ["X1", "X2", "X3"], "X1*X2*X3"))
    assert res.socle_degree == 3 and res.koszul_ci and res.evidence_found is not None
    assert res.consistent
