from fractions import Fraction

import pytest

from ezd import GF, QQ, MonomialOrder, ParseError, PolyRing, monomial_compare, parse_field, parse_polynomial
from ezd.poly import render


def test_gf_rejects_composite_and_large():
    with pytest.raises(ValueError):
        GF(9)
    with pytest.raises(ValueError):
        GF(2**31 + 11)
    assert GF(2**31 - 1).p == 2**31 - 1


def test_gf_scalars_are_canonical():
    F = GF(7)
    assert F(-1) == 6
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F(Fraction(1, 2)) == 4
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_rationals_exact():
    assert QQ.add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert QQ.inv(Fraction(-2, 3)) == Fraction(-3, 2)


def test_parse_field():
    assert parse_field("GF(7)") == GF(7)
    assert parse_field("QQ") is QQ
    with pytest.raises(ValueError):
        parse_field("GF(8)")
    with pytest.raises(ValueError):
        parse_field("RR")


def test_parse_two_terms():
    f = parse_polynomial("x1^2 + x2^2", ["x1", "x2"], GF(7))
    assert len(f) == 2
    assert f.coeff((2, 0)) == 1 and f.coeff((0, 2)) == 1


def test_parse_zero_and_cancellation():
    assert parse_polynomial("0", ["x"], GF(7)).is_zero()
    assert parse_polynomial("x - x", ["x"], GF(7)).is_zero()


def test_parse_errors_report_positions():
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x y", ["x", "y"], GF(7))
    assert exc.value.pos == 2
    assert "implicit multiplication" in str(exc.value)
    with pytest.raises(ParseError):
        parse_polynomial("x/2", ["x"], QQ)
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x + z", ["x", "y"], GF(7))
    assert "unknown variable" in str(exc.value)
    with pytest.raises(ParseError):
        parse_polynomial("(x + y", ["x", "y"], GF(7))
    with pytest.raises(ParseError):
        parse_polynomial("x^-1", ["x"], GF(7))


def test_parse_nested_and_unary_minus():
    R = PolyRing(QQ, ["x", "y"])
    assert R.parse("-(x - y)*(x + y)") == R.parse("y^2 - x^2")
    assert R.parse("--x") == R.parse("x")
    assert R.parse("2*3*x") == R.parse("6*x")


def test_products():
    Q = PolyRing(QQ, ["x", "y"])
    assert Q.parse("(x+y)*(x-y)") == Q.parse("x^2 - y^2")
    G2 = PolyRing(GF(2), ["x", "y"])
    assert G2.parse("(x+y)*(x+y)") == G2.parse("x^2 + y^2")
    with pytest.raises(ParseError):
        G2.parse("(x+y)^2")  # powers apply to variables only
    G7 = PolyRing(GF(7), ["x", "y"])
    assert len(G7.parse("x") * G7.parse("y")) == 1


def test_product_ring_mismatch():
    a = PolyRing(GF(7), ["x", "y"]).parse("x")
    b = PolyRing(GF(5), ["x", "y"]).parse("x")
    with pytest.raises(ValueError):
        a * b


def test_monomial_compare_examples():
    g = MonomialOrder.GREVLEX
    assert monomial_compare((2, 1), (1, 2), g) == 1
    for order in MonomialOrder:
        assert monomial_compare((3, 1), (3, 1), order) == 0
    assert monomial_compare((1, 0), (0, 3), MonomialOrder.LEX) == 1
    with pytest.raises(ValueError):
        monomial_compare((1, 0), (1, 0, 0), g)


def test_grevlex_differs_from_grlex():
    # x1*x3 vs x2^2: grlex compares exponents left to right, grevlex looks at the last variable
    assert monomial_compare((1, 0, 1), (0, 2, 0), MonomialOrder.GRLEX) == 1
    assert monomial_compare((1, 0, 1), (0, 2, 0), MonomialOrder.GREVLEX) == -1


def test_terms_sorted_descending():
    R = PolyRing(GF(7), ["x", "y"])
    f = R.parse("y + x^2 + 3 + x*y")
    keys = [R.order.key(m) for m, _ in f.terms]
    assert keys == sorted(keys, reverse=True)
    assert all(c != 0 for _, c in f.terms)


def test_render_round_trip():
    R = PolyRing(GF(7), ["x1", "x2"])
    f = R.parse("-x1^2 + 3*x1*x2 - 1")
    assert render(f) == "6*x1^2 + 3*x1*x2 + 6"
    assert R.parse(render(f)) == f
    Q = PolyRing(QQ, ["x", "y"])
    g = Q.parse("-2*x^3 + y - 7")
    assert Q.parse(render(g)) == g
