"""Exact zero-divisors on artinian local rings K[x1..xn]/I."""

from ezd.field import Field, GF, QQ, parse_field
from ezd.poly import MonomialOrder, PolyRing, Polynomial, monomial_compare
from ezd.parser import ParseError, parse_polynomial
from ezd.groebner import GroebnerBasis, buchberger, normal_form
from ezd.ring import (
    ArtinianRing,
    NotLocal,
    NotZeroDimensional,
    QuotientData,
    RingElement,
    UnitIdeal,
    build_ring,
    inverse_system_ring,
    quotient,
)
from ezd.ideals import (
    IdealInRing,
    annihilator,
    ideal_of,
    min_gens,
    principal_generator,
    socle,
)

__version__ = "0.1.0"

__all__ = [
    "ArtinianRing",
    "Field",
    "GF",
    "GroebnerBasis",
    "IdealInRing",
    "MonomialOrder",
    "NotLocal",
    "NotZeroDimensional",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "QQ",
    "QuotientData",
    "RingElement",
    "UnitIdeal",
    "annihilator",
    "buchberger",
    "build_ring",
    "ideal_of",
    "inverse_system_ring",
    "min_gens",
    "monomial_compare",
    "normal_form",
    "parse_field",
    "parse_polynomial",
    "principal_generator",
    "quotient",
    "socle",
]
