"""Monomials, monomial orders and sparse multivariate polynomials."""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import cached_property

from ezd.field import Field

Monomial = tuple  # exponent vector, one non-negative int per variable


class MonomialOrder(enum.Enum):
    GREVLEX = "grevlex"
    LEX = "lex"
    GRLEX = "grlex"

    @classmethod
    def parse(cls, name) -> "MonomialOrder":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"unknown monomial order {name!r}") from None

    def key(self, m: Monomial):
        """Sort key: ``key(a) < key(b)`` iff ``a < b`` in this order."""
        if self is MonomialOrder.LEX:
            return m
        if self is MonomialOrder.GRLEX:
            return (sum(m), m)
        return (sum(m), tuple(-e for e in reversed(m)))


def monomial_compare(a: Monomial, b: Monomial, order=MonomialOrder.GREVLEX) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError(f"monomial arity mismatch: {len(a)} vs {len(b)}")
    order = MonomialOrder.parse(order)
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(nvars: int, d: int):
    """All exponent vectors of total degree ``d``, in lex-descending order."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


class PolyRing:
    """The polynomial ring ``field[vars]`` with a fixed monomial order."""

    def __init__(self, field: Field, var_names, order=MonomialOrder.GREVLEX):
        names = [str(v) for v in var_names]
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        self.field = field
        self.var_names = tuple(names)
        self.order = MonomialOrder.parse(order)
        self.nvars = len(names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.var_names == other.var_names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.var_names, self.order))

    def __repr__(self):
        return f"{self.field}[{', '.join(self.var_names)}] ({self.order.value})"

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.field, self.var_names, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): self.field(coeff)})

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.var_names.index(i)
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def parse(self, src: str) -> "Polynomial":
        from ezd.parser import parse_polynomial

        return parse_polynomial(src, self.var_names, self.field, self.order)


class Polynomial:
    """An immutable polynomial; terms are kept with nonzero coefficients only."""

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        f = ring.field
        clean = {}
        for m, c in terms.items():
            c = f(c)
            if c != 0:
                clean[tuple(m)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        # terms already canonical: no zero coefficients, field-normalized
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        return p

    @cached_property
    def terms(self):
        """(monomial, coefficient) pairs sorted strictly descending."""
        key = self.ring.order.key
        return tuple(sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True))

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coeff(self, m) -> object:
        return self._terms.get(tuple(m), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def lm(self) -> Monomial:
        return self.terms[0][0]

    @property
    def lc(self):
        return self.terms[0][1]

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {m: c for m, c in self._terms.items() if sum(m) == d})

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return self.ring.constant(other)
        if other.ring.field != self.ring.field or other.ring.var_names != self.ring.var_names:
            raise ValueError(f"polynomial ring mismatch: {self.ring} vs {other.ring}")
        return other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.field == other.ring.field and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = self._check(other)
        f = self.ring.field
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = f.add(out.get(m, 0), c)
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial._raw(self.ring, {m: f.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: f.mul(v, c) for m, v in self._terms.items()})

    def mul_term(self, mono, c) -> "Polynomial":
        f = self.ring.field
        if c == 0:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring, {mono_mul(m, mono): f.mul(v, c) for m, v in self._terms.items()}
        )

    def __mul__(self, other):
        other = self._check(other)
        f = self.ring.field
        out = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                s = f.add(out.get(m, 0), f.mul(ca, cb))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out, base = self.ring.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def with_ring(self, ring: PolyRing) -> "Polynomial":
        """Same polynomial viewed under another order on the same variables."""
        return Polynomial._raw(ring, self._terms)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return render(self)


def _render_monomial(m, names) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(p: Polynomial) -> str:
    """Render in the input grammar, terms in descending order.

    GF(p) coefficients use the canonical representative ``0..p-1``.  Over QQ a
    non-integral coefficient is written ``(a/b)``, which the parser rejects:
    reports scale elements to primitive integral form before rendering.
    """
    if p.is_zero():
        return "0"
    names = p.ring.var_names
    out = []
    for i, (m, c) in enumerate(p.terms):
        neg = False
        if isinstance(c, Fraction):
            neg = c < 0
            c = -c if neg else c
            cs = str(c.numerator) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"
        else:
            cs = str(c)
        mono = _render_monomial(m, names)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)
