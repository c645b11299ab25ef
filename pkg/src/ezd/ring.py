"""Artinian local rings ``K[x1..xn]/I`` as finite-dimensional algebras.

A ring is stored through a K-basis of residue classes of monomials (the
staircase of a Groebner basis, or a subset of it for quotient rings) and one
action matrix per variable.  Vectors are rows: the coordinates of ``x_i * v``
are ``v @ ring.act[i]``; ``ring.mult[i]`` is the transpose, acting on column
vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ezd.field import Field
from ezd.groebner import GroebnerBasis, buchberger, normal_form
from ezd.linalg import Subspace, left_kernel
from ezd.poly import MonomialOrder, PolyRing, Polynomial, monomials_of_degree


class RingError(ValueError):
    pass


class NotZeroDimensional(RingError):
    """The quotient is not finite-dimensional: dim R > 0 is out of scope."""


class NotLocal(RingError):
    """Some variable is not nilpotent, so (x1..xn) is not the only maximal ideal."""


class UnitIdeal(RingError):
    """The ideal is the whole polynomial ring."""


class ArtinianRing:
    """A local artinian K-algebra with a monomial basis and variable actions.

    Construct with :func:`build_ring`, :func:`inverse_system_ring` or
    :func:`quotient`; the constructor only checks commutativity and
    nilpotency of the given action matrices.
    """

    def __init__(
        self,
        field: Field,
        var_names,
        basis,
        act,
        ideal_gens,
        *,
        order=MonomialOrder.GREVLEX,
        gb: GroebnerBasis | None = None,
        parent: "ArtinianRing | None" = None,
        projection: np.ndarray | None = None,
    ):
        self.field = field
        self.poly_ring = PolyRing(field, var_names, order)
        self.var_names = self.poly_ring.var_names
        self.nvars = len(self.var_names)
        self.basis = tuple(tuple(m) for m in basis)
        self.length = len(self.basis)
        self.act = [field.reduce(np.asarray(a, dtype=field.dtype)) for a in act]
        for a in self.act:
            a.setflags(write=False)
        self.ideal_gens = tuple(ideal_gens)
        self.gb = gb
        self.parent = parent
        self._projection = projection
        self._mono_cache: dict = {}
        if self.length == 0:
            raise UnitIdeal("the zero ring is not local")
        if any(b != (0,) * self.nvars for b in self.basis[:1]):
            raise RingError("basis must start with the monomial 1")
        self._check_structure()
        self.filtration = self._filtration()
        self.socle_degree = len(self.filtration) - 2

    def _check_structure(self):
        f = self.field
        for i, a in enumerate(self.act):
            for j in range(i + 1, len(self.act)):
                b = self.act[j]
                if np.any(f.matmul(a, b) != f.matmul(b, a)):
                    raise RingError(
                        f"action matrices of {self.var_names[i]} and {self.var_names[j]} do not commute"
                    )
        for i, a in enumerate(self.act):
            if np.any(self._power(a, self.length) != 0):
                raise NotLocal(f"variable {self.var_names[i]} is not nilpotent")

    def _power(self, a, k):
        f = self.field
        out = f.eye(a.shape[0])
        base = a
        while k:
            if k & 1:
                out = f.matmul(out, base)
            base = f.matmul(base, base)
            k >>= 1
        return out

    def _filtration(self):
        f, n = self.field, self.length
        levels = [Subspace.full(f, n)]
        cur = Subspace(f, n, f.eye(n)[1:])
        while True:
            levels.append(cur)
            if cur.dim == 0:
                return levels
            rows = [f.matmul(cur.basis, a) for a in self.act]
            nxt = Subspace(f, n, np.concatenate(rows)) if rows else Subspace.zero(f, n)
            if nxt.dim >= cur.dim:
                raise NotLocal("the maximal ideal is not nilpotent")
            cur = nxt

    # structure
    @property
    def order(self) -> MonomialOrder:
        return self.poly_ring.order

    @cached_property
    def mult(self):
        """Action matrices in column convention."""
        return [a.T.copy() for a in self.act]

    @property
    def maximal_ideal(self) -> Subspace:
        return self.filtration[1]

    def mpower(self, i: int) -> Subspace:
        """The subspace m^i (zero past the socle degree)."""
        if i < len(self.filtration):
            return self.filtration[i]
        return Subspace.zero(self.field, self.length)

    @property
    def hilbert_function(self) -> list[int]:
        dims = [s.dim for s in self.filtration]
        return [dims[i] - dims[i + 1] for i in range(len(dims) - 1)]

    def monomial_matrix(self, m) -> np.ndarray:
        """Row-convention action matrix of the monomial with exponent vector ``m``."""
        m = tuple(m)
        hit = self._mono_cache.get(m)
        if hit is not None:
            return hit
        if sum(m) == 0:
            out = self.field.eye(self.length)
        else:
            i = next(k for k, e in enumerate(m) if e)
            prev = m[:i] + (m[i] - 1,) + m[i + 1:]
            out = self.field.matmul(self.monomial_matrix(prev), self.act[i])
        out.setflags(write=False)
        self._mono_cache[m] = out
        return out

    @cached_property
    def _basis_mats(self):
        return np.stack([self.monomial_matrix(b) for b in self.basis])

    def matrix_of(self, coords) -> np.ndarray:
        """Row-convention matrix of multiplication by the element with ``coords``.

        Row ``k`` holds the coordinates of ``basis[k] * a``.
        """
        f = self.field
        coords = np.asarray(coords)
        nz = np.flatnonzero(coords != 0)
        out = f.zeros((self.length, self.length))
        for j in nz:
            out = f.reduce(out + f.scale(self._basis_mats[j], coords[j]))
        return out

    # elements
    def coords_of(self, f: Polynomial) -> np.ndarray:
        """Coordinates of the residue class of ``f``."""
        if not isinstance(f, Polynomial):
            f = self.poly_ring.parse(f) if isinstance(f, str) else self.poly_ring.constant(f)
        if self.gb is not None:
            nf = normal_form(f, self.gb)
            index = self._basis_index
            out = self.field.zeros(self.length)
            for m, c in nf.as_dict().items():
                out[index[m]] = c
            return out
        if self.parent is not None:
            return self.field.matmul(self.parent.coords_of(f), self._projection)
        return self.evaluate(f)

    def evaluate(self, f: Polynomial) -> np.ndarray:
        """Coordinates of ``f`` by substituting the action matrices (no Groebner basis)."""
        fld = self.field
        acc = fld.zeros((self.length, self.length))
        for m, c in f.as_dict().items():
            acc = fld.reduce(acc + fld.scale(self.monomial_matrix(m), c))
        return acc[0].copy()

    @cached_property
    def _basis_index(self):
        return {m: i for i, m in enumerate(self.basis)}

    def element(self, f) -> "RingElement":
        if isinstance(f, RingElement):
            if f.ring is not self:
                raise RingError("element of another ring")
            return f
        return RingElement(self, self.coords_of(f))

    def elem(self, coords) -> "RingElement":
        return RingElement(self, coords)

    def var(self, i) -> "RingElement":
        if isinstance(i, str):
            i = self.var_names.index(i)
        return self.element(self.poly_ring.var(i))

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def zero(self) -> "RingElement":
        return RingElement(self, self.field.zeros(self.length))

    def one(self) -> "RingElement":
        v = self.field.zeros(self.length)
        v[0] = 1
        return RingElement(self, v)

    def to_poly(self, coords) -> Polynomial:
        terms = {self.basis[j]: coords[j] for j in np.flatnonzero(np.asarray(coords) != 0)}
        return Polynomial(self.poly_ring, terms)

    def is_graded(self) -> bool:
        return all(g.is_homogeneous() for g in self.ideal_gens)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.ideal_gens[:6])
        more = ", ..." if len(self.ideal_gens) > 6 else ""
        return f"ArtinianRing({self.field}[{', '.join(self.var_names)}]/({gens}{more}), length={self.length})"


class RingElement:
    """An element of an :class:`ArtinianRing` given by its basis coordinates."""

    def __init__(self, ring: ArtinianRing, coords):
        self.ring = ring
        c = ring.field.reduce(np.array(coords, dtype=ring.field.dtype, copy=True))
        if c.shape != (ring.length,):
            raise RingError(f"expected {ring.length} coordinates, got shape {c.shape}")
        c.setflags(write=False)
        self.coords = c

    def _other(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise RingError("elements of different rings")
            return other
        return self.ring.element(other)

    def __add__(self, other):
        o = self._other(other)
        return RingElement(self.ring, self.ring.field.reduce(self.coords + o.coords))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, self.ring.field.reduce(-self.coords))

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, (RingElement, Polynomial, str)):
            return self.scale(other)
        o = self._other(other)
        return RingElement(self.ring, self.ring.field.matmul(o.coords, self.matrix))

    __rmul__ = __mul__

    def scale(self, c) -> "RingElement":
        f = self.ring.field
        return RingElement(self.ring, f.scale(self.coords, f(c)))

    @cached_property
    def matrix(self) -> np.ndarray:
        m = self.ring.matrix_of(self.coords)
        m.setflags(write=False)
        return m

    def is_zero(self) -> bool:
        return not np.any(self.coords != 0)

    def is_unit(self) -> bool:
        return self.coords[0] != 0

    def normalized(self) -> "RingElement":
        """Unit multiple with first nonzero coordinate 1 (over QQ: primitive integral)."""
        f = self.ring.field
        nz = np.flatnonzero(self.coords != 0)
        if nz.size == 0:
            return self
        out = f.scale(self.coords, f.inv(self.coords[nz[0]]))
        if f.characteristic == 0:
            den = 1
            for v in out[nz]:
                den = den * v.denominator // math.gcd(den, v.denominator)
            out = f.scale(out, den)
            g = 0
            for v in out[nz]:
                g = math.gcd(g, int(v))
            out = f.scale(out, f(1) / g)
        return RingElement(self.ring, out)

    def to_poly(self) -> Polynomial:
        return self.ring.to_poly(self.coords)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return other.ring is self.ring and not np.any(self.coords != other.coords)

    def __hash__(self):
        return hash(tuple(self.coords.tolist()))

    def __str__(self):
        return str(self.to_poly())

    def __repr__(self):
        return f"RingElement({self})"


def build_ring(field: Field, var_names, ideal_gens, order=MonomialOrder.GREVLEX) -> ArtinianRing:
    """Build ``field[var_names]/(ideal_gens)``; generators may be polynomials or strings."""
    pr = PolyRing(field, var_names, order)
    gens = [pr.parse(g) if isinstance(g, str) else g.with_ring(pr) for g in ideal_gens]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise NotZeroDimensional("the zero ideal has positive dimension")
    gb = buchberger(gens, pr.order)
    if gb.is_unit:
        raise UnitIdeal("the ideal is the whole polynomial ring")
    if gb.staircase is None:
        raise NotZeroDimensional("the ideal is not zero-dimensional (dim R > 0 is out of scope)")
    basis = gb.staircase
    index = {m: i for i, m in enumerate(basis)}
    act = []
    for v in range(pr.nvars):
        a = field.zeros((len(basis), len(basis)))
        for k, m in enumerate(basis):
            prod = m[:v] + (m[v] + 1,) + m[v + 1:]
            nf = normal_form(pr.monomial(prod), gb)
            for mm, c in nf.as_dict().items():
                a[k, index[mm]] = c
        act.append(a)
    return ArtinianRing(field, pr.var_names, basis, act, gens, order=pr.order, gb=gb)


@dataclass(frozen=True, eq=False)
class QuotientData:
    """``R/J`` realised on the complement spanned by the non-pivot basis vectors of ``J``."""

    parent: ArtinianRing
    ideal: object  # IdealInRing
    section: tuple  # parent basis indices spanning the complement
    projection: np.ndarray  # parent coords -> quotient coords
    ring: ArtinianRing

    @property
    def length(self) -> int:
        return self.ring.length

    def project(self, a: RingElement) -> RingElement:
        return RingElement(self.ring, self.parent.field.matmul(a.coords, self.projection))

    def lift(self, a: RingElement) -> RingElement:
        v = self.parent.field.zeros(self.parent.length)
        v[list(self.section)] = a.coords
        return RingElement(self.parent, v)


def quotient(ring: ArtinianRing, J) -> QuotientData:
    """The quotient ``R/J`` computed by linear algebra inside ``ring``."""
    space = J.space if hasattr(J, "space") else J
    if space.dim >= ring.length or space.contains(ring.one().coords):
        raise UnitIdeal("cannot form the quotient by the whole ring")
    f = ring.field
    sec = space.complement_indices()
    proj = space.projection()
    act = [f.matmul(a[sec, :], proj) for a in ring.act]
    lifts = [ring.to_poly(row) for row in space.basis]
    qring = ArtinianRing(
        f,
        ring.var_names,
        [ring.basis[i] for i in sec],
        act,
        list(ring.ideal_gens) + lifts,
        order=ring.order,
        parent=ring,
        projection=proj,
    )
    return QuotientData(ring, J, tuple(sec), proj, qring)


def contraction_matrix(field: Field, nvars: int, F: Polynomial, d: int):
    """Matrix of ``Q_d -> S_{s-d}``, ``g -> g o F``, rows indexed by degree-d monomials."""
    s = F.degree()
    rows = list(monomials_of_degree(nvars, d))
    cols = list(monomials_of_degree(nvars, s - d))
    cidx = {m: j for j, m in enumerate(cols)}
    mat = field.zeros((len(rows), len(cols)))
    terms = F.as_dict()
    for i, a in enumerate(rows):
        for b, c in terms.items():
            if all(x <= y for x, y in zip(a, b)):
                mat[i, cidx[tuple(y - x for x, y in zip(a, b))]] = c
    return rows, mat


def inverse_system_ring(field: Field, var_names, F, order=MonomialOrder.GREVLEX) -> ArtinianRing:
    """The Gorenstein ring ``Q/(0 :_Q F)`` for a nonzero form ``F`` under contraction.

    ``X^a o X^b = X^(b-a)`` when ``a <= b`` and 0 otherwise; the annihilator is
    computed degree by degree as kernels of the contraction maps, plus every
    monomial of degree ``deg F + 1``.
    """
    pr = PolyRing(field, var_names, order)
    if isinstance(F, str):
        F = pr.parse(F)
    F = F.with_ring(pr)
    if F.is_zero():
        raise ValueError("inverse system needs a nonzero form")
    if not F.is_homogeneous():
        raise ValueError("inverse system needs a homogeneous form")
    s = F.degree()
    gens = []
    for d in range(1, s + 1):
        rows, mat = contraction_matrix(field, pr.nvars, F, d)
        ker = left_kernel(field, mat)
        for vec in ker.basis:
            gens.append(Polynomial(pr, {rows[i]: vec[i] for i in np.flatnonzero(vec != 0)}))
    gens.extend(pr.monomial(m) for m in monomials_of_degree(pr.nvars, s + 1))
    ring = build_ring(field, pr.var_names, gens, order)
    return ring
