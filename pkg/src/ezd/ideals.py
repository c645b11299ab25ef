"""Ideals of an artinian ring as variable-stable subspaces."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from ezd.linalg import Subspace, left_kernel
from ezd.ring import ArtinianRing, RingElement


@dataclass(frozen=True, eq=False)
class IdealInRing:
    ring: ArtinianRing
    space: Subspace
    generators: tuple = dc_field(default=())

    @property
    def dim(self) -> int:
        return self.space.dim

    def __contains__(self, a) -> bool:
        a = self.ring.element(a)
        return self.space.contains(a.coords)

    def __eq__(self, other):
        if not isinstance(other, IdealInRing):
            return NotImplemented
        return self.ring is other.ring and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __le__(self, other: "IdealInRing") -> bool:
        return other.space.contains_space(self.space)

    def __add__(self, other: "IdealInRing") -> "IdealInRing":
        return IdealInRing(self.ring, self.space + other.space, self.generators + other.generators)

    def __and__(self, other: "IdealInRing") -> "IdealInRing":
        return IdealInRing(self.ring, self.space & other.space)

    def is_zero(self) -> bool:
        return self.space.dim == 0

    def is_whole(self) -> bool:
        return self.space.dim == self.ring.length

    def basis_elements(self):
        return [RingElement(self.ring, row) for row in self.space.basis]

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) if self.generators else "..."
        return f"IdealInRing(({gens}), dim={self.dim})"


def zero_ideal(ring: ArtinianRing) -> IdealInRing:
    return IdealInRing(ring, Subspace.zero(ring.field, ring.length))


def whole_ring(ring: ArtinianRing) -> IdealInRing:
    return IdealInRing(ring, Subspace.full(ring.field, ring.length), (ring.one(),))


def maximal_ideal(ring: ArtinianRing) -> IdealInRing:
    return IdealInRing(ring, ring.maximal_ideal, tuple(ring.gens()))


def ideal_of(ring: ArtinianRing, gens) -> IdealInRing:
    """The ideal generated by ``gens``: row space of their multiplication matrices."""
    gens = tuple(ring.element(g) for g in gens)
    if not gens:
        return zero_ideal(ring)
    rows = np.concatenate([g.matrix for g in gens])
    return IdealInRing(ring, Subspace(ring.field, ring.length, rows), gens)


def closure(ring: ArtinianRing, vectors) -> Subspace:
    """Smallest variable-stable subspace containing ``vectors`` (fixpoint iteration)."""
    f = ring.field
    space = Subspace(f, ring.length, vectors)
    while True:
        if space.dim == 0:
            return space
        grown = space + Subspace(f, ring.length, np.concatenate([f.matmul(space.basis, a) for a in ring.act]))
        if grown.dim == space.dim:
            return space
        space = grown


def m_times(ring: ArtinianRing, space: Subspace) -> Subspace:
    """The subspace m*I spanned by variable multiples."""
    f = ring.field
    if space.dim == 0 or not ring.act:
        return Subspace.zero(f, ring.length)
    return Subspace(f, ring.length, np.concatenate([f.matmul(space.basis, a) for a in ring.act]))


def _modulo_space(ring, modulo) -> Subspace:
    if modulo is None:
        return Subspace.zero(ring.field, ring.length)
    return modulo.space if isinstance(modulo, IdealInRing) else modulo


def annihilator(ring: ArtinianRing, a, modulo: IdealInRing | None = None) -> IdealInRing:
    """``{r : r*a in J}`` (``J`` = ``modulo``, default 0): the preimage of ``0 :_{R/J} a``."""
    a = ring.element(a)
    J = _modulo_space(ring, modulo)
    m = a.matrix
    if J.dim:
        m = ring.field.matmul(m, J.projection())
    return IdealInRing(ring, left_kernel(ring.field, m))


def annihilator_of_ideal(ring: ArtinianRing, ideal: IdealInRing, modulo=None) -> IdealInRing:
    """``(J : I)``, the intersection of annihilators of a spanning set of ``I``."""
    J = _modulo_space(ring, modulo)
    gens = ideal.generators or tuple(ideal.basis_elements())
    out = IdealInRing(ring, Subspace.full(ring.field, ring.length))
    for g in gens:
        out = out & annihilator(ring, g, J)
    return out


def num_gens(ring: ArtinianRing, ideal: IdealInRing) -> int:
    """Minimal number of generators ``dim I/mI`` (no witnesses)."""
    return ideal.dim - m_times(ring, ideal.space).dim


def min_gens(ring: ArtinianRing, ideal: IdealInRing, modulo=None) -> tuple[int, list[RingElement]]:
    """Nakayama count ``dim I/(mI + J)`` with deterministic witnesses.

    Witnesses are the RREF basis rows of ``I``, in order, that are independent
    modulo ``mI + J`` and the witnesses chosen before them.
    """
    J = _modulo_space(ring, modulo)
    sub = m_times(ring, ideal.space) + J
    witnesses = []
    for row in ideal.space.basis:
        if not sub.contains(row):
            witnesses.append(RingElement(ring, row))
            sub = sub + Subspace(ring.field, ring.length, row)
    return len(witnesses), witnesses


def principal_generator(ring: ArtinianRing, ideal: IdealInRing, modulo=None) -> RingElement | None:
    """A generator of ``(I + J)/J`` when it is principal and nonzero, else None."""
    J = _modulo_space(ring, modulo)
    sub = m_times(ring, ideal.space) + J
    total = ideal.space + J if J.dim else ideal.space
    mu = total.dim - sub.dim
    if mu != 1:
        return None
    for row in ideal.space.basis:
        if not sub.contains(row):
            return RingElement(ring, row)
    raise AssertionError("unreachable: mu = 1 but no witness row")


def socle(ring: ArtinianRing) -> IdealInRing:
    """``0 :_R m``, the common left kernel of all variable actions."""
    if not ring.act:
        return whole_ring(ring)
    return IdealInRing(ring, left_kernel(ring.field, np.concatenate(ring.act, axis=1)))
