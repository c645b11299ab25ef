"""Buchberger's algorithm, normal forms and the staircase of a zero-dimensional ideal."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ezd.poly import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    generators: tuple
    staircase: tuple | None  # ascending standard monomials; None if infinite

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].degree() == 0

    @property
    def leading_monomials(self):
        return [g.lm for g in self.generators]

    def is_zero_dimensional(self) -> bool:
        return self.staircase is not None

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def __len__(self):
        return len(self.generators)


def _reduce_terms(terms: dict, gens, ring: PolyRing) -> dict:
    """Fully reduce a term dict by polynomials with unit leading coefficient."""
    f = ring.field
    key = ring.order.key
    p = dict(terms)
    rem = {}
    leads = [(g.lm, g.terms[1:]) for g in gens]
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        for lm, tail in leads:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                for tm, tc in tail:
                    mm = mono_mul(tm, q)
                    s = f.sub(p.get(mm, 0), f.mul(c, tc))
                    if s == 0:
                        p.pop(mm, None)
                    else:
                        p[mm] = s
                break
        else:
            rem[m] = c
    return rem


def normal_form(f: Polynomial, gb) -> Polynomial:
    """Remainder of ``f`` on division by a Groebner basis (or any monic list)."""
    gens = gb.generators if isinstance(gb, GroebnerBasis) else list(gb)
    ring = gb.ring if isinstance(gb, GroebnerBasis) else f.ring
    if f.ring != ring:
        ring.zero()._check(f)
        f = f.with_ring(ring)
    return Polynomial._raw(ring, _reduce_terms(f.as_dict(), gens, ring))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    fld = f.ring.field
    lcm = mono_lcm(f.lm, g.lm)
    a = f.mul_term(mono_div(lcm, f.lm), fld.inv(f.lc))
    b = g.mul_term(mono_div(lcm, g.lm), fld.inv(g.lc))
    return a - b


def staircase(lms, nvars: int, order: MonomialOrder):
    """Standard monomials for the given leading monomials, or None if infinite."""
    if any(sum(m) == 0 for m in lms):
        return ()
    for i in range(nvars):
        if not any(all(e == 0 for j, e in enumerate(m) if j != i) and m[i] > 0 for m in lms):
            return None
    seen = {(0,) * nvars}
    queue = deque(seen)
    out = []
    while queue:
        m = queue.popleft()
        out.append(m)
        for i in range(nvars):
            n = m[:i] + (m[i] + 1,) + m[i + 1:]
            if n in seen or any(mono_divides(lm, n) for lm in lms):
                continue
            seen.add(n)
            queue.append(n)
    return tuple(sorted(out, key=order.key))


def _reduced(gens, ring: PolyRing):
    """Minimize and tail-reduce a Groebner basis; sort by leading monomial descending."""
    key = ring.order.key
    gens = sorted(gens, key=lambda g: key(g.lm))
    minimal = []
    for i, g in enumerate(gens):
        if any(mono_divides(h.lm, g.lm) for h in gens[:i]):
            continue
        if any(mono_divides(h.lm, g.lm) and h.lm != g.lm for h in gens[i + 1:]):
            continue
        minimal.append(g.monic())
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        head = {g.lm: g.lc}
        tail = {m: c for m, c in g.as_dict().items() if m != g.lm}
        red = _reduce_terms(tail, others, ring)
        red.update(head)
        out.append(Polynomial._raw(ring, red))
    return sorted(out, key=lambda g: key(g.lm), reverse=True)


def buchberger(gens, order=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pair selection is the normal strategy (smallest lcm first, ties broken by
    pair index); pairs are discarded by the coprime and chain criteria.
    The unit ideal yields the basis ``{1}`` with an empty staircase.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    ring = gens[0].ring
    if order is not None:
        ring = ring.with_order(order)
    for g in gens:
        g._check(ring.zero())
    polys = [g.with_ring(ring).monic() for g in gens if not g.is_zero()]
    if not polys:
        raise ValueError("all generators are zero")
    key = ring.order.key
    one = ring.one()

    G: list[Polynomial] = []
    pairs: set[tuple[int, int]] = set()

    def add(h: Polynomial):
        k = len(G)
        G.append(h)
        for i in range(k):
            pairs.add((i, k))

    for p in polys:
        r = Polynomial._raw(ring, _reduce_terms(p.as_dict(), G, ring)) if G else p
        if not r.is_zero():
            add(r.monic())

    while pairs:
        if any(g.degree() == 0 for g in G):
            break
        i, j = min(pairs, key=lambda ij: (key(mono_lcm(G[ij[0]].lm, G[ij[1]].lm)), ij))
        pairs.discard((i, j))
        lmi, lmj = G[i].lm, G[j].lm
        lcm = mono_lcm(lmi, lmj)
        if lcm == mono_mul(lmi, lmj):
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(G[k].lm, lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        s = s_polynomial(G[i], G[j])
        r = Polynomial._raw(ring, _reduce_terms(s.as_dict(), G, ring))
        if not r.is_zero():
            add(r.monic())

    if any(g.degree() == 0 for g in G):
        return GroebnerBasis(ring, (one,), ())
    red = tuple(_reduced(G, ring))
    return GroebnerBasis(ring, red, staircase([g.lm for g in red], ring.nvars, ring.order))


def is_groebner(gb: GroebnerBasis) -> bool:
    """Post-hoc Buchberger criterion: every S-polynomial reduces to zero."""
    G = gb.generators
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not normal_form(s_polynomial(G[i], G[j]), gb).is_zero():
                return False
    return True
