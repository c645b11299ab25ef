"""Hilbert data, socle, complete-intersection tests and cross-checks of known theorems.

Complete intersection questions are only answered for graded rings (every
ideal generator homogeneous) with no linear forms in the ideal.  There the
minimal number of generators of ``I`` is computed degree by degree as
``dim I_d - dim(S_1 I_(d-1))``.  "Koszul complete intersection" is decided
as "complete intersection cut out by quadrics".
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from ezd.engine import search, sequence_test, strong_test_c13
from ezd.ideals import ideal_of, socle
from ezd.linalg import Subspace, left_kernel, rank
from ezd.poly import PolyRing, Polynomial, monomials_of_degree
from ezd.ring import ArtinianRing, build_ring


class NotGraded(ValueError):
    pass


class NotEmbeddedMinimally(ValueError):
    """The defining ideal contains a linear form."""


class NotMinimalGenerators(ValueError):
    pass


@dataclass
class ClassifyReport:
    length: int
    hilbert_function: list
    socle_dim: int
    socle_degree: int
    gorenstein: bool
    graded: bool
    mu_ideal: int | None = None
    generator_degrees: list | None = None
    ci: bool | None = None
    quadratic: bool | None = None
    koszul_ci: bool | None = None
    nvars: int = 0

    @property
    def hilbert_series(self) -> list:
        """Coefficients of the Hilbert series (a polynomial in dimension zero)."""
        return list(self.hilbert_function)

    @property
    def e(self) -> int:
        return self.length

    @property
    def log2_bound(self) -> int:
        return self.length.bit_length() - 1


def graded_pieces(ring: ArtinianRing, d: int):
    """Monomials of degree ``d`` and the subspace ``I_d`` in their coordinates."""
    monos = list(monomials_of_degree(ring.nvars, d))
    pr = ring.poly_ring
    mat = np.stack([ring.coords_of(pr.monomial(m)) for m in monos])
    return monos, left_kernel(ring.field, mat)


def ideal_generator_degrees(ring: ArtinianRing) -> list[int]:
    """Degrees of a minimal homogeneous generating set of the defining ideal."""
    if not ring.is_graded():
        raise NotGraded("the defining ideal is not homogeneous")
    f, n = ring.field, ring.nvars
    degrees = []
    prev_monos, prev = None, None
    for d in range(1, ring.socle_degree + 2):
        monos, Id = graded_pieces(ring, d)
        if prev is not None and prev.dim:
            index = {m: k for k, m in enumerate(monos)}
            rows = []
            for vec in prev.basis:
                for v in range(n):
                    row = f.zeros(len(monos))
                    for k in np.flatnonzero(vec != 0):
                        m = prev_monos[k]
                        row[index[m[:v] + (m[v] + 1,) + m[v + 1:]]] = vec[k]
                    rows.append(row)
            produced = rank(f, np.stack(rows))
        else:
            produced = 0
        degrees.extend([d] * (Id.dim - produced))
        prev_monos, prev = monos, Id
    return degrees


def staircase_hilbert(ring: ArtinianRing) -> list[int] | None:
    """Standard monomials counted by degree (None without a Groebner basis)."""
    if ring.gb is None:
        return None
    out = [0] * (max(sum(m) for m in ring.basis) + 1)
    for m in ring.basis:
        out[sum(m)] += 1
    return out


def classify(ring: ArtinianRing, *, represent: bool = False) -> ClassifyReport:
    """Invariants of ``ring``.

    With ``represent=True`` a graded ring whose ideal contains linear forms
    is first rewritten without the eliminated variables; otherwise such a
    ring raises :class:`NotEmbeddedMinimally`.
    """
    soc = socle(ring).dim
    rep = ClassifyReport(
        length=ring.length,
        hilbert_function=ring.hilbert_function,
        socle_dim=soc,
        socle_degree=ring.socle_degree,
        gorenstein=soc == 1,
        graded=ring.is_graded(),
        nvars=ring.nvars,
    )
    if not rep.graded:
        return rep
    work = ring
    if graded_pieces(ring, 1)[1].dim:
        if not represent:
            raise NotEmbeddedMinimally("the ideal contains a linear form")
        work = minimal_presentation(ring)
        if work is None:  # the field itself
            rep.mu_ideal, rep.generator_degrees = 0, []
            rep.ci = rep.quadratic = rep.koszul_ci = True
            return rep
    degrees = ideal_generator_degrees(work)
    rep.mu_ideal = len(degrees)
    rep.generator_degrees = degrees
    rep.ci = len(degrees) == work.nvars
    rep.quadratic = all(d == 2 for d in degrees)
    rep.koszul_ci = rep.ci and rep.quadratic
    return rep


def substitute(f: Polynomial, images, target) -> Polynomial:
    """``f(images)``: variable ``i`` replaced by ``images[i]`` (polynomials of ``target``)."""
    out = target.zero()
    for m, c in f.as_dict().items():
        term = target.constant(c)
        for v, e in enumerate(m):
            if e:
                term = term * images[v] ** e
        out = out + term
    return out


def minimal_presentation(ring: ArtinianRing) -> ArtinianRing | None:
    """The same graded ring with linear forms of the ideal eliminated.

    Pivot variables of the degree-one part of the ideal are solved for in
    terms of the others and substituted into the generators.  Returns None
    when every variable is eliminated (the ring is the field).
    """
    if not ring.is_graded():
        raise NotGraded("re-presentation needs homogeneous generators")
    _, lin = graded_pieces(ring, 1)
    if lin.dim == 0:
        return ring
    f = ring.field
    keep = [v for v in range(ring.nvars) if v not in set(lin.pivots)]
    if not keep:
        return None
    names = [ring.var_names[v] for v in keep]
    target = PolyRing(f, names, ring.order)
    images = [None] * ring.nvars
    for k, v in enumerate(keep):
        images[v] = target.var(k)
    for row, p in zip(lin.basis, lin.pivots):
        img = target.zero()
        for k, v in enumerate(keep):
            if row[v]:
                img = img - target.var(k).scale(row[v])
        images[p] = img
    gens = [substitute(g, images, target) for g in ring.ideal_gens]
    gens = [g for g in gens if not g.is_zero()]
    return build_ring(f, names, gens, ring.order)


# theorem cross-checks


def _linear(x) -> bool:
    p = x.to_poly()
    return not p.is_zero() and p.is_homogeneous() and p.degree() == 1


@dataclass
class T5Result:
    applicable: bool
    is_sequence: bool
    quotient_ci: list = dc_field(default_factory=list)  # CI verdict of R/(x_1..x_i), i = 0..n
    reason: str | None = None

    @property
    def consistent(self) -> bool:
        if not self.applicable:
            return True
        return self.is_sequence == all(self.quotient_ci)


def t5_check(ring: ArtinianRing, xs) -> T5Result:
    """Sequence verdict for minimal generators of ``m`` versus CI-ness of every quotient."""
    xs = [ring.element(x) for x in xs]
    hf = ring.hilbert_function
    n = hf[1] if len(hf) > 1 else 0  # mu(m)
    if len(xs) != n or (xs and ideal_of(ring, xs).space != ring.maximal_ideal):
        raise NotMinimalGenerators(f"need {n} elements generating the maximal ideal")
    seq = sequence_test(ring, xs).is_sequence if xs else True
    if not ring.is_graded() or not all(_linear(x) for x in xs):
        return T5Result(False, seq, reason="needs a graded ring and linear forms")
    cis = []
    for i in range(len(xs) + 1):
        gens = list(ring.ideal_gens) + [x.to_poly() for x in xs[:i]]
        q = build_ring(ring.field, ring.var_names, gens, ring.order)
        cis.append(bool(classify(q, represent=True).ci))
    return T5Result(True, seq, cis)


@dataclass
class C21Result:
    applicable: bool
    reason: str | None = None
    generates_m: bool | None = None
    ci: bool | None = None
    twins_outside_m2: list | None = None

    @property
    def consistent(self) -> bool:
        if not self.applicable:
            return True
        return bool(self.generates_m and self.ci and all(self.twins_outside_m2))


def c21_check(ring: ArtinianRing, xs, twins=None) -> C21Result:
    """A minimal sequence of length equal to the socle degree generates m, R is CI, twins are not in m^2.

    A twin ``y_j`` is tested in ``R/(x_1..x_(j-1))``, i.e. against
    ``m^2 + (x_1..x_(j-1))``, so the answer does not depend on the lift.
    """
    xs = [ring.element(x) for x in xs]
    rep = sequence_test(ring, xs)
    if not rep.is_sequence:
        return C21Result(False, "not a sequence of exact zero-divisors")
    if not rep.minimal:
        return C21Result(False, "sequence is not minimal")
    if len(xs) != ring.socle_degree:
        return C21Result(False, f"length {len(xs)} differs from socle degree {ring.socle_degree}")
    if twins is None:
        strong = strong_test_c13(ring, xs, rep.twins)
        twins = strong.adjusted_twins if strong.verdict else rep.twins
    twins = [ring.element(y) for y in twins]
    m2 = ring.mpower(2)
    outside = []
    J = Subspace.zero(ring.field, ring.length)
    for x, y in zip(xs, twins):
        outside.append(not (m2 + J).contains(y.coords))
        J = J + ideal_of(ring, [x]).space
    cls = classify(ring, represent=True)
    return C21Result(
        True,
        generates_m=ideal_of(ring, xs).space == ring.maximal_ideal,
        ci=cls.ci,
        twins_outside_m2=outside,
    )


@dataclass
class P15Result:
    socle_degree: int
    koszul_ci: bool | None
    length2_found: bool | None = None  # part (i), socle degree 2
    top_found: bool = False  # part (ii): minimal sequence of length s
    evidence_found: bool | None = None  # part (iii), socle degree 3, not asserted
    witness: object = None

    @property
    def part_i(self) -> bool | None:
        if self.length2_found is None:
            return None
        return self.length2_found == bool(self.koszul_ci)

    @property
    def part_ii(self) -> bool:
        return (not self.top_found) or bool(self.koszul_ci)

    @property
    def consistent(self) -> bool:
        return self.part_i is not False and self.part_ii


def p15_check(ring: ArtinianRing, pool="linear") -> P15Result:
    """Minimal sequences of length equal to the socle degree versus the Koszul CI property."""
    if not ring.is_graded():
        raise NotGraded("the Hilbert series check needs a graded ring")
    cls = classify(ring, represent=True)
    s = ring.socle_degree
    res = P15Result(s, cls.koszul_ci)
    if s >= 1:
        found = search(ring, "minimal", s, pool, limit=1, unordered=False)
        res.top_found = bool(found)
        res.witness = found[0] if found else None
    if s == 2:
        res.length2_found = res.top_found
    if s == 3:
        res.evidence_found = res.top_found
    return res


__all__ = [
    "C21Result",
    "ClassifyReport",
    "NotEmbeddedMinimally",
    "NotGraded",
    "NotMinimalGenerators",
    "P15Result",
    "T5Result",
    "c21_check",
    "classify",
    "graded_pieces",
    "ideal_generator_degrees",
    "minimal_presentation",
    "p15_check",
    "staircase_hilbert",
    "substitute",
    "t5_check",
]
