"""Decision procedures for exact zero-divisors and their sequences.

An element ``x`` of a local ring ``N = R/J`` is an exact zero-divisor when it
is a nonzero non-unit and ``0 :_N x`` is principal, say ``(y)``.  Then
``(0 :_N y) = (x)`` follows: ``x`` lies in ``0 : y`` and both ideals have
length ``len(N) - len(0 : x)``.  :func:`pair_test` uses this criterion and
re-checks the second annihilator anyway.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from ezd.ideals import (
    IdealInRing,
    annihilator,
    ideal_of,
    min_gens,
    num_gens,
    principal_generator,
    zero_ideal,
)
from ezd.linalg import left_kernel, solve_left
from ezd.ring import ArtinianRing, RingElement, quotient

MAX_PERMUTE = 6
MAX_POOL_BITS = 20


class GuardError(ValueError):
    """A size guard refused the computation."""


class TooLong(GuardError):
    pass


class PoolTooLarge(GuardError):
    pass


class PreconditionError(ValueError):
    pass


ZERO = "zero"
UNIT = "unit"
ANNIHILATOR_ZERO = "annihilator_zero"
NOT_PRINCIPAL = "annihilator_not_principal"


@dataclass
class EzdReport:
    x: RingElement
    verdict: bool
    twin: RingElement | None = None
    dims: tuple[int, int] = (0, 0)  # (len xN, len 0:_N x) in the working quotient N
    failure_reason: str | None = None
    annihilator: IdealInRing | None = None


@dataclass
class StrongResult:
    verdict: bool
    method: str  # "lift" or "definition"
    adjusted_twins: list | None = None
    witness: object = None  # failing index (lift) or (subset, j) (definition), 1-based


@dataclass
class SequenceReport:
    xs: list
    is_sequence: bool
    failing_index: int | None
    twins: list
    pairs: list = dc_field(default_factory=list)
    mu: int = 0
    minimal: bool = False
    permutable: bool | None = None
    failing_permutation: tuple | None = None
    strong: StrongResult | None = None
    strong_oracle: StrongResult | None = None


@dataclass
class TorReport:
    x: RingElement
    y: RingElement
    module_ideal: IdealInRing
    tor1: int
    tor2: int

    @property
    def vanishes(self) -> bool:
        # Tor_{i+2} = Tor_i for i >= 1, so two degrees decide all of them
        return self.tor1 == 0 and self.tor2 == 0


@dataclass
class D7Result:
    lhs: int
    rhs: int
    terms: list  # (choice bits, length of R/(z_1..z_n))

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class T6Result:
    e: int
    n: int
    bound: int
    ok: bool
    tight: bool


@dataclass
class Witness:
    xs: tuple
    twins: tuple


def _ideal(ring, elems) -> IdealInRing:
    return ideal_of(ring, elems) if elems else zero_ideal(ring)


def pair_test(ring: ArtinianRing, x, modulo: IdealInRing | None = None) -> EzdReport:
    """Is ``x`` an exact zero-divisor on ``R/J``?  The twin is returned as a lift to ``R``."""
    x = ring.element(x)
    J = modulo if modulo is not None else zero_ideal(ring)
    xJ = ideal_of(ring, [x]) + J
    x_len = xJ.dim - J.dim
    if x_len == 0 or J.is_whole():
        return EzdReport(x, False, dims=(0, ring.length - J.dim), failure_reason=ZERO)
    ann = annihilator(ring, x, J)
    dims = (x_len, ann.dim - J.dim)
    if x.is_unit():
        return EzdReport(x, False, dims=dims, failure_reason=UNIT, annihilator=ann)
    if ann.dim == J.dim:
        return EzdReport(x, False, dims=dims, failure_reason=ANNIHILATOR_ZERO, annihilator=ann)
    y = principal_generator(ring, ann, J)
    if y is None:
        return EzdReport(x, False, dims=dims, failure_reason=NOT_PRINCIPAL, annihilator=ann)
    back = annihilator(ring, y, J)
    assert back.space == xJ.space, "length count failed: (0:y) != (x)"
    return EzdReport(x, True, twin=y, dims=dims, annihilator=ann)


def is_pair(ring: ArtinianRing, x, y, modulo: IdealInRing | None = None) -> bool:
    """Direct check that ``(x, y)`` is a pair of exact zero-divisors on ``R/J``."""
    x, y = ring.element(x), ring.element(y)
    J = modulo if modulo is not None else zero_ideal(ring)
    if J.space.contains(x.coords) or x.is_unit():
        return False
    xJ = ideal_of(ring, [x]) + J
    yJ = ideal_of(ring, [y]) + J
    return annihilator(ring, x, J).space == yJ.space and annihilator(ring, y, J).space == xJ.space


def same_up_to_unit(ring: ArtinianRing, a, b, modulo: IdealInRing | None = None) -> bool:
    """Do ``a`` and ``b`` generate the same ideal modulo ``J``?"""
    J = modulo if modulo is not None else zero_ideal(ring)
    return (ideal_of(ring, [a]) + J).space == (ideal_of(ring, [b]) + J).space


def sequence_test(ring: ArtinianRing, xs) -> SequenceReport:
    xs = [ring.element(x) for x in xs]
    twins, pairs = [], []
    J = zero_ideal(ring)
    failing = None
    for i, x in enumerate(xs):
        rep = pair_test(ring, x, J)
        pairs.append(rep)
        if not rep.verdict:
            failing = i + 1
            break
        twins.append(rep.twin)
        J = J + ideal_of(ring, [x])
    mu = min_gens(ring, _ideal(ring, xs))[0]
    return SequenceReport(
        xs=xs,
        is_sequence=failing is None,
        failing_index=failing,
        twins=twins,
        pairs=pairs,
        mu=mu,
        minimal=mu == len(xs),
    )


def permutability_test(ring: ArtinianRing, xs) -> tuple[bool, tuple | None]:
    """Run the sequence test on every ordering; return the first failing one (0-based indices)."""
    xs = [ring.element(x) for x in xs]
    if len(xs) > MAX_PERMUTE:
        raise TooLong(f"permutability needs n <= {MAX_PERMUTE}, got {len(xs)}")
    for perm in itertools.permutations(range(len(xs))):
        if not sequence_test(ring, [xs[i] for i in perm]).is_sequence:
            return False, perm
    return True, None


def _require_sequence(ring, xs, twins):
    rep = sequence_test(ring, xs)
    if not rep.is_sequence:
        raise PreconditionError(f"not a sequence of exact zero-divisors (fails at {rep.failing_index})")
    if twins is None:
        return rep, rep.twins
    twins = [ring.element(y) for y in twins]
    if len(twins) != len(xs):
        raise PreconditionError("need one twin per element")
    return rep, twins


def strong_test_c13(ring: ArtinianRing, xs, twins=None) -> StrongResult:
    """Strongness via twin lift adjustment.

    ``x_1..x_n`` is strong iff it is minimal and each sequence twin ``y_i`` lies
    in ``(0 :_R x_i) + (x_1..x_{i-1})``; the component in ``0 :_R x_i`` is the
    adjusted twin.
    """
    xs = [ring.element(x) for x in xs]
    rep, twins = _require_sequence(ring, xs, twins)
    if not rep.minimal:
        return StrongResult(False, "lift", witness="not minimal")
    f = ring.field
    adjusted = []
    J = zero_ideal(ring)
    for i, (x, y) in enumerate(zip(xs, twins)):
        ann = annihilator(ring, x).space
        rows = np.concatenate([ann.basis, J.space.basis]) if J.dim else ann.basis
        c = solve_left(f, rows, y.coords)
        if c is None:
            return StrongResult(False, "lift", witness=i + 1)
        adj = RingElement(ring, f.matmul(c[: ann.dim], ann.basis))
        adjusted.append(adj)
        J = J + ideal_of(ring, [x])
    return StrongResult(True, "lift", adjusted_twins=adjusted)


def _index_then_subsets(n: int):
    """``(S, j)`` with ``j`` ascending, then ``S`` of the other indices by size and lexicographically."""
    for j in range(n):
        others = [i for i in range(n) if i != j]
        for k in range(n):
            for S in itertools.combinations(others, k):
                yield S, j


def strong_test_oracle(ring: ArtinianRing, xs, twins=None) -> StrongResult:
    """Strongness by the definition: ``(x_j, y_j)`` is a pair on every ``R/(x_S)``, ``j`` not in ``S``."""
    xs = [ring.element(x) for x in xs]
    if len(xs) > MAX_PERMUTE:
        raise TooLong(f"strong oracle needs n <= {MAX_PERMUTE}, got {len(xs)}")
    if twins is None:
        twins = sequence_test(ring, xs).twins
    twins = [ring.element(y) for y in twins]
    if len(twins) < len(xs):
        return StrongResult(False, "definition", witness=((), len(twins) + 1))
    for S, j in _index_then_subsets(len(xs)):
        J = _ideal(ring, [xs[i] for i in S])
        if not is_pair(ring, xs[j], twins[j], J):
            return StrongResult(False, "definition", witness=(tuple(i + 1 for i in S), j + 1))
    return StrongResult(True, "definition", adjusted_twins=twins)


def check_sequence(ring: ArtinianRing, xs, checks=("minimal", "permutable", "strong")) -> SequenceReport:
    """Sequence test plus the requested extra checks, filled into one report."""
    rep = sequence_test(ring, xs)
    if "permutable" in checks:
        rep.permutable, rep.failing_permutation = permutability_test(ring, rep.xs)
    if "strong" in checks:
        if rep.is_sequence:
            rep.strong = strong_test_c13(ring, rep.xs, rep.twins)
            oracle_twins = rep.strong.adjusted_twins if rep.strong.verdict else rep.twins
            rep.strong_oracle = strong_test_oracle(ring, rep.xs, oracle_twins)
        else:
            rep.strong = StrongResult(False, "lift", witness="not a sequence")
            rep.strong_oracle = strong_test_oracle(ring, rep.xs, rep.twins)
    # strong => permutable => minimal
    if rep.strong is not None and rep.strong.verdict and rep.permutable is not None:
        assert rep.permutable, "a strong sequence must be permutable"
    if rep.permutable:
        assert rep.minimal, "a permutable sequence must be minimal"
    return rep


def twin_swap_closure(ring: ArtinianRing, xs, adjusted_twins) -> list[tuple[tuple, SequenceReport]]:
    """Every choice ``z_i`` in ``{x_i, y_i}`` with its full report.

    Each variant is re-tested from scratch (fresh sequence twins, lift test) and the
    swapped twins are checked against the definition.
    """
    xs = [ring.element(x) for x in xs]
    ys = [ring.element(y) for y in adjusted_twins]
    if not strong_test_oracle(ring, xs, ys).verdict:
        raise PreconditionError("twin swapping needs a strong sequence with its adjusted twins")
    out = []
    for choice in itertools.product((0, 1), repeat=len(xs)):
        z = [ys[i] if c else xs[i] for i, c in enumerate(choice)]
        w = [xs[i] if c else ys[i] for i, c in enumerate(choice)]
        rep = sequence_test(ring, z)
        if rep.is_sequence:
            rep.strong = strong_test_c13(ring, z, rep.twins)
        else:
            rep.strong = StrongResult(False, "lift", witness="not a sequence")
        rep.strong_oracle = strong_test_oracle(ring, z, w)
        out.append((choice, rep))
    return out


def tor_periodic(ring: ArtinianRing, x, y, J: IdealInRing | None = None) -> TorReport:
    """``Tor_1, Tor_2`` of ``R/(x)`` against ``N = R/J`` from the periodic resolution by ``x, y``."""
    x, y = ring.element(x), ring.element(y)
    J = J if J is not None else zero_ideal(ring)
    if not is_pair(ring, x, y):
        raise PreconditionError("tor_periodic needs a pair of exact zero-divisors on R")
    tor1 = annihilator(ring, x, J).dim - (ideal_of(ring, [y]) + J).dim
    tor2 = annihilator(ring, y, J).dim - (ideal_of(ring, [x]) + J).dim
    return TorReport(x, y, J, tor1, tor2)


def strong_test_tor(ring: ArtinianRing, xs) -> tuple[bool, list]:
    """Strongness via vanishing of ``Tor(R/(x_S), R/(x_j))`` for every ``S`` and ``j`` outside it.

    Uses the twin of each ``x_j`` on ``R`` itself, so it is independent of the
    sequence twins.  Returns the verdict and a table ``(S, j, tor1, tor2)``.
    """
    xs = [ring.element(x) for x in xs]
    n = len(xs)
    if n > MAX_PERMUTE:
        raise TooLong(f"Tor check needs n <= {MAX_PERMUTE}, got {n}")
    twins = []
    for x in xs:
        rep = pair_test(ring, x)
        if not rep.verdict:
            return False, []
        twins.append(rep.twin)
    table = []
    ok = True
    for S, j in _index_then_subsets(n):
        rep = tor_periodic(ring, xs[j], twins[j], _ideal(ring, [xs[i] for i in S]))
        table.append((tuple(i + 1 for i in S), j + 1, rep.tor1, rep.tor2))
        ok = ok and rep.vanishes
    return ok, table


def d7_check(ring: ArtinianRing, xs, adjusted_twins) -> D7Result:
    """``len(R) = sum over z_i in {x_i, y_i} of len(R/(z_1..z_n))`` for a strong sequence."""
    xs = [ring.element(x) for x in xs]
    ys = [ring.element(y) for y in adjusted_twins]
    if not strong_test_oracle(ring, xs, ys).verdict:
        raise PreconditionError("the multiplicity identity needs a strong sequence with its twins")
    terms = []
    for choice in itertools.product((0, 1), repeat=len(xs)):
        z = [ys[i] if c else xs[i] for i, c in enumerate(choice)]
        terms.append((choice, ring.length - _ideal(ring, z).dim))
    return D7Result(ring.length, sum(t for _, t in terms), terms)


def multiplicity(ring: ArtinianRing) -> int:
    """Hilbert-Samuel multiplicity; in dimension zero it is the length."""
    return ring.length


def t6_bound(ring: ArtinianRing, n: int) -> T6Result:
    e = multiplicity(ring)
    bound = e.bit_length() - 1  # floor(log2 e)
    return T6Result(e=e, n=n, bound=bound, ok=(1 << n) <= e, tight=e == (1 << n))


# search


def _projective_vectors(p: int, n: int):
    """Nonzero vectors of GF(p)^n with first nonzero entry 1, in lexicographic order."""
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def element_pool(ring: ArtinianRing, pool="linear", given=None) -> list[RingElement]:
    """Candidate elements up to nonzero scalars, deduplicated, in deterministic order."""
    f = ring.field
    out, seen = [], set()

    def push(e):
        if e.is_zero():
            return
        e = e.normalized()
        key = tuple(e.coords.tolist())
        if key not in seen:
            seen.add(key)
            out.append(e)

    if pool == "given":
        for g in given or []:
            push(ring.element(g))
        return out
    if f.characteristic == 0:
        raise PoolTooLarge("enumerated pools need a finite field")
    p = f.characteristic
    if pool == "linear":
        gens = ring.gens()
        for vec in _projective_vectors(p, ring.nvars):
            e = ring.zero()
            for c, g in zip(vec, gens):
                if c:
                    e = e + g.scale(c)
            push(e)
        return out
    if pool == "all":
        dim = ring.length - 1
        if ring.length * math.log2(p) > MAX_POOL_BITS:
            raise PoolTooLarge(f"all-elements pool has {ring.length * math.log2(p):.1f} bits > {MAX_POOL_BITS}")
        for vec in _projective_vectors(p, dim):
            push(ring.elem((0,) + vec))
        return out
    raise ValueError(f"unknown pool {pool!r}")


SEARCH_MODES = ("pairs", "sequences", "minimal", "strong")


def _quotient_pair(q, x_bar: RingElement):
    """Pair test of ``x_bar`` inside the quotient ring ``q.ring``; returns the twin lifted to R."""
    N = q.ring
    if x_bar.is_zero() or x_bar.is_unit():
        return None
    ann = left_kernel(N.field, x_bar.matrix)
    if ann.dim == 0:
        return None
    y = principal_generator(N, IdealInRing(N, ann))
    return None if y is None else q.lift(y)


def search(
    ring: ArtinianRing,
    mode: str = "sequences",
    length: int = 1,
    pool="linear",
    given=None,
    limit: int | None = None,
    unordered: bool = False,
) -> list[Witness]:
    """Depth-first search for pairs / sequences / minimal or strong sequences.

    Prefixes of minimal and strong sequences are again minimal or strong, so
    the search prunes on every prefix.  Each prefix ``J`` is realised once as
    the quotient ring ``R/J``, where candidates are tested.  With
    ``unordered=True`` only increasing pool-index tuples are produced, which
    loses nothing for strong sequences (every reordering is strong).  Results
    are in pool order.
    """
    if mode not in SEARCH_MODES:
        raise ValueError(f"unknown search mode {mode!r}")
    cands = element_pool(ring, pool, given)
    if mode == "pairs":
        length = 1
    if length < 1:
        return []
    hits: list[Witness] = []
    anns: dict = {}

    def ann_R(i):
        if i not in anns:
            anns[i] = annihilator(ring, cands[i]).space
        return anns[i]

    def full():
        return limit is not None and len(hits) >= limit

    def dfs(prefix, twins, J):
        depth = len(prefix)
        if depth == length:
            hits.append(Witness(tuple(cands[i] for i in prefix), tuple(twins)))
            return
        q = quotient(ring, J)
        start = prefix[-1] + 1 if unordered and prefix else 0
        for i in range(start, len(cands)):
            if i in prefix:
                continue
            x = cands[i]
            y = _quotient_pair(q, q.project(x))
            if y is None:
                continue
            last = depth + 1 == length
            nxt = J if last and mode in ("pairs", "sequences") else J + ideal_of(ring, [x])
            if mode == "strong" and not (ann_R(i) + J.space).contains(y.coords):
                continue
            if mode in ("minimal", "strong") and num_gens(ring, nxt) != depth + 1:
                continue
            dfs(prefix + (i,), twins + [y], nxt)
            if full():
                return

    dfs((), [], zero_ideal(ring))
    return hits


def max_strong_length(ring: ArtinianRing, pool="linear", cap: int | None = None) -> tuple[int, Witness | None]:
    """Longest strong sequence found in the pool, searching up to ``cap`` (default floor(log2 e) + 1)."""
    cap = t6_bound(ring, 0).bound + 1 if cap is None else cap
    best, wit = 0, None
    for n in range(1, cap + 1):
        found = search(ring, "strong", n, pool, limit=1, unordered=True)
        if not found:
            break
        best, wit = n, found[0]
    return best, wit


def quotient_length(ring: ArtinianRing, elems) -> int:
    return ring.length - _ideal(ring, list(elems)).dim


__all__ = [
    "D7Result",
    "EzdReport",
    "GuardError",
    "PoolTooLarge",
    "PreconditionError",
    "SequenceReport",
    "StrongResult",
    "T6Result",
    "TooLong",
    "TorReport",
    "Witness",
    "check_sequence",
    "d7_check",
    "element_pool",
    "is_pair",
    "max_strong_length",
    "multiplicity",
    "pair_test",
    "permutability_test",
    "same_up_to_unit",
    "search",
    "sequence_test",
    "strong_test_c13",
    "strong_test_oracle",
    "strong_test_tor",
    "t6_bound",
    "tor_periodic",
    "twin_swap_closure",
]
