"""Koszul complexes over an artinian ring and freeness of their homology.

``K_i`` is ``R^C(p,i)`` with basis ``e_T`` for increasing index tuples ``T``.
Vectors of ``K_i`` are rows of length ``len(R) * C(p,i)``: block ``t`` holds
the ``R``-coordinates of the ``e_T`` component, ``T`` the ``t``-th tuple in
lexicographic order.  The differential matrices use the column convention,
``d_i`` of shape ``(len(R) C(p,i-1), len(R) C(p,i))`` with

    d(e_T) = sum_k (-1)^(k+1) x_{j_k} e_{T minus j_k},   T = (j_1 < ... < j_i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from ezd.engine import TooLong, sequence_test
from ezd.ideals import ideal_of
from ezd.linalg import Subspace, kernel
from ezd.ring import ArtinianRing, RingElement

MAX_KOSZUL_LENGTH = 4


@dataclass
class KoszulComplex:
    ring: ArtinianRing
    xs: tuple
    tuples: list  # tuples[i] = index tuples of size i, lexicographic
    diffs: dict  # diffs[i] = d_i for 1 <= i <= p

    @property
    def p(self) -> int:
        return len(self.xs)

    def rank(self, i: int) -> int:
        return comb(self.p, i)

    def dim(self, i: int) -> int:
        return self.ring.length * self.rank(i)


@dataclass
class HomologyModule:
    degree: int
    kernel: Subspace
    image: Subspace
    length: int
    mu: int
    free: bool
    rank_expected: int
    quotient_length: int  # length of S = R/(x_1..x_p)

    @property
    def free_of_expected_rank(self) -> bool:
        return self.free and self.mu == self.rank_expected


def koszul_complex(ring: ArtinianRing, xs) -> KoszulComplex:
    xs = tuple(ring.element(x) for x in xs)
    if not xs:
        raise ValueError("the Koszul complex needs at least one element")
    f, n, p = ring.field, ring.length, len(xs)
    tuples = [list(itertools.combinations(range(p), i)) for i in range(p + 1)]
    # column-convention multiplication matrices: coords(x v) = M @ v
    mats = [x.matrix.T for x in xs]
    diffs = {}
    for i in range(1, p + 1):
        target = {T: t for t, T in enumerate(tuples[i - 1])}
        d = f.zeros((n * len(tuples[i - 1]), n * len(tuples[i])))
        for s, T in enumerate(tuples[i]):
            for k, j in enumerate(T):
                t = target[T[:k] + T[k + 1:]]
                block = mats[j] if k % 2 == 0 else f.reduce(-mats[j])
                d[t * n:(t + 1) * n, s * n:(s + 1) * n] = block
        diffs[i] = d
    for i in range(2, p + 1):
        assert not np.any(f.matmul(diffs[i - 1], diffs[i]) != 0), f"d_{i - 1} d_{i} != 0"
    return KoszulComplex(ring, xs, tuples, diffs)


def _act_blockwise(ring: ArtinianRing, rows: np.ndarray, a: np.ndarray, blocks: int) -> np.ndarray:
    """Multiply every block of every row by the row-convention matrix ``a``."""
    n = ring.length
    shaped = rows.reshape(rows.shape[0] * blocks, n)
    return ring.field.matmul(shaped, a).reshape(rows.shape[0], blocks * n)


def homology(cx: KoszulComplex, i: int) -> HomologyModule:
    """``H_i = ker d_i / im d_(i+1)`` with its minimal number of generators over ``S``."""
    p = cx.p
    if not 0 <= i <= p:
        raise IndexError(f"homology degree {i} outside 0..{p}")
    ring, f = cx.ring, cx.ring.field
    dim = cx.dim(i)
    blocks = cx.rank(i)
    ker = kernel(f, cx.diffs[i]) if i >= 1 else Subspace.full(f, dim)
    im = Subspace(f, dim, cx.diffs[i + 1].T) if i < p else Subspace.zero(f, dim)
    assert im <= ker
    for x in cx.xs:
        if ker.dim:
            assert im.contains_space(
                Subspace(f, dim, _act_blockwise(ring, ker.basis, x.matrix, blocks))
            ), "the ideal does not kill homology"
    m_ker = im
    if ker.dim:
        for a in ring.act:
            m_ker = m_ker + Subspace(f, dim, _act_blockwise(ring, ker.basis, a, blocks))
    length = ker.dim - im.dim
    mu = ker.dim - m_ker.dim
    s_len = ring.length - ideal_of(ring, cx.xs).dim
    free = length == mu * s_len
    return HomologyModule(i, ker, im, length, mu, free, comb(p, i), s_len)


@dataclass
class T2Row:
    prefix: int
    degree: int
    length: int
    mu: int
    rank_expected: int
    free: bool

    @property
    def ok(self) -> bool:
        return self.free and self.mu == self.rank_expected


@dataclass
class T2Result:
    xs: tuple
    koszul_verdict: bool
    sequential_verdict: bool
    membership: list  # per prefix q: x_q not in (x_1..x_{q-1})
    table: list = dc_field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.koszul_verdict == self.sequential_verdict


def t2_check(ring: ArtinianRing, xs) -> T2Result:
    """Compare the Koszul characterisation of sequences with the direct test.

    The Koszul side asks, for every prefix ``x_1..x_q``, that ``x_q`` is not in
    ``(x_1..x_(q-1))`` and that every ``H_i(x_1..x_q)`` is free of rank
    ``C(q, i)`` over ``R/(x_1..x_q)``.
    """
    xs = tuple(ring.element(x) for x in xs)
    if len(xs) > MAX_KOSZUL_LENGTH:
        raise TooLong(f"Koszul check needs at most {MAX_KOSZUL_LENGTH} elements, got {len(xs)}")
    if not xs:
        raise ValueError("t2_check needs at least one element")
    membership, table = [], []
    verdict = True
    for q in range(1, len(xs) + 1):
        prev = ideal_of(ring, xs[: q - 1]) if q > 1 else None
        outside = not (xs[q - 1].is_zero() if prev is None else xs[q - 1] in prev)
        membership.append(outside)
        cx = koszul_complex(ring, xs[:q])
        for i in range(q + 1):
            h = homology(cx, i)
            row = T2Row(q, i, h.length, h.mu, h.rank_expected, h.free)
            table.append(row)
            verdict = verdict and row.ok
        verdict = verdict and outside
    seq = sequence_test(ring, xs).is_sequence
    return T2Result(xs, verdict, seq, membership, table)


def euler_characteristic(cx: KoszulComplex) -> int:
    return sum((-1) ** i * homology(cx, i).length for i in range(cx.p + 1))


__all__ = [
    "HomologyModule",
    "KoszulComplex",
    "T2Result",
    "T2Row",
    "euler_characteristic",
    "homology",
    "koszul_complex",
    "t2_check",
]
