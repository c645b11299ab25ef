"""Run every cross-check on a ring, or on a directory of ring files."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from ezd.classify import classify
from ezd.engine import (
    check_sequence,
    d7_check,
    element_pool,
    max_strong_length,
    search,
    strong_test_c13,
    strong_test_tor,
    t6_bound,
    twin_swap_closure,
)
from ezd.koszul import MAX_KOSZUL_LENGTH, t2_check
from ezd.ring import ArtinianRing
from ezd.ringfile import load_ring_file

SINGLES = 6
PAIR_BASE = 4
SEARCH_SAMPLE = 6


def sample_tuples(ring: ArtinianRing, pool="linear", witness=None) -> list[tuple]:
    """A deterministic mix of sequences and non-sequences of lengths 1 to 3."""
    cands = element_pool(ring, pool)
    out = [(x,) for x in cands[:SINGLES]]
    out += [w.xs for w in search(ring, "sequences", 2, pool, limit=SEARCH_SAMPLE)]
    out += list(itertools.permutations(cands[:PAIR_BASE], 2))
    out += [w.xs for w in search(ring, "sequences", 3, pool, limit=SEARCH_SAMPLE // 2)]
    out += [w.xs for w in search(ring, "strong", 2, pool, limit=SEARCH_SAMPLE // 2, unordered=True)]
    if witness is not None:
        out.append(witness.xs)
    seen, uniq = set(), []
    for xs in out:
        key = tuple(tuple(x.coords.tolist()) for x in xs)
        if key not in seen:
            seen.add(key)
            uniq.append(xs)
    return uniq


@dataclass
class TupleCheck:
    xs: tuple
    is_sequence: bool
    strong_lift: bool
    strong_definition: bool
    strong_tor: bool
    t2_agree: bool | None

    @property
    def strong_agree(self) -> bool:
        return self.strong_lift == self.strong_definition

    @property
    def tor_agree(self) -> bool:
        return self.strong_tor == self.strong_lift


def check_tuple(ring: ArtinianRing, xs) -> TupleCheck:
    rep = check_sequence(ring, xs, ("strong",))
    tor = strong_test_tor(ring, xs)[0]
    t2 = t2_check(ring, xs).agree if len(xs) <= MAX_KOSZUL_LENGTH else None
    return TupleCheck(tuple(rep.xs), rep.is_sequence, rep.strong.verdict, rep.strong_oracle.verdict, tor, t2)


@dataclass
class RingCensus:
    length: int
    hilbert_function: list
    socle_dim: int
    koszul_ci: bool | None
    max_strong: int
    bound: int
    bound_ok: bool
    tight: bool
    witness: object = None
    adjusted_twins: list | None = None
    d7_ok: bool | None = None
    swaps_ok: bool | None = None
    tuples: list = dc_field(default_factory=list)

    @property
    def strong_agree(self) -> bool:
        return all(t.strong_agree for t in self.tuples)

    @property
    def tor_agree(self) -> bool:
        return all(t.tor_agree for t in self.tuples)

    @property
    def t2_agree(self) -> bool:
        return all(t.t2_agree is not False for t in self.tuples)

    @property
    def consistent(self) -> bool:
        return (
            self.bound_ok
            and self.d7_ok is not False
            and self.swaps_ok is not False
            and self.strong_agree
            and self.tor_agree
            and self.t2_agree
        )


def census_ring(ring: ArtinianRing, pool="linear") -> RingCensus:
    cls = classify(ring, represent=True)
    best, wit = max_strong_length(ring, pool)
    t6 = t6_bound(ring, best)
    out = RingCensus(
        length=ring.length,
        hilbert_function=cls.hilbert_function,
        socle_dim=cls.socle_dim,
        koszul_ci=cls.koszul_ci,
        max_strong=best,
        bound=t6.bound,
        bound_ok=t6.ok,
        tight=t6.tight,
        witness=wit,
    )
    if wit is not None:
        adj = strong_test_c13(ring, wit.xs).adjusted_twins
        out.adjusted_twins = adj
        out.d7_ok = d7_check(ring, wit.xs, adj).equal
        out.swaps_ok = all(
            rep.strong.verdict and rep.strong_oracle.verdict
            for _, rep in twin_swap_closure(ring, wit.xs, adj)
        )
    out.tuples = [check_tuple(ring, xs) for xs in sample_tuples(ring, pool, wit)]
    return out


@dataclass
class CensusEntry:
    name: str
    result: RingCensus | None = None
    error: tuple | None = None  # (exception type name, message)


def run_census(directory, order: str | None = None, pool="linear") -> list[CensusEntry]:
    """Census of every ``*.ring`` file in ``directory``, in filename order.

    A file that fails to load or build is reported with its error and the
    other files proceed.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise NotADirectoryError(f"not a directory: {directory}")
    entries = []
    for path in sorted(directory.glob("*.ring")):
        try:
            rf = load_ring_file(path)
            ring = rf.build(order)
            entries.append(CensusEntry(path.name, census_ring(ring, pool)))
        except (ValueError, ArithmeticError) as exc:
            entries.append(CensusEntry(path.name, error=(type(exc).__name__, str(exc))))
    return entries
