"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import re
import time

import pytest

from ezd import GF, build_ring, inverse_system_ring, principal_generator, quotient, socle
from ezd.census import sample_tuples
from ezd.classify import classify, p15_check
from ezd.cli import main
from ezd.engine import (
    check_sequence,
    d7_check,
    max_strong_length,
    quotient_length,
    search,
    strong_test_c13,
    strong_test_tor,
    t6_bound,
    twin_swap_closure,
)
from ezd.ideals import annihilator, annihilator_of_ideal, ideal_of
from ezd.koszul import t2_check
from ezd.linalg import Subspace
from ezd.ringfile import load_ring_file

from conftest import CORPUS


def verdict(capsys, number, title, ok, detail=""):
    with capsys.disabled():
        print(f"\ncriterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def same_ideal_mod_prefix(ring, xs, got, expected):
    """Twins compared as ideals of R/(x_1..x_(i-1))."""
    J = Subspace.zero(ring.field, ring.length)
    for x, a, b in zip(xs, got, expected):
        if ideal_of(ring, [a]).space + J != ideal_of(ring, [b]).space + J:
            return False
        J = J + ideal_of(ring, [x]).space
    return True


@pytest.fixture(scope="module")
def corpus():
    """Every corpus ring with a deterministic sample of tuples (search hits included)."""
    rings = {p.stem: load_ring_file(p).build() for p in sorted(CORPUS.glob("*.ring"))}
    assert len(rings) >= 20
    data = {}
    for name, ring in rings.items():
        _, wit = max_strong_length(ring)
        data[name] = (ring, sample_tuples(ring, "linear", wit))
    # known negatives and non-linear tuples
    extra = {
        "ci2": [("x1", "x2"), ("x2", "x1"), ("x1^2",), ("x1 + x2", "x1")],
        "ci3": [("x2", "x1", "x3"), ("x2",), ("x1", "x2", "x3"), ("x1*x3", "x2")],
        "trunc4": [("x^3", "x^2", "x"), ("x^2",), ("x^2", "x"), ("x", "x^3"), ("x^3", "x")],
        "cubic_x": [("x^2",), ("x", "x"), ("x^2", "x")],
    }
    for name, tuples in extra.items():
        ring, have = data[name]
        data[name] = (ring, have + [tuple(ring.element(t) for t in xs) for xs in tuples])
    return data


def test_criterion_01_ci2(capsys, corpus_dir, ci2):
    start = time.perf_counter()
    main(["seq", str(corpus_dir / "ci2.ring"), "--xs", "x1;x2", "--check", "all"])
    out = capsys.readouterr().out
    fwd = check_sequence(ci2, ["x1", "x2"])
    rev = check_sequence(ci2, ["x2", "x1"])
    elapsed = time.perf_counter() - start
    ok = (
        '"is_sequence": true' in out and '"strong": false' in out and '"permutable": true' in out
        and fwd.is_sequence and fwd.permutable and fwd.minimal
        and same_ideal_mod_prefix(ci2, fwd.xs, fwd.twins, [ci2.element("x2")] * 2)
        and rev.is_sequence
        and same_ideal_mod_prefix(ci2, rev.xs, rev.twins, [ci2.element("x1")] * 2)
        and fwd.strong.verdict is False and fwd.strong_oracle.verdict is False
        and rev.strong.verdict is False and rev.strong_oracle.verdict is False
        and elapsed < 1.0
    )
    verdict(capsys, 1, "two-variable quadric CI: permutable sequence, not strong by both tests", ok, f"{elapsed:.3f}s")


def test_criterion_02_ci3(capsys, ci3):
    good = check_sequence(ci3, ["x1", "x2", "x3"], ("minimal",))
    bad = check_sequence(ci3, ["x2", "x1", "x3"], ("minimal",))
    q = quotient(ci3, ideal_of(ci3, ["x2"])).ring
    ok = (
        good.is_sequence and good.mu == 3 and quotient_length(ci3, good.xs) == 1
        and not bad.is_sequence and bad.failing_index == 1
        and socle(q).dim >= 2
    )
    verdict(capsys, 2, "three-variable CI: order matters, R/(x2) not Gorenstein", ok, f"socle dim of R/(x2) = {socle(q).dim}")


def test_criterion_03_not_minimal(capsys, trunc4):
    rep = check_sequence(trunc4, ["x^3", "x^2", "x"], ("minimal",))
    ok = rep.is_sequence and rep.mu == 1 and rep.minimal is False
    verdict(capsys, 3, "(x^3, x^2, x) is a sequence that is not minimal", ok, f"mu = {rep.mu}")


def test_criterion_04_principal_annihilator(capsys, corpus):
    checked, failures = 0, []
    for name, (ring, tuples) in corpus.items():
        for xs in tuples:
            if not check_sequence(ring, xs, ()).is_sequence:
                continue
            checked += 1
            J = ideal_of(ring, xs)
            A = annihilator_of_ideal(ring, J)
            g = principal_generator(ring, A)
            if g is None or annihilator(ring, g) != J or A.dim != ring.length - J.dim:
                failures.append((name, [str(x) for x in xs]))
    verdict(capsys, 4, "(0:J) principal with annihilator J, dim(0:J) = len(R/J)",
            checked > 0 and not failures, f"{checked} passing sequences, failures {failures[:3]}")


def test_criterion_05_koszul(capsys, corpus):
    start = time.perf_counter()
    tested, disagree = 0, []
    for name, (ring, tuples) in corpus.items():
        if ring.length > 32:
            continue
        for xs in tuples:
            if not 1 <= len(xs) <= 3:
                continue
            tested += 1
            if not t2_check(ring, xs).agree:
                disagree.append((name, [str(x) for x in xs]))
    elapsed = time.perf_counter() - start
    verdict(capsys, 5, "Koszul homology characterisation agrees with the direct test",
            tested >= 200 and not disagree and elapsed < 60, f"{tested} tuples, {elapsed:.1f}s")


def strong_cases(corpus):
    for name, (ring, tuples) in corpus.items():
        for xs in tuples:
            yield name, ring, xs, check_sequence(ring, xs, ("strong",))


def test_criterion_06_strong_lift_vs_definition(capsys, corpus):
    seqs, strong, disagree = 0, 0, []
    for name, ring, xs, rep in strong_cases(corpus):
        seqs += rep.is_sequence
        strong += rep.strong.verdict
        if rep.strong.verdict != rep.strong_oracle.verdict:
            disagree.append((name, [str(x) for x in xs]))
    verdict(capsys, 6, "lift test and definition agree on strongness",
            seqs >= 100 and strong > 0 and not disagree,
            f"{seqs} sequences, {strong} strong, disagreements {disagree[:3]}")


def test_criterion_07_tor(capsys, corpus):
    tested, disagree = 0, []
    for name, ring, xs, rep in strong_cases(corpus):
        tested += 1
        if strong_test_tor(ring, xs)[0] != rep.strong.verdict:
            disagree.append((name, [str(x) for x in xs]))
    verdict(capsys, 7, "strong iff every periodic Tor vanishes", not disagree,
            f"{tested} tuples, disagreements {disagree[:3]}")


def test_criterion_08_log_bound(capsys, corpus):
    over, d7_bad, strong_seen = [], [], 0
    for name, (ring, _) in corpus.items():
        best, _ = max_strong_length(ring)
        if not t6_bound(ring, best).ok:
            over.append(name)
        for k in range(1, best + 1):
            for w in search(ring, "strong", k, unordered=True):
                strong_seen += 1
                adj = strong_test_c13(ring, w.xs).adjusted_twins
                if not d7_check(ring, w.xs, adj).equal:
                    d7_bad.append(name)
    ci2 = corpus["ci2"][0]
    best, _ = max_strong_length(ci2)
    tight = best == 2 and ci2.length == 4 and t6_bound(ci2, best).tight and classify(ci2).koszul_ci
    verdict(capsys, 8, "strong length <= floor(log2 len R), multiplicity identity, tight on the two-variable CI",
            not over and not d7_bad and tight, f"{strong_seen} strong sequences checked")


def test_criterion_09_twin_swaps(capsys, corpus):
    checked, bad = 0, []
    for name, ring, xs, rep in strong_cases(corpus):
        if not rep.strong.verdict:
            continue
        variants = twin_swap_closure(ring, xs, rep.strong.adjusted_twins)
        checked += 1
        ok = len(variants) == 2 ** len(xs) and all(
            r.strong.verdict and r.strong_oracle.verdict for _, r in variants
        )
        if not ok:
            bad.append((name, [str(x) for x in xs]))
    verdict(capsys, 9, "every twin-swapped variant of a strong sequence is strong",
            checked > 0 and not bad, f"{checked} strong sequences, failures {bad[:3]}")


def test_criterion_10_socle_degree_two(capsys, corpus):
    rows = []
    for name, (ring, _) in corpus.items():
        if ring.is_graded() and ring.socle_degree == 2:
            res = p15_check(ring)
            rows.append((name, res.koszul_ci, res.length2_found, res.part_i))
    kinds = {r[1] for r in rows}
    series = classify(corpus["ci2"][0]).hilbert_series
    ok = len(rows) >= 5 and kinds == {True, False} and all(r[3] for r in rows) and series == [1, 2, 1]
    verdict(capsys, 10, "minimal length-2 sequence exists exactly on Koszul CI rings",
            ok, ", ".join(f"{n}:{k}/{f}" for n, k, f, _ in rows))


def test_criterion_11_inverse_systems(capsys, corpus):
    F7 = GF(7)
    R = inverse_system_ring(F7, ["X1", "X2", "X3"], "X1*X2*X3")
    expected = build_ring(F7, ["X1", "X2", "X3"], ["X1^2", "X2^2", "X3^2"])
    c = classify(R)
    ok = (
        R.gb.generators == expected.gb.generators
        and R.length == 8 and c.gorenstein and c.koszul_ci
    )
    files = sorted(CORPUS.glob("invsys_*.ring"))
    for path in files:
        ring = corpus[path.stem][0]
        form = re.match(r"# inverse system of F = (.+)", path.read_text().splitlines()[0]).group(1)
        direct = inverse_system_ring(ring.field, ring.var_names, form)
        ok = ok and socle(ring).dim == 1 and direct.gb.generators == ring.gb.generators
    verdict(capsys, 11, "inverse system rings are Gorenstein with the expected annihilator",
            ok and len(files) >= 3, f"{len(files)} corpus files")


def test_criterion_12_properties(capsys):
    import test_properties as props

    names = [
        "buchberger_post_hoc",
        "normal_form_idempotent_and_linear",
        "grassmann_identity",
        "commutativity_and_nilpotency",
        "annihilator_rank_nullity",
    ]
    props.CALLS.clear()
    start = time.perf_counter()
    for n in names:
        getattr(props, f"test_{n}")()
    elapsed = time.perf_counter() - start
    counts = {n: props.CALLS[n] for n in names}
    ok = all(c >= 1000 for c in counts.values()) and elapsed < 120
    verdict(capsys, 12, "engine properties on random cases", ok,
            f"{min(counts.values())} cases minimum, {elapsed:.1f}s")
