import itertools
from math import comb

import numpy as np
import pytest

from ezd import GF, build_ring, ideal_of
from ezd.engine import TooLong, element_pool, sequence_test
from ezd.koszul import euler_characteristic, homology, koszul_complex, t2_check


def brute_kernel_size(F, m):
    """Count column vectors v with m @ v = 0 by enumeration."""
    p = F.p
    count = 0
    for v in itertools.product(range(p), repeat=m.shape[1]):
        if not np.any(F.matmul(m, np.array(v)) != 0):
            count += 1
    return count


def brute_image_size(F, m):
    p = F.p
    seen = set()
    for v in itertools.product(range(p), repeat=m.shape[1]):
        seen.add(tuple(F.matmul(m, np.array(v)).tolist()))
    return len(seen)


def test_single_element(trunc4):
    cx = koszul_complex(trunc4, ["x^2"])
    h0, h1 = homology(cx, 0), homology(cx, 1)
    assert h0.length == trunc4.length - ideal_of(trunc4, ["x^2"]).dim
    assert h1.length == 2  # (0 : x^2) = (x^2)
    assert h1.free and h1.mu == 1


def test_ci2_differentials(ci2):
    cx = koszul_complex(ci2, ["x1", "x2"])
    d1 = cx.diffs[1]
    assert d1.shape == (4, 8)
    assert np.array_equal(d1[:, :4], ci2.var("x1").matrix.T)
    assert np.array_equal(d1[:, 4:], ci2.var("x2").matrix.T)
    assert not np.any(ci2.field.matmul(cx.diffs[1], cx.diffs[2]))
    h2 = homology(cx, 2)
    assert h2.length == 1 and h2.mu == 1 and h2.free


def test_zero_element_block(ci2):
    cx = koszul_complex(ci2, ["x1", "0"])
    assert not np.any(cx.diffs[1][:, 4:])


def test_homology_against_enumeration():
    F = GF(3)
    R = build_ring(F, ["x"], ["x^4"])
    for xs in (["x^3", "x"], ["x", "x^3"], ["x^2", "x"]):
        cx = koszul_complex(R, xs)
        for i in range(3):
            h = homology(cx, i)
            ker = 3 ** cx.dim(i) if i == 0 else brute_kernel_size(F, cx.diffs[i])
            im = 1 if i == 2 else brute_image_size(F, cx.diffs[i + 1])
            assert 3 ** h.length == ker // im


def test_non_minimal_reordering_fails_rank(trunc4):
    res = t2_check(trunc4, ["x", "x^3"])
    assert not res.koszul_verdict and not res.sequential_verdict and res.agree
    assert res.membership == [True, False]
    res = t2_check(trunc4, ["x^3", "x"])
    assert res.koszul_verdict and res.sequential_verdict


def test_euler_characteristic(ci3):
    for xs in (["x1"], ["x1", "x2"], ["x2", "x1", "x3"], ["x1 + x2", "x3", "x1*x2"]):
        assert euler_characteristic(koszul_complex(ci3, xs)) == 0


def test_homology_index_errors(ci2):
    cx = koszul_complex(ci2, ["x1"])
    with pytest.raises(IndexError):
        homology(cx, 2)
    with pytest.raises(ValueError):
        koszul_complex(ci2, [])


def test_t2_examples(ci3):
    res = t2_check(ci3, ["x1", "x2", "x3"])
    assert res.koszul_verdict and res.sequential_verdict and res.agree
    assert all(row.mu == comb(row.prefix, row.degree) for row in res.table)
    res = t2_check(ci3, ["x2", "x1", "x3"])
    assert not res.koszul_verdict and not res.sequential_verdict and res.agree


def test_t2_singletons_are_pairs(trunc4, ci3):
    for x in ["x", "x^2", "x^3", "1 + x"]:
        res = t2_check(trunc4, [x])
        assert res.agree
        assert res.koszul_verdict == sequence_test(trunc4, [x]).is_sequence


def test_t2_guard(ci3):
    with pytest.raises(TooLong):
        t2_check(ci3, ["x1"] * 5)


def test_t2_agrees_on_pool_pairs(ci3):
    pool = element_pool(ci3, "linear")[:7]
    for a, b in itertools.permutations(pool, 2):
        assert t2_check(ci3, [a, b]).agree
