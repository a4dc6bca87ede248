import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ctlcs.binary import (
    as_binary,
    binary_suffix_stats,
    cand,
    ct_lcs_binary,
    reconstruct_binary_witness,
)
from ctlcs.cartesian import ct_match, parent_distance
from ctlcs.errors import NonBinaryError
from ctlcs.general import ct_lcs_general
from ctlcs.lcs_index import build_lcs_index
from ctlcs.oracle import brute_force_cand, brute_force_ct_lcs, brute_force_lnd

bits = st.lists(st.integers(0, 1), max_size=12)


def all_binary(n):
    return itertools.product((0, 1), repeat=n)


def test_suffix_stats_examples():
    st1 = binary_suffix_stats([1, 1, 1, 1])
    assert st1.lnd == (0, 0, 0, 0, 0)
    assert st1.ones == (4, 3, 2, 1, 0)

    st0 = binary_suffix_stats([0])
    assert st0.lnd_at(1) == 1 and st0.n1(1) == 0

    st2 = binary_suffix_stats("0101")
    assert st2.lnd[:4] == (3, 2, 2, 0)
    assert st2.last_pos[1:] == (0, 3, 1, 0)


def test_non_binary_rejected():
    with pytest.raises(NonBinaryError, match="binary algorithm requires 0/1 input"):
        binary_suffix_stats([0, 2])
    with pytest.raises(NonBinaryError):
        ct_lcs_binary("01a", "0")
    assert as_binary("0110") == (0, 1, 1, 0)


@given(bits)
def test_suffix_stats_invariants(s):
    stats = binary_suffix_stats(s)
    n = len(s)
    assert stats.ones[n] == stats.lnd[n] == 0
    for k in range(n):
        assert stats.ones[k] - stats.ones[k + 1] in (0, 1)
        assert stats.lnd[k] >= stats.lnd[k + 1]
        assert stats.lnd[k] <= n - k
        if stats.lnd[k] > 0:
            assert 0 in s[k:]
    for ell in range(1, n + 1):
        p = stats.last_pos[ell]
        if p:
            assert stats.lnd_at(p) == ell
            assert all(stats.lnd_at(q) != ell for q in range(p + 1, n + 1))
        else:
            assert ell not in stats.lnd
        r = stats.reach[ell]
        assert r == max([q for q in range(1, n + 1) if stats.lnd_at(q) >= ell], default=0)


def _lnd_quadratic(s):
    # best over the last kept zero x: zeros in [i..x] plus ones after x
    n = len(s)
    out = []
    for i in range(n):
        best = 0
        for x in range(i, n):
            if s[x] == 0:
                best = max(best, s[i:x + 1].count(0) + s[x + 1:].count(1))
        out.append(best)
    return out


def test_lnd_matches_quadratic_dp():
    rng = random.Random(9)
    for n in (0, 1, 5, 50, 500):
        s = [rng.randrange(2) for _ in range(n)]
        assert list(binary_suffix_stats(s).lnd[:n]) == _lnd_quadratic(s)


@pytest.mark.parametrize("n", range(0, 10))
def test_lnd_matches_brute_force(n):
    for s in all_binary(n):
        lnd = binary_suffix_stats(s).lnd
        assert all(lnd[i - 1] == brute_force_lnd(s, i) for i in range(1, n + 1))


def test_brute_lnd_examples():
    assert brute_force_lnd([0, 1, 0, 1], 1) == 3
    assert brute_force_lnd([1, 1, 1], 2) == 0
    assert brute_force_lnd([0], 1) == 1


def _cand(s, t, **kw):
    return cand(binary_suffix_stats(s), binary_suffix_stats(t), build_lcs_index(s, t), **kw)


def test_cand_examples():
    assert _cand([0, 1, 0, 1], [0, 0, 1, 1]) == (3, 3)
    assert _cand([0, 1, 1, 0], [1, 1, 1, 1]) == (0, None)
    assert _cand([0] * 5, [0] * 5) == (5, 5)


def test_cand_matches_definition():
    rng = random.Random(4)
    cases = [(s, t) for n in range(0, 5) for s in all_binary(n) for t in all_binary(n)]
    cases += [([rng.randrange(2) for _ in range(rng.randint(5, 9))],
               [rng.randrange(2) for _ in range(rng.randint(5, 9))]) for _ in range(60)]
    for s, t in cases:
        assert _cand(s, t)[0] == brute_force_cand(s, t)


def test_exact_level_lookup_misses_skipped_lnd_values():
    # LND(1011) = (3, 3, 0, 0) never equals 2, yet 101 / 100 CT-match
    s, t = [1, 0, 1, 1], [1, 1, 0, 0]
    assert _cand(s, t, exact_only=True)[0] == 0
    assert _cand(s, t)[0] == 3
    assert ct_lcs_binary(s, t).length == brute_force_ct_lcs(s, t).length == 3


def test_ct_lcs_binary_examples():
    r = ct_lcs_binary([0, 0, 0], [1, 1, 1])
    assert r.length == 3 and r.source == "m2"
    assert parent_distance([0, 0, 0]) == parent_distance([1, 1, 1]) == (0, 1, 1)
    assert ct_lcs_binary("0101", "0011").length == 3
    assert brute_force_ct_lcs([0, 1, 0, 1], [0, 0, 1, 1]).length == 3
    assert ct_lcs_binary("", "0101").length == 0
    assert ct_lcs_binary([1], [0]).length == 1


@given(bits)
@settings(max_examples=100)
def test_identity(s):
    r = ct_lcs_binary(s, s)
    assert r.length == len(s)
    r.witness.check(s, s)


def test_witness_examples():
    r = ct_lcs_binary([0, 1], [0, 1])
    assert r.witness.s_indices == (1, 2) and r.witness.t_indices == (1, 2)
    assert r.witness.pattern == (0, 1)

    r = ct_lcs_binary([0, 1, 0, 1], [0, 0, 1, 1])
    assert r.source == "cand" and r.ell == 3
    pattern = r.witness.pattern
    assert pattern[0] == 0 and list(pattern) == sorted(pattern)
    r.witness.check([0, 1, 0, 1], [0, 0, 1, 1])


def _split_tail(x):
    """Shortest prefix w such that x = w 0^+ 1^*."""
    for cut in range(len(x)):
        tail = x[cut:]
        if tail and tail[0] == 0 and list(tail) == sorted(tail):
            return tuple(x[:cut])
    return None


def test_cand_witness_shape():
    rng = random.Random(12)
    for _ in range(400):
        s = [rng.randrange(2) for _ in range(rng.randint(1, 14))]
        t = [rng.randrange(2) for _ in range(rng.randint(1, 14))]
        r = ct_lcs_binary(s, t)
        r.witness.check(s, t)
        if r.source == "cand":
            sub_s = [s[k - 1] for k in r.witness.s_indices]
            sub_t = [t[k - 1] for k in r.witness.t_indices]
            w_s, w_t = _split_tail(sub_s), _split_tail(sub_t)
            assert w_s is not None and w_s == w_t


def test_reconstruct_each_source():
    s, t = [1, 1, 0, 1, 0], [0, 1, 1, 1, 1]
    ss, ts = binary_suffix_stats(s), binary_suffix_stats(t)
    ix = build_lcs_index(s, t)
    r = ct_lcs_binary(s, t)
    for source, length in (("m1", r.m1), ("m2", r.m2), ("m3", r.m3)):
        w = reconstruct_binary_witness(s, t, ss, ts, ix, source, length)
        assert w.length == length
        w.check(s, t)
    with pytest.raises(ValueError):
        reconstruct_binary_witness(s, t, ss, ts, ix, "m4", 1)


@pytest.mark.parametrize("n", range(0, 7))
def test_exhaustive_against_brute_force(n):
    for m in range(0, n + 1):
        for s in all_binary(n):
            for t in all_binary(m):
                r = ct_lcs_binary(s, t)
                assert r.length == brute_force_ct_lcs(s, t).length
                assert r.length == ct_lcs_binary(t, s).length
                r.witness.check(s, t)


def test_matches_general_n25():
    rng = random.Random(25)
    for _ in range(200):
        s = [rng.randrange(2) for _ in range(rng.randint(1, 25))]
        t = [rng.randrange(2) for _ in range(rng.randint(1, 25))]
        assert ct_lcs_binary(s, t).length == ct_lcs_general(s, t)[0].length


@pytest.mark.parametrize("n", range(0, 13))
def test_all_ones_characterization(n):
    ones = (1,) * n
    for x in all_binary(n):
        monotone = any(x == (0,) * i + (1,) * (n - i) for i in range(n + 1))
        assert ct_match(ones, x) == monotone
