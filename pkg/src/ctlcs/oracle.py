"""Exhaustive reference implementations for small inputs.

These enumerate subsequences outright and share no code with the solvers
beyond ``parent_distance``.  Size caps are hard errors.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .cartesian import parent_distance
from .errors import CapExceededError, NonBinaryError
from .witness import CtLcsWitness

BRUTE_CAP = 12
LND_CAP = 18
CAND_CAP = 9


@lru_cache(maxsize=4096)
def _first_by_pd(s: tuple, k: int) -> dict:
    """PD -> lexicographically first k-subscript sequence (0-based) realizing it."""
    table: dict = {}
    for idx in combinations(range(len(s)), k):
        table.setdefault(parent_distance([s[x] for x in idx]), idx)
    return table


def brute_force_ct_lcs(s: Sequence[int], t: Sequence[int], cap: int = BRUTE_CAP) -> CtLcsWitness:
    """Longest common CT-subsequence by exhaustive search.

    For k from ``min(|s|, |t|)`` down, returns the lexicographically first
    ``I`` that has a CT-matching ``J``, paired with the first such ``J``.
    """
    s, t = tuple(s), tuple(t)
    if max(len(s), len(t)) > cap:
        raise CapExceededError("brute_force_ct_lcs", max(len(s), len(t)), cap)
    for k in range(min(len(s), len(t)), -1, -1):
        t_table = _first_by_pd(t, k)
        for idx in combinations(range(len(s)), k):
            hit = t_table.get(parent_distance([s[x] for x in idx]))
            if hit is not None:
                return CtLcsWitness.from_indices(s, [x + 1 for x in idx], [y + 1 for y in hit])
    raise AssertionError("unreachable: k = 0 always matches")


def _check_binary(s):
    if any(x not in (0, 1) for x in s):
        raise NonBinaryError("binary algorithm requires 0/1 input")


@lru_cache(maxsize=None)
def _longest_zero_leading(x: tuple) -> int:
    """Max length over all 2^|x| - 1 subsets of x that read 0^a 1^b, a >= 1."""
    if not x:
        return 0
    masks = np.arange(1, 1 << len(x), dtype=np.int64)
    zero_bits = sum(1 << k for k, v in enumerate(x) if v == 0)
    sel_zeros = masks & zero_bits
    sel_ones = masks & ~zero_bits
    lowest_one = sel_ones & -sel_ones
    # first selected element is a 0 and every selected 0 precedes every selected 1
    ok = (sel_zeros != 0) & ((sel_ones == 0) | (sel_zeros < lowest_one))
    if not ok.any():
        return 0
    return int(np.bitwise_count(masks[ok]).max())


def brute_force_lnd(s: Sequence[int], i: int) -> int:
    """Longest subsequence of ``s[i..n]`` shaped 0^a 1^b with a >= 1 (1-based i)."""
    _check_binary(s)
    if len(s) > LND_CAP:
        raise CapExceededError("brute_force_lnd", len(s), LND_CAP)
    return _longest_zero_leading(tuple(s[i - 1:]))


def is_subsequence(sub: Sequence[int], s: Sequence[int]) -> bool:
    it = iter(s)
    return all(any(x == y for y in it) for x in sub)


def brute_force_cand(s: Sequence[int], t: Sequence[int], cap: int = CAND_CAP) -> int:
    """Largest |w| + i + j with w0^i1^j <= s and w0^i'1^j' <= t, i + j = i' + j'.

    Here ``<=`` is the subsequence relation and i, i' >= 1.  Returns 0 when no
    such pair exists.
    """
    _check_binary(s)
    _check_binary(t)
    if max(len(s), len(t)) > cap:
        raise CapExceededError("brute_force_cand", max(len(s), len(t)), cap)
    best = 0
    for wlen in range(min(len(s), len(t)) + 1):
        for bits in range(1 << wlen):
            w = [bits >> k & 1 for k in range(wlen)]
            if not (is_subsequence(w, s) and is_subsequence(w, t)):
                continue
            for tail in range(1, min(len(s), len(t)) - wlen + 1):
                if wlen + tail <= best:
                    continue
                ok_s = any(is_subsequence(w + [0] * z + [1] * (tail - z), s) for z in range(1, tail + 1))
                ok_t = any(is_subsequence(w + [0] * z + [1] * (tail - z), t) for z in range(1, tail + 1))
                if ok_s and ok_t:
                    best = wlen + tail
    return best


def plain_lcs_table(s: Sequence[int], t: Sequence[int]) -> list[list[int]]:
    """Full quadratic LCS table, ``table[i][j] = |LCS(s[:i], t[:j])|``."""
    table = [[0] * (len(t) + 1) for _ in range(len(s) + 1)]
    for i in range(1, len(s) + 1):
        row, prev = table[i], table[i - 1]
        for j in range(1, len(t) + 1):
            if s[i - 1] == t[j - 1]:
                row[j] = prev[j - 1] + 1
            else:
                row[j] = max(prev[j], row[j - 1])
    return table
