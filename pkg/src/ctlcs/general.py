"""CT-LCS over a general ordered alphabet.

The main solver fills two 4-D tables over pivots:

* ``L[i, j, l1, l2]``: longest common CT-subsequence of ``s[l1..i-1]`` and
  ``t[l2..j-1]`` whose values all exceed ``s[i]`` / ``t[j]``;
* ``R[i, j, r1, r2]``: the same for ``s[i+1..r1]`` and ``t[j+1..r2]``.

Each entry is a max over inner pivots ``(i', j')`` of
``L(i', j', ...) + R(i', j', ...) + 1``, so the fill is O(n^6) time and
O(n^4) space.  A six-dimensional O(n^8) variant is kept for cross-checking.

Internally every index is 0-based; the public accessors take 1-based positions.
Both inputs are rank-normalized first so all values are distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from numba import njit

from .cartesian import rank_normalize
from .errors import CapExceededError, ConsistencyError, NotNormalizedError
from .witness import EMPTY_WITNESS, CtLcsWitness

DEFAULT_MAX_N = 64
REFERENCE_MAX_N = 16

__all__ = [
    "DEFAULT_MAX_N",
    "REFERENCE_MAX_N",
    "PivotTables",
    "value_order",
    "ct_lcs_general",
    "compute_tables",
    "f_ct_lcs_length",
    "ct_lcs_reference",
    "traceback",
    "table_memory_estimate",
]


def value_order(s: Sequence[int]) -> tuple[int, ...]:
    """Positions of ``s`` (1-based) by strictly decreasing value."""
    if len(set(s)) != len(s):
        raise NotNormalizedError("sequence not normalized")
    return tuple(k + 1 for k in sorted(range(len(s)), key=lambda k: -s[k]))


def _back_dtype(n: int, m: int):
    return np.int16 if n * m <= np.iinfo(np.int16).max else np.int32


def table_memory_estimate(n: int, m: Optional[int] = None) -> int:
    """Bytes held by L, R and their back-pointer tables: 2 * n^2 * m^2 entries."""
    if m is None:
        m = n
    entry = np.dtype(np.int16).itemsize + np.dtype(_back_dtype(n, m)).itemsize
    return 2 * n * m * n * m * entry


@dataclass(frozen=True)
class PivotTables:
    """Filled L/R tables plus back-pointers for a normalized pair.

    A back-pointer entry stores the flat inner pivot ``i' * m + j'``
    (0-based), or -1 when the entry is 0.
    """

    s: tuple[int, ...]
    t: tuple[int, ...]
    L: np.ndarray
    R: np.ndarray
    back_l: np.ndarray
    back_r: np.ndarray

    @property
    def n(self) -> int:
        return len(self.s)

    @property
    def m(self) -> int:
        return len(self.t)

    @property
    def nbytes(self) -> int:
        return self.L.nbytes + self.R.nbytes + self.back_l.nbytes + self.back_r.nbytes

    def left(self, i: int, j: int, l1: int, l2: int) -> int:
        return int(self.L[i - 1, j - 1, l1 - 1, l2 - 1])

    def right(self, i: int, j: int, r1: int, r2: int) -> int:
        return int(self.R[i - 1, j - 1, r1 - 1, r2 - 1])

    def _decode(self, code) -> Optional[tuple[int, int]]:
        code = int(code)
        if code < 0:
            return None
        a, b = divmod(code, self.m)
        return a + 1, b + 1

    def left_pivot(self, i: int, j: int, l1: int, l2: int) -> Optional[tuple[int, int]]:
        return self._decode(self.back_l[i - 1, j - 1, l1 - 1, l2 - 1])

    def right_pivot(self, i: int, j: int, r1: int, r2: int) -> Optional[tuple[int, int]]:
        return self._decode(self.back_r[i - 1, j - 1, r1 - 1, r2 - 1])


@njit(cache=True)
def _fill_tables(s, t, order_s, order_t, L, R, BL, BR):  # pragma: no cover - jitted
    n = s.shape[0]
    m = t.shape[0]
    best_len = 0
    best_i = -1
    best_j = -1
    # Any inner pivot (a, b) has s[a] > s[i], so the outer loop alone already
    # finalizes it; every j for a fixed i could run concurrently.
    for i in order_s:
        si = s[i]
        for j in order_t:
            tj = t[j]
            for l1 in range(i + 1):
                for l2 in range(j + 1):
                    best = 0
                    arg = -1
                    if l1 != i and l2 != j:
                        for a in range(l1, i):
                            if s[a] > si:
                                for b in range(l2, j):
                                    if t[b] > tj:
                                        v = L[a, b, l1, l2] + R[a, b, i - 1, j - 1] + 1
                                        if v > best:
                                            best = v
                                            arg = a * m + b
                    L[i, j, l1, l2] = best
                    BL[i, j, l1, l2] = arg
            for r1 in range(i, n):
                for r2 in range(j, m):
                    best = 0
                    arg = -1
                    if r1 != i and r2 != j:
                        for a in range(i + 1, r1 + 1):
                            if s[a] > si:
                                for b in range(j + 1, r2 + 1):
                                    if t[b] > tj:
                                        v = L[a, b, i + 1, j + 1] + R[a, b, r1, r2] + 1
                                        if v > best:
                                            best = v
                                            arg = a * m + b
                    R[i, j, r1, r2] = best
                    BR[i, j, r1, r2] = arg
            total = L[i, j, 0, 0] + R[i, j, n - 1, m - 1] + 1
            if total > best_len:
                best_len = total
                best_i = i
                best_j = j
    return best_len, best_i, best_j


def _check_cap(what: str, s, t, cap: int) -> None:
    size = max(len(s), len(t))
    if size > cap:
        raise CapExceededError(what, size, cap)


def _order(x: Sequence[int]) -> np.ndarray:
    return np.asarray(value_order(x), dtype=np.int64) - 1


def compute_tables(s: Sequence[int], t: Sequence[int], max_n: int = DEFAULT_MAX_N):
    """Fill the pivot tables for ``(s, t)``.

    Returns ``(tables, length, pivot)`` where ``pivot`` is the 1-based optimal
    global pivot (first in processing order), or ``None`` for empty input.
    """
    _check_cap("ct_lcs_general", s, t, max_n)
    ns, nt = rank_normalize(s), rank_normalize(t)
    n, m = len(ns), len(nt)
    back = _back_dtype(n, m)
    shape = (n, m, n, m)
    L = np.zeros(shape, dtype=np.int16)
    R = np.zeros(shape, dtype=np.int16)
    BL = np.full(shape, -1, dtype=back)
    BR = np.full(shape, -1, dtype=back)
    tables = PivotTables(ns, nt, L, R, BL, BR)
    if n == 0 or m == 0:
        return tables, 0, None
    length, bi, bj = _fill_tables(
        np.asarray(ns, dtype=np.int64),
        np.asarray(nt, dtype=np.int64),
        _order(ns),
        _order(nt),
        L, R, BL, BR,
    )
    return tables, int(length), (int(bi) + 1, int(bj) + 1)


def f_ct_lcs_length(tables: PivotTables, i: int, j: int) -> int:
    """Length of the longest common CT-subsequence whose minima sit at ``(i, j)``."""
    if not (1 <= i <= tables.n and 1 <= j <= tables.m):
        raise IndexError(f"pivot ({i}, {j}) out of range for lengths {tables.n}, {tables.m}")
    return tables.left(i, j, 1, 1) + tables.right(i, j, tables.n, tables.m) + 1


def _best_pivot(tables: PivotTables) -> tuple[int, int]:
    best, pivot = 0, None
    for i in value_order(tables.s):
        for j in value_order(tables.t):
            v = f_ct_lcs_length(tables, i, j)
            if v > best:
                best, pivot = v, (i, j)
    return pivot


def traceback(tables: PivotTables, s: Sequence[int], t: Sequence[int],
              pivot: Optional[tuple[int, int]] = None) -> CtLcsWitness:
    """Rebuild index sequences by following back-pointers from the best pivot."""
    if len(s) != tables.n or len(t) != tables.m:
        raise ValueError("tables were built for sequences of different lengths")
    if tables.n == 0 or tables.m == 0:
        return EMPTY_WITNESS
    if pivot is None:
        pivot = _best_pivot(tables)
    L, R, BL, BR = tables.L, tables.R, tables.back_l, tables.back_r
    ns, nt, m = tables.s, tables.t, tables.m
    out_s: list[int] = []
    out_t: list[int] = []

    def inner(code, i, j, lo1, hi1, lo2, hi2):
        if code < 0:
            raise ConsistencyError("missing back-pointer on a positive entry")
        a, b = divmod(int(code), m)
        if not (lo1 <= a <= hi1 and lo2 <= b <= hi2):
            raise ConsistencyError(f"back-pointer ({a}, {b}) outside its window")
        if not (ns[a] > ns[i] and nt[b] > nt[j]):
            raise ConsistencyError(f"back-pointer ({a}, {b}) is not above pivot ({i}, {j})")
        return a, b

    def expand_left(i, j, l1, l2):
        v = int(L[i, j, l1, l2])
        if v == 0:
            return
        a, b = inner(BL[i, j, l1, l2], i, j, l1, i - 1, l2, j - 1)
        if v != int(L[a, b, l1, l2]) + int(R[a, b, i - 1, j - 1]) + 1:
            raise ConsistencyError("L entry does not match its back-pointer")
        expand_left(a, b, l1, l2)
        out_s.append(a + 1)
        out_t.append(b + 1)
        expand_right(a, b, i - 1, j - 1)

    def expand_right(i, j, r1, r2):
        v = int(R[i, j, r1, r2])
        if v == 0:
            return
        a, b = inner(BR[i, j, r1, r2], i, j, i + 1, r1, j + 1, r2)
        if v != int(L[a, b, i + 1, j + 1]) + int(R[a, b, r1, r2]) + 1:
            raise ConsistencyError("R entry does not match its back-pointer")
        expand_left(a, b, i + 1, j + 1)
        out_s.append(a + 1)
        out_t.append(b + 1)
        expand_right(a, b, r1, r2)

    pi, pj = pivot[0] - 1, pivot[1] - 1
    expand_left(pi, pj, 0, 0)
    out_s.append(pi + 1)
    out_t.append(pj + 1)
    expand_right(pi, pj, tables.n - 1, tables.m - 1)
    witness = CtLcsWitness.from_indices(s, out_s, out_t)
    if witness.length != f_ct_lcs_length(tables, *pivot):
        raise ConsistencyError("traceback length differs from the table value")
    return witness


def ct_lcs_general(s: Sequence[int], t: Sequence[int], max_n: int = DEFAULT_MAX_N):
    """Longest common CT-subsequence of ``s`` and ``t``.

    Returns ``(witness, tables)``.  Inputs of different lengths are accepted.
    Raises ``CapExceededError`` when either input is longer than ``max_n``.
    """
    s, t = tuple(s), tuple(t)
    tables, length, pivot = compute_tables(s, t, max_n)
    if pivot is None:
        return EMPTY_WITNESS, tables
    witness = traceback(tables, s, t, pivot)
    if witness.length != length:
        raise ConsistencyError("traceback length differs from the optimum")
    return witness, tables


@njit(cache=True)
def _fill_reference(s, t, order_s, order_t, C):  # pragma: no cover - jitted
    n = s.shape[0]
    m = t.shape[0]
    best = 0
    for i in order_s:
        for j in order_t:
            for l1 in range(i + 1):
                for r1 in range(i, n):
                    for l2 in range(j + 1):
                        for r2 in range(j, m):
                            ml = 0
                            if l1 != i and l2 != j:
                                for a in range(l1, i):
                                    if s[a] > s[i]:
                                        for b in range(l2, j):
                                            if t[b] > t[j]:
                                                v = C[a, b, l1, i - 1, l2, j - 1]
                                                if v > ml:
                                                    ml = v
                            mr = 0
                            if r1 != i and r2 != j:
                                for a in range(i + 1, r1 + 1):
                                    if s[a] > s[i]:
                                        for b in range(j + 1, r2 + 1):
                                            if t[b] > t[j]:
                                                v = C[a, b, i + 1, r1, j + 1, r2]
                                                if v > mr:
                                                    mr = v
                            C[i, j, l1, r1, l2, r2] = ml + mr + 1
            v = C[i, j, 0, n - 1, 0, m - 1]
            if v > best:
                best = v
    return best


def ct_lcs_reference(s: Sequence[int], t: Sequence[int], cap: int = REFERENCE_MAX_N) -> int:
    """CT-LCS length from the full six-dimensional table, O(n^8).

    Only meant for cross-checking :func:`ct_lcs_general` on small inputs.
    """
    _check_cap("ct_lcs_reference", s, t, cap)
    ns, nt = rank_normalize(s), rank_normalize(t)
    n, m = len(ns), len(nt)
    if n == 0 or m == 0:
        return 0
    C = np.zeros((n, m, n, n, m, m), dtype=np.int16)
    return int(_fill_reference(
        np.asarray(ns, dtype=np.int64), np.asarray(nt, dtype=np.int64),
        _order(ns), _order(nt), C,
    ))
