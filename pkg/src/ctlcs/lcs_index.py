"""Prefix-pair LCS queries from a block-decomposed DP table.

Only every ``b``-th DP row and column is kept.  A query for ``LCS(i, j)``
recomputes the single block holding ``(i, j)`` from the stored row segment
above it and the column segment to its left, so it costs O(b^2) and storage is
O(nm / b).  Tracebacks walk block to block, refilling each visited block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from numba import njit

__all__ = [
    "BlockLcsIndex",
    "default_block",
    "build_lcs_index",
    "lcs_query",
    "lcs_alignment",
    "lcs_traceback",
    "index_memory_estimate",
]


def default_block(n: int) -> int:
    return max(1, (n + 1).bit_length() - 1)


@njit(cache=True)
def _build_boundaries(s, t, b, rows, cols):  # pragma: no cover - jitted
    n = s.shape[0]
    m = t.shape[0]
    prev = np.zeros(m + 1, dtype=np.int64)
    cur = np.zeros(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        x = s[i - 1]
        cur[0] = 0
        for j in range(1, m + 1):
            if x == t[j - 1]:
                cur[j] = prev[j - 1] + 1
            elif prev[j] >= cur[j - 1]:
                cur[j] = prev[j]
            else:
                cur[j] = cur[j - 1]
        if i % b == 0:
            rows[i // b, :] = cur
        for c in range(cols.shape[1]):
            cols[i, c] = cur[c * b]
        prev, cur = cur, prev


@njit(cache=True)
def _fill_full(s, t, table):  # pragma: no cover - jitted
    for i in range(1, s.shape[0] + 1):
        for j in range(1, t.shape[0] + 1):
            if s[i - 1] == t[j - 1]:
                table[i, j] = table[i - 1, j - 1] + 1
            else:
                table[i, j] = max(table[i - 1, j], table[i, j - 1])


@njit(cache=True)
def _fill_block(s, t, r0, c0, top, left):  # pragma: no cover - jitted
    # top = DP row r0 over columns c0..c1, left = DP column c0 over rows r0..r1
    h = left.shape[0]
    w = top.shape[0]
    blk = np.empty((h, w), dtype=np.int64)
    blk[0, :] = top
    blk[:, 0] = left
    for di in range(1, h):
        x = s[r0 + di - 1]
        for dj in range(1, w):
            if x == t[c0 + dj - 1]:
                blk[di, dj] = blk[di - 1, dj - 1] + 1
            elif blk[di - 1, dj] >= blk[di, dj - 1]:
                blk[di, dj] = blk[di - 1, dj]
            else:
                blk[di, dj] = blk[di, dj - 1]
    return blk


@dataclass(frozen=True)
class BlockLcsIndex:
    """Stored DP rows ``i = 0, b, 2b, ...`` and columns ``j = 0, b, 2b, ...``.

    ``rows[k, j] = LCS(k*b, j)`` and ``cols[i, k] = LCS(i, k*b)``.  In full mode
    ``table`` holds the whole (n+1) x (m+1) DP and rows/cols are unused.
    """

    s: np.ndarray
    t: np.ndarray
    block: int
    rows: np.ndarray
    cols: np.ndarray
    table: Optional[np.ndarray] = None

    @property
    def n(self) -> int:
        return int(self.s.shape[0])

    @property
    def m(self) -> int:
        return int(self.t.shape[0])

    @property
    def nbytes(self) -> int:
        if self.table is not None:
            return self.table.nbytes
        return self.rows.nbytes + self.cols.nbytes

    def _block(self, r0: int, c0: int, r1: int, c1: int) -> np.ndarray:
        b = self.block
        top = self.rows[r0 // b, c0:c1 + 1].astype(np.int64)
        left = self.cols[r0:r1 + 1, c0 // b].astype(np.int64)
        return _fill_block(self.s, self.t, r0, c0, top, left)

    def value(self, i: int, j: int) -> int:
        if self.table is not None:
            return int(self.table[i, j])
        b = self.block
        if i % b == 0:
            return int(self.rows[i // b, j])
        if j % b == 0:
            return int(self.cols[i, j // b])
        r0, c0 = i - i % b, j - j % b
        return int(self._block(r0, c0, i, j)[-1, -1])


def _dtype_for(n: int, m: int):
    return np.int16 if min(n, m) <= np.iinfo(np.int16).max else np.int32


def index_memory_estimate(n: int, m: int, block: Optional[int] = None) -> int:
    """Bytes of stored boundary values for an ``n`` x ``m`` index."""
    if block is None:
        block = default_block(max(n, m))
    entries = (n // block + 1) * (m + 1) + (n + 1) * (m // block + 1)
    return entries * np.dtype(_dtype_for(n, m)).itemsize


def _as_array(x: Sequence[int]) -> np.ndarray:
    return np.asarray(list(x), dtype=np.int64).reshape(-1)


def build_lcs_index(s: Sequence[int], t: Sequence[int], block: Optional[int] = None,
                    full: bool = False) -> BlockLcsIndex:
    """Build the index; ``block`` defaults to ``floor(log2(n + 1))``.

    ``full=True`` keeps the plain quadratic table instead (for tiny inputs and
    differential tests).
    """
    sa, ta = _as_array(s), _as_array(t)
    n, m = sa.shape[0], ta.shape[0]
    if block is None:
        block = default_block(max(n, m))
    if block < 1:
        raise ValueError("block must be a positive integer")
    dtype = _dtype_for(n, m)
    if full:
        table = np.zeros((n + 1, m + 1), dtype=dtype)
        _fill_full(sa, ta, table)
        empty = np.zeros((0, 0), dtype=dtype)
        return BlockLcsIndex(sa, ta, block, empty, empty, table)
    rows = np.zeros((n // block + 1, m + 1), dtype=dtype)
    cols = np.zeros((n + 1, m // block + 1), dtype=dtype)
    _build_boundaries(sa, ta, block, rows, cols)
    return BlockLcsIndex(sa, ta, block, rows, cols)


def _check_range(index: BlockLcsIndex, i: int, j: int) -> None:
    if not (0 <= i <= index.n and 0 <= j <= index.m):
        raise IndexError(f"prefix lengths ({i}, {j}) out of range for ({index.n}, {index.m})")


def lcs_query(index: BlockLcsIndex, i: int, j: int) -> int:
    """``|LCS(s[1..i], t[1..j])|``."""
    _check_range(index, i, j)
    return index.value(i, j)


def lcs_alignment(index: BlockLcsIndex, i: int, j: int) -> list[tuple[int, int]]:
    """Matched position pairs (1-based, ascending) of one LCS of the two prefixes."""
    _check_range(index, i, j)
    s, t, b = index.s, index.t, index.block
    pairs: list[tuple[int, int]] = []
    x, y = i, j
    while x > 0 and y > 0:
        if index.table is not None:
            r0, c0, blk = 0, 0, index.table
        else:
            r0, c0 = (x - 1) // b * b, (y - 1) // b * b
            blk = index._block(r0, c0, x, y)
        while x > r0 and y > c0:
            if s[x - 1] == t[y - 1]:
                pairs.append((x, y))
                x -= 1
                y -= 1
            elif blk[x - 1 - r0, y - c0] == blk[x - r0, y - c0]:
                x -= 1
            else:
                y -= 1
    pairs.reverse()
    return pairs


def lcs_traceback(index: BlockLcsIndex, i: int, j: int) -> tuple[int, ...]:
    """One LCS string of ``s[1..i]`` and ``t[1..j]``."""
    return tuple(int(index.s[x - 1]) for x, _ in lcs_alignment(index, i, j))
