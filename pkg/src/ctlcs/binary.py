"""CT-LCS for binary strings in O(n^2 / log n).

Two binary strings that both contain a 0 CT-match exactly when they share a
prefix ``w`` and continue with ``0^+ 1^*`` tails of equal length.  A string
CT-matches ``1^k`` exactly when it is ``0^i 1^(k-i)``.  So the answer is the
best of

* ``cand``: ``|LCS(s[1..p-1], t[1..q-1])| + l`` where both suffixes at p and q
  hold a 0-leading non-decreasing subsequence of length l;
* ``m1 = min(N1(s), LND_t(1))``, ``m2 = min(LND_s(1), N1(t))``;
* ``m3 = min(N1(s), N1(t))``.

LND here counts only subsequences ``0^a 1^b`` with ``a >= 1``; the all-ones
case is covered by m1/m2/m3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import ConsistencyError, NonBinaryError
from .lcs_index import BlockLcsIndex, build_lcs_index, lcs_alignment, lcs_query
from .witness import EMPTY_WITNESS, CtLcsWitness

__all__ = [
    "BinarySuffixStats",
    "BinaryCtLcsResult",
    "as_binary",
    "is_binary",
    "binary_suffix_stats",
    "cand",
    "ct_lcs_binary",
    "reconstruct_binary_witness",
]

BinaryInput = Union[str, Sequence[int]]


def as_binary(x: BinaryInput) -> tuple[int, ...]:
    """Accept 0/1 integer sequences or ``"0101"``-style text."""
    if isinstance(x, str):
        if any(c not in "01" for c in x):
            raise NonBinaryError("binary algorithm requires 0/1 input")
        return tuple(int(c) for c in x)
    out = tuple(int(v) for v in x)
    if any(v not in (0, 1) for v in out):
        raise NonBinaryError("binary algorithm requires 0/1 input")
    return out


def is_binary(x: Sequence[int]) -> bool:
    return all(v in (0, 1) for v in x)


@dataclass(frozen=True)
class BinarySuffixStats:
    """Suffix statistics of a binary string of length n.

    ``ones[k]`` and ``lnd[k]`` describe the suffix starting at position
    ``k + 1`` (so index ``n`` is the empty suffix).  ``last_pos[l]`` is the
    largest position p with ``LND(p) == l`` and ``reach[l]`` the largest with
    ``LND(p) >= l``; both are 0 when no such p exists and index 0 is unused.
    """

    ones: tuple[int, ...]
    lnd: tuple[int, ...]
    last_pos: tuple[int, ...]
    reach: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.ones) - 1

    def n1(self, i: int) -> int:
        return self.ones[i - 1]

    def lnd_at(self, i: int) -> int:
        return self.lnd[i - 1]


def binary_suffix_stats(s: BinaryInput) -> BinarySuffixStats:
    s = as_binary(s)
    n = len(s)
    ones = [0] * (n + 1)
    lnd = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        if s[k] == 0:
            ones[k] = ones[k + 1]
            lnd[k] = max(lnd[k + 1] + 1, ones[k + 1] + 1)
        else:
            ones[k] = ones[k + 1] + 1
            # A leading 1 can never start a 0-leading subsequence.  The
            # pseudocode variant that copies N1 here breaks monotonicity.
            lnd[k] = lnd[k + 1]
    last_pos = [0] * (n + 1)
    for k in range(n):
        if lnd[k] > 0:
            last_pos[lnd[k]] = k + 1
    # LND is non-increasing but can jump by more than one; reach fills the gaps.
    reach = [0] * (n + 2)
    for ell in range(n, 0, -1):
        reach[ell] = max(last_pos[ell], reach[ell + 1])
    return BinarySuffixStats(tuple(ones), tuple(lnd), tuple(last_pos), tuple(reach[:n + 1]))


def cand(s_stats: BinarySuffixStats, t_stats: BinarySuffixStats, index: BlockLcsIndex,
         exact_only: bool = False) -> tuple[int, Optional[int]]:
    """Best ``LCS(p_l - 1, q_l - 1) + l`` over tail lengths l.

    Returns ``(value, l)``, with ``(0, None)`` when some side has no 0.  Ties go
    to the longest tail.

    ``exact_only=True`` restricts p, q to positions whose LND equals l exactly
    (misses optima when LND skips values; kept for comparison).
    """
    ps = s_stats.last_pos if exact_only else s_stats.reach
    qs = t_stats.last_pos if exact_only else t_stats.reach
    best, arg = 0, None
    for ell in range(min(s_stats.n, t_stats.n), 0, -1):
        p, q = ps[ell], qs[ell]
        if p != 0 and q != 0:
            v = lcs_query(index, p - 1, q - 1) + ell
            if v > best:
                best, arg = v, ell
    return best, arg


@dataclass(frozen=True)
class BinaryCtLcsResult:
    length: int
    source: Optional[str]  # "cand", "m1", "m2", "m3"; None for empty input
    witness: Optional[CtLcsWitness]
    cand: int
    ell: Optional[int]
    m1: int
    m2: int
    m3: int


def _one_positions(s: Sequence[int], count: int) -> list[int]:
    return [k + 1 for k, v in enumerate(s) if v == 1][:count]


def _zero_leading_positions(s: Sequence[int], stats: BinarySuffixStats, start: int,
                            length: int) -> list[int]:
    """Positions of a ``0^a 1^b`` subsequence (a >= 1) of ``s[start..]`` of exact length."""
    if not 1 <= length <= stats.lnd_at(start):
        raise ConsistencyError(f"no 0-leading tail of length {length} at position {start}")
    n = len(s)
    x = start
    while s[x - 1] == 1:
        x += 1
    zeros: list[int] = []
    while True:
        zeros.append(x)
        if x < n and stats.lnd_at(x + 1) > 0 and stats.lnd_at(x + 1) >= stats.n1(x + 1):
            x += 1
            while s[x - 1] == 1:
                x += 1
        else:
            ones = [y for y in range(x + 1, n + 1) if s[y - 1] == 1]
            break
    a = max(1, length - len(ones))
    return zeros[:a] + ones[:length - a]


def reconstruct_binary_witness(s: Sequence[int], t: Sequence[int], s_stats: BinarySuffixStats,
                               t_stats: BinarySuffixStats, index: BlockLcsIndex, source: str,
                               length: int, ell: Optional[int] = None) -> CtLcsWitness:
    """Realize index sequences for the winning case of :func:`ct_lcs_binary`."""
    if length == 0:
        return EMPTY_WITNESS
    if source == "m1":
        s_idx = _one_positions(s, length)
        t_idx = _zero_leading_positions(t, t_stats, 1, length)
    elif source == "m2":
        s_idx = _zero_leading_positions(s, s_stats, 1, length)
        t_idx = _one_positions(t, length)
    elif source == "m3":
        s_idx = _one_positions(s, length)
        t_idx = _one_positions(t, length)
    elif source == "cand":
        p, q = s_stats.reach[ell], t_stats.reach[ell]
        pairs = lcs_alignment(index, p - 1, q - 1)
        s_idx = [x for x, _ in pairs] + _zero_leading_positions(s, s_stats, p, ell)
        t_idx = [y for _, y in pairs] + _zero_leading_positions(t, t_stats, q, ell)
    else:
        raise ValueError(f"unknown source {source!r}")
    witness = CtLcsWitness.from_indices(s, s_idx, t_idx)
    if witness.length != length:
        raise ConsistencyError(f"{source} witness has length {witness.length}, expected {length}")
    witness.check(s, t)
    return witness


def ct_lcs_binary(s: BinaryInput, t: BinaryInput, block: Optional[int] = None,
                  witness: bool = True, full: bool = False) -> BinaryCtLcsResult:
    """CT-LCS of two binary strings, optionally with a witness.

    Lengths may differ.  ``block``/``full`` are passed to the LCS index.
    """
    s, t = as_binary(s), as_binary(t)
    if not s or not t:
        return BinaryCtLcsResult(0, None, EMPTY_WITNESS if witness else None, 0, None, 0, 0, 0)
    s_stats, t_stats = binary_suffix_stats(s), binary_suffix_stats(t)
    index = build_lcs_index(s, t, block=block, full=full)
    c, ell = cand(s_stats, t_stats, index)
    m1 = min(s_stats.n1(1), t_stats.lnd_at(1))
    m2 = min(s_stats.lnd_at(1), t_stats.n1(1))
    m3 = min(s_stats.n1(1), t_stats.n1(1))
    length, source = max((c, "cand"), (m1, "m1"), (m2, "m2"), (m3, "m3"), key=lambda p: p[0])
    w = None
    if witness:
        w = reconstruct_binary_witness(s, t, s_stats, t_stats, index, source, length, ell)
    return BinaryCtLcsResult(length, source, w, c, ell, m1, m2, m3)
