"""Cartesian trees, parent-distance representation and CT-matching.

All positions exposed by this module are 1-based.  Sequences are any
``Sequence[int]``; results are returned as tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import EmptySequenceError

__all__ = [
    "CartesianTree",
    "min_id",
    "build_cartesian_tree",
    "build_cartesian_tree_naive",
    "parent_distance",
    "parent_distance_naive",
    "ct_match",
    "tree_isomorphic",
    "rank_normalize",
]


@dataclass(frozen=True)
class CartesianTree:
    """Positional binary tree over ``1..n``.

    ``left[k]``, ``right[k]`` and ``parent[k]`` describe node ``k + 1``; each
    entry is a 1-based position or ``None``.
    """

    n: int
    root: Optional[int]
    left: tuple[Optional[int], ...]
    right: tuple[Optional[int], ...]
    parent: tuple[Optional[int], ...]

    def left_of(self, i: int) -> Optional[int]:
        return self.left[i - 1]

    def right_of(self, i: int) -> Optional[int]:
        return self.right[i - 1]

    def parent_of(self, i: int) -> Optional[int]:
        return self.parent[i - 1]

    def inorder(self) -> list[int]:
        out: list[int] = []
        stack: list[int] = []
        node = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = self.left_of(node)
            node = stack.pop()
            out.append(node)
            node = self.right_of(node)
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "root": self.root,
            "left": list(self.left),
            "right": list(self.right),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "CartesianTree":
        n = int(data["n"])
        left = tuple(data["left"])
        right = tuple(data["right"])
        if len(left) != n or len(right) != n:
            raise ValueError("left/right arrays must have length n")
        parent: list[Optional[int]] = [None] * n
        for k in range(n):
            for child in (left[k], right[k]):
                if child is not None:
                    parent[child - 1] = k + 1
        return cls(n, data["root"], left, right, tuple(parent))

    def to_dot(self, name: str = "CT") -> str:
        lines = [f"digraph {name} {{"]
        for k in range(1, self.n + 1):
            lines.append(f"  {k};")
        for k in range(1, self.n + 1):
            if self.left_of(k) is not None:
                lines.append(f'  {k} -> {self.left_of(k)} [label="L"];')
            if self.right_of(k) is not None:
                lines.append(f'  {k} -> {self.right_of(k)} [label="R"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def min_id(s: Sequence[int]) -> int:
    """Least position holding the minimum value of ``s``."""
    if len(s) == 0:
        raise EmptySequenceError("empty sequence")
    best = 0
    for k in range(1, len(s)):
        if s[k] < s[best]:
            best = k
    return best + 1


def _make_tree(n, root, left, right, parent):
    return CartesianTree(n, root, tuple(left), tuple(right), tuple(parent))


def build_cartesian_tree(s: Sequence[int]) -> CartesianTree:
    """Cartesian tree of ``s`` in linear time (left-to-right stack).

    Equal values are not popped, so the leftmost minimum of any range ends up
    as its ancestor.
    """
    n = len(s)
    left: list[Optional[int]] = [None] * n
    right: list[Optional[int]] = [None] * n
    parent: list[Optional[int]] = [None] * n
    stack: list[int] = []  # 0-based, values non-decreasing bottom to top
    for k in range(n):
        last = None
        while stack and s[stack[-1]] > s[k]:
            last = stack.pop()
        if last is not None:
            left[k] = last + 1
            parent[last] = k + 1
        if stack:
            right[stack[-1]] = k + 1
            parent[k] = stack[-1] + 1
        stack.append(k)
    root = stack[0] + 1 if stack else None
    return _make_tree(n, root, left, right, parent)


def build_cartesian_tree_naive(s: Sequence[int]) -> CartesianTree:
    """Cartesian tree straight from the recursive definition, O(n^2)."""
    n = len(s)
    left: list[Optional[int]] = [None] * n
    right: list[Optional[int]] = [None] * n
    parent: list[Optional[int]] = [None] * n

    def build(lo: int, hi: int, par: Optional[int]) -> Optional[int]:
        # subtree over 0-based half-open range [lo, hi)
        if lo >= hi:
            return None
        k = lo + min_id(s[lo:hi]) - 1
        parent[k] = par
        left[k] = build(lo, k, k + 1)
        right[k] = build(k + 1, hi, k + 1)
        return k + 1

    root = build(0, n, None)
    return _make_tree(n, root, left, right, parent)


def parent_distance(s: Sequence[int]) -> tuple[int, ...]:
    """Parent-distance representation of ``s`` via a monotone stack.

    ``pd[i]`` is the distance back to the nearest earlier position holding a
    value ``<= s[i]``, or 0 when there is none.
    """
    pd = [0] * len(s)
    stack: list[int] = []
    for k, x in enumerate(s):
        while stack and s[stack[-1]] > x:
            stack.pop()
        if stack:
            pd[k] = k - stack[-1]
        stack.append(k)
    return tuple(pd)


def parent_distance_naive(s: Sequence[int]) -> tuple[int, ...]:
    out = []
    for i in range(len(s)):
        js = [j for j in range(i) if s[j] <= s[i]]
        out.append(i - max(js) if js else 0)
    return tuple(out)


def ct_match(s: Sequence[int], t: Sequence[int]) -> bool:
    """True iff ``s`` and ``t`` have isomorphic Cartesian trees."""
    return len(s) == len(t) and parent_distance(s) == parent_distance(t)


def tree_isomorphic(a: CartesianTree, b: CartesianTree) -> bool:
    """Ordered-tree isomorphism, ignoring node labels."""
    if a.n != b.n:
        return False
    stack = [(a.root, b.root)]
    while stack:
        x, y = stack.pop()
        if x is None or y is None:
            if x is not y:
                return False
            continue
        stack.append((a.left_of(x), b.left_of(y)))
        stack.append((a.right_of(x), b.right_of(y)))
    return True


def rank_normalize(s: Sequence[int]) -> tuple[int, ...]:
    """Replace values by their 1-based rank in a stable sort by value.

    Equal values are ranked left to right, which keeps the Cartesian tree
    unchanged and makes every value distinct.
    """
    order = sorted(range(len(s)), key=lambda k: (s[k], k))
    out = [0] * len(s)
    for rank, k in enumerate(order, start=1):
        out[k] = rank
    return tuple(out)
