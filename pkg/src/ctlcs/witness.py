from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cartesian import ct_match
from .errors import ConsistencyError


@dataclass(frozen=True)
class CtLcsWitness:
    """A common CT-subsequence certificate.

    Indices are 1-based and strictly ascending; ``pattern`` is ``s`` restricted
    to ``s_indices``.
    """

    length: int
    s_indices: tuple[int, ...]
    t_indices: tuple[int, ...]
    pattern: tuple[int, ...]

    @classmethod
    def from_indices(cls, s: Sequence[int], s_idx, t_idx) -> "CtLcsWitness":
        s_idx = tuple(int(k) for k in s_idx)
        t_idx = tuple(int(k) for k in t_idx)
        return cls(len(s_idx), s_idx, t_idx, tuple(s[k - 1] for k in s_idx))

    def is_valid_for(self, s: Sequence[int], t: Sequence[int]) -> bool:
        try:
            self.check(s, t)
        except ConsistencyError:
            return False
        return True

    def check(self, s: Sequence[int], t: Sequence[int]) -> None:
        """Raise ``ConsistencyError`` unless this certifies a common CT-subsequence."""
        if not (len(self.s_indices) == len(self.t_indices) == len(self.pattern) == self.length):
            raise ConsistencyError("witness length mismatch")
        for idx, src in ((self.s_indices, s), (self.t_indices, t)):
            if any(not 1 <= k <= len(src) for k in idx):
                raise ConsistencyError("witness index out of range")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ConsistencyError("witness indices not strictly ascending")
        sub_s = [s[k - 1] for k in self.s_indices]
        sub_t = [t[k - 1] for k in self.t_indices]
        if tuple(sub_s) != tuple(self.pattern):
            raise ConsistencyError("pattern does not match s at s_indices")
        if not ct_match(sub_s, sub_t):
            raise ConsistencyError("selected subsequences do not CT-match")

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "s_indices": list(self.s_indices),
            "t_indices": list(self.t_indices),
            "pattern": list(self.pattern),
        }


EMPTY_WITNESS = CtLcsWitness(0, (), (), ())
