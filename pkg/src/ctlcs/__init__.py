"""Longest common subsequence under Cartesian-tree matching."""

from .binary import (
    BinaryCtLcsResult,
    BinarySuffixStats,
    binary_suffix_stats,
    cand,
    ct_lcs_binary,
    reconstruct_binary_witness,
)
from .cartesian import (
    CartesianTree,
    build_cartesian_tree,
    ct_match,
    min_id,
    parent_distance,
    rank_normalize,
    tree_isomorphic,
)
from .errors import (
    CapExceededError,
    ConsistencyError,
    CtLcsError,
    EmptySequenceError,
    NonBinaryError,
    NotNormalizedError,
)
from .general import (
    PivotTables,
    ct_lcs_general,
    ct_lcs_reference,
    f_ct_lcs_length,
    traceback,
    value_order,
)
from .lcs_index import BlockLcsIndex, build_lcs_index, lcs_query, lcs_traceback
from .oracle import brute_force_cand, brute_force_ct_lcs, brute_force_lnd
from .witness import CtLcsWitness

__version__ = "0.1.0"
