"""Batching modülü - batch kompozisyon stratejileri"""

from .partition import (
    Partition,
    round_rng,
    sort_by_score,
    quantile_splits,
    partition_random,
    partition_homogeneous,
    partition_heterogeneous,
    make_partition,
)

__all__ = [
    "Partition",
    "round_rng",
    "sort_by_score",
    "quantile_splits",
    "partition_random",
    "partition_homogeneous",
    "partition_heterogeneous",
    "make_partition",
]
