"""Exact colour-refinement models of temporal graph representations."""

from .tgraph import (InvalidInput, SnapshotGraph, TemporalGraph, Unsupported, aggregate,
                     apply_permutation, disjoint_union, slice_at, validate)
from .wl import Coloring, Interner, Partition, WlConfig, distinguish, refines, run_wl

__all__ = [
    "Coloring", "Interner", "InvalidInput", "Partition", "SnapshotGraph", "TemporalGraph",
    "Unsupported", "WlConfig", "aggregate", "apply_permutation", "disjoint_union",
    "distinguish", "refines", "run_wl", "slice_at", "validate",
]
