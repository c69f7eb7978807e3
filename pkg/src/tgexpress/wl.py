"""Exact 1-WL colour refinement and its temporal compositions.

Every learnable map of the neural architectures (message/update functions,
RNN cells, sequence encoders) is replaced by an :class:`Interner`, i.e. the
injective extreme of that function class. Colours are dense ints that are only
comparable within one interner session; cross-graph questions are answered by
refining a disjoint union in a single session.

Directed graphs pass messages along in-edges.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Sequence

from .tgraph import InvalidInput, SnapshotGraph, TemporalGraph, disjoint_union, slice_at

VARIANTS = ("static", "time_and", "graph_then_time", "time_then", "scheduled")

START = ("start",)


class Interner:
    """Injective map from hashable signatures to dense ids, first-seen order."""

    def __init__(self, session: str = "default"):
        self.session = session
        self._ids: dict[Hashable, int] = {}

    def __call__(self, signature: Hashable) -> int:
        ids = self._ids
        cid = ids.get(signature)
        if cid is None:
            cid = ids[signature] = len(ids)
        return cid

    def __len__(self):
        return len(self._ids)


@dataclass(frozen=True)
class Coloring:
    session: str
    colors: tuple[int, ...]
    layer: int
    variant: str = ""

    def histogram(self, nodes: Sequence[int] | None = None) -> Counter:
        if nodes is None:
            return Counter(self.colors)
        return Counter(self.colors[i] for i in nodes)

    def partition(self) -> "Partition":
        return Partition.from_colors(self.colors)

    def to_json(self) -> str:
        hist = Counter(self.colors)
        doc = {"session": self.session, "variant": self.variant, "colors": list(self.colors),
               "histogram": {str(c): hist[c] for c in sorted(hist)}}
        return json.dumps(doc, separators=(",", ":")) + "\n"


@dataclass(frozen=True)
class Partition:
    """Node classes, each a sorted tuple, ordered by smallest member."""

    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_colors(cls, colors: Sequence[Hashable]) -> "Partition":
        groups: dict[Hashable, list[int]] = {}
        for i, c in enumerate(colors):
            groups.setdefault(c, []).append(i)
        return cls(tuple(sorted(tuple(g) for g in groups.values())))

    @classmethod
    def from_classes(cls, classes) -> "Partition":
        return cls(tuple(sorted(tuple(sorted(c)) for c in classes)))

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset(i for c in self.classes for i in c)

    def class_of(self) -> dict[int, int]:
        return {i: k for k, c in enumerate(self.classes) for i in c}

    def __len__(self):
        return len(self.classes)


def refines(p1: Partition, p2: Partition) -> bool:
    """True iff every class of ``p1`` lies inside a class of ``p2``."""
    if p1.nodes != p2.nodes:
        raise InvalidInput("partitions are over different node sets")
    owner = p2.class_of()
    return all(len({owner[i] for i in c}) == 1 for c in p1.classes)


@dataclass(frozen=True)
class WlConfig:
    variant: str = "time_then"
    layers: int = 2
    iterations: int | None = None  # time_then budget; None means T * layers

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise InvalidInput(f"unknown variant {self.variant!r}; choose from {VARIANTS}")
        if self.layers < 1:
            raise InvalidInput("layers must be >= 1")
        if self.iterations is not None and self.iterations < 0:
            raise InvalidInput("iterations must be >= 0")


# --- refinement primitives --------------------------------------------------

def refine_round(in_adj, colors: Sequence[int], interner: Interner, tag) -> list[int]:
    """One 1-WL round: intern (tag, own colour, sorted neighbour multiset)."""
    return [
        interner((tag, colors[i], tuple(sorted((colors[j], e) for j, e in nbrs))))
        for i, nbrs in enumerate(in_adj)
    ]


def refine(in_adj, colors: Sequence[int], rounds: int, interner: Interner, role: str) -> list[int]:
    colors = list(colors)
    for layer in range(1, rounds + 1):
        colors = refine_round(in_adj, colors, interner, (role, layer))
    return colors


def _interned_adj(adj, interner: Interner, kind: str):
    return [[(j, interner((kind, a))) for j, a in nbrs] for nbrs in adj]


def _snapshot_adj(g: SnapshotGraph):
    adj = [[] for _ in range(g.node_count)]
    for (u, v) in sorted(g.edge_attrs):
        adj[v].append((u, g.edge_attrs[(u, v)]))
    return adj


def static_wl(g: SnapshotGraph, iters: int, interner: Interner | None = None,
              init_colors: Sequence[int] | None = None, role: str = "gnn") -> Coloring:
    """1-WL on a single snapshot; seeds from node attrs unless colours are given."""
    interner = interner if interner is not None else Interner()
    if init_colors is None:
        init_colors = [interner(("x", a)) for a in g.node_attrs]
    adj = _interned_adj(_snapshot_adj(g), interner, "e")
    colors = refine(adj, init_colors, iters, interner, role)
    return Coloring(interner.session, tuple(colors), iters, "static")


def _step_inputs(tg: TemporalGraph, interner: Interner):
    """Per step: interned node-attr colours and interned in-adjacency."""
    for t in range(1, tg.horizon + 1):
        x = [interner(("x", seq[t - 1])) for seq in tg.node_seqs]
        yield t, x, _interned_adj(tg.in_neighbors(t), interner, "e")


def time_and_wl(tg: TemporalGraph, cfg: WlConfig = WlConfig("time_and"),
                interner: Interner | None = None) -> Coloring:
    """Per step t: input GNN on X_t, recurrent GNN on H_{t-1}, then a cell."""
    interner = interner if interner is not None else Interner()
    h = [interner(START)] * tg.node_count
    for t, x, adj in _step_inputs(tg, interner):
        i_col = refine(adj, x, cfg.layers, interner, "in")
        j_col = refine(adj, h, cfg.layers, interner, "rec")
        h = [interner(("rnn", a, b)) for a, b in zip(i_col, j_col)]
    return Coloring(interner.session, tuple(h), tg.horizon * cfg.layers, "time_and")


def graph_then_time_wl(tg: TemporalGraph, cfg: WlConfig = WlConfig("graph_then_time"),
                       interner: Interner | None = None) -> Coloring:
    """Like :func:`time_and_wl` but the previous state skips graph refinement."""
    interner = interner if interner is not None else Interner()
    h = [interner(START)] * tg.node_count
    for t, x, adj in _step_inputs(tg, interner):
        i_col = refine(adj, x, cfg.layers, interner, "in")
        h = [interner(("rnn", a, b)) for a, b in zip(i_col, h)]
    return Coloring(interner.session, tuple(h), tg.horizon * cfg.layers, "graph_then_time")


def time_then_wl(tg: TemporalGraph, cfg: WlConfig = WlConfig("time_then"),
                 interner: Interner | None = None) -> Coloring:
    """Encode every node/edge sequence, then refine the aggregated static graph."""
    interner = interner if interner is not None else Interner()
    rounds = cfg.iterations if cfg.iterations is not None else tg.horizon * cfg.layers
    seed = [interner(("nodeseq", seq)) for seq in tg.node_seqs]
    adj = _interned_adj(tg.in_neighbors(), interner, "edgeseq")
    colors = refine(adj, seed, rounds, interner, "agg")
    return Coloring(interner.session, tuple(colors), rounds, "time_then")


def scheduled_wl(tg: TemporalGraph, cfg: WlConfig = WlConfig("scheduled"),
                 interner: Interner | None = None) -> Coloring:
    """Time-and-graph emulated as one T*L-layer GNN over the aggregated graph.

    Each node carries (X_{i,<=T}, I', J'). Layer l reads the edges of
    snapshot ceil(l/L) from the full edge sequences and advances both I' and J'
    by one round; at the end of every L-block J' passes through the cell and
    I' is reseeded from the next step's node attribute.
    """
    interner = interner if interner is not None else Interner()
    T, L = tg.horizon, cfg.layers
    xseq = tg.node_seqs
    full_adj = tg.in_neighbors()
    # layer messages only see neighbours whose edge is present at the block's step
    step_adj = [
        [[(j, interner(("e", seq[t]))) for j, seq in nbrs if seq[t] is not None]
         for nbrs in full_adj]
        for t in range(T)
    ]
    ip = [interner(("x", s[0])) for s in xseq]
    jp = [interner(START)] * tg.node_count
    for layer in range(1, T * L + 1):
        t = -(-layer // L)
        sub = (layer - 1) % L + 1
        adj = step_adj[t - 1]
        new_i = refine_round(adj, ip, interner, ("in", sub))
        new_j = refine_round(adj, jp, interner, ("rec", sub))
        if layer % L == 0:
            jp = [interner(("rnn", a, b)) for a, b in zip(new_i, new_j)]
            ip = [interner(("x", s[t])) for s in xseq] if layer < T * L else new_i
        else:
            ip, jp = new_i, new_j
    return Coloring(interner.session, tuple(jp), T * L, "scheduled")


def run_wl(tg: TemporalGraph, cfg: WlConfig, interner: Interner | None = None) -> Coloring:
    if cfg.variant == "static":
        if tg.horizon != 1:
            raise InvalidInput("static variant needs a single-step graph")
        return static_wl(slice_at(tg, 1), cfg.iterations if cfg.iterations is not None
                         else cfg.layers, interner)
    fn = {"time_and": time_and_wl, "graph_then_time": graph_then_time_wl,
          "time_then": time_then_wl, "scheduled": scheduled_wl}[cfg.variant]
    return fn(tg, cfg, interner)


def joint_colors(a: TemporalGraph, b: TemporalGraph, cfg: WlConfig):
    """Refine ``a`` and ``b`` in one session; returns (colours_a, colours_b)."""
    if a.horizon != b.horizon:
        raise InvalidInput(f"horizon mismatch: {a.horizon} vs {b.horizon}")
    union, ma, mb = disjoint_union(a, b)
    col = run_wl(union, cfg).colors
    return [col[i] for i in ma], [col[i] for i in mb]


def distinguish(a: TemporalGraph, b: TemporalGraph, cfg: WlConfig) -> bool:
    ca, cb = joint_colors(a, b, cfg)
    return Counter(ca) != Counter(cb)
