"""Temporal graphs in snapshot and aggregated form.

Attributes are discrete symbols: ints, strings, or (nested) tuples of those.
``None`` is the Null symbol and marks absent nodes/edges at a time step.
Time indices in the public API are 1-based, matching ``slice_at(tg, 1)`` for the
first snapshot; stored sequences are plain 0-based tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Iterable, Mapping, Sequence

NULL = None

Attr = Any  # int | str | tuple | None
Edge = tuple[int, int]


class InvalidInput(ValueError):
    pass


class Unsupported(Exception):
    pass


def is_symbol(value: object) -> bool:
    if value is None or isinstance(value, bool):
        return value is None
    if isinstance(value, (int, str)):
        return True
    if isinstance(value, tuple):
        return all(v is not None and is_symbol(v) for v in value)
    return False


def _freeze(mapping: Mapping[Edge, Any]) -> Mapping[Edge, Any]:
    return MappingProxyType(dict(mapping))


@dataclass(frozen=True)
class SnapshotGraph:
    node_count: int
    directed: bool
    node_attrs: tuple
    edge_attrs: Mapping[Edge, Attr] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "node_attrs", tuple(self.node_attrs))
        object.__setattr__(self, "edge_attrs", _freeze(self.edge_attrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], directed: bool = False,
                   node_attrs: Sequence[Attr] | None = None, edge_attr: Attr = 1):
        attrs: dict[Edge, Attr] = {}
        for u, v in edges:
            attrs[(u, v)] = edge_attr
            if not directed:
                attrs[(v, u)] = edge_attr
        if node_attrs is None:
            node_attrs = (1,) * n
        return cls(n, directed, tuple(node_attrs), attrs)

    def edges(self) -> list[Edge]:
        """Edge list; undirected graphs list each edge once as (min, max)."""
        if self.directed:
            return sorted(self.edge_attrs)
        return sorted((u, v) for (u, v) in self.edge_attrs if u <= v)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for u, v in self.edge_attrs:
            deg[u] += 1
        return deg


@dataclass(frozen=True)
class TemporalGraph:
    """Aggregated temporal graph: per-node and per-edge attribute sequences.

    ``edge_seqs`` maps ordered pairs to length-``horizon`` tuples. Undirected
    graphs hold both (u, v) and (v, u) with equal sequences. Pairs that are
    Null at every step are never stored.
    """

    node_count: int
    horizon: int
    directed: bool
    node_seqs: tuple
    edge_seqs: Mapping[Edge, tuple] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "node_seqs", tuple(tuple(s) for s in self.node_seqs))
        object.__setattr__(
            self, "edge_seqs", _freeze({k: tuple(v) for k, v in self.edge_seqs.items()}))

    def edges(self) -> list[Edge]:
        if self.directed:
            return sorted(self.edge_seqs)
        return sorted((u, v) for (u, v) in self.edge_seqs if u <= v)

    def in_neighbors(self, t: int | None = None) -> list[list[tuple[int, Attr]]]:
        """Per node, sorted (source, attr) pairs of incoming edges.

        With ``t`` (1-based) only edges present at that step are included and
        the attr is the step-``t`` symbol; otherwise the union edge set is used
        and the attr is the whole sequence.
        """
        adj: list[list[tuple[int, Attr]]] = [[] for _ in range(self.node_count)]
        for (u, v) in sorted(self.edge_seqs):
            seq = self.edge_seqs[(u, v)]
            if t is None:
                adj[v].append((u, seq))
            elif seq[t - 1] is not None:
                adj[v].append((u, seq[t - 1]))
        return adj

    def degree_profile(self, i: int) -> tuple:
        """Per-step (in, out) degrees of node ``i``; invariant under isomorphism."""
        prof = []
        for t in range(self.horizon):
            d_in = sum(1 for (u, v), s in self.edge_seqs.items() if v == i and s[t] is not None)
            d_out = sum(1 for (u, v), s in self.edge_seqs.items() if u == i and s[t] is not None)
            prof.append((d_in, d_out))
        return tuple(prof)


def aggregate(snapshots: Sequence[SnapshotGraph]) -> TemporalGraph:
    if not snapshots:
        raise InvalidInput("empty snapshot sequence")
    n = snapshots[0].node_count
    directed = snapshots[0].directed
    for k, g in enumerate(snapshots):
        if g.node_count != n:
            raise InvalidInput(f"snapshot {k + 1} has {g.node_count} nodes, expected {n}")
        if g.directed != directed:
            raise InvalidInput(f"snapshot {k + 1} directedness differs")
    T = len(snapshots)
    node_seqs = [tuple(g.node_attrs[i] for g in snapshots) for i in range(n)]
    pairs = sorted(set().union(*(g.edge_attrs.keys() for g in snapshots)))
    edge_seqs = {}
    for p in pairs:
        seq = tuple(g.edge_attrs.get(p, NULL) for g in snapshots)
        if any(a is not None for a in seq):
            edge_seqs[p] = seq
    tg = TemporalGraph(n, T, directed, node_seqs, edge_seqs)
    _raise_if_invalid(tg)
    return tg


def slice_at(tg: TemporalGraph, t: int) -> SnapshotGraph:
    if not 1 <= t <= tg.horizon:
        raise InvalidInput(f"time index {t} outside 1..{tg.horizon}")
    node_attrs = tuple(seq[t - 1] for seq in tg.node_seqs)
    edges = {p: s[t - 1] for p, s in tg.edge_seqs.items() if s[t - 1] is not None}
    return SnapshotGraph(tg.node_count, tg.directed, node_attrs, edges)


def snapshots(tg: TemporalGraph) -> list[SnapshotGraph]:
    return [slice_at(tg, t) for t in range(1, tg.horizon + 1)]


# --- permutations -----------------------------------------------------------

def check_permutation(perm: Sequence[int], n: int) -> tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if len(perm) != n:
        raise InvalidInput(f"permutation has length {len(perm)}, graph has {n} nodes")
    if sorted(perm) != list(range(n)):
        raise InvalidInput("not a permutation of 0..n-1")
    return perm


def inverse(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def compose(second: Sequence[int], first: Sequence[int]) -> tuple[int, ...]:
    """``second ∘ first``: apply ``first``, then ``second``."""
    return tuple(second[first[i]] for i in range(len(first)))


def apply_permutation(tg: TemporalGraph, perm: Sequence[int]) -> TemporalGraph:
    """Move node ``i`` to ``perm[i]``; edge (i, j) becomes (perm[i], perm[j])."""
    perm = check_permutation(perm, tg.node_count)
    node_seqs = [None] * tg.node_count
    for i, seq in enumerate(tg.node_seqs):
        node_seqs[perm[i]] = seq
    edge_seqs = {(perm[u], perm[v]): s for (u, v), s in tg.edge_seqs.items()}
    return TemporalGraph(tg.node_count, tg.horizon, tg.directed, node_seqs, edge_seqs)


def disjoint_union(a: TemporalGraph, b: TemporalGraph):
    """Return ``(union, map_a, map_b)``; the maps send original to union indices."""
    if a.horizon != b.horizon:
        raise InvalidInput(f"horizon mismatch: {a.horizon} vs {b.horizon}")
    if a.directed != b.directed:
        raise InvalidInput("directedness mismatch")
    off = a.node_count
    edge_seqs = dict(a.edge_seqs)
    edge_seqs.update({(u + off, v + off): s for (u, v), s in b.edge_seqs.items()})
    union = TemporalGraph(a.node_count + b.node_count, a.horizon, a.directed,
                          a.node_seqs + b.node_seqs, edge_seqs)
    return union, tuple(range(off)), tuple(range(off, off + b.node_count))


def union_all(graphs: Sequence[TemporalGraph]):
    """Disjoint union of many graphs; returns the union and per-graph index maps."""
    if not graphs:
        raise InvalidInput("nothing to union")
    union, first, _ = disjoint_union(graphs[0], TemporalGraph(0, graphs[0].horizon,
                                                              graphs[0].directed, ()))
    maps = [first]
    for g in graphs[1:]:
        union, _, m = disjoint_union(union, g)
        maps.append(m)
    return union, maps


# --- validation -------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    location: str
    message: str

    def __str__(self):
        return f"{self.location}: {self.message}"


def validate(tg: TemporalGraph, allow_self_loops: bool = False) -> list[Violation]:
    out: list[Violation] = []
    n, T = tg.node_count, tg.horizon
    if T < 1:
        out.append(Violation("horizon", f"must be >= 1, got {T}"))
    if len(tg.node_seqs) != n:
        out.append(Violation("node_seqs", f"{len(tg.node_seqs)} sequences for {n} nodes"))
    for i, seq in enumerate(tg.node_seqs):
        if len(seq) != T:
            out.append(Violation(f"node {i}", f"sequence length {len(seq)} != horizon {T}"))
        for k, a in enumerate(seq):
            if not is_symbol(a):
                out.append(Violation(f"node {i} step {k + 1}", f"not a symbol: {a!r}"))
    for (u, v), seq in sorted(tg.edge_seqs.items()):
        loc = f"edge ({u},{v})"
        if not (0 <= u < n and 0 <= v < n):
            out.append(Violation(loc, "endpoint out of range"))
            continue
        if u == v and not allow_self_loops:
            out.append(Violation(loc, "self-loop"))
        if len(seq) != T:
            out.append(Violation(loc, f"sequence length {len(seq)} != horizon {T}"))
        if all(a is None for a in seq):
            out.append(Violation(loc, "all-Null sequence stored"))
        for k, a in enumerate(seq):
            if not is_symbol(a):
                out.append(Violation(f"{loc} step {k + 1}", f"not a symbol: {a!r}"))
        if not tg.directed and u < v and tg.edge_seqs.get((v, u)) != seq:
            out.append(Violation(loc, f"asymmetric attrs in undirected graph ({u},{v})"))
        if not tg.directed and u > v and (v, u) not in tg.edge_seqs:
            out.append(Violation(loc, f"asymmetric attrs in undirected graph ({v},{u})"))
    return out


def _raise_if_invalid(tg: TemporalGraph) -> None:
    problems = validate(tg)
    if problems:
        raise InvalidInput("; ".join(str(p) for p in problems[:5]))


# --- JSON file format -------------------------------------------------------

def _to_json_symbol(a: Attr):
    if isinstance(a, tuple):
        return [_to_json_symbol(x) for x in a]
    return a


def _from_json_symbol(a):
    if isinstance(a, list):
        return tuple(_from_json_symbol(x) for x in a)
    if isinstance(a, (bool, float)) or (a is not None and not isinstance(a, (int, str))):
        raise InvalidInput(f"unsupported symbol {a!r}")
    return a


def to_dict(tg: TemporalGraph) -> dict:
    return {
        "version": 1,
        "directed": tg.directed,
        "num_nodes": tg.node_count,
        "horizon": tg.horizon,
        "node_seqs": [[_to_json_symbol(a) for a in s] for s in tg.node_seqs],
        "edges": [{"u": u, "v": v, "seq": [_to_json_symbol(a) for a in tg.edge_seqs[(u, v)]]}
                  for (u, v) in tg.edges()],
    }


def from_dict(d: Mapping) -> TemporalGraph:
    try:
        if d.get("version") != 1:
            raise InvalidInput(f"unsupported version {d.get('version')!r}")
        directed = d["directed"]
        if not isinstance(directed, bool):
            raise InvalidInput("'directed' must be a boolean")
        n, T = int(d["num_nodes"]), int(d["horizon"])
        node_seqs = [tuple(_from_json_symbol(a) for a in s) for s in d["node_seqs"]]
        edge_seqs: dict[Edge, tuple] = {}
        for k, e in enumerate(d["edges"]):
            u, v = int(e["u"]), int(e["v"])
            seq = tuple(_from_json_symbol(a) for a in e["seq"])
            if (u, v) in edge_seqs:
                raise InvalidInput(f"edges[{k}]: duplicate pair ({u},{v})")
            edge_seqs[(u, v)] = seq
            if not directed:
                if (v, u) in edge_seqs and edge_seqs[(v, u)] != seq:
                    raise InvalidInput(f"edges[{k}]: conflicting sequences for ({u},{v})")
                edge_seqs[(v, u)] = seq
    except (KeyError, TypeError, AttributeError) as exc:
        raise InvalidInput(f"malformed graph document: {exc!r}") from exc
    tg = TemporalGraph(n, T, directed, node_seqs, edge_seqs)
    _raise_if_invalid(tg)
    return tg


def dumps(tg: TemporalGraph) -> str:
    return json.dumps(to_dict(tg), separators=(",", ":")) + "\n"


def loads(text: str) -> TemporalGraph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(d, dict):
        raise InvalidInput("graph document must be a JSON object")
    return from_dict(d)


def read_graph(path) -> TemporalGraph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_graph(tg: TemporalGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(tg))
