"""Exhaustive isomorphism, orbit and canonical-form oracles for small graphs.

A temporal isomorphism is a single node permutation that aligns every
snapshot at once, i.e. an isomorphism of the aggregated graphs with node and
edge sequences as attributes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tgraph import InvalidInput, TemporalGraph, Unsupported, apply_permutation
from .wl import Partition

DEFAULT_NODE_LIMIT = 9


@dataclass(frozen=True)
class IsoWitness:
    isomorphic: bool
    permutation: tuple[int, ...] | None = None

    def __bool__(self):
        return self.isomorphic


def _node_keys(tg: TemporalGraph) -> list[tuple]:
    # any isomorphism preserves (attr sequence, per-step degree profile)
    return [(repr(tg.node_seqs[i]), tg.degree_profile(i)) for i in range(tg.node_count)]


def _check_limit(n: int, node_limit: int) -> None:
    if n > node_limit:
        raise Unsupported(f"{n} nodes exceeds oracle limit {node_limit}")


def _search(a: TemporalGraph, b: TemporalGraph, fixed: dict[int, int] | None = None):
    """Yield every permutation p with apply_permutation(a, p) == b, lexicographically."""
    n = a.node_count
    ka, kb = _node_keys(a), _node_keys(b)
    cands = [[v for v in range(n) if kb[v] == ka[u]] for u in range(n)]
    if fixed:
        for u, v in fixed.items():
            cands[u] = [v] if v in cands[u] else []
    ea, eb = a.edge_seqs, b.edge_seqs
    perm = [-1] * n
    used = [False] * n

    def consistent(u: int, v: int) -> bool:
        for w in range(u):
            x = perm[w]
            if ea.get((u, w)) != eb.get((v, x)) or ea.get((w, u)) != eb.get((x, v)):
                return False
        return ea.get((u, u)) == eb.get((v, v))

    def rec(u: int):
        if u == n:
            yield tuple(perm)
            return
        for v in cands[u]:
            if not used[v] and consistent(u, v):
                perm[u], used[v] = v, True
                yield from rec(u + 1)
                perm[u], used[v] = -1, False

    yield from rec(0)


def _basic_mismatch(a: TemporalGraph, b: TemporalGraph) -> bool:
    return (a.node_count != b.node_count or a.horizon != b.horizon
            or a.directed != b.directed or len(a.edge_seqs) != len(b.edge_seqs)
            or sorted(_node_keys(a)) != sorted(_node_keys(b)))


def brute_force_iso(a: TemporalGraph, b: TemporalGraph,
                    node_limit: int = DEFAULT_NODE_LIMIT) -> IsoWitness:
    """Exact decision; the witness is the lexicographically least isomorphism."""
    if a.horizon != b.horizon:
        raise InvalidInput(f"horizon mismatch: {a.horizon} vs {b.horizon}")
    _check_limit(max(a.node_count, b.node_count), node_limit)
    if _basic_mismatch(a, b):
        return IsoWitness(False)
    for perm in _search(a, b):
        return IsoWitness(True, perm)
    return IsoWitness(False)


def automorphisms(tg: TemporalGraph, node_limit: int = DEFAULT_NODE_LIMIT) -> list[tuple[int, ...]]:
    _check_limit(tg.node_count, node_limit)
    return list(_search(tg, tg))


def node_orbits(tg: TemporalGraph, node_limit: int = DEFAULT_NODE_LIMIT) -> Partition:
    """Orbits of the automorphism group.

    ``j`` joins the orbit of ``i`` iff the exhaustive search finds an
    automorphism with i -> j; avoids listing the whole group (9! for an
    edgeless graph).
    """
    _check_limit(tg.node_count, node_limit)
    n = tg.node_count
    orbit_of = list(range(n))
    for i in range(n):
        if orbit_of[i] != i:
            continue
        for j in range(i + 1, n):
            if orbit_of[j] != j:
                continue
            if next(_search(tg, tg, {i: j}), None) is not None:
                orbit_of[j] = i
    return Partition.from_colors(orbit_of)


def canonical_form(tg: TemporalGraph, node_limit: int = DEFAULT_NODE_LIMIT) -> bytes:
    """Lexicographically least serialisation over all node orderings.

    The serialisation lists, position by position, the placed node's
    attribute sequence and its edge sequences to every earlier position, so
    prefixes can be compared during the search. Branches are skipped when the
    partial record already exceeds the best, or when swapping the candidate
    with an earlier tried one is an automorphism fixing the placed prefix
    (their subtrees are then identical).
    """
    _check_limit(tg.node_count, node_limit)
    n = tg.node_count
    es = tg.edge_seqs
    best: list[tuple] | None = None

    def record(order: list[int], u: int) -> tuple:
        row = tuple((repr(es.get((u, w))), repr(es.get((w, u)))) for w in order)
        return (repr(tg.node_seqs[u]), row + ((repr(es.get((u, u))), ""),))

    def twins(u: int, v: int) -> bool:
        if tg.node_seqs[u] != tg.node_seqs[v] or es.get((u, u)) != es.get((v, v)):
            return False
        if es.get((u, v)) != es.get((v, u)):
            return False
        return all(es.get((u, w)) == es.get((v, w)) and es.get((w, u)) == es.get((w, v))
                   for w in range(n) if w != u and w != v)

    def rec(order: list[int], recs: list[tuple], remaining: list[int]):
        nonlocal best
        k = len(order)
        if best is not None and tuple(recs) > tuple(best[:k]):
            return
        if k == n:
            best = list(recs)
            return
        tried: list[int] = []
        for r, u in sorted((record(order, u), u) for u in remaining):
            if any(twins(u, v) for v in tried):
                continue
            tried.append(u)
            rec(order + [u], recs + [r], [w for w in remaining if w != u])

    rec([], [], list(range(n)))
    head = (n, tg.horizon, tg.directed)
    return repr((head, tuple(best or ()))).encode("utf-8")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def csl_iso(n: int, s1: int, s2: int) -> bool:
    """Prime-order circulant criterion: s2 = ±s1 or s1*s2 = ±1 (mod n)."""
    if not is_prime(n):
        raise Unsupported(f"criterion only valid for prime order, got n={n}")
    for s in (s1, s2):
        if not 2 <= s <= n - 2:
            raise InvalidInput(f"skip {s} outside 2..{n - 2}")
    return (s2 - s1) % n == 0 or (s2 + s1) % n == 0 or (s1 * s2) % n in (1, n - 1)


def verify_witness(a: TemporalGraph, b: TemporalGraph, w: IsoWitness) -> bool:
    return w.isomorphic and apply_permutation(a, w.permutation) == b
