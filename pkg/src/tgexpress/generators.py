"""CSL / DynamicCSL, the food-web pair, and random temporal graphs."""

from __future__ import annotations

import json
import os
import random
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .tgraph import (InvalidInput, SnapshotGraph, TemporalGraph, aggregate, write_graph)

FOODWEB_NAMES = ("Lynx", "Hare", "Plant", "Orca", "Penguin", "Fish")
LYNX, HARE, PLANT, ORCA, PENGUIN, FISH = range(6)


def gen_csl(n: int, s: int) -> SnapshotGraph:
    """Circular skip link graph: n-cycle plus chords i -- i+s (mod n)."""
    if n < 3:
        raise InvalidInput(f"CSL needs n >= 3, got {n}")
    if not 1 <= s <= n - 1 or s % n == 0:
        raise InvalidInput(f"skip {s} invalid for n={n}")
    edges = set()
    for i in range(n):
        for j in ((i + 1) % n, (i + s) % n):
            edges.add((min(i, j), max(i, j)))
    return SnapshotGraph.from_edges(n, sorted(edges))


@dataclass(frozen=True)
class DynCslSample:
    skips: tuple[int, ...]
    graph: TemporalGraph
    label: int


def gen_dyncsl_sample(n: int, skips: Sequence[int]) -> DynCslSample:
    skips = tuple(int(s) for s in skips)
    if not skips:
        raise InvalidInput("empty skip schedule")
    tg = aggregate([gen_csl(n, s) for s in skips])
    return DynCslSample(skips, tg, len(set(skips)))


@dataclass
class DatasetManifest:
    seed: int
    count: int
    horizon: int
    num_nodes: int
    candidates: list[int]
    stratified: bool
    labels: list[int] = field(default_factory=list)
    skips: list[list[int]] = field(default_factory=list)
    folds: list[int] = field(default_factory=list)
    num_folds: int = 10

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":")) + "\n"


def _random_surjection(rng: random.Random, T: int, subset: Sequence[int]) -> list[int]:
    # rejection is cheap here: P(surjective) >= 0.3 for |subset| <= 5, T = 8
    while True:
        seq = [rng.choice(subset) for _ in range(T)]
        if len(set(seq)) == len(subset):
            return seq


def _assign_folds(labels: Sequence[int], num_folds: int, rng: random.Random) -> list[int]:
    folds = [0] * len(labels)
    for lab in sorted(set(labels)):
        members = [i for i, y in enumerate(labels) if y == lab]
        rng.shuffle(members)
        for rank, i in enumerate(members):
            folds[i] = rank % num_folds
    return folds


def gen_dyncsl_dataset(seed: int, count: int = 150, T: int = 8, n: int = 19,
                       candidates: Sequence[int] = (2, 3, 4, 5, 6), stratified: bool = True,
                       num_folds: int = 10):
    """Generate DynamicCSL samples and their manifest.

    Stratified mode draws each label's quota exactly: choose a k-subset of the
    candidate skips, then a uniform surjection of the T steps onto it. The
    unstratified mode draws every step uniformly from the candidates.
    """
    candidates = sorted(int(c) for c in candidates)
    if not candidates:
        raise InvalidInput("empty candidate set")
    k_max = len(candidates)
    rng = random.Random(seed)
    schedules: list[list[int]] = []
    if stratified:
        if count % k_max:
            raise InvalidInput(f"count {count} not divisible by {k_max} labels")
        if T < k_max:
            raise InvalidInput(f"horizon {T} cannot realise label {k_max}")
        plan = [k for k in range(1, k_max + 1) for _ in range(count // k_max)]
        rng.shuffle(plan)
        for k in plan:
            subset = sorted(rng.sample(candidates, k))
            schedules.append(_random_surjection(rng, T, subset))
    else:
        schedules = [[rng.choice(candidates) for _ in range(T)] for _ in range(count)]
    samples = [gen_dyncsl_sample(n, sk) for sk in schedules]
    labels = [s.label for s in samples]
    if stratified and count % (k_max * num_folds) == 0:
        folds = _assign_folds(labels, num_folds, rng)
    else:
        folds = [i % num_folds for i in range(count)]
    manifest = DatasetManifest(seed=seed, count=count, horizon=T, num_nodes=n,
                               candidates=list(candidates), stratified=stratified,
                               labels=labels, skips=[list(s) for s in schedules],
                               folds=folds, num_folds=num_folds)
    return samples, manifest


def write_dataset(samples: Sequence[DynCslSample], manifest: DatasetManifest, outdir) -> None:
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "manifest.json"), "w", encoding="utf-8") as fh:
        fh.write(manifest.to_json())
    for idx, s in enumerate(samples):
        write_graph(s.graph, os.path.join(outdir, f"sample_{idx}.json"))


def gen_foodweb() -> TemporalGraph:
    """Two disconnected predator/prey chains with identical two-step dynamics.

    Node order follows ``FOODWEB_NAMES``. Step 1 has the predator edges
    (Lynx->Hare, Orca->Penguin); step 2 adds prey->resource edges.
    """
    step1 = SnapshotGraph.from_edges(6, [(LYNX, HARE), (ORCA, PENGUIN)], directed=True)
    step2 = SnapshotGraph.from_edges(
        6, [(LYNX, HARE), (ORCA, PENGUIN), (HARE, PLANT), (PENGUIN, FISH)], directed=True)
    return aggregate([step1, step2])


def gen_random_temporal(seed: int, n: int, T: int, edge_prob: float,
                        attr_alphabet: Sequence = (1,), directed: bool = False) -> TemporalGraph:
    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidInput(f"edge probability {edge_prob} outside [0, 1]")
    if n < 1 or T < 1:
        raise InvalidInput("need n >= 1 and T >= 1")
    if not attr_alphabet:
        raise InvalidInput("empty attribute alphabet")
    rng = random.Random(seed)
    alphabet = list(attr_alphabet)
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    snaps = []
    for _ in range(T):
        node_attrs = [rng.choice(alphabet) for _ in range(n)]
        edges = {}
        for u, v in pairs:
            if rng.random() < edge_prob:
                a = rng.choice(alphabet)
                edges[(u, v)] = a
                if not directed:
                    edges[(v, u)] = a
        snaps.append(SnapshotGraph(n, directed, node_attrs, edges))
    return aggregate(snaps)


def random_corpus(seed: int, count: int, max_nodes: int = 12, max_horizon: int = 4,
                  max_alphabet: int = 3, directed: bool | None = None) -> list[TemporalGraph]:
    """Seeded mixed corpus of small random temporal graphs for property checks."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_nodes)
        T = rng.randint(1, max_horizon)
        k = rng.randint(1, max_alphabet)
        p = rng.choice([0.15, 0.3, 0.5, 0.7])
        d = rng.random() < 0.3 if directed is None else directed
        out.append(gen_random_temporal(rng.getrandbits(32), n, T, p, tuple(range(1, k + 1)), d))
    return out
