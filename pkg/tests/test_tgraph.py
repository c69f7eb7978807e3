import json

import pytest
from hypothesis import given

from tgexpress.generators import gen_csl, gen_dyncsl_sample
from tgexpress.oracle import brute_force_iso, verify_witness
from tgexpress.tgraph import (NULL, InvalidInput, SnapshotGraph, TemporalGraph, aggregate,
                              apply_permutation, compose, disjoint_union, dumps, inverse, loads,
                              slice_at, snapshots, validate)

from .conftest import graphs_with_perm, snapshot_seqs, temporal_graphs


def triangle():
    return SnapshotGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def test_aggregate_constant_dynamics():
    tg = aggregate([triangle(), triangle()])
    assert tg.horizon == 2
    assert tg.edges() == [(0, 1), (0, 2), (1, 2)]
    assert all(seq == (1, 1) for seq in tg.edge_seqs.values())


def test_aggregate_pads_absent_edges_with_null():
    g1 = SnapshotGraph.from_edges(3, [(0, 1)])
    g2 = SnapshotGraph.from_edges(3, [(1, 2)])
    tg = aggregate([g1, g2])
    assert tg.edge_seqs[(0, 1)] == (1, NULL)
    assert tg.edge_seqs[(1, 2)] == (NULL, 1)
    assert (0, 2) not in tg.edge_seqs
    assert slice_at(tg, 1) == g1
    assert slice_at(tg, 2).edges() == [(1, 2)]


def test_aggregate_dyncsl_cycle_edges_always_present():
    skips = [2, 3, 4, 5, 6, 2, 3, 4]
    tg = gen_dyncsl_sample(19, skips).graph
    # oracle: cycle edges enumerated directly, never through the generator
    cycle = {(min(i, (i + 1) % 19), max(i, (i + 1) % 19)) for i in range(19)}
    for e in cycle:
        assert tg.edge_seqs[e] == (1,) * 8
    for t, s in enumerate(skips, start=1):
        expected = cycle | {(min(i, (i + s) % 19), max(i, (i + s) % 19)) for i in range(19)}
        assert slice_at(tg, t).edge_set() == expected


@pytest.mark.parametrize("bad", [
    [],
    [SnapshotGraph.from_edges(3, []), SnapshotGraph.from_edges(4, [])],
])
def test_aggregate_rejects(bad):
    with pytest.raises(InvalidInput):
        aggregate(bad)


def test_slice_out_of_range():
    tg = aggregate([triangle()])
    with pytest.raises(InvalidInput):
        slice_at(tg, 0)
    with pytest.raises(InvalidInput):
        slice_at(tg, 2)


@given(snapshot_seqs())
def test_round_trip(snaps):
    tg = aggregate(snaps)
    assert snapshots(tg) == snaps
    assert all(any(a is not None for a in s) for s in tg.edge_seqs.values())
    union = set().union(*(g.edge_attrs for g in snaps))
    assert set(tg.edge_seqs) == union


@given(graphs_with_perm())
def test_permutation_inverse_law(case):
    tg, perm = case
    assert apply_permutation(apply_permutation(tg, perm), inverse(perm)) == tg
    assert apply_permutation(tg, list(range(tg.node_count))) == tg


@given(temporal_graphs(max_nodes=6))
def test_permutation_group_action(tg):
    n = tg.node_count
    p1 = list(range(n))[::-1]
    p2 = list(range(1, n)) + [0]
    lhs = apply_permutation(apply_permutation(tg, p1), p2)
    assert lhs == apply_permutation(tg, compose(p2, p1))


@given(graphs_with_perm(max_nodes=6))
def test_permuted_graph_is_isomorphic(case):
    tg, perm = case
    b = apply_permutation(tg, perm)
    w = brute_force_iso(tg, b)
    assert w.isomorphic and verify_witness(tg, b, w)


def test_permutation_length_mismatch():
    with pytest.raises(InvalidInput):
        apply_permutation(aggregate([triangle()]), [0, 1])


def test_disjoint_union_counts():
    one = aggregate([SnapshotGraph.from_edges(1, [])])
    u, ma, mb = disjoint_union(one, one)
    assert u.node_count == 2 and not u.edge_seqs
    assert ma == (0,) and mb == (1,)
    a = aggregate([gen_csl(7, 2)])
    b = aggregate([triangle()])
    u, _, mb = disjoint_union(a, b)
    assert u.node_count == 10
    assert len(u.edges()) == len(a.edges()) + len(b.edges())
    assert mb == (7, 8, 9)


def test_disjoint_union_self_swap_is_automorphism():
    a = aggregate([SnapshotGraph.from_edges(3, [(0, 1)]), triangle()])
    u, ma, mb = disjoint_union(a, a)
    swap = list(mb) + list(ma)
    assert apply_permutation(u, swap) == u
    assert brute_force_iso(u, apply_permutation(u, swap)).isomorphic


def test_disjoint_union_horizon_mismatch():
    with pytest.raises(InvalidInput):
        disjoint_union(aggregate([triangle()]), aggregate([triangle(), triangle()]))


def test_validate_clean():
    assert validate(aggregate([triangle(), triangle()])) == []


def test_validate_wrong_length():
    tg = TemporalGraph(2, 2, True, [(1, 1), (1, 1)], {(0, 1): (1,)})
    problems = validate(tg)
    assert len(problems) == 1
    assert "edge (0,1)" in str(problems[0])


def test_validate_asymmetric_undirected():
    tg = TemporalGraph(2, 1, False, [(1,), (1,)], {(0, 1): (1,), (1, 0): (2,)})
    assert any("(0,1)" in str(p) and "asymmetric" in str(p) for p in validate(tg))


def test_validate_self_loop_and_bool_symbol():
    tg = TemporalGraph(2, 1, True, [(True,), (1,)], {(1, 1): (1,)})
    msgs = [str(p) for p in validate(tg)]
    assert any("self-loop" in m for m in msgs)
    assert any("node 0" in m for m in msgs)


@given(temporal_graphs())
def test_json_round_trip(tg):
    text = dumps(tg)
    assert loads(text) == tg
    doc = json.loads(text)
    pairs = [(e["u"], e["v"]) for e in doc["edges"]]
    assert pairs == sorted(pairs)


def test_json_reader_accepts_any_order_and_tuples():
    doc = {"version": 1, "directed": True, "num_nodes": 2, "horizon": 2,
           "node_seqs": [[[1, "x"], None], [1, 1]],
           "edges": [{"u": 1, "v": 0, "seq": [None, 2]}, {"u": 0, "v": 1, "seq": [1, None]}]}
    tg = loads(json.dumps(doc))
    assert tg.node_seqs[0] == ((1, "x"), None)
    assert tg.edges() == [(0, 1), (1, 0)]


@pytest.mark.parametrize("text", [
    "{not json",
    '{"version": 2}',
    '{"version":1,"directed":false,"num_nodes":2,"horizon":1,"node_seqs":[[1]],"edges":[]}',
    '{"version":1,"directed":false,"num_nodes":2,"horizon":1,"node_seqs":[[1],[1.5]],"edges":[]}',
])
def test_json_rejects_malformed(text):
    with pytest.raises(InvalidInput):
        loads(text)
