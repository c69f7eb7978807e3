import itertools

import pytest
from hypothesis import given

from tgexpress.generators import gen_csl, gen_foodweb, gen_random_temporal
from tgexpress.oracle import (automorphisms, brute_force_iso, canonical_form, csl_iso,
                              node_orbits, verify_witness)
from tgexpress.tgraph import InvalidInput, SnapshotGraph, Unsupported, aggregate, apply_permutation
from tgexpress.wl import Partition

from .conftest import graphs_with_perm, temporal_graphs


def one_step(g):
    return aggregate([g])


def naive_iso(a, b):
    """Plain enumeration of all n! permutations."""
    if a.node_count != b.node_count:
        return False
    return any(apply_permutation(a, p) == b
               for p in itertools.permutations(range(a.node_count)))


@given(graphs_with_perm(max_nodes=7))
def test_iso_finds_valid_witness(case):
    tg, perm = case
    b = apply_permutation(tg, perm)
    w = brute_force_iso(tg, b)
    assert verify_witness(tg, b, w)


@given(temporal_graphs(max_nodes=5, max_horizon=2, directed=False),
       temporal_graphs(max_nodes=5, max_horizon=2, directed=False))
def test_iso_matches_naive_enumeration(a, b):
    if a.horizon != b.horizon:
        return
    assert brute_force_iso(a, b).isomorphic == naive_iso(a, b)


def test_witness_is_lexicographically_least():
    cyc = one_step(gen_csl(5, 1))
    w = brute_force_iso(cyc, cyc)
    assert w.permutation == (0, 1, 2, 3, 4)
    autos = automorphisms(cyc)
    assert len(autos) == 10  # dihedral group of order 10
    assert autos == sorted(autos)


def test_csl_7_2_vs_7_3_isomorphic():
    a, b = one_step(gen_csl(7, 2)), one_step(gen_csl(7, 3))
    w = brute_force_iso(a, b)
    assert verify_witness(a, b, w)


def test_temporal_alignment_needs_one_permutation():
    a = aggregate([gen_csl(7, 2), gen_csl(7, 2)])
    b = aggregate([gen_csl(7, 2), gen_csl(7, 3)])
    assert not brute_force_iso(a, b).isomorphic


def test_iso_limits_and_mismatch():
    big = one_step(SnapshotGraph.from_edges(10, []))
    with pytest.raises(Unsupported):
        brute_force_iso(big, big)
    assert brute_force_iso(big, big, node_limit=10).isomorphic
    small = one_step(SnapshotGraph.from_edges(3, []))
    four = one_step(SnapshotGraph.from_edges(4, []))
    assert not brute_force_iso(small, four).isomorphic
    with pytest.raises(InvalidInput):
        brute_force_iso(small, aggregate([SnapshotGraph.from_edges(3, [])] * 2))


def test_orbits_foodweb():
    assert node_orbits(gen_foodweb()) == Partition.from_classes([[0, 3], [1, 4], [2, 5]])


def test_orbits_simple():
    assert node_orbits(one_step(SnapshotGraph.from_edges(9, []))) == \
        Partition.from_classes([range(9)])
    path = one_step(SnapshotGraph.from_edges(3, [(0, 1), (1, 2)]))
    assert node_orbits(path) == Partition.from_classes([[0, 2], [1]])
    with pytest.raises(Unsupported):
        node_orbits(one_step(SnapshotGraph.from_edges(10, [])))


@given(temporal_graphs(max_nodes=6))
def test_orbits_match_full_automorphism_group(tg):
    autos = automorphisms(tg)
    classes = {i: {p[i] for p in autos} for i in range(tg.node_count)}
    assert node_orbits(tg) == Partition.from_classes({frozenset(c) for c in classes.values()})


@pytest.mark.parametrize("s1,s2", list(itertools.product(range(2, 6), repeat=2)))
def test_csl_iso_agrees_with_brute_force_n7(s1, s2):
    a, b = one_step(gen_csl(7, s1)), one_step(gen_csl(7, s2))
    assert csl_iso(7, s1, s2) == brute_force_iso(a, b).isomorphic


def test_csl_iso_n19():
    assert csl_iso(19, 4, 5)
    assert csl_iso(19, 3, 6)
    assert not csl_iso(19, 2, 3)
    # x -> 5x maps C_{19,4} onto C_{19,5}
    src = gen_csl(19, 4).edge_set()
    mapped = {tuple(sorted(((5 * u) % 19, (5 * v) % 19))) for u, v in src}
    assert mapped == gen_csl(19, 5).edge_set()
    # 2 vs 3: no multiplier maps {±1, ±2} onto {±1, ±3}
    target = {1, 18, 3, 16}
    assert not any({(a * x) % 19 for x in (1, 18, 2, 17)} == target for a in range(1, 19))


def test_csl_iso_small_prime_analogues():
    for n in (7, 11, 13):
        for s1, s2 in itertools.product(range(2, n - 1), repeat=2):
            if n <= 7:
                a, b = one_step(gen_csl(n, s1)), one_step(gen_csl(n, s2))
                assert csl_iso(n, s1, s2) == brute_force_iso(a, b).isomorphic
            else:
                src, dst = gen_csl(n, s1).edge_set(), gen_csl(n, s2).edge_set()
                by_multiplier = any(
                    {tuple(sorted(((m * u) % n, (m * v) % n))) for u, v in src} == dst
                    for m in range(1, n))
                assert csl_iso(n, s1, s2) == by_multiplier


def test_csl_iso_rejects():
    with pytest.raises(Unsupported):
        csl_iso(20, 2, 3)
    with pytest.raises(InvalidInput):
        csl_iso(19, 1, 3)


@given(graphs_with_perm(max_nodes=7))
def test_canonical_form_invariant(case):
    tg, perm = case
    assert canonical_form(tg) == canonical_form(apply_permutation(tg, perm))


def test_canonical_form_csl_7():
    assert canonical_form(one_step(gen_csl(7, 2))) == canonical_form(one_step(gen_csl(7, 3)))


def test_canonical_form_separates_random_pairs():
    graphs = [gen_random_temporal(s, 5, 1, 0.5) for s in range(40)]
    for a, b in itertools.combinations(graphs, 2):
        assert (canonical_form(a) == canonical_form(b)) == brute_force_iso(a, b).isomorphic


@given(temporal_graphs(max_nodes=5, max_horizon=2), temporal_graphs(max_nodes=5, max_horizon=2))
def test_canonical_form_consistent_with_iso(a, b):
    if a.horizon != b.horizon:
        return
    assert (canonical_form(a) == canonical_form(b)) == brute_force_iso(a, b).isomorphic


def test_canonical_form_edgeless_nine_nodes_fast():
    tg = one_step(SnapshotGraph.from_edges(9, []))
    assert canonical_form(tg) == canonical_form(tg)
