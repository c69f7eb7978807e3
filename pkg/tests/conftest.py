import hypothesis.strategies as st
from hypothesis import settings

from tgexpress.tgraph import SnapshotGraph, aggregate

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def snapshot_seqs(draw, max_nodes=7, max_horizon=4, directed=None, alphabet=(1, 2, "a")):
    n = draw(st.integers(1, max_nodes))
    T = draw(st.integers(1, max_horizon))
    d = draw(st.booleans()) if directed is None else directed
    symbols = st.sampled_from(alphabet)
    node_symbols = st.one_of(symbols, st.none())
    if d:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    snaps = []
    for _ in range(T):
        attrs = draw(st.lists(node_symbols, min_size=n, max_size=n))
        present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        edges = {}
        for (u, v), on in zip(pairs, present):
            if on:
                a = draw(symbols)
                edges[(u, v)] = a
                if not d:
                    edges[(v, u)] = a
        snaps.append(SnapshotGraph(n, d, attrs, edges))
    return snaps


@st.composite
def temporal_graphs(draw, **kw):
    return aggregate(draw(snapshot_seqs(**kw)))


@st.composite
def graphs_with_perm(draw, **kw):
    tg = draw(temporal_graphs(**kw))
    perm = draw(st.permutations(list(range(tg.node_count))))
    return tg, perm


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[key])
