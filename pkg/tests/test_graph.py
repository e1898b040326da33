"""Core digraph operations: closure, reduction, condensation, verification."""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tcspan.errors import NotADag
from tcspan.graph import (
    Digraph,
    all_pairs_distances,
    condense_scc,
    line_digraph,
    transitive_closure,
    transitive_closure_graph,
    transitive_reduction,
    verify_spanner,
)


def reach_pairs(G: Digraph) -> set[tuple[int, int]]:
    R = transitive_closure(G)
    return {(u, v) for u in range(G.n) for v in range(G.n) if R.has(u, v)}


def brute_reach(G: Digraph) -> set[tuple[int, int]]:
    """Independent oracle: BFS from every vertex."""
    out = G.out_adj
    pairs = set()
    for s in range(G.n):
        seen = set()
        stack = list(out[s])
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(out[u])
        pairs.update((s, v) for v in seen)
    return pairs


# -- transitive closure ------------------------------------------------------


def test_closure_line3():
    G = line_digraph(3)
    assert reach_pairs(G) == {(0, 1), (1, 2), (0, 2)}


def test_closure_empty_graph():
    G = Digraph(4, [])
    assert reach_pairs(G) == set()


def test_closure_directed_3cycle():
    G = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert reach_pairs(G) == {(u, v) for u in range(3) for v in range(3)}


def test_closure_diagonal_only_on_cycles():
    G = Digraph(4, [(0, 1), (1, 2), (2, 1), (2, 3)])
    R = transitive_closure(G)
    assert not R.has(0, 0) and not R.has(3, 3)
    assert R.has(1, 1) and R.has(2, 2)


dag_strategy = st.integers(1, 6).flatmap(
    lambda n: st.builds(
        lambda picks: Digraph(
            n, [e for e, on in zip(itertools.combinations(range(n), 2), picks) if on]
        ),
        st.lists(
            st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2
        ),
    )
)

digraph_strategy = st.integers(1, 6).flatmap(
    lambda n: st.builds(
        lambda picks: Digraph(
            n,
            [
                e
                for e, on in zip(
                    itertools.permutations(range(n), 2), picks
                )
                if on
            ],
        ),
        st.lists(st.booleans(), min_size=n * (n - 1), max_size=n * (n - 1)),
    )
)


@given(digraph_strategy)
@settings(max_examples=150, deadline=None)
def test_closure_matches_bfs_oracle(G):
    assert reach_pairs(G) == brute_reach(G)


@given(digraph_strategy)
@settings(max_examples=100, deadline=None)
def test_reach_matrix_transitive(G):
    assert transitive_closure(G).is_transitive()


# -- transitive reduction ----------------------------------------------------


def test_reduction_drops_redundant_edge():
    G = Digraph(3, [(0, 1), (1, 2), (0, 2)])
    assert transitive_reduction(G).edges == ((0, 1), (1, 2))


def test_reduction_line_unchanged():
    G = line_digraph(7)
    assert transitive_reduction(G).edges == G.edges


def test_reduction_rejects_cycle():
    with pytest.raises(NotADag):
        transitive_reduction(Digraph(3, [(0, 1), (1, 2), (2, 0)]))


def all_dags_upto(nmax: int):
    """Every DAG on <= nmax vertices in topological labeling (not deduped)."""
    for n in range(1, nmax + 1):
        slots = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(slots)):
            yield Digraph(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])


def test_reduction_roundtrip_exhaustive_small():
    # TC(TR(G)) == TC(G) for every DAG on <= 4 vertices (topologically labeled).
    for G in all_dags_upto(4):
        assert reach_pairs(transitive_reduction(G)) == reach_pairs(G)


@given(dag_strategy)
@settings(max_examples=150, deadline=None)
def test_reduction_roundtrip_random(G):
    assert reach_pairs(transitive_reduction(G)) == reach_pairs(G)


@given(dag_strategy)
@settings(max_examples=60, deadline=None)
def test_reduction_minimal(G):
    """Deleting any TR edge changes the closure."""
    T = transitive_reduction(G)
    full = reach_pairs(T)
    for e in T.edges:
        smaller = Digraph(G.n, [f for f in T.edges if f != e])
        assert reach_pairs(smaller) != full


# -- SCC condensation --------------------------------------------------------


def test_condense_3cycle():
    C, comp = condense_scc(Digraph(3, [(0, 1), (1, 2), (2, 0)]))
    assert C.n == 1 and C.m == 0
    assert comp == [0, 0, 0]


def test_condense_dag_is_isomorphic_copy():
    G = Digraph(4, [(0, 1), (1, 2), (0, 3)])
    C, comp = condense_scc(G)
    assert C.n == 4 and C.m == 3
    relabeled = {(comp[u], comp[v]) for u, v in G.edges}
    assert relabeled == set(C.edges)


def test_condense_two_2cycles_joined():
    # Oracle: Tarjan by hand; two 2-cycles joined by one edge condense to
    # two vertices and one edge.
    G = Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)])
    C, comp = condense_scc(G)
    assert C.n == 2 and C.m == 1
    assert comp[0] == comp[1] and comp[2] == comp[3] and comp[0] != comp[2]
    assert C.edges == ((comp[0], comp[2]),)


@given(digraph_strategy)
@settings(max_examples=100, deadline=None)
def test_condensation_is_dag_and_total(G):
    C, comp = condense_scc(G)
    assert C.is_dag
    assert len(comp) == G.n
    assert all(0 <= c < C.n for c in comp)


# -- verify_spanner ----------------------------------------------------------


def test_verify_tr_of_line4():
    G = line_digraph(4)
    T = transitive_reduction(G)
    assert verify_spanner(G, T.edges, 3).valid
    bad = verify_spanner(G, T.edges, 2)
    assert not bad.valid
    assert bad.kind == "distance" and bad.pair == (0, 3)


def test_verify_foreign_edge():
    G = line_digraph(4)
    res = verify_spanner(G, [(0, 1), (1, 2), (2, 3), (3, 0)], 3)
    assert not res.valid
    assert res.kind == "foreign" and res.pair == (3, 0)


def test_verify_tc_is_1_spanner():
    for G in [line_digraph(5), Digraph(4, [(0, 1), (2, 1), (1, 3)])]:
        assert verify_spanner(G, transitive_closure_graph(G).edges, 1).valid


def test_verify_cycle_pairs_excluded():
    # A 3-cycle spans itself for any k >= 2 (self-pairs impose nothing,
    # distinct pairs sit at distance <= 2).
    G = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert verify_spanner(G, G.edges, 2).valid
    assert not verify_spanner(G, G.edges, 1).valid


@given(digraph_strategy)
@settings(max_examples=80, deadline=None)
def test_verify_tc_always_valid_k1(G):
    assert verify_spanner(G, transitive_closure_graph(G).edges, 1).valid


def test_verify_blocked_path_matches_small():
    # Force multi-block verification by patching the block width.
    import tcspan.graph as gmod

    G = Digraph(10, [(i, i + 1) for i in range(9)] + [(0, 5), (3, 9)])
    H = transitive_reduction(G).edges
    expected = verify_spanner(G, H, 4)
    old = gmod._BLOCK_COLS
    try:
        gmod._BLOCK_COLS = 3
        got = verify_spanner(G, H, 4)
    finally:
        gmod._BLOCK_COLS = old
    assert (got.valid, got.kind, got.pair) == (
        expected.valid,
        expected.kind,
        expected.pair,
    )


# -- distances ---------------------------------------------------------------


def test_all_pairs_distances_line():
    d = all_pairs_distances(line_digraph(3))
    assert d[0, 2] == 2 and d[0, 1] == 1
    assert d[2, 0] == math.inf


def test_all_pairs_distances_tc():
    d = all_pairs_distances(transitive_closure_graph(line_digraph(3)))
    assert d[0, 2] == 1


def test_all_pairs_distances_disconnected():
    d = all_pairs_distances(Digraph(3, [(0, 1)]))
    assert d[0, 2] == math.inf and d[1, 0] == math.inf
    assert np.all(np.diag(d) == 0)
