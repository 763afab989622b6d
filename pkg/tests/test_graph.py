# SPDX-License-Identifier: MIT
# tests/test_graph.py
from __future__ import annotations

import pytest

from cutcolor.errors import GraphError
from cutcolor.graph import (
    Forget,
    Graph,
    IntroduceEdge,
    IntroduceVertex,
    LinearLayout,
    NicePathDecomposition,
    cut_at,
    cut_sizes,
    cutwidth_of,
    cycle_graph,
    decomposition_order,
    graph_from_pairs,
    iter_cuts,
    layout_to_nice_decomposition,
    path_graph,
    pathwidth_of,
    pending_edge_counts,
    star_graph,
    strip_isolated,
    validate_decomposition,
)


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, ((1, 1),))
    with pytest.raises(GraphError):
        Graph(3, ((1, 4),))
    with pytest.raises(GraphError):
        Graph(3, ((1, 2), (2, 1)))


def test_graph_canonicalizes_edges(petersen):
    g = Graph(3, ((2, 1), (3, 2)))
    assert g.edges == ((1, 2), (2, 3))
    assert g.has_edge(2, 1)
    assert petersen.max_degree == 3
    assert petersen.m == 15


def test_cut_orients_edges_left_to_right():
    g = cycle_graph(4)
    layout = LinearLayout((2, 4, 1, 3))
    cut = cut_at(g, layout, 2)
    # positions: 2->1, 4->2, 1->3, 3->4 ; every edge crosses gap 2
    assert len(cut) == 4
    assert cut.left == (2, 4)
    assert cut.right == (1, 3)
    assert all(layout.position[u] <= 2 < layout.position[v] for u, v in cut.edges)
    assert cut.left_degrees == {2: 2, 4: 2}


def test_iter_cuts_matches_cut_at(petersen):
    layout = LinearLayout((3, 7, 1, 10, 5, 2, 9, 4, 6, 8))
    swept = list(iter_cuts(petersen, layout))
    assert len(swept) == petersen.n + 1
    for i, cut in enumerate(swept):
        direct = cut_at(petersen, layout, i)
        assert set(cut.edges) == set(direct.edges)
        assert cut.left == direct.left and cut.right == direct.right
    assert cut_sizes(petersen, layout) == [len(c) for c in swept]


def test_cutwidth_of_standard_families():
    assert cutwidth_of(path_graph(6), LinearLayout.identity(6)) == 1
    assert cutwidth_of(cycle_graph(6), LinearLayout.identity(6)) == 2
    assert cutwidth_of(star_graph(4), LinearLayout.identity(5)) == 4
    assert cutwidth_of(Graph(1), LinearLayout.identity(1)) == 0


def test_layout_check_rejects_non_permutation():
    with pytest.raises(GraphError):
        LinearLayout((1, 1, 2)).check(path_graph(3))
    with pytest.raises(GraphError):
        LinearLayout((1, 2)).check(path_graph(3))


def test_layout_to_nice_decomposition_is_valid(petersen):
    layout = LinearLayout.identity(10)
    npd = layout_to_nice_decomposition(petersen, layout)
    assert validate_decomposition(petersen, npd) == []
    assert decomposition_order(npd) == layout
    # bag never exceeds cutwidth + 1
    assert pathwidth_of(npd) <= cutwidth_of(petersen, layout)
    counts = pending_edge_counts(petersen, npd)
    assert counts[0] == 0 and counts[-1] == 0


def test_layout_to_nice_decomposition_refuses_isolated_vertices():
    g = graph_from_pairs([(1, 2)], n=3)
    with pytest.raises(GraphError, match="isolated"):
        layout_to_nice_decomposition(g, LinearLayout.identity(3))


def test_validate_decomposition_reports_violations():
    g = path_graph(3)
    npd = NicePathDecomposition(
        (
            IntroduceVertex(1),
            IntroduceVertex(2),
            Forget(1),
            IntroduceEdge(1, 2),
            Forget(2),
            IntroduceVertex(3),
        )
    )
    problems = validate_decomposition(g, npd)
    assert any("endpoint not in bag" in p for p in problems)
    assert any("never forgotten: 3" in p for p in problems)
    assert any("edge never introduced: 2 3" in p for p in problems)


def test_pathwidth_of_empty_decomposition_is_zero():
    assert pathwidth_of(NicePathDecomposition()) == 0


def test_strip_isolated_relabels_and_maps_back():
    g = graph_from_pairs([(2, 4), (4, 5)], n=6)
    st = strip_isolated(g)
    assert st.removed == (1, 3, 6)
    assert st.graph.n == 3 and st.graph.m == 2
    assert st.old_of_new == {1: 2, 2: 4, 3: 5}
    lay = st.layout(LinearLayout((6, 5, 1, 4, 3, 2)))
    assert lay.order == (3, 2, 1)
