# SPDX-License-Identifier: MIT
# tests/test_layout.py
from __future__ import annotations

import itertools

import pytest

from cutcolor.errors import BudgetExceeded, GraphError
from cutcolor.graph import LinearLayout, cutwidth_of, cycle_graph, path_graph, star_graph
from cutcolor.layout import EXACT_MAX_VERTICES, cutwidth_lower_bound, find_layout


def _true_cutwidth(graph) -> int:
    return min(
        cutwidth_of(graph, LinearLayout(order))
        for order in itertools.permutations(graph.vertices)
    )


def test_greedy_layout_is_a_permutation(petersen):
    lay = find_layout(petersen, "greedy")
    lay.check(petersen)
    assert cutwidth_of(petersen, lay) >= cutwidth_lower_bound(petersen)


@pytest.mark.parametrize(
    "graph",
    [path_graph(5), cycle_graph(6), star_graph(5)],
    ids=["path5", "cycle6", "star5"],
)
def test_exact_layout_matches_permutation_minimum(graph):
    lay = find_layout(graph, "exact")
    assert cutwidth_of(graph, lay) == _true_cutwidth(graph)


def test_exact_layout_on_k4(k4):
    # K4 has cutwidth 4
    assert cutwidth_of(k4, find_layout(k4, "exact")) == 4


def test_lower_bound_is_half_max_degree():
    assert cutwidth_lower_bound(star_graph(5)) == 3
    assert cutwidth_lower_bound(cycle_graph(7)) == 1


def test_exact_refuses_large_graphs():
    with pytest.raises(BudgetExceeded):
        find_layout(path_graph(EXACT_MAX_VERTICES + 1), "exact")


def test_unknown_strategy():
    with pytest.raises(GraphError):
        find_layout(path_graph(3), "magic")  # type: ignore[arg-type]
