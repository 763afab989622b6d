# SPDX-License-Identifier: MIT
"""Finding linear layouts: exact branch-and-bound over prefixes, or greedy.

Solvers never call this implicitly; the CLI only does so on explicit request.
"""
from __future__ import annotations

from typing import Dict, List, Literal, Optional

from .errors import BudgetExceeded, GraphError
from .graph import Graph, LinearLayout, cutwidth_of
from .util import current_layout_budget, get_logger

__all__ = ["EXACT_MAX_VERTICES", "cutwidth_lower_bound", "find_layout", "greedy_layout"]

logger = get_logger("layout")

EXACT_MAX_VERTICES = 20

Strategy = Literal["exact", "greedy"]


def cutwidth_lower_bound(graph: Graph) -> int:
    """ceil(max degree / 2): the gap on the busier side of a max-degree vertex."""
    return (graph.max_degree + 1) // 2


def _masks(graph: Graph) -> List[int]:
    nb = [0] * (graph.n + 1)
    for u, v in graph.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    return nb


def greedy_layout(graph: Graph) -> LinearLayout:
    """Append the vertex minimizing the next cut; ties go to the smallest id."""
    nb = _masks(graph)
    deg = [graph.degree(v) for v in range(graph.n + 1)]
    placed = 0
    cut = 0
    order: List[int] = []
    left = set(graph.vertices)
    while left:
        best_v, best_cut = 0, 0
        for v in sorted(left):
            c = cut + deg[v] - 2 * bin(nb[v] & placed).count("1")
            if best_v == 0 or c < best_cut:
                best_v, best_cut = v, c
        order.append(best_v)
        left.discard(best_v)
        placed |= 1 << best_v
        cut = best_cut
    return LinearLayout(tuple(order))


class _PrefixSearch:
    """Depth-first branch-and-bound; a prefix is identified by its vertex set."""

    def __init__(self, graph: Graph, budget: int) -> None:
        self.graph = graph
        self.nb = _masks(graph)
        self.deg = [graph.degree(v) for v in range(graph.n + 1)]
        self.full = sum(1 << v for v in graph.vertices)
        self.budget = budget
        self.nodes = 0
        self.memo: Dict[int, int] = {}
        self.lower = cutwidth_lower_bound(graph)
        seed = greedy_layout(graph)
        self.best = cutwidth_of(graph, seed)
        self.best_order: List[int] = list(seed.order)
        self.order: List[int] = []

    def run(self) -> LinearLayout:
        if self.best > self.lower:
            self._dfs(0, 0, 0)
        logger.debug(
            "exact layout: ctw=%d (lower bound %d) after %d nodes",
            self.best,
            self.lower,
            self.nodes,
        )
        return LinearLayout(tuple(self.best_order))

    def _dfs(self, placed: int, cut: int, worst: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded("exact layout search nodes", self.nodes, self.budget)
        if placed == self.full:
            if worst < self.best:
                self.best = worst
                self.best_order = list(self.order)
            return
        if self.memo.get(placed, self.best + 1) <= worst:
            return
        self.memo[placed] = worst
        steps = []
        for v in self.graph.vertices:
            if placed >> v & 1:
                continue
            nxt = placed | (1 << v)
            c = cut + self.deg[v] - 2 * bin(self.nb[v] & placed).count("1")
            gap = c if nxt != self.full else 0
            steps.append((max(worst, gap), c, v, nxt))
        steps.sort()
        for w, c, v, nxt in steps:
            if w >= self.best or self.best <= self.lower:
                break
            self.order.append(v)
            self._dfs(nxt, c, w)
            self.order.pop()


def find_layout(
    graph: Graph, strategy: Strategy = "greedy", budget: Optional[int] = None
) -> LinearLayout:
    """A valid layout for *graph*.

    ``exact`` minimizes cutwidth and is refused above EXACT_MAX_VERTICES vertices
    or once the search visits more than *budget* prefixes.
    """
    if strategy == "greedy":
        return greedy_layout(graph)
    if strategy != "exact":
        raise GraphError(f"unknown layout strategy: {strategy!r}")
    if graph.n > EXACT_MAX_VERTICES:
        raise BudgetExceeded("exact layout vertex count", graph.n, EXACT_MAX_VERTICES)
    return _PrefixSearch(graph, budget or current_layout_budget()).run()
