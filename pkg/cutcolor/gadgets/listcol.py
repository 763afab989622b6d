# SPDX-License-Identifier: MIT
"""CNF -> List-3-Coloring.

Variable x_i becomes a path T_{i,1} F_{i,1} ... T_{i,m} F_{i,m} with lists
{2,3}: a proper list coloring colors every T_{i,.} alike, and color 2 on T
means "true". Clause C_j becomes a path a_{j,1} b_{j,1} ... whose lists force
some a-vertex to take color 3, which is only possible next to a literal
vertex colored 2.
"""
from __future__ import annotations

from typing import Dict, FrozenSet, Sequence

from ..errors import GadgetError
from ..util import get_logger
from .builder import GraphBuilder, ListColoringInstance
from .cnf import CnfFormula

__all__ = ["cnf_to_list3col", "literal_rows", "list_coloring_from_assignment"]

logger = get_logger("gadgets")

FULL = frozenset({1, 2, 3})


def literal_rows(formula: CnfFormula, j: int) -> tuple[int, ...]:
    """Variable index of each literal of clause j (1-based), sorted ascending."""
    return tuple(abs(lit) for lit in formula.sorted_clause(j - 1))


def cnf_to_list3col(formula: CnfFormula) -> ListColoringInstance:
    n, m = formula.n, formula.m
    b = GraphBuilder()
    lists: Dict[int, FrozenSet[int]] = {}

    for i in range(1, n + 1):
        prev = None
        for j in range(1, m + 1):
            for side in ("T", "F"):
                v = b.add_vertex((side, i, j), "variable")
                lists[v] = frozenset({2, 3})
                if prev is not None:
                    b.add_edge(prev, v)
                prev = v

    for j in range(1, m + 1):
        clause = formula.sorted_clause(j - 1)
        size = len(clause)
        prev = None
        for k, lit in enumerate(clause, start=1):
            a = b.add_vertex(("a", j, k), "clause")
            bb = b.add_vertex(("b", j, k), "clause")
            lists[a] = frozenset({2, 3}) if k == 1 else FULL
            lists[bb] = frozenset({2}) if k == size else frozenset({1, 2})
            if prev is not None:
                b.add_edge(prev, a)
            b.add_edge(a, bb)
            prev = bb
            special = b.id(("T" if lit > 0 else "F", abs(lit), j))
            b.add_edge(a, special)

    graph = b.build()
    logger.debug("list3col: n=%d m=%d -> %d vertices, %d edges", n, m, graph.n, graph.m)
    return ListColoringInstance(graph=graph, lists=lists, labels=b.labels, q=3, formula=formula)


def list_coloring_from_assignment(
    inst: ListColoringInstance, assignment: Sequence[bool]
) -> Dict[int, int]:
    """The list coloring induced by a satisfying assignment.

    Clause path: before the first true literal a=2, b=1; the a-vertex of that
    literal takes 3; after it a=1; from it on b=2.
    """
    formula = inst.formula
    if formula is None:
        raise GadgetError("instance carries no formula")
    ids = {label: v for v, label in inst.labels.items()}
    out: Dict[int, int] = {}
    for i in range(1, formula.n + 1):
        t, f = (2, 3) if assignment[i - 1] else (3, 2)
        for j in range(1, formula.m + 1):
            out[ids[("T", i, j)]] = t
            out[ids[("F", i, j)]] = f
    for j in range(1, formula.m + 1):
        clause = formula.sorted_clause(j - 1)
        first = next(
            (k for k, lit in enumerate(clause, start=1) if (lit > 0) == assignment[abs(lit) - 1]),
            None,
        )
        if first is None:
            raise GadgetError(f"assignment falsifies clause {j}")
        for k in range(1, len(clause) + 1):
            out[ids[("a", j, k)]] = 2 if k < first else 3 if k == first else 1
            out[ids[("b", j, k)]] = 1 if k < first else 2
    return out
