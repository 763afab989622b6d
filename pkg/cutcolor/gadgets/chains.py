# SPDX-License-Identifier: MIT
"""Chains of cliques: color-repeating paths of bounded degree.

In a t-chain of q-cliques every clique Z_k has a terminal z_k, and z_{k+1} is
joined to the q-1 non-terminals of Z_k. A proper q-coloring must give every
terminal the same color, while no vertex has degree above 2(q-1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, List, Tuple

from ..errors import GadgetError
from ..graph import Graph
from .builder import GraphBuilder

__all__ = ["CliqueChain", "add_clique_chain", "chain_of_cliques"]


@dataclass(frozen=True)
class CliqueChain:
    graph: Graph
    terminals: Tuple[int, ...]
    cliques: Tuple[Tuple[int, ...], ...]


def add_clique_chain(
    builder: GraphBuilder, name: Hashable, t: int, q: int, kind: str = "chain"
) -> List[List[int]]:
    """Add a t-chain of q-cliques; vertex ``(name, k, r)`` is member r of clique k.

    Returns the cliques in order, each as [terminal, non-terminal, ...].
    """
    if t < 1:
        raise GadgetError(f"chain length must be >= 1, got {t}")
    if q < 2:
        raise GadgetError(f"clique size must be >= 2, got {q}")
    cliques: List[List[int]] = []
    for k in range(1, t + 1):
        ids = [builder.add_vertex((name, k, r), kind) for r in range(q)]
        builder.add_clique(ids)
        if cliques:
            for w in cliques[-1][1:]:
                builder.add_edge(ids[0], w)
        cliques.append(ids)
    return cliques


def chain_of_cliques(t: int, q: int) -> CliqueChain:
    """Standalone chain; terminal z_k is vertex (k-1)*q + 1."""
    b = GraphBuilder()
    cliques = add_clique_chain(b, "Z", t, q)
    return CliqueChain(
        graph=b.build(),
        terminals=tuple(c[0] for c in cliques),
        cliques=tuple(tuple(c) for c in cliques),
    )
