# SPDX-License-Identifier: MIT
"""The 13-vertex planar crossover gadget for 3-coloring.

An octagon u q0 v q1 u' q2 v' q3 wraps a 4-wheel p0..p3 around a center.
Every proper 3-coloring has f(u) = f(u') and f(v) = f(v'), and each of the
nine boundary colorings with those equalities extends to the whole gadget.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from ..errors import GadgetError
from ..graph import Graph
from ..oracle import find_proper_coloring

__all__ = [
    "HCol",
    "HCOL_EDGES",
    "HCOL_TERMINALS",
    "HCOL_INTERNAL",
    "HCOL_SWEEP",
    "build_hcol",
    "hcol_extension",
]

# u=1 q0=2 v=3 q1=4 u'=5 q2=6 v'=7 q3=8 p0..p3=9..12 center=13
HCOL_EDGES: Tuple[Tuple[int, int], ...] = (
    # outer octagon
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (1, 8),
    # terminals to the wheel rim
    (1, 9), (3, 10), (5, 11), (7, 12),
    (2, 9), (4, 10), (6, 11), (8, 12),
    # rim
    (9, 10), (10, 11), (11, 12), (9, 12),
    # spokes
    (9, 13), (10, 13), (11, 13), (12, 13),
)  # fmt: skip

HCOL_TERMINALS: Dict[str, int] = {"u": 1, "v": 3, "u'": 5, "v'": 7}
HCOL_INTERNAL: Tuple[int, ...] = (2, 4, 6, 8, 9, 10, 11, 12, 13)
# internal vertices from the u, v side to the u', v' side; at most 7 gadget
# edges are open at any point of this order
HCOL_SWEEP: Tuple[int, ...] = (2, 9, 10, 4, 13, 12, 8, 11, 6)


@dataclass(frozen=True)
class HCol:
    graph: Graph
    terminals: Dict[str, int]


def build_hcol() -> HCol:
    return HCol(Graph(13, HCOL_EDGES), dict(HCOL_TERMINALS))


@lru_cache(maxsize=None)
def hcol_extension(color_u: int, color_v: int) -> Dict[int, int]:
    """A proper 3-coloring of H_col with u, u' colored *color_u* and v, v' *color_v*."""
    lists = {w: {1, 2, 3} for w in range(1, 14)}
    for name, color in (("u", color_u), ("u'", color_u), ("v", color_v), ("v'", color_v)):
        lists[HCOL_TERMINALS[name]] = {color}
    found = find_proper_coloring(Graph(13, HCOL_EDGES), 3, lists)
    if found is None:
        raise GadgetError(f"H_col boundary ({color_u}, {color_v}) does not extend")
    return found
