# SPDX-License-Identifier: MIT
"""Planarization of 3-Coloring instances and the CNF -> planar 3-Col pipeline.

Every crossing of the reference drawing is replaced by a copy of H_col:

1. each crossed edge {x, y} (x the smaller id) is subdivided between
   consecutive crossings, the piece next to x being merged into x itself;
2. the crossing between pieces (u, u') of one edge and (v, v') of the other
   becomes an H_col copy with those four terminals;
3. the last piece keeps the original edge to y.

H_col forces f(u) = f(u') and f(v) = f(v'), so every piece of an edge carries
the color of x and the remaining edge to y keeps the original constraint.
Every piece sits at the crossing it leaves and each H_col copy at its
crossing, so both land in that crossing's cell. The emitted layout is the
column-major order over the enlarged cells; inside a cell it sweeps left to
right and keeps every H_col copy contiguous.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from ..errors import DrawingError
from ..graph import cutwidth_of
from ..util import get_logger
from .builder import GadgetInstance, GraphBuilder
from .cnf import CnfFormula
from .hcol import HCOL_EDGES, HCOL_INTERNAL, HCOL_SWEEP, HCOL_TERMINALS, hcol_extension
from .listcol import cnf_to_list3col
from .plain import CellDrawing, Crossing, Point, cell_of_point, find_crossings, list3col_to_3col

__all__ = ["planarize_3col", "cnf_to_planar3col", "lift_to_planar"]

logger = get_logger("gadgets")

Edge = Tuple[int, int]


def _check_discipline(crossings: List[Crossing], drawing: CellDrawing) -> None:
    """Edges joining two columns below the first row must stay uncrossed."""
    for cr in crossings:
        for e in (cr.first, cr.second):
            (iu, ju), (iv, jv) = drawing.cells[e[0]], drawing.cells[e[1]]
            if ju != jv and min(iu, iv) > 1:
                raise DrawingError(f"inter-column edge {e} in rows {iu},{iv} is crossed by {cr}")


def planarize_3col(inst: GadgetInstance) -> GadgetInstance:
    drawing = inst.drawing
    if not isinstance(drawing, CellDrawing) or not drawing.positions:
        raise DrawingError("instance carries no reference drawing")
    src = inst.graph
    pos = drawing.positions
    crossings = find_crossings(src, pos)
    _check_discipline(crossings, drawing)

    along: Dict[Edge, List[Tuple[Fraction, int]]] = defaultdict(list)
    for idx, cr in enumerate(crossings):
        along[cr.first].append((cr.t_first, idx))
        along[cr.second].append((cr.t_second, idx))

    b = GraphBuilder()
    for v in src.vertices:
        b.add_vertex(inst.labels.get(v, ("v", v)), inst.provenance.get(v, "base"))
    positions: Dict[int, Point] = dict(pos)
    ranks: Dict[int, int] = {}

    pieces: Dict[Edge, List[int]] = {}
    rank: Dict[Tuple[Edge, int], int] = {}
    for e in src.edges:
        hits = sorted(along.get(e, ()))
        if not hits:
            b.add_edge(*e)
            continue
        x, y = e
        chain = [x]
        for t, (_, idx) in enumerate(hits, start=1):
            # piece t leaves crossing t; it sits there, after that copy's internals
            w = b.add_vertex(("w", x, y, t), "subdivision")
            positions[w] = crossings[idx].point
            ranks[w] = len(HCOL_SWEEP) + 1
            chain.append(w)
        b.add_edge(chain[-1], y)
        pieces[e] = chain
        for t, (_, idx) in enumerate(hits, start=1):
            rank[(e, idx)] = t

    for idx, cr in enumerate(crossings):
        t1, t2 = rank[(cr.first, idx)], rank[(cr.second, idx)]
        p1, p2 = pieces[cr.first], pieces[cr.second]
        terminal = {"u": p1[t1 - 1], "u'": p1[t1], "v": p2[t2 - 1], "v'": p2[t2]}
        local = {HCOL_TERMINALS[name]: vid for name, vid in terminal.items()}
        for h in HCOL_INTERNAL:
            w = b.add_vertex(("H", cr.first, cr.second, h), "hcol")
            positions[w] = cr.point
            ranks[w] = HCOL_SWEEP.index(h) + 1
            local[h] = w
        for h1, h2 in HCOL_EDGES:
            b.add_edge(local[h1], local[h2])

    graph = b.build()
    n, m = drawing.n, drawing.m
    cells = {v: cell_of_point(x, y, n, m) for v, (x, y) in positions.items()}
    planar = CellDrawing(n=n, m=m, cells=cells, positions=positions, ranks=ranks)
    layout = planar.layout()
    ctw = cutwidth_of(graph, layout)
    source_ctw = inst.params.get("cutwidth")
    if source_ctw is None and inst.layout is not None:
        source_ctw = cutwidth_of(src, inst.layout)
    logger.debug(
        "planar3col: %d crossings -> %d vertices, %d edges, ctw=%d (source %s)",
        len(crossings), graph.n, graph.m, ctw, source_ctw,
    )  # fmt: skip
    params = dict(inst.params)
    params.update(
        {
            "crossings": len(crossings),
            "hcol_copies": len(crossings),
            "source_vertices": src.n,
            "source_cutwidth": source_ctw,
            "cutwidth": ctw,
            "excess": ctw - n,
        }
    )
    return GadgetInstance(
        family="planar3col",
        graph=graph,
        q=3,
        layout=layout,
        provenance=b.kinds,
        labels=b.labels,
        formula=inst.formula,
        params=params,
        drawing=planar,
    )


def cnf_to_planar3col(formula: CnfFormula) -> GadgetInstance:
    """CNF -> List-3-Col -> 3-Col -> planar 3-Col, with the column-major layout."""
    return planarize_3col(list3col_to_3col(cnf_to_list3col(formula)))


def lift_to_planar(inst: GadgetInstance, coloring: Mapping[int, int]) -> Dict[int, int]:
    """Extend a 3-coloring of the unplanarized graph to ``inst``.

    Subdivision vertices copy the color of their edge's smaller endpoint and
    each H_col copy takes the stored extension of its boundary colors.
    """
    out: Dict[int, int] = {}
    for v, label in inst.labels.items():
        tag = label[0] if isinstance(label, tuple) else None
        if tag == "w":
            out[v] = coloring[label[1]]
        elif tag == "H":
            _, first, second, h = label
            out[v] = hcol_extension(coloring[first[0]], coloring[second[0]])[h]
        else:
            out[v] = coloring[v]
    return out
