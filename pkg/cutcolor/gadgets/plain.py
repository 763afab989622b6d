# SPDX-License-Identifier: MIT
"""List-3-Coloring -> plain 3-Coloring, with a reference drawing and cells.

Three chains of 2nm triangles carry the colors 1, 2, 3; a palette triangle on
their first terminals names the colors, and every vertex of the list instance
is joined to a terminal of each chain whose color its list excludes.

The drawing winds each chain down and back up every column, one triangle per
variable line and direction, and is kept as exact integer coordinates so that
cells and crossings can be read off without floating point.

Public API:
    CellDrawing, cell_of_point, column_major_layout, chain_slot,
    attachment_slot, list3col_to_3col, lift_list_coloring
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

import numpy as np

from ..errors import DrawingError, GadgetError
from ..graph import Graph, LinearLayout, cutwidth_of
from ..util import get_logger, make_rng
from .builder import GadgetInstance, GraphBuilder, Label, ListColoringInstance
from .chains import add_clique_chain
from .cnf import CnfFormula
from .listcol import literal_rows

__all__ = [
    "Cell",
    "Point",
    "CellDrawing",
    "UNIT",
    "cell_of_point",
    "column_major_layout",
    "chain_slot",
    "attachment_slot",
    "Crossing",
    "find_crossings",
    "crossing_lists",
    "list3col_to_3col",
    "reference_positions",
    "lift_list_coloring",
]

logger = get_logger("gadgets")

Number = Union[int, Fraction]
Point = Tuple[Number, Number]
Cell = Tuple[int, int]  # (row i, column j)
Edge = Tuple[int, int]

COLORS = (1, 2, 3)

# ----------- geometry ----------- #
SCALE = 100  # integer coordinates per design unit
PITCH = 100  # design units between columns and between variable lines
UNIT = SCALE * PITCH
JITTER = 3
DRAWING_SEED = 0x3C01

F_X = 80
CLAUSE_X = 40
A_RISE, B_RISE = 60, 50
DOWN_X = {1: 12, 2: 22, 3: 32}
UP_X = {1: 68, 2: 58, 3: 48}
# terminals on the first and last line are pulled apart so the turnaround
# connectors of the three chains nest instead of crossing
TOP_RISE = {1: 20, 2: 30, 3: 45}
BOTTOM_DROP = {1: 45, 2: 30, 3: 20}
TRI_HALF = 3
TRI_DY = 10


def cell_of_point(x: Number, y: Number, n: int, m: int) -> Cell:
    """Cell of a point: column by x, row by the variable lines above it.

    Points on variable line i belong to A_{i,j}, the cell above the line.
    """
    col = math.floor(Fraction(x) / UNIT) + 1
    col = min(max(col, 1), m)
    if y >= -UNIT:
        return 1, col
    row = math.ceil(Fraction(-y) / UNIT)
    return min(row, n + 1), col


def column_major_layout(
    cells: Mapping[int, Cell],
    positions: Optional[Mapping[int, Point]] = None,
    ranks: Optional[Mapping[int, int]] = None,
) -> LinearLayout:
    """Columns left to right, cells top to bottom.

    Inside a cell the vertices are swept left to right by position (top first
    on equal x); vertices sharing a point go by rank, then id. Without
    positions the order inside a cell is by id.
    """
    pos = positions or {}
    rank = ranks or {}

    def key(v: int) -> Tuple[int, int, Number, Number, int, int]:
        x, y = pos.get(v, (0, 0))
        return cells[v][1], cells[v][0], x, -y, rank.get(v, 0), v

    return LinearLayout(tuple(sorted(cells, key=key)))


@dataclass(frozen=True)
class CellDrawing:
    """Cells A_{i,j} (row i in [1, n+1] from the top, column j in [1, m]).

    ``positions`` is the exact integer embedding the cells were read from
    (subdivision and gadget vertices of a planarized drawing carry rational
    coordinates). ``crossings`` maps each crossed edge of the source graph to
    the edges crossing it, ordered from its smaller endpoint. ``ranks`` orders
    vertices that share a point in the layout.
    """

    n: int
    m: int
    cells: Mapping[int, Cell]
    positions: Mapping[int, Point] = field(default_factory=dict)
    crossings: Mapping[Edge, Tuple[Edge, ...]] = field(default_factory=dict)
    ranks: Mapping[int, int] = field(default_factory=dict)

    def cell(self, v: int) -> Cell:
        return self.cells[v]

    def cell_of_point(self, x: Number, y: Number) -> Cell:
        return cell_of_point(x, y, self.n, self.m)

    @property
    def crossing_count(self) -> int:
        return sum(len(c) for c in self.crossings.values()) // 2

    def edge_kind(self, u: int, v: int) -> str:
        """``same``, ``vertical`` or ``horizontal`` neighbor cells, else ``far``."""
        (iu, ju), (iv, jv) = self.cells[u], self.cells[v]
        if (iu, ju) == (iv, jv):
            return "same"
        if ju == jv and abs(iu - iv) == 1:
            return "vertical"
        if iu == iv and abs(ju - jv) == 1:
            return "horizontal"
        return "far"

    def far_edges(self, graph: Graph) -> List[Edge]:
        return [(u, v) for u, v in graph.edges if self.edge_kind(u, v) == "far"]

    def horizontal_edges(self, graph: Graph) -> Dict[Cell, List[Edge]]:
        """Edges between A_{i,j} and A_{i,j+1}, keyed by (i, j)."""
        out: Dict[Cell, List[Edge]] = {}
        for u, v in graph.edges:
            if self.edge_kind(u, v) == "horizontal":
                i, j = self.cells[u]
                out.setdefault((i, min(j, self.cells[v][1])), []).append((u, v))
        return out

    def violations(self, graph: Graph, *, strict: bool = True) -> List[str]:
        """Cell-discipline problems (empty when the drawing is well formed).

        Always checked: every vertex has a cell and, for 1 < i <= n, exactly
        one edge joins A_{i,j} to A_{i,j+1}. With ``strict`` every edge must
        also stay within one cell or join two neighboring cells.
        """
        out: List[str] = []
        missing = [v for v in graph.vertices if v not in self.cells]
        if missing:
            out.append(f"{len(missing)} vertices without a cell (first: {missing[0]})")
            return out
        for v, (i, j) in self.cells.items():
            if not (1 <= i <= self.n + 1 and 1 <= j <= self.m):
                out.append(f"vertex {v} in cell {(i, j)} outside the {self.n + 1}x{self.m} grid")
        if strict:
            for u, v in self.far_edges(graph):
                out.append(f"edge {u}-{v} joins non-adjacent cells {self.cells[u]} {self.cells[v]}")
        horizontal = self.horizontal_edges(graph)
        for i in range(2, self.n + 1):
            for j in range(1, self.m):
                got = len(horizontal.get((i, j), ()))
                if got != 1:
                    out.append(f"{got} edges between A_{i},{j} and A_{i},{j + 1} (expected 1)")
        return out

    def layout(self) -> LinearLayout:
        return column_major_layout(self.cells, self.positions, self.ranks)


# ---------------------------------------------------------------------------
# Chain bookkeeping
# ---------------------------------------------------------------------------
def chain_slot(k: int, n: int) -> Tuple[int, int, bool]:
    """(column, variable line, descending?) of triangle k of a 2nm-chain."""
    j = (k - 1) // (2 * n) + 1
    r = k - (j - 1) * 2 * n
    if r <= n:
        return j, r, True
    return j, 2 * n + 1 - r, False


def attachment_slot(label: Label, formula: CnfFormula) -> int:
    """Index of the chain triangle whose terminal a list-instance vertex is joined to."""
    n = formula.n
    tag, x, y = label  # type: ignore[misc]
    if tag == "T":
        return x + (y - 1) * 2 * n
    if tag == "F":
        return (2 * n + 1 - x) + (y - 1) * 2 * n
    if tag in ("a", "b"):
        return literal_rows(formula, x)[y - 1] + (x - 1) * 2 * n
    raise GadgetError(f"not a list-instance label: {label!r}")


# ---------------------------------------------------------------------------
# Reference embedding
# ---------------------------------------------------------------------------
def _triangle_point(c: int, k: int, r: int, n: int) -> Tuple[int, int]:
    j, i, down = chain_slot(k, n)
    x0, y0 = (j - 1) * PITCH, -PITCH * i
    side = -TRI_HALF if r == 1 else TRI_HALF
    if down:
        cx = x0 + DOWN_X[c]
        if r == 0:
            return cx, y0 + (TOP_RISE[c] if i == 1 else TRI_DY)
        return cx + side, y0 - TRI_DY
    cx = x0 + UP_X[c]
    if r == 0:
        return cx, y0 - (BOTTOM_DROP[c] if i == n else TRI_DY)
    return cx + side, y0 + TRI_DY


def _design_point(label: Label, formula: CnfFormula) -> Tuple[int, int]:
    head = label[0]  # type: ignore[index]
    if isinstance(head, tuple):
        (_, c), k, r = label  # type: ignore[misc]
        return _triangle_point(c, k, r, formula.n)
    tag, x, y = label  # type: ignore[misc]
    if tag in ("T", "F"):
        return (y - 1) * PITCH + (0 if tag == "T" else F_X), -PITCH * x
    row = literal_rows(formula, x)[y - 1]
    return (x - 1) * PITCH + CLAUSE_X, -PITCH * row + (A_RISE if tag == "a" else B_RISE)


def _jitter_key(label: Label, n: int) -> Optional[Tuple[int, ...]]:
    """Column-free name of a vertex: equal keys get equal jitter in every column."""
    head = label[0]  # type: ignore[index]
    if isinstance(head, tuple):
        (_, c), k, r = label  # type: ignore[misc]
        return 0, c, (k - 1) % (2 * n), r
    tag, _, y = label  # type: ignore[misc]
    if tag in ("T", "F"):
        return None
    return (1 if tag == "a" else 2), y


def reference_positions(
    labels: Mapping[int, Label], formula: CnfFormula, *, seed: int = DRAWING_SEED
) -> Dict[int, Tuple[int, int]]:
    """Integer coordinates; everything but the variable paths gets a small seeded jitter.

    The jitter repeats from column to column, so columns holding the same
    clause are exact translates of each other.
    """
    shifts: Dict[Tuple[int, ...], Tuple[int, int]] = {}
    out: Dict[int, Tuple[int, int]] = {}
    for v in sorted(labels):
        x, y = _design_point(labels[v], formula)
        x, y = x * SCALE, y * SCALE
        key = _jitter_key(labels[v], formula.n)
        if key is not None:
            if key not in shifts:
                dx, dy = make_rng(np.random.SeedSequence([seed, *key])).integers(
                    -JITTER, JITTER + 1, size=2
                )
                shifts[key] = (int(dx), int(dy))
            x += shifts[key][0]
            y += shifts[key][1]
        out[v] = (x, y)
    return out


# ---------------------------------------------------------------------------
# Crossings
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Crossing:
    """Proper crossing of two straight edges.

    ``t_first`` / ``t_second`` locate the point along each edge, measured from
    its smaller endpoint (0 at that endpoint, 1 at the other).
    """

    first: Edge
    second: Edge
    point: Tuple[Fraction, Fraction]
    t_first: Fraction
    t_second: Fraction


def _cross(ax: Number, ay: Number, bx: Number, by: Number) -> Number:
    return ax * by - ay * bx


def _orient(a: Point, b: Point, c: Point) -> int:
    v = _cross(b[0] - a[0], b[1] - a[1], c[0] - a[0], c[1] - a[1])
    return (v > 0) - (v < 0)


def _within(a: Point, b: Point, c: Point) -> bool:
    """c inside the bounding box of segment ab (used on collinear triples)."""
    return min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])


def _meet(e: Edge, f: Edge, pos: Mapping[int, Point]) -> Optional[Crossing]:
    a, b, c, d = pos[e[0]], pos[e[1]], pos[f[0]], pos[f[1]]
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    shared = set(e) & set(f)
    if shared:
        if o1 == 0 and o2 == 0:
            s = shared.pop()
            p = pos[e[0] if e[1] == s else e[1]]
            r = pos[f[0] if f[1] == s else f[1]]
            q = pos[s]
            if (p[0] - q[0]) * (r[0] - q[0]) + (p[1] - q[1]) * (r[1] - q[1]) > 0:
                raise DrawingError(f"edges {e} and {f} overlap")
        return None
    if o1 * o2 < 0 and o3 * o4 < 0:
        ex, ey = b[0] - a[0], b[1] - a[1]
        fx, fy = d[0] - c[0], d[1] - c[1]
        den = _cross(ex, ey, fx, fy)
        t = Fraction(_cross(c[0] - a[0], c[1] - a[1], fx, fy)) / den
        s = Fraction(_cross(c[0] - a[0], c[1] - a[1], ex, ey)) / den
        point = (a[0] + t * ex, a[1] + t * ey)
        return Crossing(first=e, second=f, point=point, t_first=t, t_second=s)
    touching = ((o1, e, c, f[0]), (o2, e, d, f[1]), (o3, f, a, e[0]), (o4, f, b, e[1]))
    for orient, host, w, vid in touching:
        if orient == 0 and _within(pos[host[0]], pos[host[1]], w):
            raise DrawingError(f"vertex {vid} lies on edge {host}")
    return None


def find_crossings(graph: Graph, positions: Mapping[int, Point]) -> List[Crossing]:
    """All proper crossings of the straight-line drawing, sorted by edge pair.

    Raises :class:`DrawingError` for coincident vertices, a vertex inside an
    edge, overlapping collinear edges, or three edges through one point.
    """
    seen_at: Dict[Point, int] = {}
    for v in graph.vertices:
        if positions[v] in seen_at:
            raise DrawingError(f"vertices {seen_at[positions[v]]} and {v} share a position")
        seen_at[positions[v]] = v

    buckets: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    edges = graph.edges
    for idx, (u, v) in enumerate(edges):
        (ax, ay), (bx, by) = positions[u], positions[v]
        for bx_ in range(math.floor(min(ax, bx) / UNIT), math.floor(max(ax, bx) / UNIT) + 1):
            for by_ in range(math.floor(min(ay, by) / UNIT), math.floor(max(ay, by) / UNIT) + 1):
                buckets[(bx_, by_)].append(idx)

    tested: Set[Tuple[int, int]] = set()
    found: List[Crossing] = []
    for members in buckets.values():
        for s, t in combinations(members, 2):
            key = (s, t) if s < t else (t, s)
            if key in tested:
                continue
            tested.add(key)
            hit = _meet(edges[key[0]], edges[key[1]], positions)
            if hit is not None:
                found.append(hit)

    points: Dict[Tuple[Fraction, Fraction], Crossing] = {}
    for cr in found:
        if cr.point in points:
            prev = points[cr.point]
            raise DrawingError(
                f"edges {prev.first}, {prev.second}, {cr.first}, {cr.second} meet in one point"
            )
        points[cr.point] = cr
    found.sort(key=lambda cr: (cr.first, cr.second))
    return found


def crossing_lists(crossings: Sequence[Crossing]) -> Dict[Edge, Tuple[Edge, ...]]:
    """Per crossed edge, the edges crossing it in order from its smaller endpoint."""
    along: Dict[Edge, List[Tuple[Fraction, Edge]]] = defaultdict(list)
    for cr in crossings:
        along[cr.first].append((cr.t_first, cr.second))
        along[cr.second].append((cr.t_second, cr.first))
    return {e: tuple(f for _, f in sorted(hits)) for e, hits in sorted(along.items())}


# ---------------------------------------------------------------------------
# The reduction
# ---------------------------------------------------------------------------
def list3col_to_3col(inst: ListColoringInstance) -> GadgetInstance:
    formula = inst.formula
    if formula is None:
        raise GadgetError("list instance carries no source formula; build it with cnf_to_list3col")
    n, m = formula.n, formula.m
    if n < 1 or m < 1:
        raise GadgetError(f"need at least one variable and one clause, got n={n} m={m}")

    b = GraphBuilder()
    for v in inst.graph.vertices:
        tag = inst.labels[v][0]  # type: ignore[index]
        b.add_vertex(inst.labels[v], "variable" if tag in ("T", "F") else "clause")
    for u, v in inst.graph.edges:
        b.add_edge(u, v)

    chains = {c: add_clique_chain(b, ("Z", c), 2 * n * m, 3) for c in COLORS}
    b.add_clique([chains[c][0][0] for c in COLORS])
    for v in inst.graph.vertices:
        slot = attachment_slot(inst.labels[v], formula)
        for c in COLORS:
            if c not in inst.lists[v]:
                b.add_edge(v, chains[c][slot - 1][0])

    graph = b.build()
    labels = b.labels
    positions = reference_positions(labels, formula)
    cells = {v: cell_of_point(x, y, n, m) for v, (x, y) in positions.items()}
    crossings = find_crossings(graph, positions)
    drawing = CellDrawing(
        n=n, m=m, cells=cells, positions=positions, crossings=crossing_lists(crossings)
    )
    layout = drawing.layout()
    ctw = cutwidth_of(graph, layout)
    logger.debug(
        "3col: n=%d m=%d -> %d vertices, %d edges, %d crossings, ctw=%d",
        n, m, graph.n, graph.m, len(crossings), ctw,
    )  # fmt: skip
    return GadgetInstance(
        family="3col",
        graph=graph,
        q=3,
        layout=layout,
        provenance=b.kinds,
        labels=labels,
        formula=formula,
        params={
            "n_vars": n,
            "m_clauses": m,
            "crossings": len(crossings),
            "cutwidth": ctw,
            "excess": ctw - n,
        },
        drawing=drawing,
    )


def lift_list_coloring(inst: GadgetInstance, coloring: Mapping[int, int]) -> Dict[int, int]:
    """Extend a list coloring of the source instance to a 3-coloring of ``inst``.

    Chain c terminals take color c, the two non-terminals of each triangle the
    other two colors in ascending order.
    """
    out: Dict[int, int] = {}
    for v, label in inst.labels.items():
        head = label[0]  # type: ignore[index]
        if isinstance(head, tuple):
            (_, c), _k, r = label  # type: ignore[misc]
            others: Sequence[int] = [x for x in COLORS if x != c]
            out[v] = c if r == 0 else others[r - 1]
        else:
            out[v] = coloring[v]
    return out
