# SPDX-License-Identifier: MIT
"""Deterministic q-coloring over a linear layout (rank-based table pruning).

The table after position i holds colorings of the left endpoints X_i of the
i'th cut. After every extension the table is cut down to rows whose L_H rows
(monomials prod x_v^{s_v}) form a row basis over GF(p); such a subset still
represents every right-side coloring that had a compatible partner.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import CutcolorError, GraphError
from .field import FieldPrime, RowBasis, field_prime
from .graph import Cut, Graph, LinearLayout, iter_cuts, strip_isolated
from .util import get_logger

__all__ = [
    "PartialColoringSet",
    "DegreeSequenceIndex",
    "DetResult",
    "lh_row",
    "lh_matrix",
    "reduce",
    "extend_table",
    "run_cutwidth_det",
    "solve_cutwidth_det",
]

logger = get_logger("detsolver")


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class PartialColoringSet:
    """Deduplicated colorings of an ordered vertex set, kept in insertion order."""

    domain: Tuple[int, ...]
    rows: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        width = len(self.domain)
        rows = np.asarray(self.rows, dtype=np.int64)
        if rows.ndim != 2:
            rows = rows.reshape(rows.size // width if width else len(rows), width)
        if rows.shape[1] != width:
            raise GraphError(f"rows of width {rows.shape[1]} over a domain of {width} vertices")
        if not width:
            # all empty colorings coincide
            rows = rows[: min(len(rows), 1)]
        elif rows.shape[0]:
            _, first = np.unique(rows, axis=0, return_index=True)
            rows = rows[np.sort(first)]
        rows.setflags(write=False)
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, domain: Sequence[int], rows: Iterable[Sequence[int]]) -> "PartialColoringSet":
        data = [list(r) for r in rows]
        return cls(tuple(domain), np.asarray(data, dtype=np.int64).reshape(len(data), len(domain)))

    @classmethod
    def empty_prefix(cls) -> "PartialColoringSet":
        """The single empty coloring: the table before any vertex is placed."""
        return cls((), np.zeros((1, 0), dtype=np.int64))

    def __len__(self) -> int:
        return int(self.rows.shape[0])

    def as_dicts(self) -> List[dict[int, int]]:
        return [dict(zip(self.domain, map(int, r))) for r in self.rows]

    def as_tuples(self) -> List[Tuple[int, ...]]:
        return [tuple(int(c) for c in r) for r in self.rows]


@dataclass(frozen=True)
class DegreeSequenceIndex:
    """Sequences s with 0 <= s_v <= caps_v, enumerated lexicographically over the domain."""

    domain: Tuple[int, ...]
    caps: Tuple[int, ...]

    @classmethod
    def for_cut(cls, cut: Cut, limit: Optional[int] = None) -> "DegreeSequenceIndex":
        """Caps are the cut degrees of X, optionally truncated at *limit*."""
        caps = [cut.left_degrees[v] for v in cut.left]
        if limit is not None:
            caps = [min(c, limit) for c in caps]
        return cls(cut.left, tuple(caps))

    @property
    def size(self) -> int:
        return math.prod(c + 1 for c in self.caps)

    def sequences(self) -> List[Tuple[int, ...]]:
        return list(itertools.product(*(range(c + 1) for c in self.caps)))


@dataclass(frozen=True)
class DetResult:
    colorable: bool
    q: int
    p: int
    table_sizes: List[int]
    bounds: List[int]
    stripped: Tuple[int, ...] = ()

    @property
    def max_table(self) -> int:
        return max(self.table_sizes, default=0)


# ---------------------------------------------------------------------------
# L_H rows
# ---------------------------------------------------------------------------
def lh_matrix(rows: np.ndarray, caps: Sequence[int], p: int) -> np.ndarray:
    """Row k holds prod_v x_v^{s_v} mod p for every s, lexicographic in s."""
    rows = np.asarray(rows, dtype=np.int64)
    k = rows.shape[0]
    out = np.ones((k, 1), dtype=np.int64)
    for j, cap in enumerate(caps):
        powers = np.ones((k, cap + 1), dtype=np.int64)
        base = rows[:, j] % p
        for s in range(1, cap + 1):
            powers[:, s] = (powers[:, s - 1] * base) % p
        out = ((out[:, :, None] * powers[:, None, :]) % p).reshape(k, -1)
    return out


def lh_row(
    x: Mapping[int, int] | Sequence[int], caps: DegreeSequenceIndex, p: FieldPrime | int
) -> np.ndarray:
    """L_H[x, .] as a vector indexed by the degree sequences of *caps*."""
    prime = p.p if isinstance(p, FieldPrime) else int(p)
    if isinstance(x, Mapping):
        vec = [x[v] for v in caps.domain]
    else:
        vec = list(x)
    if len(vec) != len(caps.domain):
        raise GraphError("coloring does not match the index domain")
    return lh_matrix(np.asarray([vec], dtype=np.int64).reshape(1, len(vec)), caps.caps, prime)[0]


# ---------------------------------------------------------------------------
# Table operations
# ---------------------------------------------------------------------------
def reduce(
    cut: Cut,
    S: PartialColoringSet,
    p: FieldPrime,
    *,
    skip_within_bound: bool = False,
) -> PartialColoringSet:
    """Subset of *S* whose L_H rows form a row basis of L_H[S, .] over GF(p).

    Columns use caps min(deg_C(v), q-1); higher powers are combinations of
    lower ones on the q colors, so the selected rows are the same as with the
    full caps.
    """
    if S.domain != cut.left:
        raise GraphError(f"table domain {S.domain} differs from cut left side {cut.left}")
    if len(S) <= 1:
        return S
    index = DegreeSequenceIndex.for_cut(cut, limit=max(p.q - 1, 0))
    if skip_within_bound and len(S) <= index.size:
        return S
    L = lh_matrix(S.rows, index.caps, p.p)
    kept = RowBasis(L.shape[1], p.p).select(L)
    return PartialColoringSet(S.domain, S.rows[kept])


def extend_table(
    prev: PartialColoringSet,
    v: int,
    graph: Graph,
    cuts: Tuple[Cut, Cut],
    q: int,
) -> PartialColoringSet:
    """Color *v* every way compatible with its earlier neighbors, then project to X_i."""
    before, after = cuts
    if prev.domain != before.left:
        raise GraphError("previous table is not over the previous cut's left side")
    col = {u: k for k, u in enumerate(prev.domain)}
    nbrs = [col[w] for w in sorted(graph.neighbors(v)) if w in col]
    k = len(prev)
    colors = np.arange(1, q + 1, dtype=np.int64)
    base = np.repeat(prev.rows, q, axis=0)
    new = np.tile(colors, k)
    if nbrs:
        ok = np.all(base[:, nbrs] != new[:, None], axis=1)
        base, new = base[ok], new[ok]
    keep = [col[u] if u != v else -1 for u in after.left]
    out = np.empty((base.shape[0], len(keep)), dtype=np.int64)
    for j, src in enumerate(keep):
        out[:, j] = new if src < 0 else base[:, src]
    return PartialColoringSet(after.left, out)


# ---------------------------------------------------------------------------
# Solver
# ---------------------------------------------------------------------------
def run_cutwidth_det(
    graph: Graph,
    layout: LinearLayout,
    q: int,
    *,
    skip_within_bound: bool = False,
) -> DetResult:
    """Run the table sweep and keep per-cut statistics."""
    if q < 1:
        raise CutcolorError(f"q must be >= 1, got {q}")
    layout.check(graph)
    st = strip_isolated(graph)
    g, lay = st.graph, st.layout(layout)
    p = field_prime(q)
    table = PartialColoringSet.empty_prefix()
    sizes: List[int] = []
    bounds: List[int] = []
    cuts = iter_cuts(g, lay)
    prev_cut = next(cuts)
    for v, cut in zip(lay.order, cuts):
        table = extend_table(table, v, g, (prev_cut, cut), q)
        table = reduce(cut, table, p, skip_within_bound=skip_within_bound)
        sizes.append(len(table))
        bounds.append(math.prod(d + 1 for d in cut.left_degrees.values()))
        prev_cut = cut
        if not len(table):
            logger.debug("det: table empty at position %d of %d", cut.index, g.n)
            break
    colorable = len(table) > 0
    logger.debug(
        "det: n=%d q=%d p=%d max table %d -> %s",
        g.n,
        q,
        p.p,
        max(sizes, default=0),
        colorable,
    )
    return DetResult(colorable, q, p.p, sizes, bounds, st.removed)


def solve_cutwidth_det(graph: Graph, layout: LinearLayout, q: int) -> bool:
    """True iff *graph* has a proper q-coloring. Exact."""
    return run_cutwidth_det(graph, layout, q).colorable
