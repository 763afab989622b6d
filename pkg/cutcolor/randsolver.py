# SPDX-License-Identifier: MIT
"""Randomized q-coloring over a nice path decomposition.

For random weights omega and a random prime p the solver computes, bag by
bag, the partial evaluations T^z_i[d, e] of the graph polynomial
P_G = prod over directed edges (x_u - x_v) restricted to colorings of weight
z. The graph is q-colorable iff some P_G(z) is nonzero; for a colorable graph
the minimum-weight coloring is unique with probability >= 1/2, which makes
P_G(z_min) a nonzero product of small differences.

Design goals
------------
- Dense tables: a bag's values live in one int64 tensor. Axis 0 is z, then
  one axis per bag vertex in introduction order. L vertices index their
  out-degree d_v in [0, l_v]; R vertices index the reserved exponent e_v in
  [0, r_v]. Zero means "absent".
- Two z modes. ``full`` keeps every z in [0, z_max]. ``eval`` collapses the
  z axis to one value sum_z T^z Y^z at a random point Y, which keeps the
  answer one-sided (a zero polynomial evaluates to zero everywhere).
- One-sided error in both modes: "yes" is only reported for a nonzero value.

Public API
----------
- SplitInfo, split_bag(graph, npd, i), iter_splits(graph, npd)
- TTable, leftmost_table(...), dp_transition(...)
- iter_tables(...), compute_PG_all(...), compute_PG_at(...)
- run_trial(...) -> TrialOutcome, summarize_trials(...)
- run_pathwidth_rand(...) -> RandResult
- solve_pathwidth_rand(...), solve_cutwidth_rand(...) -> bool
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Literal, Mapping, Optional, Tuple

import numpy as np

from .errors import BudgetExceeded, CutcolorError, GraphError
from .field import random_prime
from .graph import (
    Event,
    Forget,
    Graph,
    IntroduceEdge,
    IntroduceVertex,
    LinearLayout,
    NicePathDecomposition,
    layout_to_nice_decomposition,
    strip_isolated,
    validate_decomposition,
)
from .util import current_table_budget, get_logger, make_rng, spawn_seeds
from .weights import WeightFunction, sample_weights

__all__ = [
    "ZMode",
    "SplitInfo",
    "split_bag",
    "iter_splits",
    "TTable",
    "leftmost_table",
    "dp_transition",
    "iter_tables",
    "compute_PG_all",
    "compute_PG_at",
    "RandResult",
    "TrialOutcome",
    "run_trial",
    "summarize_trials",
    "run_pathwidth_rand",
    "solve_pathwidth_rand",
    "solve_cutwidth_rand",
]

logger = get_logger("randsolver")

ZMode = Literal["full", "eval"]
TableKey = Tuple[int, Tuple[int, ...], Tuple[int, ...]]


# ---------------------------------------------------------------------------
# L/R split of a bag
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class SplitInfo:
    """L_i / R_i partition of bag i with the per-vertex index caps.

    ``l[v]`` is the number of edges at v introduced so far (v in L_i);
    ``r[v]`` is the number still to come (v in R_i).
    """

    index: int
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    l: Mapping[int, int] = field(default_factory=dict)
    r: Mapping[int, int] = field(default_factory=dict)

    @property
    def bag(self) -> frozenset[int]:
        return frozenset(self.left) | frozenset(self.right)

    @property
    def index_size(self) -> int:
        """Number of (d, e) index pairs for a single z."""
        return math.prod(c + 1 for c in self.l.values()) * math.prod(
            c + 1 for c in self.r.values()
        )

    def cap(self, v: int) -> int:
        if v in self.l:
            return self.l[v]
        if v in self.r:
            return self.r[v]
        raise GraphError(f"vertex {v} is not in bag {self.index}")


def _make_split(graph: Graph, index: int, bag: set[int], deg_in: Mapping[int, int]) -> SplitInfo:
    l: Dict[int, int] = {}
    r: Dict[int, int] = {}
    for v in sorted(bag):
        done = deg_in.get(v, 0)
        if 2 * done <= graph.degree(v):
            l[v] = done
        else:
            r[v] = graph.degree(v) - done
    return SplitInfo(index, tuple(l), tuple(r), l, r)


def split_bag(graph: Graph, npd: NicePathDecomposition, i: int) -> SplitInfo:
    """Split of bag i, recomputed from the first i events."""
    if not 0 <= i <= len(npd):
        raise GraphError(f"bag index {i} outside [0, {len(npd)}]")
    bag: set[int] = set()
    deg_in: Dict[int, int] = {}
    for ev in npd.events[:i]:
        if isinstance(ev, IntroduceVertex):
            bag.add(ev.v)
        elif isinstance(ev, Forget):
            bag.discard(ev.v)
        else:
            for w in (ev.u, ev.v):
                deg_in[w] = deg_in.get(w, 0) + 1
    return _make_split(graph, i, bag, deg_in)


def iter_splits(graph: Graph, npd: NicePathDecomposition) -> Iterator[SplitInfo]:
    """Splits of bags 0..len(npd), maintained incrementally."""
    bag: set[int] = set()
    deg_in: Dict[int, int] = {}
    yield _make_split(graph, 0, bag, deg_in)
    for i, ev in enumerate(npd.events, start=1):
        if isinstance(ev, IntroduceVertex):
            bag.add(ev.v)
        elif isinstance(ev, Forget):
            bag.discard(ev.v)
            deg_in.pop(ev.v, None)
        else:
            for w in (ev.u, ev.v):
                deg_in[w] = deg_in.get(w, 0) + 1
        yield _make_split(graph, i, bag, deg_in)


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class TTable:
    """Values T^z_i[d, e] mod p for one bag (see module docstring for layout)."""

    split: SplitInfo
    p: int
    axes: Tuple[int, ...]
    values: np.ndarray = field(repr=False)
    point: Optional[int] = None

    @property
    def index(self) -> int:
        return self.split.index

    @property
    def mode(self) -> ZMode:
        return "full" if self.point is None else "eval"

    @property
    def index_size(self) -> int:
        return int(np.prod(self.values.shape[1:], dtype=np.int64))

    def get(self, z: int, d: Mapping[int, int], e: Mapping[int, int]) -> int:
        """T^z_i[d, e]; in eval mode *z* must be 0 and the evaluation is returned."""
        coords = {**d, **e}
        if set(coords) != set(self.axes):
            raise GraphError(f"index keys {sorted(coords)} do not match bag {sorted(self.axes)}")
        if not 0 <= z < self.values.shape[0]:
            return 0
        idx = [z]
        for v in self.axes:
            k = coords[v]
            if not 0 <= k <= self.split.cap(v):
                return 0
            idx.append(k)
        return int(self.values[tuple(idx)])

    def as_dict(self) -> Dict[TableKey, int]:
        """Nonzero entries keyed (z, d over sorted L_i, e over sorted R_i)."""
        out: Dict[TableKey, int] = {}
        for idx in np.argwhere(self.values != 0):
            coords = dict(zip(self.axes, (int(k) for k in idx[1:])))
            key = (
                int(idx[0]),
                tuple(coords[v] for v in self.split.left),
                tuple(coords[v] for v in self.split.right),
            )
            out[key] = int(self.values[tuple(idx)])
        return out


def leftmost_table(
    split: SplitInfo, p: int, z_max: int, *, point: Optional[int] = None
) -> TTable:
    """T^0_0[(), ()] = 1 and every other entry 0."""
    if split.bag:
        raise GraphError("the leftmost bag must be empty")
    values = np.zeros(1 if point is not None else z_max + 1, dtype=np.int64)
    values[0] = 1
    return TTable(split, p, (), values, point)


# ----------- per-axis moves ----------- #


def _grow(arr: np.ndarray, ax: int, tail: bool) -> np.ndarray:
    """L endpoint: cap grows by one; a tail's out-degree index moves up."""
    pad = [(0, 0)] * arr.ndim
    pad[ax] = (1, 0) if tail else (0, 1)
    return np.pad(arr, pad)


def _shrink(arr: np.ndarray, ax: int, tail: bool) -> np.ndarray:
    """R endpoint: cap drops by one; a tail consumes one reserved exponent."""
    sl: List[slice] = [slice(None)] * arr.ndim
    sl[ax] = slice(1, None) if tail else slice(0, -1)
    return arr[tuple(sl)]


def _flip(
    arr: np.ndarray,
    ax: int,
    v: int,
    r_cap: int,
    weights: WeightFunction,
    q: int,
    p: int,
    point: Optional[int],
) -> np.ndarray:
    """Color v: replace its out-degree axis d_v by an exponent axis e_v.

    new^z[..., e] = sum_d sum_x old^{z - omega(v, x)}[..., d] * x^(d + e)
    """
    moved = np.moveaxis(arr, ax, -1)
    zlen = moved.shape[0]
    out = np.zeros(moved.shape[:-1] + (r_cap + 1,), dtype=np.int64)
    for d in range(moved.shape[-1]):
        sl = moved[..., d]
        if not sl.any():
            continue
        for x in range(1, q + 1):
            coef = np.array([pow(x, d + e, p) for e in range(r_cap + 1)], dtype=np.int64)
            w = weights(v, x)
            if point is not None:
                coef = (coef * pow(point, w, p)) % p
                out = (out + (sl[..., None] * coef) % p) % p
            elif w < zlen:
                out[w:] = (out[w:] + (sl[: zlen - w, ..., None] * coef) % p) % p
    return np.moveaxis(out, -1, ax)


def _check_split(prev: TTable, split_prev: SplitInfo, split_next: SplitInfo) -> None:
    if split_prev.index != prev.index or split_next.index != prev.index + 1:
        raise GraphError(
            f"split indices {split_prev.index}->{split_next.index} do not follow table {prev.index}"
        )
    if split_prev.bag != frozenset(prev.axes):
        raise GraphError(f"split of bag {split_prev.index} does not match the table's bag")


def _introduce_edge(
    prev: TTable,
    ev: IntroduceEdge,
    split_prev: SplitInfo,
    split_next: SplitInfo,
    weights: WeightFunction,
    q: int,
) -> np.ndarray:
    pos = {v: k for k, v in enumerate(prev.axes)}
    for w in (ev.u, ev.v):
        if w not in pos:
            raise GraphError(f"{ev}: endpoint {w} not in bag")
        if w in split_prev.l:
            ok = split_next.l.get(w) == split_prev.l[w] + 1 or w in split_next.r
        else:
            ok = split_next.r.get(w) == split_prev.r[w] - 1
        if not ok:
            raise GraphError(f"{ev}: split of bag {split_next.index} inconsistent at vertex {w}")
    p = prev.p
    total: Optional[np.ndarray] = None
    for tail, head in ((ev.u, ev.v), (ev.v, ev.u)):
        arr = prev.values
        for w in (tail, head):
            ax = 1 + pos[w]
            if w in split_prev.l:
                arr = _grow(arr, ax, w == tail)
                if w in split_next.r:
                    arr = _flip(arr, ax, w, split_next.r[w], weights, q, p, prev.point)
            else:
                arr = _shrink(arr, ax, w == tail)
        # orientation with the later-introduced endpoint as tail is a reversal
        if pos[head] < pos[tail]:
            arr = (-arr) % p
        total = arr if total is None else (total + arr) % p
    assert total is not None
    return total


def dp_transition(
    prev: TTable,
    event: Event,
    split_prev: SplitInfo,
    split_next: SplitInfo,
    weights: WeightFunction,
    q: int,
) -> TTable:
    """Table of bag i from the table of bag i-1 and the i'th event."""
    _check_split(prev, split_prev, split_next)
    cells = prev.values.shape[0] * split_next.index_size
    budget = current_table_budget()
    if cells > budget:
        raise BudgetExceeded(f"T table for bag {split_next.index}", cells, budget)

    if isinstance(event, IntroduceVertex):
        v = event.v
        if v in prev.axes or split_next.l.get(v) != 0:
            raise GraphError(f"{event}: inconsistent with bag {split_next.index}")
        return TTable(split_next, prev.p, prev.axes + (v,), prev.values[..., None], prev.point)

    if isinstance(event, Forget):
        v = event.v
        if v not in prev.axes:
            raise GraphError(f"{event}: vertex not in bag")
        ax = 1 + prev.axes.index(v)
        arr = prev.values
        if v in split_prev.l:
            if split_prev.l[v] != 0:
                raise GraphError(f"{event}: vertex still has uncolored edges")
            # isolated vertex: color it with no exponent left
            arr = _flip(arr, ax, v, 0, weights, q, prev.p, prev.point)
        elif split_prev.r[v] != 0:
            raise GraphError(f"{event}: {split_prev.r[v]} edge(s) at {v} not yet introduced")
        arr = np.take(arr, 0, axis=ax)
        axes = tuple(w for w in prev.axes if w != v)
        return TTable(split_next, prev.p, axes, arr, prev.point)

    values = _introduce_edge(prev, event, split_prev, split_next, weights, q)
    return TTable(split_next, prev.p, prev.axes, values, prev.point)


# ---------------------------------------------------------------------------
# Whole-decomposition runs
# ---------------------------------------------------------------------------
def _check_inputs(
    graph: Graph, npd: NicePathDecomposition, q: int, weights: WeightFunction
) -> None:
    if q < 1:
        raise CutcolorError(f"q must be >= 1, got {q}")
    if weights.n < graph.n or weights.q < q:
        raise CutcolorError(
            f"weights cover n={weights.n}, q={weights.q}; need n={graph.n}, q={q}"
        )
    problems = validate_decomposition(graph, npd)
    if problems:
        raise GraphError(f"invalid decomposition: {problems[0]}")


def iter_tables(
    graph: Graph,
    npd: NicePathDecomposition,
    q: int,
    weights: WeightFunction,
    p: int,
    *,
    point: Optional[int] = None,
) -> Iterator[TTable]:
    """Tables of bags 0..len(npd) in order."""
    _check_inputs(graph, npd, q, weights)
    splits = iter_splits(graph, npd)
    s_prev = next(splits)
    table = leftmost_table(s_prev, p, weights.z_max, point=point)
    yield table
    for ev, s_next in zip(npd.events, splits):
        table = dp_transition(table, ev, s_prev, s_next, weights, q)
        yield table
        s_prev = s_next


def _final(
    graph: Graph,
    npd: NicePathDecomposition,
    q: int,
    weights: WeightFunction,
    p: int,
    point: Optional[int],
) -> Tuple[np.ndarray, int]:
    table: Optional[TTable] = None
    largest = 0
    for table in iter_tables(graph, npd, q, weights, p, point=point):
        largest = max(largest, table.values.size)
    assert table is not None
    return table.values, largest


def compute_PG_all(
    graph: Graph, npd: NicePathDecomposition, q: int, weights: WeightFunction, p: int
) -> Dict[int, int]:
    """{z: P_G(z) mod p} for every z in [0, z_max]."""
    values, _ = _final(graph, npd, q, weights, p, None)
    return {z: int(v) for z, v in enumerate(values)}


def compute_PG_at(
    graph: Graph,
    npd: NicePathDecomposition,
    q: int,
    weights: WeightFunction,
    p: int,
    point: int,
) -> int:
    """sum_z P_G(z) * point^z mod p."""
    values, _ = _final(graph, npd, q, weights, p, point % p)
    return int(values[0])


@dataclass(frozen=True)
class RandResult:
    colorable: bool
    trials_run: int
    witness_trial: Optional[int]
    primes: Tuple[int, ...]
    max_table_cells: int
    z_mode: ZMode = "full"


@dataclass(frozen=True)
class TrialOutcome:
    index: int
    prime: int
    nonzero: bool
    cells: int


def run_trial(
    graph: Graph,
    npd: NicePathDecomposition,
    q: int,
    seed: int,
    index: int,
    *,
    z_mode: ZMode = "full",
) -> TrialOutcome:
    """Trial *index* of the stream seeded by *seed*; depends on nothing else."""
    child = spawn_seeds(seed, index + 1)[index]
    w_seed, p_seed = child.spawn(2)
    weights = sample_weights(graph, q, w_seed)
    rng = make_rng(p_seed)
    p = random_prime(rng)
    point = int(rng.integers(1, p)) if z_mode == "eval" else None
    values, cells = _final(graph, npd, q, weights, p, point)
    hit = bool(np.any(values))
    logger.debug("rand: trial %d p=%d cells=%d nonzero=%s", index, p, cells, hit)
    return TrialOutcome(index, p, hit, cells)


def summarize_trials(outcomes: List[TrialOutcome], trials: int, z_mode: ZMode) -> RandResult:
    """Fold trial outcomes (any order) into the result a sequential run reports."""
    ordered = sorted(outcomes, key=lambda o: o.index)
    hit = next((o.index for o in ordered if o.nonzero), None)
    used = ordered if hit is None else ordered[: hit + 1]
    return RandResult(
        hit is not None,
        trials if hit is None else hit + 1,
        hit,
        tuple(o.prime for o in used),
        max((o.cells for o in used), default=0),
        z_mode,
    )


def run_pathwidth_rand(
    graph: Graph,
    npd: NicePathDecomposition,
    q: int,
    trials: int = 8,
    seed: int = 0,
    *,
    z_mode: ZMode = "full",
) -> RandResult:
    """Repeat independent trials until one finds a nonzero value."""
    if trials < 1:
        raise CutcolorError(f"trials must be >= 1, got {trials}")
    if z_mode not in ("full", "eval"):
        raise CutcolorError(f"unknown z mode {z_mode!r}")
    outcomes: List[TrialOutcome] = []
    for t in range(trials):
        outcomes.append(run_trial(graph, npd, q, seed, t, z_mode=z_mode))
        if outcomes[-1].nonzero:
            break
    return summarize_trials(outcomes, trials, z_mode)


def solve_pathwidth_rand(
    graph: Graph,
    npd: NicePathDecomposition,
    q: int,
    trials: int = 8,
    seed: int = 0,
    *,
    z_mode: ZMode = "full",
) -> bool:
    """True only if *graph* is q-colorable; False may be a (rare) miss."""
    return run_pathwidth_rand(graph, npd, q, trials, seed, z_mode=z_mode).colorable


def solve_cutwidth_rand(
    graph: Graph,
    layout: LinearLayout,
    q: int,
    trials: int = 8,
    seed: int = 0,
    *,
    z_mode: ZMode = "full",
) -> bool:
    """Layout front end: isolated vertices are dropped, then the layout's decomposition is used."""
    if q < 1:
        raise CutcolorError(f"q must be >= 1, got {q}")
    layout.check(graph)
    st = strip_isolated(graph)
    if st.graph.n == 0:
        return True
    npd = layout_to_nice_decomposition(st.graph, st.layout(layout))
    return solve_pathwidth_rand(st.graph, npd, q, trials, seed, z_mode=z_mode)
