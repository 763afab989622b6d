# SPDX-License-Identifier: MIT
"""Graphs, linear layouts, cuts and nice path decompositions.

Vertices are the integers 1..n. Edges are stored with the smaller id first.
Every type here is immutable after construction; operations are pure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np

from .errors import GraphError
from .util import get_logger

__all__ = [
    "Edge",
    "Graph",
    "LinearLayout",
    "Cut",
    "IntroduceVertex",
    "IntroduceEdge",
    "Forget",
    "Event",
    "NicePathDecomposition",
    "Stripped",
    "cut_at",
    "iter_cuts",
    "cut_sizes",
    "cutwidth_of",
    "layout_to_nice_decomposition",
    "random_nice_decomposition",
    "validate_decomposition",
    "pathwidth_of",
    "decomposition_order",
    "pending_edge_counts",
    "strip_isolated",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "petersen_graph",
    "graph_from_pairs",
]

logger = get_logger("graph")

Edge = Tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be >= 0, got {self.n}")
        seen: set[Edge] = set()
        canon: List[Edge] = []
        for raw in self.edges:
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {{{u},{v}}} has an endpoint outside [1, {self.n}]")
            e = _canon(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {{{e[0]},{e[1]}}}")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        """Index 0 is unused so ``adjacency[v]`` is the neighborhood of v."""
        adj: List[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edge_set

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency[1:]), default=0)

    def isolated_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v in self.vertices if not self.adjacency[v])

    def relabel(self, mapping: Dict[int, int], n: int) -> "Graph":
        """Graph on 1..n with every edge endpoint sent through *mapping*."""
        return Graph(n, tuple((mapping[u], mapping[v]) for u, v in self.edges))


# ---------------------------------------------------------------------------
# Linear layouts and cuts
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class LinearLayout:
    """A vertex ordering; ``order[k]`` is the vertex at position k+1."""

    order: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))

    @classmethod
    def identity(cls, n: int) -> "LinearLayout":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def position(self) -> Dict[int, int]:
        """1-based position of every vertex."""
        return {v: k + 1 for k, v in enumerate(self.order)}

    def check(self, graph: Graph) -> None:
        """Raise GraphError unless the order is a bijection onto the vertex set."""
        if len(self.order) != graph.n or set(self.order) != set(graph.vertices):
            raise GraphError(
                f"layout is not a permutation of 1..{graph.n} (got {len(self.order)} entries)"
            )


@dataclass(frozen=True)
class Cut:
    """The i'th cut: edges from positions <= i to positions > i."""

    index: int
    edges: Tuple[Edge, ...]
    left: Tuple[int, ...]
    right: Tuple[int, ...]

    @cached_property
    def left_degrees(self) -> Dict[int, int]:
        deg = {v: 0 for v in self.left}
        for u, _ in self.edges:
            deg[u] += 1
        return deg

    @cached_property
    def right_degrees(self) -> Dict[int, int]:
        deg = {w: 0 for w in self.right}
        for _, w in self.edges:
            deg[w] += 1
        return deg

    def __len__(self) -> int:
        return len(self.edges)


def cut_at(graph: Graph, layout: LinearLayout, i: int) -> Cut:
    """Crossing edges at gap *i*, oriented left to right in the layout.

    X (``left``) and Y (``right``) are sorted by vertex id.
    """
    layout.check(graph)
    if not 0 <= i <= graph.n:
        raise GraphError(f"cut position {i} outside [0, {graph.n}]")
    pos = layout.position
    pairs: List[Edge] = []
    for u, v in graph.edges:
        a, b = (u, v) if pos[u] < pos[v] else (v, u)
        if pos[a] <= i < pos[b]:
            pairs.append((a, b))
    pairs.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
    left = tuple(sorted({a for a, _ in pairs}))
    right = tuple(sorted({b for _, b in pairs}))
    return Cut(index=i, edges=tuple(pairs), left=left, right=right)


def iter_cuts(graph: Graph, layout: LinearLayout) -> Iterator[Cut]:
    """Cuts 0..n in order; same values as :func:`cut_at`, built by one sweep."""
    layout.check(graph)
    pos = layout.position
    active: set[Edge] = set()
    yield Cut(index=0, edges=(), left=(), right=())
    for i, v in enumerate(layout.order, start=1):
        for w in graph.neighbors(v):
            if pos[w] < i:
                active.discard((w, v))
            else:
                active.add((v, w))
        pairs = sorted(active, key=lambda e: (pos[e[0]], pos[e[1]]))
        yield Cut(
            index=i,
            edges=tuple(pairs),
            left=tuple(sorted({a for a, _ in pairs})),
            right=tuple(sorted({b for _, b in pairs})),
        )


def cut_sizes(graph: Graph, layout: LinearLayout) -> List[int]:
    """|C_i| for i = 0..n, by a single sweep over the layout."""
    layout.check(graph)
    pos = layout.position
    delta = [0] * (graph.n + 2)
    for u, v in graph.edges:
        a, b = sorted((pos[u], pos[v]))
        delta[a] += 1
        delta[b] -= 1
    sizes = [0] * (graph.n + 1)
    running = 0
    for i in range(1, graph.n + 1):
        running += delta[i]
        sizes[i] = running
    return sizes


def cutwidth_of(graph: Graph, layout: LinearLayout) -> int:
    """Maximum number of edges crossing a gap between consecutive positions."""
    sizes = cut_sizes(graph, layout)
    return max(sizes[1 : graph.n], default=0)


# ---------------------------------------------------------------------------
# Nice path decompositions
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class IntroduceVertex:
    v: int

    def __str__(self) -> str:
        return f"IV {self.v}"


@dataclass(frozen=True)
class IntroduceEdge:
    """Introduce edge {u, v}; ``u`` and ``v`` keep the order they were given in."""

    u: int
    v: int

    @property
    def pair(self) -> Edge:
        return _canon(self.u, self.v)

    def __str__(self) -> str:
        return f"IE {self.u} {self.v}"


@dataclass(frozen=True)
class Forget:
    v: int

    def __str__(self) -> str:
        return f"FV {self.v}"


Event = Union[IntroduceVertex, IntroduceEdge, Forget]


@dataclass(frozen=True)
class NicePathDecomposition:
    """Event sequence; bag i is the bag after the first i events.

    Bag 0 and bag ``len(events)`` are the implicit empty end bags of a valid
    decomposition.
    """

    events: Tuple[Event, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", tuple(self.events))

    def __len__(self) -> int:
        return len(self.events)

    @property
    def is_empty(self) -> bool:
        return not self.events

    def bags(self) -> Iterator[FrozenSet[int]]:
        """Yield bags 0..len(events) (inclusive)."""
        bag: set[int] = set()
        yield frozenset()
        for ev in self.events:
            if isinstance(ev, IntroduceVertex):
                bag.add(ev.v)
            elif isinstance(ev, Forget):
                bag.discard(ev.v)
            yield frozenset(bag)

    def bag(self, i: int) -> FrozenSet[int]:
        for k, b in enumerate(self.bags()):
            if k == i:
                return b
        raise GraphError(f"bag index {i} outside [0, {len(self.events)}]")

    def introduction_rank(self) -> Dict[int, int]:
        """Vertex -> order in which it is introduced (0-based)."""
        rank: Dict[int, int] = {}
        for ev in self.events:
            if isinstance(ev, IntroduceVertex) and ev.v not in rank:
                rank[ev.v] = len(rank)
        return rank


def layout_to_nice_decomposition(graph: Graph, layout: LinearLayout) -> NicePathDecomposition:
    """Nice decomposition introducing vertices in layout order.

    After v_i is introduced, its edges to earlier vertices are introduced in
    layout order; each endpoint is forgotten right after its last edge.
    """
    layout.check(graph)
    isolated = graph.isolated_vertices()
    if isolated:
        raise GraphError(f"isolated vertex present: {isolated[0]} (strip isolated vertices first)")
    pos = layout.position
    remaining = [graph.degree(v) for v in range(graph.n + 1)]
    events: List[Event] = []
    for v in layout.order:
        events.append(IntroduceVertex(v))
        earlier = sorted((w for w in graph.neighbors(v) if pos[w] < pos[v]), key=pos.__getitem__)
        for w in earlier:
            events.append(IntroduceEdge(w, v))
            remaining[w] -= 1
            remaining[v] -= 1
            for x in (w, v):
                if remaining[x] == 0:
                    events.append(Forget(x))
    npd = NicePathDecomposition(tuple(events))
    logger.debug("layout -> decomposition: %d events for n=%d m=%d", len(events), graph.n, graph.m)
    return npd


def random_nice_decomposition(graph: Graph, rng: np.random.Generator) -> NicePathDecomposition:
    """A valid nice decomposition with randomized event placement.

    Vertices come in random order. Each edge is introduced at some random
    point after both endpoints are present, with a random orientation, and a
    vertex whose edges are all in stays in the bag for a random while.
    """
    remaining = [graph.degree(v) for v in range(graph.n + 1)]
    introduced: set[int] = set()
    bag: List[int] = []
    pending: List[Tuple[int, int]] = []
    events: List[Event] = []

    def flush(count: int) -> None:
        for _ in range(count):
            u, v = pending.pop(int(rng.integers(len(pending))))
            events.append(IntroduceEdge(u, v))
            remaining[u] -= 1
            remaining[v] -= 1

    def forget(ready: List[int]) -> None:
        for v in ready:
            bag.remove(v)
            events.append(Forget(v))

    for v in (int(x) + 1 for x in rng.permutation(graph.n)):
        events.append(IntroduceVertex(v))
        bag.append(v)
        for w in sorted(graph.neighbors(v) & introduced):
            pending.append((v, w) if rng.integers(2) else (w, v))
        introduced.add(v)
        flush(int(rng.integers(len(pending) + 1)))
        forget([u for u in list(bag) if remaining[u] == 0 and rng.integers(2)])
    flush(len(pending))
    forget([bag[int(k)] for k in rng.permutation(len(bag))])
    npd = NicePathDecomposition(tuple(events))
    logger.debug("random decomposition: %d events for n=%d m=%d", len(events), graph.n, graph.m)
    return npd


def _structure_violations(npd: NicePathDecomposition, n: int | None) -> List[str]:
    out: List[str] = []
    bag: set[int] = set()
    introduced: set[int] = set()
    forgotten: set[int] = set()
    edges_seen: set[Edge] = set()
    for t, ev in enumerate(npd.events, start=1):
        if isinstance(ev, IntroduceVertex):
            if n is not None and not 1 <= ev.v <= n:
                out.append(f"event {t}: {ev}: vertex out of range")
            if ev.v in introduced:
                out.append(f"event {t}: {ev}: vertex introduced twice")
            introduced.add(ev.v)
            bag.add(ev.v)
        elif isinstance(ev, Forget):
            if ev.v in forgotten:
                out.append(f"event {t}: {ev}: vertex forgotten twice")
            elif ev.v not in bag:
                out.append(f"event {t}: {ev}: forget of vertex not in bag")
            forgotten.add(ev.v)
            bag.discard(ev.v)
        elif isinstance(ev, IntroduceEdge):
            if ev.u == ev.v:
                out.append(f"event {t}: {ev}: self-loop")
            if ev.pair in edges_seen:
                out.append(f"event {t}: {ev}: edge introduced twice")
            edges_seen.add(ev.pair)
            for x in (ev.u, ev.v):
                if x not in bag:
                    out.append(f"event {t}: {ev}: endpoint not in bag ({x})")
        else:  # pragma: no cover
            out.append(f"event {t}: unknown event {ev!r}")
    for v in sorted(introduced - forgotten):
        out.append(f"vertex never forgotten: {v}")
    return out


def validate_decomposition(graph: Graph, npd: NicePathDecomposition) -> List[str]:
    """All violations of the nice-decomposition invariants; empty list means ok."""
    out = _structure_violations(npd, graph.n)
    introduced = {ev.v for ev in npd.events if isinstance(ev, IntroduceVertex)}
    edges = {ev.pair for ev in npd.events if isinstance(ev, IntroduceEdge)}
    for v in graph.vertices:
        if v not in introduced:
            out.append(f"vertex never introduced: {v}")
    for e in sorted(edges - graph.edge_set):
        out.append(f"edge not in graph: {e[0]} {e[1]}")
    for e in graph.edges:
        if e not in edges:
            out.append(f"edge never introduced: {e[0]} {e[1]}")
    if out:
        logger.debug("decomposition: %d violation(s), first: %s", len(out), out[0])
    return out


def pathwidth_of(npd: NicePathDecomposition) -> int:
    """Largest bag size minus one; 0 for an empty decomposition."""
    problems = _structure_violations(npd, None)
    if problems:
        raise GraphError(f"invalid decomposition: {problems[0]}")
    if npd.is_empty:
        logger.debug("pathwidth: empty decomposition, reporting 0")
        return 0
    return max(len(b) for b in npd.bags()) - 1


def decomposition_order(npd: NicePathDecomposition) -> LinearLayout:
    """The introduce-vertex order of a decomposition, as a layout."""
    return LinearLayout(tuple(ev.v for ev in npd.events if isinstance(ev, IntroduceVertex)))


def pending_edge_counts(graph: Graph, npd: NicePathDecomposition) -> List[int]:
    """For every bag, the number of edges incident to it not introduced yet."""
    counts: List[int] = []
    done: set[Edge] = set()
    for i, bag in enumerate(npd.bags()):
        if i > 0:
            ev = npd.events[i - 1]
            if isinstance(ev, IntroduceEdge):
                done.add(ev.pair)
        pending = {
            _canon(v, w) for v in bag for w in graph.neighbors(v) if _canon(v, w) not in done
        }
        counts.append(len(pending))
    return counts


# ---------------------------------------------------------------------------
# Isolated vertices
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Stripped:
    """A graph with isolated vertices removed and relabelled to 1..n'."""

    graph: Graph
    removed: Tuple[int, ...]
    new_of_old: Dict[int, int]
    old_of_new: Dict[int, int]

    def layout(self, layout: LinearLayout) -> LinearLayout:
        return LinearLayout(tuple(self.new_of_old[v] for v in layout.order if v in self.new_of_old))

    def decomposition(self, npd: NicePathDecomposition) -> NicePathDecomposition:
        out: List[Event] = []
        m = self.new_of_old
        for ev in npd.events:
            if isinstance(ev, IntroduceEdge):
                out.append(IntroduceEdge(m[ev.u], m[ev.v]))
            elif ev.v in m:
                out.append(type(ev)(m[ev.v]))
        return NicePathDecomposition(tuple(out))


def strip_isolated(graph: Graph) -> Stripped:
    """Remove isolated vertices; they never affect q-colorability for q >= 1."""
    removed = graph.isolated_vertices()
    keep = [v for v in graph.vertices if graph.adjacency[v]]
    new_of_old = {v: k + 1 for k, v in enumerate(keep)}
    old_of_new = {k: v for v, k in new_of_old.items()}
    if removed:
        logger.debug("strip: removed %d isolated vertex(es)", len(removed))
    return Stripped(
        graph=graph.relabel(new_of_old, len(keep)),
        removed=removed,
        new_of_old=new_of_old,
        old_of_new=old_of_new,
    )


# ---------------------------------------------------------------------------
# Standard families
# ---------------------------------------------------------------------------
def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def star_graph(leaves: int) -> Graph:
    """Center is vertex 1."""
    return Graph(leaves + 1, tuple((1, v) for v in range(2, leaves + 2)))


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def graph_from_pairs(pairs: Iterable[Sequence[int]], n: int | None = None) -> Graph:
    """Convenience constructor; *n* defaults to the largest endpoint."""
    lst = [(int(a), int(b)) for a, b in pairs]
    top = max((max(e) for e in lst), default=0)
    return Graph(top if n is None else n, tuple(lst))
