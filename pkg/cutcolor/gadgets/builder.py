# SPDX-License-Identifier: MIT
"""Incremental graph construction with labelled vertices and gadget provenance.

Generators name every vertex with a hashable label (a tuple such as
``("T", i, j)``) and let the builder hand out ids 1..n in creation order.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Hashable, List, Mapping, Optional, Set, Tuple

from ..errors import GadgetError, GraphError
from ..graph import Graph, LinearLayout, NicePathDecomposition, validate_decomposition
from .cnf import CnfFormula

__all__ = ["Label", "GraphBuilder", "ListColoringInstance", "GadgetInstance"]

Label = Hashable


class GraphBuilder:
    """Label -> id registry plus an edge set; ``build()`` freezes it into a Graph."""

    def __init__(self) -> None:
        self._ids: Dict[Label, int] = {}
        self._labels: List[Label] = []
        self._kinds: List[str] = []
        self._edges: Set[Tuple[int, int]] = set()

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: Label) -> bool:
        return label in self._ids

    def add_vertex(self, label: Label, kind: str = "base") -> int:
        """Id of *label*, creating the vertex on first use."""
        vid = self._ids.get(label)
        if vid is not None:
            return vid
        self._labels.append(label)
        self._kinds.append(kind)
        vid = len(self._labels)
        self._ids[label] = vid
        return vid

    def id(self, label: Label) -> int:
        try:
            return self._ids[label]
        except KeyError:
            raise GadgetError(f"unknown vertex label {label!r}") from None

    def label(self, vid: int) -> Label:
        return self._labels[vid - 1]

    def kind(self, vid: int) -> str:
        return self._kinds[vid - 1]

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GadgetError(f"self-loop at vertex {u} ({self.label(u)!r})")
        self._edges.add((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edges

    def add_clique(self, ids: List[int]) -> None:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                self.add_edge(ids[a], ids[b])

    def build(self) -> Graph:
        return Graph(len(self._labels), tuple(sorted(self._edges)))

    @property
    def labels(self) -> Dict[int, Label]:
        return {k + 1: lab for k, lab in enumerate(self._labels)}

    @property
    def kinds(self) -> Dict[int, str]:
        return {k + 1: kind for k, kind in enumerate(self._kinds)}


@dataclass(frozen=True)
class ListColoringInstance:
    """A graph with a color list per vertex and role labels.

    ``distinguished`` lists vertices a caller may attach to (path-gadget
    pi_k vertices); it is empty for other instances.
    """

    graph: Graph
    lists: Mapping[int, FrozenSet[int]]
    labels: Mapping[int, Label]
    q: int = 3
    distinguished: Tuple[int, ...] = ()
    formula: Optional[CnfFormula] = None

    def __post_init__(self) -> None:
        if set(self.lists) != set(self.graph.vertices):
            raise GadgetError("every vertex needs a color list")
        for v, lst in self.lists.items():
            if not lst:
                raise GadgetError(f"vertex {v} ({self.labels.get(v)!r}) has an empty list")
            if not lst <= frozenset(range(1, self.q + 1)):
                raise GadgetError(f"vertex {v} list {sorted(lst)} leaves [1, {self.q}]")

    def vertex(self, label: Label) -> int:
        for v, lab in self.labels.items():
            if lab == label:
                return v
        raise GadgetError(f"unknown vertex label {label!r}")

    def respects(self, coloring: Mapping[int, int]) -> bool:
        """True iff *coloring* is proper and picks every color from its list."""
        if any(coloring[v] not in self.lists[v] for v in self.graph.vertices):
            return False
        return all(coloring[u] != coloring[v] for u, v in self.graph.edges)


@dataclass(frozen=True)
class GadgetInstance:
    """A generated plain-coloring instance together with its width certificate."""

    family: str
    graph: Graph
    q: int
    layout: Optional[LinearLayout] = None
    decomposition: Optional[NicePathDecomposition] = None
    provenance: Mapping[int, str] = field(default_factory=dict)
    labels: Mapping[int, Label] = field(default_factory=dict)
    formula: Optional[CnfFormula] = None
    params: Mapping[str, Any] = field(default_factory=dict)
    drawing: Optional[Any] = None

    def certificate_problems(self) -> List[str]:
        """Violations of the attached layout / decomposition (empty when valid)."""
        out: List[str] = []
        if self.layout is not None:
            try:
                self.layout.check(self.graph)
            except GraphError as e:
                out.append(f"layout: {e}")
        if self.decomposition is not None:
            out.extend(validate_decomposition(self.graph, self.decomposition))
        if self.layout is None and self.decomposition is None:
            out.append("no certificate attached")
        return out

    def provenance_counts(self) -> Dict[str, int]:
        return dict(sorted(Counter(self.provenance.values()).items()))

    def vertex(self, label: Label) -> int:
        for v, lab in self.labels.items():
            if lab == label:
                return v
        raise GadgetError(f"unknown vertex label {label!r}")
