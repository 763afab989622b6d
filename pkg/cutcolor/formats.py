# SPDX-License-Identifier: MIT
"""Line-oriented instance files.

- Graph: DIMACS-like ``p edge <n> <m>`` header, ``e <u> <v>`` lines, ``c`` comments.
- Layout: ``layout <n>`` then the permutation in position order.
- Decomposition: one event per line, ``IV <v>``, ``IE <u> <v>``, ``FV <v>``.
- CNF: DIMACS CNF (see :mod:`cutcolor.gadgets.cnf`).
"""
from __future__ import annotations

from pathlib import Path
from typing import List, Optional

from .errors import FormatError, GraphError
from .gadgets.cnf import CnfFormula, parse_dimacs_cnf
from .graph import (
    Event,
    Forget,
    Graph,
    IntroduceEdge,
    IntroduceVertex,
    LinearLayout,
    NicePathDecomposition,
)
from .util import _short, get_logger

__all__ = [
    "parse_graph",
    "format_graph",
    "parse_layout",
    "format_layout",
    "parse_decomposition",
    "format_decomposition",
    "read_graph",
    "write_graph",
    "read_layout",
    "write_layout",
    "read_decomposition",
    "write_decomposition",
    "read_cnf",
    "write_cnf",
]

logger = get_logger("formats")


def _ints(tokens: List[str], *, path: Optional[str], line: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as e:
        raise FormatError(f"expected integers: {e}", path=path, line=line) from e


# ----------- graph ----------- #
def parse_graph(text: str, *, path: Optional[str] = None) -> Graph:
    n: Optional[int] = None
    declared_m = 0
    edges: List[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        head = parts[0]
        if head == "p":
            if len(parts) != 4 or parts[1] not in {"edge", "col"}:
                raise FormatError("expected 'p edge <n> <m>'", path=path, line=lineno)
            n, declared_m = _ints(parts[2:], path=path, line=lineno)
        elif head == "e":
            if n is None:
                raise FormatError("edge before 'p edge' header", path=path, line=lineno)
            if len(parts) != 3:
                raise FormatError("expected 'e <u> <v>'", path=path, line=lineno)
            u, v = _ints(parts[1:], path=path, line=lineno)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown line type {head!r}", path=path, line=lineno)
    if n is None:
        raise FormatError("missing 'p edge' header", path=path)
    if declared_m != len(edges):
        raise FormatError(f"header declares {declared_m} edges, found {len(edges)}", path=path)
    try:
        return Graph(n, tuple(edges))
    except GraphError as e:
        raise FormatError(str(e), path=path) from e


def format_graph(graph: Graph, comment: Optional[str] = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {graph.n} {graph.m}")
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


# ----------- layout ----------- #
def parse_layout(text: str, *, path: Optional[str] = None) -> LinearLayout:
    rows = [(k, ln.split()) for k, ln in enumerate(text.splitlines(), start=1)]
    rows = [(k, p) for k, p in rows if p and p[0] != "c"]
    if not rows or rows[0][1][0] != "layout" or len(rows[0][1]) != 2:
        raise FormatError("expected 'layout <n>' header", path=path, line=rows[0][0] if rows else 0)
    (n,) = _ints(rows[0][1][1:], path=path, line=rows[0][0])
    order: List[int] = []
    for lineno, parts in rows[1:]:
        order.extend(_ints(parts, path=path, line=lineno))
    if len(order) != n:
        raise FormatError(f"layout declares {n} vertices, found {len(order)}", path=path)
    if sorted(order) != list(range(1, n + 1)):
        raise FormatError("layout is not a permutation of 1..n", path=path)
    return LinearLayout(tuple(order))


def format_layout(layout: LinearLayout) -> str:
    return f"layout {layout.n}\n" + " ".join(str(v) for v in layout.order) + "\n"


# ----------- decomposition ----------- #
def parse_decomposition(text: str, *, path: Optional[str] = None) -> NicePathDecomposition:
    events: List[Event] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        kind, args = parts[0].upper(), _ints(parts[1:], path=path, line=lineno)
        if kind == "IV" and len(args) == 1:
            events.append(IntroduceVertex(args[0]))
        elif kind == "IE" and len(args) == 2:
            events.append(IntroduceEdge(args[0], args[1]))
        elif kind == "FV" and len(args) == 1:
            events.append(Forget(args[0]))
        else:
            raise FormatError(f"bad event line {raw.strip()!r}", path=path, line=lineno)
    return NicePathDecomposition(tuple(events))


def format_decomposition(npd: NicePathDecomposition) -> str:
    return "".join(f"{ev}\n" for ev in npd.events)


# ----------- file helpers ----------- #
def _read(path: str | Path) -> str:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read: {e.strerror or e}", path=str(p)) from e
    logger.debug("read %s (%d bytes)", _short(p), len(text))
    return text


def _write(path: str | Path, text: str) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text, encoding="utf-8")
    logger.debug("wrote %s (%d bytes)", _short(p), len(text))
    return p


def read_graph(path: str | Path) -> Graph:
    return parse_graph(_read(path), path=str(path))


def write_graph(path: str | Path, graph: Graph, comment: Optional[str] = None) -> Path:
    return _write(path, format_graph(graph, comment))


def read_layout(path: str | Path) -> LinearLayout:
    return parse_layout(_read(path), path=str(path))


def write_layout(path: str | Path, layout: LinearLayout) -> Path:
    return _write(path, format_layout(layout))


def read_decomposition(path: str | Path) -> NicePathDecomposition:
    return parse_decomposition(_read(path), path=str(path))


def write_decomposition(path: str | Path, npd: NicePathDecomposition) -> Path:
    return _write(path, format_decomposition(npd))


def read_cnf(path: str | Path) -> CnfFormula:
    return parse_dimacs_cnf(_read(path), path=str(path))


def write_cnf(path: str | Path, formula: CnfFormula) -> Path:
    return _write(path, formula.to_dimacs())
