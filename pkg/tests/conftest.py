# tests/conftest.py
# Loads .env/.env.local (if present) and provides graph fixtures for tests.
from __future__ import annotations

import os
from pathlib import Path
from typing import Callable

import pytest
from dotenv import load_dotenv

from cutcolor.formats import format_graph, format_layout
from cutcolor.graph import (
    Graph,
    LinearLayout,
    complete_graph,
    cycle_graph,
    graph_from_pairs,
    petersen_graph,
)

# Load in priority order: .env.local then .env (never override CI env)
load_dotenv(".env.local", override=False)
load_dotenv(".env", override=False)


def _slow_enabled() -> bool:
    return os.getenv("CUTCOLOR_RUN_SLOW", "").strip().lower() in {"1", "true", "yes", "on"}


# ---- pytest markers ----------------------------------------------------------
def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: long-running sweep (CUTCOLOR_RUN_SLOW=1)")


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if _slow_enabled():
        return
    skip = pytest.mark.skip(reason="set CUTCOLOR_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


# ---- graph fixtures ----------------------------------------------------------
@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def small_graphs() -> list[Graph]:
    """A few graphs with known 3-colorability, isolated vertices included."""
    return [
        complete_graph(3),
        complete_graph(4),
        cycle_graph(5),
        cycle_graph(6),
        graph_from_pairs([(1, 2), (2, 3), (3, 1), (4, 5)], n=7),
        petersen_graph(),
    ]


# ---- file helpers ------------------------------------------------------------
@pytest.fixture
def write_text(tmp_path: Path) -> Callable[[str, str], Path]:
    """
    Write a file under tmp_path:
        p = write_text("g.col", "p edge 2 1\\ne 1 2\\n")
    """

    def _write(rel: str, text: str) -> Path:
        p = tmp_path / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text, encoding="utf-8")
        return p

    return _write


@pytest.fixture
def write_instance(
    write_text: Callable[[str, str], Path],
) -> Callable[[str, Graph, LinearLayout | None], tuple[Path, Path]]:
    """Write ``<name>.col`` and ``<name>.lay`` (identity layout by default)."""

    def _write(name: str, graph: Graph, layout: LinearLayout | None = None) -> tuple[Path, Path]:
        g = write_text(f"{name}.col", format_graph(graph))
        lay = write_text(f"{name}.lay", format_layout(layout or LinearLayout.identity(graph.n)))
        return g, lay

    return _write
