# SPDX-License-Identifier: MIT
"""Exact q-coloring parameterized by cutwidth and pathwidth."""
from __future__ import annotations

from .detsolver import DetResult, run_cutwidth_det, solve_cutwidth_det
from .errors import (
    BudgetExceeded,
    CutcolorError,
    DrawingError,
    FormatError,
    GadgetError,
    GraphError,
    UnknownCheck,
)
from .graph import Graph, LinearLayout, NicePathDecomposition
from .randsolver import RandResult, run_pathwidth_rand, solve_cutwidth_rand, solve_pathwidth_rand

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "LinearLayout",
    "NicePathDecomposition",
    "DetResult",
    "RandResult",
    "run_cutwidth_det",
    "solve_cutwidth_det",
    "run_pathwidth_rand",
    "solve_pathwidth_rand",
    "solve_cutwidth_rand",
    "CutcolorError",
    "GraphError",
    "FormatError",
    "BudgetExceeded",
    "GadgetError",
    "DrawingError",
    "UnknownCheck",
    "__version__",
]
