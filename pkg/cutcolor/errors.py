# SPDX-License-Identifier: MIT
"""Error types raised by cutcolor.

Validation helpers return violation lists instead of raising; these types are
reserved for inputs that cannot be processed at all.
"""
from __future__ import annotations

from typing import Optional

__all__ = [
    "CutcolorError",
    "GraphError",
    "FormatError",
    "BudgetExceeded",
    "GadgetError",
    "DrawingError",
    "UnknownCheck",
]


class CutcolorError(RuntimeError):
    """Base class for every error this package raises on purpose."""


class GraphError(CutcolorError, ValueError):
    """Malformed graph, layout, cut position or decomposition."""


class FormatError(GraphError):
    """Unreadable or invalid instance file.

    Attributes:
        path: File the problem was found in (``None`` for in-memory text).
        line: 1-based line number, 0 when the problem is not line-specific.
    """

    def __init__(self, message: str, *, path: Optional[str] = None, line: int = 0) -> None:
        self.path = path
        self.line = int(line)
        where = ""
        if path:
            where = f"{path}:{line}: " if line else f"{path}: "
        elif line:
            where = f"line {line}: "
        super().__init__(f"{where}{message}")


class BudgetExceeded(CutcolorError):
    """An enumeration or search was refused because it exceeds its budget."""

    def __init__(self, what: str, requested: int, budget: int) -> None:
        self.what = what
        self.requested = int(requested)
        self.budget = int(budget)
        super().__init__(f"{what}: {self.requested} exceeds budget {self.budget}")


class GadgetError(CutcolorError, ValueError):
    """Generator parameters violate a construction precondition."""


class DrawingError(GadgetError):
    """The drawing handed to planarization breaks the crossing discipline."""


class UnknownCheck(CutcolorError, KeyError):
    """``verify`` was asked for a check that does not exist."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown check"
