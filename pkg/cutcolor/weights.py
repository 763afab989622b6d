# SPDX-License-Identifier: MIT
"""Random vertex/color weights for isolating a minimum-weight coloring."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import CutcolorError
from .graph import Graph
from .util import get_logger, make_rng

__all__ = ["WeightFunction", "sample_weights"]

logger = get_logger("weights")


@dataclass(frozen=True)
class WeightFunction:
    """omega: (vertex, color) -> integer; ``table[v, c]`` with row/column 0 unused."""

    n: int
    q: int
    table: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        t = np.asarray(self.table, dtype=np.int64)
        if t.shape != (self.n + 1, self.q + 1):
            raise CutcolorError(f"weight table shape {t.shape} != {(self.n + 1, self.q + 1)}")
        if self.n and self.q and int(t[1:, 1:].min()) < 0:
            raise CutcolorError("weights must be non-negative")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    def __call__(self, v: int, c: int) -> int:
        return int(self.table[v, c])

    def of(self, coloring: Mapping[int, int]) -> int:
        """omega(x): total weight of a (partial) coloring."""
        return sum(int(self.table[v, c]) for v, c in coloring.items())

    @property
    def z_max(self) -> int:
        """Largest possible total weight, sum over vertices of the max weight."""
        if self.n == 0 or self.q == 0:
            return 0
        return int(self.table[1:, 1:].max(axis=1).sum())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "WeightFunction":
        """``rows[v-1][c-1]`` is omega((v, c))."""
        n = len(rows)
        q = len(rows[0]) if rows else 0
        t = np.zeros((n + 1, q + 1), dtype=np.int64)
        for v, row in enumerate(rows, start=1):
            t[v, 1:] = row
        return cls(n, q, t)


def sample_weights(
    graph: Graph | int, q: int, seed: int | np.random.SeedSequence
) -> WeightFunction:
    """Independent uniform weights on [1, 2nq] for every (vertex, color) pair.

    *graph* may be a graph or just its vertex count.
    """
    n = graph.n if isinstance(graph, Graph) else int(graph)
    if q < 1:
        raise CutcolorError(f"q must be >= 1, got {q}")
    rng = make_rng(seed)
    t = np.zeros((n + 1, q + 1), dtype=np.int64)
    if n:
        t[1:, 1:] = rng.integers(1, 2 * n * q, size=(n, q), endpoint=True)
    return WeightFunction(n, q, t)
