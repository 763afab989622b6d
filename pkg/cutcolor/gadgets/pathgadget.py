# SPDX-License-Identifier: MIT
"""List-colored paths that block exactly one color tuple.

``path_gadget(c, q)`` returns a path with distinguished vertices pi_1..pi_m.
Giving pi_k an outside neighbor of color d_k, the path still has a list
coloring iff (d_1, ..., d_m) != (c_1, ..., c_m).

Layout of the path: t_1 pi_1 u_1 v_1 t_2 pi_2 u_2 v_2 ... t_m pi_m u_m.
Block k uses two colors x_k, y_k besides c_k. t_k and u_k read "x_k" as
"some earlier block already missed its color" and "y_k" as "not yet". t_1 is
pinned to "not yet", u_m to "missed"; pi_k can only turn "not yet" into
"missed" by taking c_k, and v_k carries the state to the next block.
"""
from __future__ import annotations

from typing import Dict, FrozenSet, List, Sequence

from ..errors import GadgetError
from .builder import GraphBuilder, ListColoringInstance

__all__ = ["path_gadget", "forbid", "block_colors"]


def block_colors(c: Sequence[int], q: int) -> List[tuple[int, int]]:
    """(x_k, y_k) per block: distinct, both != c_k, and x_{k+1} != y_k."""
    out: List[tuple[int, int]] = []
    prev_y = 0
    for ck in c:
        x = min(col for col in range(1, q + 1) if col not in (ck, prev_y))
        y = min(col for col in range(1, q + 1) if col not in (ck, x))
        out.append((x, y))
        prev_y = y
    return out


def path_gadget(c: Sequence[int], q: int) -> ListColoringInstance:
    if q < 3:
        raise GadgetError(f"path gadget needs q >= 3, got {q}")
    m = len(c)
    if m < 1:
        raise GadgetError("path gadget needs at least one distinguished vertex")
    bad = [ck for ck in c if not 1 <= ck <= q]
    if bad:
        raise GadgetError(f"colors {bad} outside [1, {q}]")

    b = GraphBuilder()
    lists: Dict[int, FrozenSet[int]] = {}
    if m == 1:
        pi = b.add_vertex(("pi", 1), "pathgadget")
        lists[pi] = frozenset({c[0]})
        return ListColoringInstance(b.build(), lists, b.labels, q=q, distinguished=(pi,))

    colors = block_colors(c, q)
    distinguished: List[int] = []
    prev = None

    def step(label: tuple, allowed: FrozenSet[int]) -> int:
        nonlocal prev
        v = b.add_vertex(label, "pathgadget")
        lists[v] = allowed
        if prev is not None:
            b.add_edge(prev, v)
        prev = v
        return v

    for k, (ck, (x, y)) in enumerate(zip(c, colors), start=1):
        step(("t", k), frozenset({y}) if k == 1 else frozenset({x, y}))
        distinguished.append(step(("pi", k), frozenset({x, y, ck})))
        step(("u", k), frozenset({x}) if k == m else frozenset({x, y}))
        if k < m:
            step(("v", k), frozenset({y, colors[k][0]}))

    return ListColoringInstance(
        b.build(), lists, b.labels, q=q, distinguished=tuple(distinguished)
    )


def forbid(inst: ListColoringInstance, d: Sequence[int]) -> Dict[int, FrozenSet[int]]:
    """Lists after pinning an outside neighbor of color d_k next to pi_k."""
    if len(d) != len(inst.distinguished):
        raise GadgetError(f"expected {len(inst.distinguished)} colors, got {len(d)}")
    lists = dict(inst.lists)
    for v, dk in zip(inst.distinguished, d):
        lists[v] = lists[v] - {dk}
    return lists
