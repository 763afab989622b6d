# SPDX-License-Identifier: MIT
"""Brute-force reference implementations.

Everything here enumerates. Results are exact Python integers and are never
reduced modulo a prime, so field-reduction bugs in the solvers stay visible.
Each call refuses to start when its enumeration would exceed the budget
(``CUTCOLOR_ORACLE_BUDGET``, default 2**24 points).
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

import numpy as np
from sympy import isprime

from .errors import BudgetExceeded, CutcolorError, GraphError
from .field import rank_mod_p
from .graph import Cut, Graph, IntroduceEdge, IntroduceVertex, NicePathDecomposition
from .util import current_oracle_budget, get_logger
from .weights import WeightFunction

__all__ = [
    "ColorVector",
    "Lists",
    "count_proper_colorings",
    "find_proper_coloring",
    "is_colorable",
    "extend_coloring",
    "eval_Mprime",
    "mprime_matrix",
    "rank_of_Mprime",
    "pgz_bruteforce",
    "eval_PGz_bruteforce",
    "bag_split",
    "table_entries_bruteforce",
    "eval_table_entry_bruteforce",
    "oracle_would_refuse",
    "solve_coloring_smt",
    "is_colorable_smt",
]

logger = get_logger("oracle")

ColorVector = Mapping[int, int]
Lists = Mapping[int, Set[int]]
TableKey = Tuple[int, Tuple[int, ...], Tuple[int, ...]]


def _budget(budget: Optional[int]) -> int:
    return budget if budget is not None else current_oracle_budget()


def _check_budget(what: str, size: int, budget: Optional[int]) -> None:
    b = _budget(budget)
    if size > b:
        raise BudgetExceeded(what, size, b)


def oracle_would_refuse(graph: Graph, q: int, budget: Optional[int] = None) -> bool:
    """True when a q^n enumeration over *graph* exceeds the budget."""
    return q**graph.n > _budget(budget)


# ---------------------------------------------------------------------------
# Proper (list) colorings
# ---------------------------------------------------------------------------
def _domains(graph: Graph, q: int, lists: Optional[Lists]) -> List[List[int]]:
    if q < 1:
        raise CutcolorError(f"q must be >= 1, got {q}")
    doms: List[List[int]] = [[]]
    for v in graph.vertices:
        if lists is None:
            doms.append(list(range(1, q + 1)))
            continue
        if v not in lists:
            raise GraphError(f"no color list for vertex {v}")
        doms.append(sorted(c for c in lists[v] if 1 <= c <= q))
    return doms


def _search(graph: Graph, doms: List[List[int]], stop_at_first: bool) -> Tuple[int, Dict[int, int]]:
    """Backtracking in vertex-id order, colors ascending."""
    n = graph.n
    earlier = [sorted(w for w in graph.neighbors(v) if w < v) for v in range(n + 1)]
    color = [0] * (n + 1)
    count = 0
    first: Dict[int, int] = {}

    def rec(v: int) -> bool:
        nonlocal count, first
        if v > n:
            count += 1
            if not first:
                first = {u: color[u] for u in range(1, n + 1)}
            return stop_at_first
        for c in doms[v]:
            if all(color[w] != c for w in earlier[v]):
                color[v] = c
                if rec(v + 1):
                    return True
        color[v] = 0
        return False

    rec(1)
    return count, first


def _space(doms: List[List[int]]) -> int:
    size = 1
    for d in doms[1:]:
        size *= len(d)
    return size


def count_proper_colorings(
    graph: Graph, q: int, lists: Optional[Lists] = None, *, budget: Optional[int] = None
) -> int:
    """Exact number of proper (list-)colorings with colors in [1, q]."""
    doms = _domains(graph, q, lists)
    _check_budget("coloring enumeration", _space(doms), budget)
    count, _ = _search(graph, doms, stop_at_first=False)
    logger.debug("count: n=%d m=%d q=%d -> %d", graph.n, graph.m, q, count)
    return count


def find_proper_coloring(
    graph: Graph, q: int, lists: Optional[Lists] = None, *, budget: Optional[int] = None
) -> Optional[Dict[int, int]]:
    """First proper (list-)coloring in backtracking order, or None."""
    doms = _domains(graph, q, lists)
    _check_budget("coloring enumeration", _space(doms), budget)
    count, first = _search(graph, doms, stop_at_first=True)
    return first if count else None


def is_colorable(
    graph: Graph, q: int, lists: Optional[Lists] = None, *, budget: Optional[int] = None
) -> bool:
    """Decision variant of :func:`count_proper_colorings`."""
    return find_proper_coloring(graph, q, lists, budget=budget) is not None


def extend_coloring(
    graph: Graph,
    q: int,
    partial: Mapping[int, int],
    lists: Optional[Lists] = None,
    *,
    budget: Optional[int] = None,
) -> Optional[Dict[int, int]]:
    """Complete *partial* to a proper (list-)coloring, or None if impossible.

    Uncolored vertices are split into connected components; each component is
    solved on its own with colors used by already-colored neighbors removed.
    The budget applies per component.
    """
    for u, w in graph.edges:
        if u in partial and w in partial and partial[u] == partial[w]:
            return None
    out = dict(partial)
    todo = [v for v in graph.vertices if v not in partial]
    seen: Set[int] = set()
    for start in todo:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        for v in comp:
            for w in graph.neighbors(v):
                if w not in partial and w not in seen:
                    seen.add(w)
                    comp.append(w)
        comp.sort()
        local = {v: k for k, v in enumerate(comp, start=1)}
        sub_edges = [
            (local[v], local[w]) for v in comp for w in graph.neighbors(v) if w in local and v < w
        ]
        sub = Graph(len(comp), tuple(sub_edges))
        sub_lists: Dict[int, Set[int]] = {}
        for v in comp:
            allowed = set(lists[v]) if lists is not None else set(range(1, q + 1))
            allowed -= {partial[w] for w in graph.neighbors(v) if w in partial}
            sub_lists[local[v]] = allowed
        found = find_proper_coloring(sub, q, sub_lists, budget=budget)
        if found is None:
            return None
        out.update({v: found[local[v]] for v in comp})
    return out


def _z3():
    try:
        import z3  # type: ignore
    except ImportError:
        raise CutcolorError(
            "SMT colorability needs z3-solver: pip install 'cutwidth-coloring[smt]'"
        ) from None
    return z3


def solve_coloring_smt(
    graph: Graph, q: int, lists: Optional[Lists] = None, *, timeout_ms: int = 0
) -> Optional[Dict[int, int]]:
    """Proper (list-)coloring found by z3, or None when none exists.

    One Boolean per (vertex, allowed color): every vertex takes at least one
    color, adjacent vertices never share one. The reported coloring picks the
    smallest true color per vertex, which is proper under those clauses.
    Raises :class:`CutcolorError` on a solver timeout.
    """
    z3 = _z3()
    doms = _domains(graph, q, lists)
    solver = z3.Solver()
    if timeout_ms > 0:
        solver.set("timeout", int(timeout_ms))
    var: Dict[Tuple[int, int], object] = {}
    for v in graph.vertices:
        if not doms[v]:
            return None
        for c in doms[v]:
            var[(v, c)] = z3.Bool(f"x_{v}_{c}")
        solver.add(z3.Or(*[var[(v, c)] for c in doms[v]]))
    for u, w in graph.edges:
        for c in set(doms[u]) & set(doms[w]):
            solver.add(z3.Or(z3.Not(var[(u, c)]), z3.Not(var[(w, c)])))

    verdict = solver.check()
    logger.debug("smt: n=%d m=%d q=%d -> %s", graph.n, graph.m, q, verdict)
    if verdict == z3.unsat:
        return None
    if verdict != z3.sat:
        raise CutcolorError(f"z3 returned {verdict} (timeout or resource limit)")
    model = solver.model()
    return {
        v: next(c for c in doms[v] if z3.is_true(model.eval(var[(v, c)], model_completion=True)))
        for v in graph.vertices
    }


def is_colorable_smt(
    graph: Graph, q: int, lists: Optional[Lists] = None, *, timeout_ms: int = 0
) -> bool:
    return solve_coloring_smt(graph, q, lists, timeout_ms=timeout_ms) is not None


# ---------------------------------------------------------------------------
# Cut matrices
# ---------------------------------------------------------------------------
def _check_prime(p: int, q: int) -> None:
    if not isprime(p):
        raise CutcolorError(f"{p} is not prime")
    if p < q:
        raise CutcolorError(f"field prime {p} is smaller than q={q}")


def eval_Mprime(
    cut: Cut, x: ColorVector, y: ColorVector, p: int, *, q: Optional[int] = None
) -> int:
    """prod over cut edges (v, w) of (x_v - y_w), reduced into [0, p).

    *q* defaults to the largest color used by x or y.
    """
    q_eff = q if q is not None else max([*x.values(), *y.values(), 1])
    _check_prime(p, q_eff)
    val = 1
    for v, w in cut.edges:
        val = (val * (x[v] - y[w])) % p
    return val


def _colorings(vertices: Sequence[int], q: int) -> np.ndarray:
    """All colorings of *vertices* in lexicographic order, shape (q^k, k)."""
    k = len(vertices)
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    rows = list(itertools.product(range(1, q + 1), repeat=k))
    return np.asarray(rows, dtype=np.int64)


def mprime_matrix(cut: Cut, q: int, p: int, *, budget: Optional[int] = None) -> np.ndarray:
    """M'_H over GF(p): rows are x in [q]^X, columns y in [q]^Y (lexicographic)."""
    _check_prime(p, q)
    _check_budget("cut matrix entries", q ** len(cut.left) * q ** len(cut.right), budget)
    X = _colorings(cut.left, q)
    Y = _colorings(cut.right, q)
    xi = {v: k for k, v in enumerate(cut.left)}
    yi = {w: k for k, w in enumerate(cut.right)}
    M = np.ones((X.shape[0], Y.shape[0]), dtype=np.int64)
    for v, w in cut.edges:
        diff = (X[:, xi[v]][:, None] - Y[:, yi[w]][None, :]) % p
        M = (M * diff) % p
    return M


def rank_of_Mprime(cut: Cut, q: int, p: int, *, budget: Optional[int] = None) -> int:
    """Rank of M'_H over GF(p) by elimination."""
    return rank_mod_p(mprime_matrix(cut, q, p, budget=budget), p)


# ---------------------------------------------------------------------------
# Graph polynomial and table entries
# ---------------------------------------------------------------------------
def _rank_map(graph: Graph, order: Optional[Sequence[int]]) -> Dict[int, int]:
    seq = list(order) if order is not None else list(graph.vertices)
    return {v: k for k, v in enumerate(seq)}


def pgz_bruteforce(
    graph: Graph,
    q: int,
    weights: WeightFunction,
    *,
    order: Optional[Sequence[int]] = None,
    budget: Optional[int] = None,
) -> Dict[int, int]:
    """{z: P_G(z)} for every weight z with a nonzero value.

    Edges are directed from the earlier to the later vertex of *order*
    (vertex-id order by default).
    """
    _check_budget("P_G enumeration", q**graph.n, budget)
    rank = _rank_map(graph, order)
    directed = [(u, v) if rank[u] < rank[v] else (v, u) for u, v in graph.edges]
    w = weights.table
    out: Dict[int, int] = defaultdict(int)
    for x in itertools.product(range(1, q + 1), repeat=graph.n):
        val = 1
        for a, b in directed:
            val *= x[a - 1] - x[b - 1]
            if val == 0:
                break
        if val == 0:
            continue
        z = sum(int(w[v, c]) for v, c in enumerate(x, start=1))
        out[z] += val
    return {z: v for z, v in out.items() if v != 0}


def eval_PGz_bruteforce(
    graph: Graph,
    q: int,
    weights: WeightFunction,
    z: int,
    *,
    order: Optional[Sequence[int]] = None,
    budget: Optional[int] = None,
) -> int:
    """P_G(z): sum over colorings of weight z of prod over edges (x_i - x_j)."""
    return pgz_bruteforce(graph, q, weights, order=order, budget=budget).get(z, 0)


def bag_split(
    graph: Graph, npd: NicePathDecomposition, i: int
) -> Tuple[List[int], List[int], Dict[int, int], Set[int], List[Tuple[int, int]]]:
    """(L_i, R_i, introduced degrees, V_i, E_i) for bag i, recomputed from scratch.

    L_i and R_i are sorted by vertex id; E_i keeps introduction order.
    """
    if not 0 <= i <= len(npd.events):
        raise GraphError(f"bag index {i} outside [0, {len(npd.events)}]")
    introduced: Set[int] = set()
    bag: Set[int] = set()
    edges: List[Tuple[int, int]] = []
    deg_in: Dict[int, int] = defaultdict(int)
    for ev in npd.events[:i]:
        if isinstance(ev, IntroduceVertex):
            introduced.add(ev.v)
            bag.add(ev.v)
        elif isinstance(ev, IntroduceEdge):
            edges.append((ev.u, ev.v))
            deg_in[ev.u] += 1
            deg_in[ev.v] += 1
        else:
            bag.discard(ev.v)
    left = sorted(v for v in bag if 2 * deg_in[v] <= graph.degree(v))
    right = sorted(v for v in bag if 2 * deg_in[v] > graph.degree(v))
    return left, right, dict(deg_in), introduced, edges


def table_entries_bruteforce(
    graph: Graph,
    npd: NicePathDecomposition,
    i: int,
    q: int,
    weights: WeightFunction,
    *,
    budget: Optional[int] = None,
) -> Dict[TableKey, int]:
    """Every nonzero T^z_i[d, e] by direct summation over colorings and orientations.

    Keys are ``(z, d, e)`` with d ordered like L_i and e like R_i (by vertex id).
    A reversal is an oriented edge whose head was introduced before its tail.
    """
    left, right, deg_in, introduced, edges = bag_split(graph, npd, i)
    colored = sorted(introduced - set(left))
    _check_budget(
        "table entry enumeration", q ** len(colored) * 2 ** len(edges), budget
    )
    rank = npd.introduction_rank()
    r_caps = [graph.degree(v) - deg_in.get(v, 0) for v in right]

    # Group orientations by (d on L, out-degrees on colored vertices).
    groups: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = defaultdict(int)
    for choice in itertools.product((0, 1), repeat=len(edges)):
        out: Dict[int, int] = defaultdict(int)
        sign = 1
        for (a, b), flip in zip(edges, choice):
            tail, head = (b, a) if flip else (a, b)
            out[tail] += 1
            if rank[head] < rank[tail]:
                sign = -sign
        d_key = tuple(out[u] for u in left)
        o_key = tuple(out[u] for u in colored)
        groups[(d_key, o_key)] += sign
    groups = {k: s for k, s in groups.items() if s}

    pos = {v: k for k, v in enumerate(colored)}
    right_idx = [pos[v] for v in right]
    e_vectors = list(itertools.product(*(range(c + 1) for c in r_caps)))
    result: Dict[TableKey, int] = defaultdict(int)
    wt = weights.table
    for x in itertools.product(range(1, q + 1), repeat=len(colored)):
        z = sum(int(wt[v, x[k]]) for k, v in enumerate(colored))
        for (d_key, o_key), coef in groups.items():
            mono = coef
            for k, o in enumerate(o_key):
                if o:
                    mono *= x[k] ** o
            for e in e_vectors:
                val = mono
                for k, ev in zip(right_idx, e):
                    if ev:
                        val *= x[k] ** ev
                result[(z, d_key, tuple(e))] += val
    return {k: v for k, v in result.items() if v != 0}


def eval_table_entry_bruteforce(
    graph: Graph,
    npd: NicePathDecomposition,
    i: int,
    d: Mapping[int, int],
    e: Mapping[int, int],
    z: int,
    q: int,
    weights: WeightFunction,
    *,
    budget: Optional[int] = None,
) -> int:
    """T^z_i[d, e] as a literal sum; *d* is keyed by L_i, *e* by R_i."""
    left, right, _, _, _ = bag_split(graph, npd, i)
    if set(d) != set(left) or set(e) != set(right):
        raise GraphError(
            f"index keys do not match the bag split (L={left}, R={right})"
        )
    key = (z, tuple(d[u] for u in left), tuple(e[u] for u in right))
    return table_entries_bruteforce(graph, npd, i, q, weights, budget=budget).get(key, 0)
