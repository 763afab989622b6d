# SPDX-License-Identifier: MIT
"""CNF -> q-Coloring of maximum degree d with a small path decomposition.

With q = (d+1)/2 the variables are cut into t groups of beta variables each,
where 2^beta <= q^p. Group i is encoded by the colors of p chains of
q-cliques Z_{i,1..p}: an assignment a of the group (bit l = variable l) maps
to the base-q digits of a. One more chain Y_c per color c plays the role of
the palette; a clique on the first Y terminals fixes which color is "c".

For every clause and every coloring of the groups it touches that is either
no valid encoding or leaves the clause unsatisfied, a path gadget is
inserted that blocks exactly that coloring. Its distinguished vertices hang
off the Z terminals of the round, its color lists are enforced by edges to
the Y terminals, and every terminal carries at most one such edge.

The decomposition sweeps the rounds in order: the current terminal of every
chain stays in the bag, the round's gadget is placed, then each chain is
advanced past the terminals the gadget used.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import GadgetError
from ..graph import (
    Event,
    Forget,
    Graph,
    IntroduceEdge,
    IntroduceVertex,
    NicePathDecomposition,
    pathwidth_of,
)
from ..oracle import extend_coloring
from ..util import get_logger
from .builder import GadgetInstance, GraphBuilder
from .chains import add_clique_chain
from .cnf import CnfFormula
from .pathgadget import path_gadget

__all__ = [
    "DegreeParams",
    "degree_params",
    "encode_group",
    "decode_group",
    "clause_groups",
    "bad_tuples",
    "sat_to_degree_coloring",
    "lift_assignment",
]

logger = get_logger("gadgets")

Digits = Tuple[int, ...]


@dataclass(frozen=True)
class DegreeParams:
    d: int
    p: int
    q: int
    beta: int
    t: int
    s: int
    groups: Tuple[Tuple[int, ...], ...]

    @property
    def slots(self) -> int:
        """Rounds reserved per clause: every coloring of s groups fits."""
        return self.q ** (self.p * self.s)

    @property
    def gadget_size(self) -> int:
        """Vertices of the largest possible path gadget."""
        return 4 * self.p * self.s - 1

    def group_of(self, var: int) -> int:
        return (var - 1) // self.beta + 1


def degree_params(formula: CnfFormula, d: int, p: int) -> DegreeParams:
    if d < 5 or d % 2 == 0:
        raise GadgetError(f"degree bound must be odd and >= 5, got {d}")
    if p < 1:
        raise GadgetError(f"p must be >= 1, got {p}")
    if formula.m < 1:
        raise GadgetError("formula needs at least one clause")
    formula.require_all_variables_used()
    q = (d + 1) // 2
    beta = (q**p).bit_length() - 1
    t = -(-formula.n // beta)
    groups = tuple(
        tuple(range(i * beta + 1, min((i + 1) * beta, formula.n) + 1)) for i in range(t)
    )
    return DegreeParams(d=d, p=p, q=q, beta=beta, t=t, s=formula.max_clause_size, groups=groups)


# ----------- group encoding ----------- #


def encode_group(bits: Sequence[bool], q: int, p: int) -> Digits:
    """Base-q digits (1-based colors, least significant first) of the group value."""
    a = sum(1 << ell for ell, bit in enumerate(bits) if bit)
    if a >= q**p:
        raise GadgetError(f"group value {a} does not fit in {p} digits base {q}")
    return tuple((a // q**k) % q + 1 for k in range(p))


def decode_group(digits: Sequence[int], q: int, size: int) -> Optional[Tuple[bool, ...]]:
    """Inverse of :func:`encode_group`; None when the digits encode no assignment."""
    a = sum((c - 1) * q**k for k, c in enumerate(digits))
    if a >= 1 << size:
        return None
    return tuple(bool(a >> ell & 1) for ell in range(size))


def clause_groups(formula: CnfFormula, params: DegreeParams, j: int) -> Tuple[int, ...]:
    """Groups touched by clause j (1-based), ascending."""
    return tuple(sorted({params.group_of(abs(lit)) for lit in formula.clauses[j - 1]}))


def bad_tuples(formula: CnfFormula, params: DegreeParams, j: int) -> List[Digits]:
    """Colorings of clause j's groups to block, in lexicographic order.

    A tuple concatenates p digits per touched group. It is bad when some
    group's digits are no valid encoding, or all are and clause j is false.
    """
    q, p = params.q, params.p
    touched = clause_groups(formula, params, j)
    clause = formula.clauses[j - 1]
    out: List[Digits] = []
    for tup in itertools.product(range(1, q + 1), repeat=p * len(touched)):
        values: Dict[int, bool] = {}
        valid = True
        for pos, g in enumerate(touched):
            members = params.groups[g - 1]
            bits = decode_group(tup[pos * p : (pos + 1) * p], q, len(members))
            if bits is None:
                valid = False
                break
            values.update(zip(members, bits))
        if not valid or not any((lit > 0) == values[abs(lit)] for lit in clause):
            out.append(tup)
    return out


# ----------- construction ----------- #


class _Sweep:
    """Event recorder: placing a vertex introduces its edges into the bag."""

    def __init__(self, builder: GraphBuilder) -> None:
        self._b = builder
        self._adj: Dict[int, List[int]] = {}
        self.bag: set[int] = set()
        self.events: List[Event] = []

    def freeze(self) -> Graph:
        graph = self._b.build()
        self._adj = {v: sorted(graph.neighbors(v)) for v in graph.vertices}
        return graph

    def place(self, v: int) -> None:
        self.events.append(IntroduceVertex(v))
        for w in self._adj[v]:
            if w in self.bag:
                self.events.append(IntroduceEdge(w, v))
        self.bag.add(v)

    def remove(self, v: int) -> None:
        self.events.append(Forget(v))
        self.bag.discard(v)


def _advance(sweep: _Sweep, cliques: List[List[int]], k: int) -> None:
    """Move a chain from terminal k to terminal k+1 (1-based)."""
    clique = cliques[k - 1]
    for w in clique[1:]:
        sweep.place(w)
    if k < len(cliques):
        sweep.place(cliques[k][0])
    for w in clique:
        sweep.remove(w)


def sat_to_degree_coloring(
    formula: CnfFormula, d: int, p: int, *, compact: bool = False
) -> GadgetInstance:
    """Build the degree-d instance; q-colorable iff *formula* is satisfiable.

    ``compact`` keeps only the rounds that hold a gadget and sizes the chains
    to the largest gadget used. Colorability and the degree bound are the
    same; only the instance is smaller.
    """
    params = degree_params(formula, d, p)
    q, m = params.q, formula.m

    per_clause = [bad_tuples(formula, params, j) for j in range(1, m + 1)]
    if compact:
        rounds_of = [len(bad) for bad in per_clause]
        width = max(4 * len(bad[0]) - 1 for bad in per_clause)
    else:
        rounds_of = [params.slots] * m
        width = params.gadget_size
    offsets = list(itertools.accumulate([0] + rounds_of[:-1]))
    total_rounds = sum(rounds_of)

    b = GraphBuilder()
    y_chains = {
        c: add_clique_chain(b, ("Y", c), width * total_rounds, q, "color-chain")
        for c in range(1, q + 1)
    }
    z_chains = {
        (i, k): add_clique_chain(b, ("Z", i, k), total_rounds, q, "variable-chain")
        for i in range(1, params.t + 1)
        for k in range(1, p + 1)
    }
    b.add_clique([y_chains[c][0][0] for c in range(1, q + 1)])

    gadgets: Dict[int, List[int]] = {}
    for j, bad in enumerate(per_clause, start=1):
        touched = clause_groups(formula, params, j)
        for r, tup in enumerate(bad, start=1):
            rnd = offsets[j - 1] + r
            pg = path_gadget(tup, q)
            ids = {
                v: b.add_vertex(("P", j, r, pg.labels[v]), "pathgadget") for v in pg.graph.vertices
            }
            for u, w in pg.graph.edges:
                b.add_edge(ids[u], ids[w])
            for pos, v in enumerate(pg.distinguished):
                z = z_chains[(touched[pos // p], pos % p + 1)]
                b.add_edge(ids[v], z[rnd - 1][0])
            for ell in pg.graph.vertices:
                for c in range(1, q + 1):
                    if c not in pg.lists[ell]:
                        b.add_edge(ids[ell], y_chains[c][(rnd - 1) * width + ell - 1][0])
            gadgets[rnd] = [ids[v] for v in pg.graph.vertices]

    sweep = _Sweep(b)
    graph = sweep.freeze()
    chains = [y_chains[c] for c in range(1, q + 1)] + [z_chains[key] for key in sorted(z_chains)]
    for ch in chains:
        sweep.place(ch[0][0])
    for rnd in range(1, total_rounds + 1):
        vertices = gadgets.get(rnd, [])
        for v in vertices:
            sweep.place(v)
        for key in sorted(z_chains):
            _advance(sweep, z_chains[key], rnd)
        for c in range(1, q + 1):
            for k in range((rnd - 1) * width + 1, rnd * width + 1):
                _advance(sweep, y_chains[c], k)
        for v in vertices:
            sweep.remove(v)
    npd = NicePathDecomposition(tuple(sweep.events))
    pw = pathwidth_of(npd)

    info = {
        "d": d,
        "p": p,
        "q": q,
        "s": params.s,
        "beta": params.beta,
        "t": params.t,
        "groups": [list(g) for g in params.groups],
        "slots": params.slots,
        "M": total_rounds,
        "N": width,
        "compact": compact,
        "gadgets": len(gadgets),
        "max_degree": graph.max_degree,
        "pathwidth": pw,
        "width_constant": (pw - p * params.t - q) / q**params.s,
    }
    logger.debug(
        "degree: n=%d m=%d d=%d p=%d -> %d vertices, %d edges, pw=%d, %d gadgets",
        formula.n, m, d, p, graph.n, graph.m, pw, len(gadgets),
    )  # fmt: skip
    return GadgetInstance(
        family="degree",
        graph=graph,
        q=q,
        decomposition=npd,
        provenance=b.kinds,
        labels=b.labels,
        formula=formula,
        params=info,
    )


# ----------- witnesses ----------- #


def _chain_colors(cliques: List[List[int]], color: int, q: int, out: Dict[int, int]) -> None:
    rest = [c for c in range(1, q + 1) if c != color]
    for clique in cliques:
        out[clique[0]] = color
        out.update(zip(clique[1:], rest))


def lift_assignment(inst: GadgetInstance, assignment: Sequence[bool]) -> Dict[int, int]:
    """A proper q-coloring of a degree instance from a satisfying assignment.

    Chains take the palette and the group encodings; each path gadget is then
    completed on its own. Raises GadgetError when some gadget cannot be
    completed, which happens exactly when *assignment* falsifies a clause.
    """
    if inst.family != "degree":
        raise GadgetError(f"expected a degree instance, got {inst.family!r}")
    q, p = inst.q, int(inst.params["p"])
    groups: List[List[int]] = inst.params["groups"]
    chains: Dict[tuple, Dict[int, List[int]]] = {}
    for v, label in inst.labels.items():
        if isinstance(label[0], tuple) and label[0][0] in ("Y", "Z"):
            name, k, r = label
            chains.setdefault(name, {}).setdefault(k, [0] * q)[r] = v

    partial: Dict[int, int] = {}
    for name, by_k in chains.items():
        cliques = [by_k[k] for k in sorted(by_k)]
        if name[0] == "Y":
            color = name[1]
        else:
            _, i, k = name
            bits = [assignment[x - 1] for x in groups[i - 1]]
            color = encode_group(bits, q, p)[k - 1]
        _chain_colors(cliques, color, q, partial)

    out = extend_coloring(inst.graph, q, partial)
    if out is None:
        raise GadgetError("assignment leaves some clause gadget uncolorable")
    return out

