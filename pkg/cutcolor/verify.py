# SPDX-License-Identifier: MIT
"""Named cross-checks against the brute-force oracle.

Every check takes a :class:`CheckContext` and returns a
:class:`~cutcolor.schemas.VerifyReport`; content problems are reported, never
raised. Checks that need an instance use the one in the context when given
and otherwise draw small random ones from the context seed.

Checks
------
- decomp, layout: certificate validity
- reduce: H-representation of reduced tables on random cuts
- rank: rank of M'_H against the product of (deg + 1)
- table: every T^z_i[d, e] of the randomized DP against direct summation, over
  layout-driven and randomly scheduled decompositions
- agree: det, rand and the oracle agree on small random graphs
- onesided: the randomized solver never says yes on uncolorable graphs
- isolation: share of trials with a nonzero P_G(z) on colorable graphs
- hcol, pathgadget, chain: gadget contracts
- planar, degree: generated instances (certificates, degree, colorability)
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from .bench import random_graph
from .detsolver import PartialColoringSet, reduce, solve_cutwidth_det
from .errors import CutcolorError, GraphError, UnknownCheck
from .field import field_prime, random_prime
from .gadgets.builder import GadgetInstance
from .gadgets.chains import chain_of_cliques
from .gadgets.cnf import CnfFormula, brute_force_sat, formula_from_clauses
from .gadgets.degree import sat_to_degree_coloring
from .gadgets.hcol import HCOL_TERMINALS, build_hcol
from .gadgets.pathgadget import forbid, path_gadget
from .gadgets.planar import cnf_to_planar3col
from .gadgets.witness import witness_coloring
from .graph import (
    Cut,
    Graph,
    LinearLayout,
    NicePathDecomposition,
    complete_graph,
    cycle_graph,
    iter_cuts,
    layout_to_nice_decomposition,
    random_nice_decomposition,
    strip_isolated,
    validate_decomposition,
)
from .oracle import (
    count_proper_colorings,
    find_proper_coloring,
    is_colorable,
    is_colorable_smt,
    rank_of_Mprime,
    table_entries_bruteforce,
)
from .randsolver import ZMode, iter_tables, run_pathwidth_rand
from .schemas import VerifyReport
from .util import get_logger, make_rng
from .weights import sample_weights

__all__ = ["CheckContext", "CHECKS", "check_names", "run_check"]

logger = get_logger("verify")

# trials of the randomized cross-check on generated instances
RAND_CHECK_TRIALS = 16


@dataclass
class CheckContext:
    graph: Optional[Graph] = None
    layout: Optional[LinearLayout] = None
    decomp: Optional[NicePathDecomposition] = None
    cnf: Optional[CnfFormula] = None
    q: int = 3
    seed: int = 0
    cases: Optional[int] = None
    d: int = 5
    p: int = 1
    compact: bool = False
    max_m: int = 3
    max_q: int = 4

    def rng(self) -> np.random.Generator:
        return make_rng(self.seed)

    def n_cases(self, default: int) -> int:
        return self.cases if self.cases is not None else default


@dataclass
class _Tally:
    """Collects cases and keeps the first counterexample."""

    name: str
    seed: int
    cases: int = 0
    failures: int = 0
    first: Optional[Dict[str, Any]] = None
    notes: List[str] = field(default_factory=list)

    def record(self, ok: bool, detail: Callable[[], Dict[str, Any]]) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = detail()

    def report(self) -> VerifyReport:
        if self.cases == 0:
            self.notes.append("no cases were run")
        return VerifyReport(
            check=self.name,
            passed=self.failures == 0 and self.cases > 0,
            cases=self.cases,
            failures=self.failures,
            seed=self.seed,
            counterexample=self.first,
            notes=self.notes,
        )


def _edges(g: Graph) -> List[List[int]]:
    return [list(e) for e in g.edges]


def _random_layout(g: Graph, rng: np.random.Generator) -> LinearLayout:
    return LinearLayout(tuple(int(v) for v in rng.permutation(g.n) + 1))


def _random_cut(rng: np.random.Generator, max_side: int, max_edges: int) -> Cut:
    """Random bipartite cut graph with X = 1..a and Y = a+1..a+b, no isolated sides."""
    while True:
        a = int(rng.integers(1, max_side + 1))
        b = int(rng.integers(1, max_side + 1))
        pairs = [(x, a + y) for x in range(1, a + 1) for y in range(1, b + 1)]
        k = int(rng.integers(1, min(max_edges, len(pairs)) + 1))
        chosen = sorted(pairs[int(i)] for i in rng.choice(len(pairs), size=k, replace=False))
        left = tuple(sorted({x for x, _ in chosen}))
        right = tuple(sorted({y for _, y in chosen}))
        if left and right:
            return Cut(index=a, edges=tuple(chosen), left=left, right=right)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------
def check_decomp(ctx: CheckContext) -> VerifyReport:
    t = _Tally("decomp", ctx.seed)
    if ctx.graph is None or ctx.decomp is None:
        raise CutcolorError("check 'decomp' needs --graph and --decomp")
    problems = validate_decomposition(ctx.graph, ctx.decomp)
    t.record(not problems, lambda: {"violations": problems[:20], "total": len(problems)})
    return t.report()


def check_layout(ctx: CheckContext) -> VerifyReport:
    t = _Tally("layout", ctx.seed)
    if ctx.graph is None or ctx.layout is None:
        raise CutcolorError("check 'layout' needs --graph and --layout")
    try:
        ctx.layout.check(ctx.graph)
        err = None
    except GraphError as e:
        err = str(e)
    t.record(err is None, lambda: {"error": err})
    return t.report()


# ---------------------------------------------------------------------------
# Deterministic solver
# ---------------------------------------------------------------------------
def _represents(cut: Cut, full: np.ndarray, kept: np.ndarray, q: int) -> Tuple[bool, Any]:
    """Same right-side colorings have a compatible partner in *full* and *kept*."""
    xi = {v: k for k, v in enumerate(cut.left)}
    yi = {w: k for k, w in enumerate(cut.right)}
    Y = np.asarray(list(itertools.product(range(1, q + 1), repeat=len(cut.right))), dtype=np.int64)

    def reachable(rows: np.ndarray) -> np.ndarray:
        ok = np.ones((rows.shape[0], Y.shape[0]), dtype=bool)
        for v, w in cut.edges:
            ok &= rows[:, xi[v]][:, None] != Y[:, yi[w]][None, :]
        return ok.any(axis=0)

    a, b = reachable(full), reachable(kept)
    if np.array_equal(a, b):
        return True, None
    bad = int(np.nonzero(a != b)[0][0])
    return False, [int(c) for c in Y[bad]]


def check_reduce(ctx: CheckContext) -> VerifyReport:
    t = _Tally("reduce", ctx.seed)
    rng = ctx.rng()
    cuts: List[Tuple[Cut, int]] = []
    if ctx.graph is not None and ctx.layout is not None:
        cuts = [(c, ctx.q) for c in iter_cuts(ctx.graph, ctx.layout) if 0 < len(c) <= 6]
        cuts = cuts[: ctx.n_cases(len(cuts))]
    else:
        for _ in range(ctx.n_cases(200)):
            cuts.append((_random_cut(rng, 4, 6), int(rng.integers(2, ctx.max_q + 1))))
    for cut, q in cuts:
        size = min(200, q ** len(cut.left))
        rows = rng.integers(1, q + 1, size=(size, len(cut.left)))
        S = PartialColoringSet(cut.left, rows)
        kept = reduce(cut, S, field_prime(q))
        bound = math.prod(d + 1 for d in cut.left_degrees.values())
        ok, y = _represents(cut, S.rows, kept.rows, q)
        t.record(
            ok and len(kept) <= bound <= 2 ** len(cut),
            lambda: {
                "q": q,
                "cut_edges": [list(e) for e in cut.edges],
                "table": len(S),
                "kept": len(kept),
                "bound": bound,
                "missed_right_coloring": y,
            },
        )
    return t.report()


def check_rank(ctx: CheckContext) -> VerifyReport:
    t = _Tally("rank", ctx.seed)
    rng = ctx.rng()
    for _ in range(ctx.n_cases(100)):
        cut = _random_cut(rng, 3, 9)
        q = int(rng.integers(2, ctx.max_q + 1))
        p = field_prime(q).p
        rank = rank_of_Mprime(cut, q, p)
        bound = math.prod(d + 1 for d in cut.left_degrees.values())
        t.record(
            rank <= bound,
            lambda: {"q": q, "p": p, "cut_edges": [list(e) for e in cut.edges], "rank": rank},
        )
    return t.report()


# ---------------------------------------------------------------------------
# Randomized solver
# ---------------------------------------------------------------------------
def _small_graphs(ctx: CheckContext, count: int, max_n: int, max_m: int) -> List[Graph]:
    if ctx.graph is not None:
        return [ctx.graph]
    rng = ctx.rng()
    out: List[Graph] = []
    for k in range(count):
        n = int(rng.integers(2, max_n + 1))
        m = int(rng.integers(1, min(max_m, n * (n - 1) // 2) + 1))
        out.append(random_graph(n, m, seed=ctx.seed * 7919 + k))
    return out


def check_table(ctx: CheckContext) -> VerifyReport:
    t = _Tally("table", ctx.seed)
    rng = ctx.rng()
    for k, g in enumerate(_small_graphs(ctx, ctx.n_cases(50), 7, 10)):
        st = strip_isolated(g)
        if st.graph.n == 0:
            continue
        h = st.graph
        if ctx.graph is not None and ctx.decomp is not None and not st.removed:
            npd = ctx.decomp
        elif k % 2:
            npd = random_nice_decomposition(h, rng)
        else:
            npd = layout_to_nice_decomposition(h, _random_layout(h, rng))
        q = ctx.q
        weights = sample_weights(h, q, ctx.seed * 104729 + k)
        p = random_prime(rng)
        for table in iter_tables(h, npd, q, weights, p):
            want = {
                key: v % p
                for key, v in table_entries_bruteforce(h, npd, table.index, q, weights).items()
                if v % p
            }
            got = table.as_dict()
            t.record(
                got == want,
                lambda: {
                    "edges": _edges(h),
                    "events": [str(ev) for ev in npd.events],
                    "bag": table.index,
                    "p": p,
                    "only_dp": sorted(map(str, set(got) - set(want)))[:10],
                    "only_oracle": sorted(map(str, set(want) - set(got)))[:10],
                },
            )
    return t.report()


def check_agree(ctx: CheckContext) -> VerifyReport:
    t = _Tally("agree", ctx.seed)
    rng = ctx.rng()
    for k, g in enumerate(_small_graphs(ctx, ctx.n_cases(300), 10, 20)):
        q = ctx.q if ctx.graph is not None else int(rng.integers(2, 5))
        layout = _random_layout(g, rng)
        truth = is_colorable(g, q)
        det = solve_cutwidth_det(g, layout, q)
        st = strip_isolated(g)
        if st.graph.n:
            npd = layout_to_nice_decomposition(st.graph, st.layout(layout))
            rand = run_pathwidth_rand(st.graph, npd, q, 32, ctx.seed + k).colorable
        else:
            rand = True
        t.record(
            det == truth == rand,
            lambda: {"edges": _edges(g), "n": g.n, "q": q, "oracle": truth, "det": det,
                     "rand": rand, "layout": list(layout.order)},
        )  # fmt: skip
    return t.report()


def check_onesided(ctx: CheckContext) -> VerifyReport:
    """Single trials never say yes on uncolorable graphs.

    Besides odd cycles and K_{q+1} this runs the degree instance of an
    unsatisfiable formula over its own decomposition, in eval mode.
    """
    t = _Tally("onesided", ctx.seed)
    cases: List[Tuple[str, Graph, int, NicePathDecomposition, ZMode]] = []
    for n in range(3, 12, 2):
        g = cycle_graph(n)
        npd = layout_to_nice_decomposition(g, LinearLayout.identity(n))
        cases.append((f"C{n}", g, 2, npd, "full"))
    for q in range(2, 5):
        g = complete_graph(q + 1)
        npd = layout_to_nice_decomposition(g, LinearLayout.identity(q + 1))
        cases.append((f"K{q + 1}", g, q, npd, "full"))
    unsat = formula_from_clauses(1, [[1], [-1]])
    inst = sat_to_degree_coloring(unsat, ctx.d, ctx.p, compact=True)
    if inst.decomposition is not None:
        cases.append(("degree (x1)(-x1)", inst.graph, inst.q, inst.decomposition, "eval"))
    seeds = ctx.n_cases(20)
    for name, g, q, npd, mode in cases:
        for s in range(seeds):
            seed = ctx.seed * 1000 + s
            res = run_pathwidth_rand(g, npd, q, 1, seed, z_mode=mode)
            t.record(not res.colorable, lambda: {"graph": name, "q": q, "seed": seed})
    return t.report()


def check_isolation(ctx: CheckContext) -> VerifyReport:
    """Per-trial success share; the report fails below 0.4."""
    t = _Tally("isolation", ctx.seed)
    rng = ctx.rng()
    hits = trials = 0
    graphs = [g for g in _small_graphs(ctx, ctx.n_cases(200), 8, 12) if is_colorable(g, ctx.q)]
    for k, g in enumerate(graphs):
        st = strip_isolated(g)
        if st.graph.n == 0:
            continue
        npd = layout_to_nice_decomposition(st.graph, st.layout(_random_layout(g, rng)))
        res = run_pathwidth_rand(st.graph, npd, ctx.q, 1, ctx.seed * 31337 + k)
        trials += 1
        hits += int(res.colorable)
    rate = hits / trials if trials else 0.0
    t.notes.append(f"success rate {rate:.3f} over {trials} trials")
    t.record(trials > 0 and rate >= 0.4, lambda: {"rate": rate, "trials": trials})
    return t.report()


# ---------------------------------------------------------------------------
# Gadgets
# ---------------------------------------------------------------------------
def check_hcol(ctx: CheckContext) -> VerifyReport:
    t = _Tally("hcol", ctx.seed)
    h = build_hcol()
    u, v = HCOL_TERMINALS["u"], HCOL_TERMINALS["v"]
    u2, v2 = HCOL_TERMINALS["u'"], HCOL_TERMINALS["v'"]
    for a, b in itertools.product((1, 2, 3), repeat=2):
        lists = {w: {1, 2, 3} for w in h.graph.vertices}
        lists.update({u: {a}, u2: {a}, v: {b}, v2: {b}})
        t.record(is_colorable(h.graph, 3, lists), lambda: {"boundary": [a, b, a, b]})
    for x, y in ((u, u2), (v, v2)):
        bad = 0
        for a, b in itertools.permutations((1, 2, 3), 2):
            lists = {w: {1, 2, 3} for w in h.graph.vertices}
            lists.update({x: {a}, y: {b}})
            bad += count_proper_colorings(h.graph, 3, lists)
        t.record(bad == 0, lambda: {"terminals": [x, y], "colorings_with_unequal_colors": bad})
    t.record(h.graph.m <= 3 * h.graph.n - 6, lambda: {"edges": h.graph.m})
    t.record(nx.check_planarity(nx.Graph(h.graph.edges))[0], lambda: {"planar": False})
    return t.report()


def check_pathgadget(ctx: CheckContext) -> VerifyReport:
    t = _Tally("pathgadget", ctx.seed)
    for q in range(3, ctx.max_q + 1):
        for m in range(1, ctx.max_m + 1):
            for c in itertools.product(range(1, q + 1), repeat=m):
                inst = path_gadget(c, q)
                for d in itertools.product(range(1, q + 1), repeat=m):
                    lists = forbid(inst, d)
                    ok = find_proper_coloring(inst.graph, q, lists) is not None
                    t.record(ok == (c != d), lambda: {"q": q, "c": list(c), "d": list(d)})
    return t.report()


def check_chain(ctx: CheckContext) -> VerifyReport:
    t = _Tally("chain", ctx.seed)
    for q in range(2, ctx.max_q + 1):
        for length in range(1, 4):
            ch = chain_of_cliques(length, q)
            first, last = ch.terminals[0], ch.terminals[-1]
            total = count_proper_colorings(ch.graph, q)
            unequal = 0
            pairs = itertools.permutations(range(1, q + 1), 2) if first != last else ()
            for a, b in pairs:
                lists = {w: set(range(1, q + 1)) for w in ch.graph.vertices}
                lists.update({first: {a}, last: {b}})
                unequal += count_proper_colorings(ch.graph, q, lists)
            t.record(
                total > 0 and unequal == 0,
                lambda: {"t": length, "q": q, "total": total, "unequal": unequal},
            )
            if length >= 3:
                t.record(
                    ch.graph.max_degree == 2 * (q - 1),
                    lambda: {"t": length, "q": q, "max_degree": ch.graph.max_degree},
                )
    return t.report()


def _equivalence(t: _Tally, inst: GadgetInstance, formula: CnfFormula, seed: int) -> None:
    """Satisfying formulas lift to a proper coloring.

    Instances that carry a decomposition are also run through the randomized
    solver, whose answer must match satisfiability. Layout-only instances of
    unsatisfiable formulas go to z3.
    """
    sat = brute_force_sat(formula)
    if sat is not None:
        col = witness_coloring(inst, sat)
        ok = all(col[a] != col[b] for a, b in inst.graph.edges)
        t.record(ok, lambda: {"formula": formula.to_dimacs(), "assignment": list(sat)})
    if inst.decomposition is not None:
        res = run_pathwidth_rand(
            inst.graph, inst.decomposition, inst.q, RAND_CHECK_TRIALS, seed, z_mode="eval"
        )
        t.record(
            res.colorable == (sat is not None),
            lambda: {"formula": formula.to_dimacs(), "satisfiable": sat is not None,
                     "rand": res.colorable, "seed": seed},
        )  # fmt: skip
        return
    if sat is None:
        try:
            colorable = is_colorable_smt(inst.graph, inst.q)
        except CutcolorError as e:
            raise CutcolorError(f"unsatisfiable {inst.family} instance needs z3: {e}") from e
        t.record(not colorable, lambda: {"formula": formula.to_dimacs(), "colorable": True})


def check_planar(ctx: CheckContext) -> VerifyReport:
    t = _Tally("planar", ctx.seed)
    formula = ctx.cnf or formula_from_clauses(2, [[1, 2]])
    inst = cnf_to_planar3col(formula)
    g = inst.graph
    problems = inst.certificate_problems()
    t.record(not problems, lambda: {"certificate": problems[:10]})
    t.record(g.m <= 3 * g.n - 6, lambda: {"vertices": g.n, "edges": g.m})
    t.record(nx.check_planarity(nx.Graph(g.edges))[0], lambda: {"planar": False})
    cells = inst.drawing.violations(g) if inst.drawing is not None else ["no drawing"]
    t.record(not cells, lambda: {"cell_violations": cells[:10]})
    t.notes.append(f"cutwidth {inst.params['cutwidth']}, excess {inst.params['excess']}")
    _equivalence(t, inst, formula, ctx.seed)
    return t.report()


def check_degree(ctx: CheckContext) -> VerifyReport:
    t = _Tally("degree", ctx.seed)
    formula = ctx.cnf or formula_from_clauses(1, [[1]])
    inst = sat_to_degree_coloring(formula, ctx.d, ctx.p, compact=ctx.compact)
    problems = inst.certificate_problems()
    t.record(not problems, lambda: {"certificate": problems[:10]})
    t.record(
        inst.graph.max_degree <= ctx.d,
        lambda: {"max_degree": inst.graph.max_degree, "d": ctx.d},
    )
    t.notes.append(
        f"pathwidth {inst.params['pathwidth']}, width constant {inst.params['width_constant']:.3f}"
    )
    _equivalence(t, inst, formula, ctx.seed)
    return t.report()


# ----------- registry ----------- #

CHECKS: Dict[str, Callable[[CheckContext], VerifyReport]] = {
    "decomp": check_decomp,
    "layout": check_layout,
    "reduce": check_reduce,
    "rank": check_rank,
    "table": check_table,
    "agree": check_agree,
    "onesided": check_onesided,
    "isolation": check_isolation,
    "hcol": check_hcol,
    "pathgadget": check_pathgadget,
    "chain": check_chain,
    "planar": check_planar,
    "degree": check_degree,
}


def check_names() -> List[str]:
    return sorted(CHECKS)


def run_check(name: str, ctx: CheckContext) -> VerifyReport:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise UnknownCheck(f"unknown check {name!r} (known: {', '.join(check_names())})") from None
    report = fn(ctx)
    logger.debug(
        "verify %s: %s (%d cases, %d failures)",
        name, "pass" if report.passed else "FAIL", report.cases, report.failures,
    )  # fmt: skip
    return report
