# SPDX-License-Identifier: MIT
"""Timing runs over families of bounded-cutwidth graphs.

Instances come either from files (``<name>.col`` next to ``<name>.lay``) or
from :func:`banded_graph`, which grows random chords on a path until the
identity layout reaches the requested cutwidth. Each instance is solved with
the selected algorithms, and log2 of the wall time is fitted against the
cutwidth by least squares; 2**slope is the growth factor per unit cutwidth.

Public API
----------
- random_graph(n, m, seed) -> Graph
- banded_graph(n, width, seed, span=...) -> Graph
- BenchInstance, generated_instances(...), load_instances(paths)
- bench_instance(inst, q, ...) -> BenchRow
- fit_growth(rows, alg) -> float | None
- run_bench(instances, q, ..., jobs) -> BenchReport (async)
"""
from __future__ import annotations

import asyncio
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

import networkx as nx
import numpy as np

from .detsolver import run_cutwidth_det
from .errors import FormatError
from .formats import read_graph, read_layout
from .graph import (
    Graph,
    LinearLayout,
    cutwidth_of,
    graph_from_pairs,
    layout_to_nice_decomposition,
    strip_isolated,
)
from .layout import cutwidth_lower_bound
from .oracle import oracle_would_refuse
from .randsolver import ZMode, run_pathwidth_rand
from .schemas import BenchReport, BenchRow
from .util import get_logger, make_rng

__all__ = [
    "random_graph",
    "banded_graph",
    "BenchInstance",
    "generated_instances",
    "load_instances",
    "bench_instance",
    "fit_growth",
    "run_bench",
]

logger = get_logger("bench")


# ----------- instance families ----------- #


def _from_nx(g: nx.Graph, n: int) -> Graph:
    return graph_from_pairs(((u + 1, v + 1) for u, v in g.edges), n)


def random_graph(n: int, m: int, seed: int) -> Graph:
    """G(n, m) on vertices 1..n."""
    return _from_nx(nx.gnm_random_graph(n, m, seed=int(seed)), n)


def banded_graph(n: int, width: int, seed: int, span: int = 6) -> Graph:
    """A path plus random chords of length <= *span*, identity-layout cutwidth <= *width*."""
    g = nx.path_graph(n)
    cuts = np.ones(max(n - 1, 0), dtype=np.int64)
    rng = make_rng(seed)
    chords = [(i, j) for i in range(n) for j in range(i + 2, min(i + span, n - 1) + 1)]
    for k in rng.permutation(len(chords)):
        i, j = chords[int(k)]
        if int(cuts[i:j].max()) + 1 <= width:
            g.add_edge(i, j)
            cuts[i:j] += 1
    return _from_nx(g, n)


@dataclass(frozen=True)
class BenchInstance:
    name: str
    graph: Graph
    layout: LinearLayout

    @property
    def cutwidth(self) -> int:
        return cutwidth_of(self.graph, self.layout)


def generated_instances(
    ctw_min: int, ctw_max: int, *, n: int = 40, per_width: int = 1, seed: int = 0
) -> List[BenchInstance]:
    out: List[BenchInstance] = []
    for w in range(ctw_min, ctw_max + 1):
        for k in range(per_width):
            g = banded_graph(n, w, seed=seed * 1_000_003 + w * 101 + k)
            out.append(BenchInstance(f"banded-n{n}-w{w}-{k}", g, LinearLayout.identity(n)))
    return out


def load_instances(paths: Iterable[str | Path]) -> List[BenchInstance]:
    """``*.col`` files (or directories of them), each with a sibling ``.lay``."""
    files: List[Path] = []
    for raw in paths:
        p = Path(raw)
        files.extend(sorted(p.glob("*.col")) if p.is_dir() else [p])
    out: List[BenchInstance] = []
    for f in files:
        lay = f.with_suffix(".lay")
        if not lay.exists():
            raise FormatError("no layout next to graph file", path=str(lay))
        out.append(BenchInstance(f.stem, read_graph(f), read_layout(lay)))
    return out


# ----------- measurement ----------- #


def bench_instance(
    inst: BenchInstance,
    q: int,
    *,
    algs: Sequence[str] = ("det", "rand"),
    trials: int = 4,
    seed: int = 0,
    z_mode: ZMode = "eval",
    skip_within_bound: bool = False,
) -> BenchRow:
    g = inst.graph
    row = BenchRow(
        instance=inst.name,
        n=g.n,
        m=g.m,
        q=q,
        cutwidth=inst.cutwidth,
        lower_bound=cutwidth_lower_bound(g),
        oracle_refused=oracle_would_refuse(g, q),
    )
    if "det" in algs:
        t0 = time.perf_counter()
        det = run_cutwidth_det(g, inst.layout, q, skip_within_bound=skip_within_bound)
        row.det_seconds = time.perf_counter() - t0
        row.det_answer = "yes" if det.colorable else "no"
        row.det_max_table = det.max_table
    if "rand" in algs:
        t0 = time.perf_counter()
        st = strip_isolated(g)
        if st.graph.n == 0:
            colorable = True
        else:
            npd = layout_to_nice_decomposition(st.graph, st.layout(inst.layout))
            res = run_pathwidth_rand(st.graph, npd, q, trials, seed, z_mode=z_mode)
            colorable = res.colorable
        row.rand_seconds = time.perf_counter() - t0
        row.rand_answer = "yes" if colorable else "no"
    logger.debug(
        "bench: %s ctw=%d det=%s rand=%s refused=%s",
        inst.name, row.cutwidth, row.det_seconds, row.rand_seconds, row.oracle_refused,
    )  # fmt: skip
    return row


def fit_growth(rows: Sequence[BenchRow], alg: str) -> Optional[float]:
    """2**slope of log2(seconds) against cutwidth; None with fewer than two widths."""
    pts = [
        (r.cutwidth, getattr(r, f"{alg}_seconds"))
        for r in rows
        if getattr(r, f"{alg}_seconds") is not None
    ]
    pts = [(w, s) for w, s in pts if s > 0]
    if len({w for w, _ in pts}) < 2:
        return None
    x = np.array([w for w, _ in pts], dtype=float)
    y = np.log2(np.array([s for _, s in pts], dtype=float))
    slope, _ = np.polyfit(x, y, 1)
    return float(2.0**slope)


async def run_bench(
    instances: Sequence[BenchInstance],
    q: int,
    *,
    algs: Sequence[str] = ("det", "rand"),
    trials: int = 4,
    seed: int = 0,
    z_mode: ZMode = "eval",
    jobs: int = 1,
    skip_within_bound: bool = False,
) -> BenchReport:
    """Benchmark every instance, at most *jobs* at a time; rows keep input order."""
    sema = asyncio.Semaphore(max(1, jobs))

    async def worker(inst: BenchInstance) -> BenchRow:
        async with sema:
            return await asyncio.to_thread(
                bench_instance, inst, q, algs=algs, trials=trials, seed=seed, z_mode=z_mode,
                skip_within_bound=skip_within_bound,
            )

    rows = list(await asyncio.gather(*(worker(inst) for inst in instances)))
    agree = all(
        r.det_answer == r.rand_answer
        for r in rows
        if r.det_answer is not None and r.rand_answer is not None
    )
    growth = {alg: fit_growth(rows, alg) for alg in algs}
    return BenchReport(rows=rows, q=q, seed=seed, growth=growth, agree=agree)
