# cutcolor/cli/commands.py
"""cutcolor command line: solve, gen, verify, bench.

Exit codes: 0 when the answer is yes (or the check passed), 1 when it is no
(or failed), 2 on any error.
"""
import asyncio
import json
import time
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional

import typer
from dotenv import load_dotenv
from pydantic import ValidationError

from cutcolor.bench import generated_instances, load_instances, run_bench
from cutcolor.detsolver import run_cutwidth_det
from cutcolor.errors import CutcolorError, GraphError
from cutcolor.formats import (
    read_cnf,
    read_decomposition,
    read_graph,
    read_layout,
    write_decomposition,
    write_graph,
    write_layout,
)
from cutcolor.gadgets.builder import GadgetInstance
from cutcolor.gadgets.degree import sat_to_degree_coloring
from cutcolor.gadgets.listcol import cnf_to_list3col
from cutcolor.gadgets.plain import list3col_to_3col
from cutcolor.gadgets.planar import cnf_to_planar3col
from cutcolor.graph import (
    Graph,
    NicePathDecomposition,
    cutwidth_of,
    decomposition_order,
    layout_to_nice_decomposition,
    pathwidth_of,
    strip_isolated,
    validate_decomposition,
)
from cutcolor.layout import find_layout
from cutcolor.oracle import count_proper_colorings
from cutcolor.randsolver import RandResult, run_pathwidth_rand, run_trial, summarize_trials
from cutcolor.schemas import InstanceMeta, RunConfig, RunReport
from cutcolor.util import get_logger
from cutcolor.verify import CheckContext, check_names, run_check

app = typer.Typer(
    help="Exact q-coloring parameterized by cutwidth / pathwidth, with instance generators.",
    no_args_is_help=True,
)

logger = get_logger("cli")

FAMILIES = ("planar3col", "3col", "degree")


def _load_env(env_file: Optional[str]) -> None:
    if env_file:
        if not Path(env_file).is_file():
            raise CutcolorError(f"env file not found: {env_file}")
        load_dotenv(env_file, override=False)


def _fail(exc: BaseException) -> NoReturn:
    typer.secho(f"error: {exc}", fg=typer.colors.RED, err=True)
    raise typer.Exit(code=2)


def _emit(text: str, out: Optional[str]) -> None:
    typer.echo(text, nl=False)
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


# --------------------------------------------------------------------------- #
# solve                                                                       #
# --------------------------------------------------------------------------- #
async def _rand_parallel(
    graph: Graph, npd: NicePathDecomposition, cfg: RunConfig
) -> RandResult:
    """Trials in batches of ``jobs``; stops after the first batch with a hit."""
    sema = asyncio.Semaphore(cfg.jobs)

    async def one(index: int):
        async with sema:
            return await asyncio.to_thread(
                run_trial, graph, npd, cfg.q, cfg.seed, index, z_mode=cfg.z_mode
            )

    outcomes = []
    for start in range(0, cfg.trials, cfg.jobs):
        batch = range(start, min(start + cfg.jobs, cfg.trials))
        got = await asyncio.gather(*(one(i) for i in batch))
        outcomes.extend(got)
        if any(o.nonzero for o in got):
            break
    return summarize_trials(outcomes, cfg.trials, cfg.z_mode)


def _solve(cfg: RunConfig) -> RunReport:
    graph = read_graph(cfg.graph)
    base: Dict[str, Any] = {
        "algorithm": cfg.alg,
        "q": cfg.q,
        "seed": cfg.seed,
        "graph": cfg.graph,
        "n": graph.n,
        "m": graph.m,
    }
    t0 = time.perf_counter()

    if cfg.alg == "brute":
        count = count_proper_colorings(graph, cfg.q)
        return RunReport(
            answer="yes" if count else "no",
            count=count,
            wall_time=time.perf_counter() - t0,
            **base,
        )

    npd: Optional[NicePathDecomposition] = None
    if cfg.decomp:
        npd = read_decomposition(cfg.decomp)
        problems = validate_decomposition(graph, npd)
        if problems:
            raise GraphError(f"{cfg.decomp}: invalid decomposition: {problems[0]}")
        layout = decomposition_order(npd)
        base.update(certificate="decomposition", certificate_source=cfg.decomp)
    elif cfg.layout:
        layout = read_layout(cfg.layout)
        layout.check(graph)
        base.update(certificate="layout", certificate_source=cfg.layout)
    else:
        layout = find_layout(graph, cfg.auto_layout or "greedy")
        base.update(certificate="layout", certificate_source=f"auto:{cfg.auto_layout}")
    base["cutwidth"] = cutwidth_of(graph, layout)

    if cfg.alg == "det":
        det = run_cutwidth_det(graph, layout, cfg.q, skip_within_bound=cfg.skip_within_bound)
        return RunReport(
            answer="yes" if det.colorable else "no",
            stats={
                "field_prime": det.p,
                "max_table": det.max_table,
                "max_bound": max(det.bounds, default=0),
                "stripped": len(det.stripped),
                "skip_within_bound": cfg.skip_within_bound,
            },
            wall_time=time.perf_counter() - t0,
            **base,
        )

    if npd is None:
        st = strip_isolated(graph)
        work = st.graph
        npd = layout_to_nice_decomposition(work, st.layout(layout)) if work.n else None
    else:
        work = graph
    if npd is None:
        res = RandResult(True, 0, None, (), 0, cfg.z_mode)
        base["pathwidth"] = 0
    else:
        base["pathwidth"] = pathwidth_of(npd)
        if cfg.jobs > 1:
            res = asyncio.run(_rand_parallel(work, npd, cfg))
        else:
            res = run_pathwidth_rand(work, npd, cfg.q, cfg.trials, cfg.seed, z_mode=cfg.z_mode)
    return RunReport(
        answer="yes" if res.colorable else "no",
        trials=cfg.trials,
        trials_run=res.trials_run,
        witness_trial=res.witness_trial,
        z_mode=res.z_mode,
        stats={"primes": list(res.primes), "max_table_cells": res.max_table_cells},
        wall_time=time.perf_counter() - t0,
        **base,
    )


@app.command("solve")
def solve(
    graph: str = typer.Option(..., "--graph", "-g", help="Graph file (p edge / e lines)"),
    alg: str = typer.Option("det", "--alg", "-a", help="det | rand | brute"),
    q: int = typer.Option(3, "--q", help="Number of colors"),
    layout: Optional[str] = typer.Option(None, "--layout", help="Layout certificate"),
    decomp: Optional[str] = typer.Option(None, "--decomp", help="Nice path decomposition"),
    auto_layout: Optional[str] = typer.Option(
        None, "--auto-layout", help="Compute a layout instead: greedy | exact"
    ),
    trials: int = typer.Option(64, "--trials", help="Randomized trials"),
    seed: int = typer.Option(0, "--seed", help="Seed for weights and primes"),
    z_mode: str = typer.Option("full", "--z-mode", help="full | eval"),
    jobs: int = typer.Option(1, "--jobs", "-j", help="Parallel trials"),
    skip_within_bound: bool = typer.Option(
        False, "--skip-within-bound", help="det: skip elimination while a table fits its bound"
    ),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    env_file: Optional[str] = typer.Option(None, "--env-file", help=".env file to load first"),
):
    """Decide q-colorability; prints a JSON report."""
    try:
        _load_env(env_file)
        cfg = RunConfig(
            alg=alg, q=q, graph=graph, layout=layout, decomp=decomp, auto_layout=auto_layout,
            trials=trials, seed=seed, z_mode=z_mode, jobs=jobs, out=out,
            skip_within_bound=skip_within_bound,
        )  # fmt: skip
        logger.debug("solve config: %s", cfg.model_dump())
        report = _solve(cfg)
    except (CutcolorError, OSError, ValidationError) as exc:
        _fail(exc)
    _emit(report.to_json(), out)
    raise typer.Exit(code=report.exit_code)


# --------------------------------------------------------------------------- #
# gen                                                                         #
# --------------------------------------------------------------------------- #
def _generate(family: str, cnf: str, d: int, p: int, compact: bool) -> GadgetInstance:
    formula = read_cnf(cnf)
    if family == "planar3col":
        return cnf_to_planar3col(formula)
    if family == "3col":
        return list3col_to_3col(cnf_to_list3col(formula))
    if family == "degree":
        return sat_to_degree_coloring(formula, d, p, compact=compact)
    raise CutcolorError(f"unknown family {family!r} (expected one of {', '.join(FAMILIES)})")


def _meta(inst: GadgetInstance) -> InstanceMeta:
    formula = inst.formula
    assert formula is not None
    params = json.loads(json.dumps(dict(inst.params), default=str))
    cutwidth = params.get("cutwidth")
    if cutwidth is None and inst.layout is not None:
        cutwidth = cutwidth_of(inst.graph, inst.layout)
    pathwidth = params.get("pathwidth")
    if pathwidth is None and inst.decomposition is not None:
        pathwidth = pathwidth_of(inst.decomposition)
    return InstanceMeta(
        family=inst.family,
        formula_sha256=formula.digest(),
        n_vars=formula.n,
        m_clauses=formula.m,
        vertices=inst.graph.n,
        edges=inst.graph.m,
        certificate="layout" if inst.layout is not None else "decomposition",
        cutwidth=cutwidth,
        excess=None if cutwidth is None else cutwidth - formula.n,
        pathwidth=pathwidth,
        max_degree=inst.graph.max_degree,
        params=params,
        provenance=inst.provenance_counts(),
    )


@app.command("gen")
def gen(
    cnf: str = typer.Option(..., "--cnf", help="DIMACS CNF formula"),
    out: str = typer.Option(..., "--out", "-o", help="Output directory"),
    family: str = typer.Option("planar3col", "--family", "-f", help="planar3col | 3col | degree"),
    d: int = typer.Option(5, "--d", help="Degree bound (degree family, odd >= 5)"),
    p: int = typer.Option(1, "--p", help="Chains per variable group (degree family)"),
    compact: bool = typer.Option(
        False, "--compact", help="Degree family: drop rounds without a gadget (test-sized)"
    ),
    env_file: Optional[str] = typer.Option(None, "--env-file", help=".env file to load first"),
):
    """Compile a CNF formula into a coloring instance with its certificate."""
    try:
        _load_env(env_file)
        inst = _generate(family, cnf, d, p, compact)
        problems = inst.certificate_problems()
        if problems:
            raise CutcolorError(f"generated certificate is invalid: {problems[0]}")
        target = Path(out)
        target.mkdir(parents=True, exist_ok=True)
        comment = f"{inst.family} instance from {Path(cnf).name}"
        write_graph(target / "graph.col", inst.graph, comment=comment)
        if inst.layout is not None:
            write_layout(target / "layout.lay", inst.layout)
        if inst.decomposition is not None:
            write_decomposition(target / "decomposition.npd", inst.decomposition)
        meta = _meta(inst)
        (target / "meta.json").write_text(meta.to_json(), encoding="utf-8")
    except (CutcolorError, OSError) as exc:
        _fail(exc)
    width = f"ctw={meta.cutwidth} (n+{meta.excess})" if meta.cutwidth is not None else (
        f"pw={meta.pathwidth}"
    )
    typer.echo(
        f"{meta.family}: {meta.vertices} vertices, {meta.edges} edges, {width}, "
        f"max degree {meta.max_degree} -> {target}"
    )


# --------------------------------------------------------------------------- #
# verify                                                                      #
# --------------------------------------------------------------------------- #
@app.command("verify")
def verify(
    check: str = typer.Option(..., "--check", "-c", help="Check name, or `list` to print them"),
    graph: Optional[str] = typer.Option(None, "--graph", "-g"),
    layout: Optional[str] = typer.Option(None, "--layout"),
    decomp: Optional[str] = typer.Option(None, "--decomp"),
    cnf: Optional[str] = typer.Option(None, "--cnf"),
    q: int = typer.Option(3, "--q"),
    seed: int = typer.Option(0, "--seed"),
    cases: Optional[int] = typer.Option(None, "--cases", help="Override the number of cases"),
    d: int = typer.Option(5, "--d"),
    p: int = typer.Option(1, "--p"),
    compact: bool = typer.Option(False, "--compact"),
    out: Optional[str] = typer.Option(None, "--out", "-o"),
    env_file: Optional[str] = typer.Option(None, "--env-file"),
):
    """Run one named cross-check; prints a JSON report with a counterexample on failure."""
    if check == "list":
        typer.echo("\n".join(check_names()))
        raise typer.Exit(code=0)
    try:
        _load_env(env_file)
        ctx = CheckContext(
            graph=read_graph(graph) if graph else None,
            layout=read_layout(layout) if layout else None,
            decomp=read_decomposition(decomp) if decomp else None,
            cnf=read_cnf(cnf) if cnf else None,
            q=q, seed=seed, cases=cases, d=d, p=p, compact=compact,
        )  # fmt: skip
        report = run_check(check, ctx)
    except (CutcolorError, OSError) as exc:
        _fail(exc)
    _emit(report.to_json(), out)
    if not report.passed:
        typer.secho(f"check {check} FAILED", fg=typer.colors.RED, err=True)
    raise typer.Exit(code=0 if report.passed else 1)


# --------------------------------------------------------------------------- #
# bench                                                                       #
# --------------------------------------------------------------------------- #
def _print_table(report) -> None:
    from rich.console import Console
    from rich.table import Table

    table = Table(title=f"q={report.q} seed={report.seed}")
    for col in ("instance", "n", "m", "ctw", "det s", "rand s", "answer", "oracle"):
        table.add_column(col)
    for r in report.rows:
        table.add_row(
            r.instance,
            str(r.n),
            str(r.m),
            str(r.cutwidth),
            "-" if r.det_seconds is None else f"{r.det_seconds:.4f}",
            "-" if r.rand_seconds is None else f"{r.rand_seconds:.4f}",
            r.det_answer or r.rand_answer or "-",
            "refused" if r.oracle_refused else "ok",
        )
    console = Console()
    console.print(table)
    for alg, factor in report.growth.items():
        shown = "n/a" if factor is None else f"{factor:.3f}"
        console.print(f"{alg}: growth per unit cutwidth = {shown}")


@app.command("bench")
def bench(
    instances: List[str] = typer.Option(
        [], "--instances", "-i", help="Graph files or directories (sibling .lay required)"
    ),
    ctw_min: int = typer.Option(8, "--ctw-min"),
    ctw_max: int = typer.Option(14, "--ctw-max"),
    n: int = typer.Option(40, "--n", help="Vertices per generated instance"),
    per_width: int = typer.Option(1, "--per-width"),
    q: int = typer.Option(8, "--q"),
    algs: List[str] = typer.Option(["det", "rand"], "--alg", "-a"),
    trials: int = typer.Option(4, "--trials"),
    seed: int = typer.Option(0, "--seed"),
    z_mode: str = typer.Option("eval", "--z-mode"),
    jobs: int = typer.Option(1, "--jobs", "-j"),
    skip_within_bound: bool = typer.Option(
        False, "--skip-within-bound", help="det: skip elimination while a table fits its bound"
    ),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Write the JSON report here"),
    env_file: Optional[str] = typer.Option(None, "--env-file"),
):
    """Time the solvers over a family of instances and fit the growth per unit cutwidth."""
    try:
        _load_env(env_file)
        unknown = [a for a in algs if a not in ("det", "rand")]
        if unknown:
            raise CutcolorError(f"bench runs det and rand only, got {unknown}")
        if z_mode not in ("full", "eval"):
            raise CutcolorError(f"unknown z mode {z_mode!r}")
        if instances:
            todo = load_instances(instances)
        else:
            todo = generated_instances(ctw_min, ctw_max, n=n, per_width=per_width, seed=seed)
        report = asyncio.run(
            run_bench(
                todo, q, algs=algs, trials=trials, seed=seed, z_mode=z_mode, jobs=jobs,
                skip_within_bound=skip_within_bound,
            )  # type: ignore[arg-type]
        )
    except (CutcolorError, OSError) as exc:
        _fail(exc)
    text = report.to_json()
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")
    if as_json:
        typer.echo(text, nl=False)
    else:
        _print_table(report)
    raise typer.Exit(code=0 if report.agree else 1)


if __name__ == "__main__":
    app()
