# SPDX-License-Identifier: MIT
# tests/test_verify.py
from __future__ import annotations

import pytest

from cutcolor.errors import CutcolorError, UnknownCheck
from cutcolor.gadgets import formula_from_clauses
from cutcolor.graph import LinearLayout, NicePathDecomposition, layout_to_nice_decomposition
from cutcolor.verify import CHECKS, CheckContext, check_names, run_check


def test_check_names_are_sorted_registry_keys():
    names = check_names()
    assert names == sorted(CHECKS)
    assert {"decomp", "layout", "reduce", "table", "isolation", "planar", "degree"} <= set(names)


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        run_check("nope", CheckContext())


# ----------- certificates ----------- #


def test_layout_check(petersen):
    ok = run_check("layout", CheckContext(graph=petersen, layout=LinearLayout.identity(10)))
    assert ok.passed and ok.cases == 1
    bad = run_check("layout", CheckContext(graph=petersen, layout=LinearLayout.identity(9)))
    assert not bad.passed and bad.counterexample is not None


def test_decomp_check(c5):
    npd = layout_to_nice_decomposition(c5, LinearLayout.identity(5))
    assert run_check("decomp", CheckContext(graph=c5, decomp=npd)).passed
    broken = NicePathDecomposition(npd.events[:-1])
    report = run_check("decomp", CheckContext(graph=c5, decomp=broken))
    assert not report.passed
    assert report.counterexample["total"] >= 1


@pytest.mark.parametrize("name", ["layout", "decomp"])
def test_certificate_checks_need_inputs(name: str):
    with pytest.raises(CutcolorError):
        run_check(name, CheckContext())


# ----------- solver checks ----------- #


@pytest.mark.parametrize("name", ["rank", "reduce", "table", "agree", "onesided"])
def test_solver_checks_pass_on_small_cases(name: str):
    report = run_check(name, CheckContext(seed=3, cases=8))
    assert report.passed, report.counterexample
    assert report.cases > 0 and report.failures == 0


def test_onesided_covers_unsatisfiable_degree_instance():
    # five odd cycles, three cliques and one generated instance, two seeds each
    report = run_check("onesided", CheckContext(seed=2, cases=2))
    assert report.passed, report.counterexample
    assert report.cases == 2 * 9


def test_reduce_check_on_given_layout(c5):
    ctx = CheckContext(graph=c5, layout=LinearLayout.identity(5), cases=4)
    report = run_check("reduce", ctx)
    assert report.passed and report.cases == 4


def test_isolation_rate():
    report = run_check("isolation", CheckContext(seed=1, cases=60))
    assert report.passed
    assert any(note.startswith("success rate") for note in report.notes)


# ----------- gadget checks ----------- #


@pytest.mark.parametrize("name", ["hcol", "pathgadget", "chain"])
def test_gadget_checks(name: str):
    report = run_check(name, CheckContext(max_m=2, max_q=3))
    assert report.passed, report.counterexample


def test_planar_check_default_formula():
    report = run_check("planar", CheckContext())
    assert report.passed, report.counterexample
    assert any(note.startswith("cutwidth") for note in report.notes)


@pytest.mark.parametrize("clauses, satisfiable", [([[1]], True), ([[1], [-1]], False)])
def test_degree_check_runs_randomized_solver(clauses, satisfiable: bool):
    cnf = formula_from_clauses(1, clauses)
    report = run_check("degree", CheckContext(cnf=cnf, compact=True, seed=4))
    assert report.passed, report.counterexample
    # certificate, degree bound, the randomized run and the witness when satisfiable
    assert report.cases == 3 + int(satisfiable)


def test_degree_check_default_formula():
    report = run_check("degree", CheckContext(compact=True))
    assert report.passed, report.counterexample


def test_planar_check_unsat_formula():
    cnf = formula_from_clauses(1, [[1], [-1]])
    try:
        import z3  # noqa: F401
    except ImportError:
        with pytest.raises(CutcolorError):
            run_check("planar", CheckContext(cnf=cnf))
        return
    report = run_check("planar", CheckContext(cnf=cnf))
    assert report.passed, report.counterexample
