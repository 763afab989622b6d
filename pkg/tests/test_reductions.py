# SPDX-License-Identifier: MIT
# tests/test_reductions.py
from __future__ import annotations

import itertools

import networkx as nx
import pytest

from cutcolor.errors import DrawingError, GadgetError
from cutcolor.gadgets import (
    CnfFormula,
    GadgetInstance,
    brute_force_sat,
    cnf_to_list3col,
    cnf_to_planar3col,
    formula_from_clauses,
    list3col_to_3col,
    planarize_3col,
    sat_to_degree_coloring,
    witness_coloring,
)
from cutcolor.gadgets.degree import (
    bad_tuples,
    decode_group,
    degree_params,
    encode_group,
    lift_assignment,
)
from cutcolor.graph import Graph, cutwidth_of, graph_from_pairs, pathwidth_of
from cutcolor.oracle import is_colorable_smt
from cutcolor.randsolver import run_pathwidth_rand

SAT_2x2 = formula_from_clauses(2, [[1, 2], [-1, 2]])
UNSAT_1x2 = formula_from_clauses(1, [[1], [-1]])


def _proper(graph: Graph, coloring: dict[int, int]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in graph.edges)


def _assignments(n: int):
    return itertools.product((False, True), repeat=n)


# ----------- List-3-Col -> 3-Col ----------- #


def test_plain_3col_certificate_and_width():
    inst = list3col_to_3col(cnf_to_list3col(SAT_2x2))
    assert inst.family == "3col" and inst.q == 3
    assert inst.certificate_problems() == []
    ctw = cutwidth_of(inst.graph, inst.layout)
    assert inst.params["cutwidth"] == ctw
    assert inst.params["excess"] == ctw - SAT_2x2.n
    # the variable paths cross every column boundary
    assert ctw >= SAT_2x2.n
    assert set(inst.provenance_counts()) == {"variable", "clause", "chain"}


def test_plain_3col_needs_formula():
    listed = cnf_to_list3col(SAT_2x2)
    bare = type(listed)(listed.graph, listed.lists, listed.labels)
    with pytest.raises(GadgetError):
        list3col_to_3col(bare)


def test_plain_3col_witnesses():
    inst = list3col_to_3col(cnf_to_list3col(SAT_2x2))
    for bits in _assignments(2):
        if SAT_2x2.satisfied_by(bits):
            assert _proper(inst.graph, witness_coloring(inst, bits))
        else:
            with pytest.raises(GadgetError):
                witness_coloring(inst, bits)


def test_plain_3col_unsat_is_not_colorable():
    pytest.importorskip("z3")
    inst = list3col_to_3col(cnf_to_list3col(UNSAT_1x2))
    assert not is_colorable_smt(inst.graph, 3)


# ----------- planar 3-Col ----------- #


def test_planar_instance_is_planar_with_cells():
    inst = cnf_to_planar3col(SAT_2x2)
    g = inst.graph
    assert inst.family == "planar3col"
    assert inst.certificate_problems() == []
    assert g.m <= 3 * g.n - 6
    assert nx.check_planarity(nx.Graph(g.edges))[0]
    assert inst.drawing is not None and inst.drawing.violations(g) == []
    assert inst.params["hcol_copies"] == inst.params["crossings"]
    assert inst.params["cutwidth"] == cutwidth_of(g, inst.layout)
    counts = inst.provenance_counts()
    assert counts.get("hcol", 0) == 9 * inst.params["crossings"]


def test_planar_witnesses():
    inst = cnf_to_planar3col(SAT_2x2)
    for bits in _assignments(2):
        if SAT_2x2.satisfied_by(bits):
            assert _proper(inst.graph, witness_coloring(inst, bits))


def test_planar_layout_keeps_hcol_copies_contiguous():
    inst = cnf_to_planar3col(SAT_2x2)
    pos = inst.layout.position
    copies: dict[tuple, list[int]] = {}
    for v, label in inst.labels.items():
        if isinstance(label, tuple) and label[0] == "H":
            copies.setdefault(label[1:3], []).append(pos[v])
    assert len(copies) == inst.params["crossings"]
    for slots in copies.values():
        slots.sort()
        assert slots == list(range(slots[0], slots[0] + 9))


def _planar_excess(formula: CnfFormula, copies: int) -> int:
    inst = cnf_to_planar3col(formula.padded(copies))
    assert inst.drawing is not None and inst.drawing.violations(inst.graph) == []
    assert inst.params["excess"] == cutwidth_of(inst.graph, inst.layout) - formula.n
    return inst.params["excess"]


def test_planar_excess_does_not_grow_with_clauses():
    # one variable line: every interior cut repeats a cut of the first or last column
    single = formula_from_clauses(1, [[1]])
    assert len({_planar_excess(single, m) for m in (2, 4, 8)}) == 1


def test_planar_excess_is_fixed_once_columns_repeat():
    # interior columns are translates of each other
    base = formula_from_clauses(2, [[1, -2]])
    two, four, eight = (_planar_excess(base, m) for m in (2, 4, 8))
    assert four == eight
    assert two <= four


def test_planar_unsat_is_not_colorable():
    pytest.importorskip("z3")
    inst = cnf_to_planar3col(UNSAT_1x2)
    assert nx.check_planarity(nx.Graph(inst.graph.edges))[0]
    assert not is_colorable_smt(inst.graph, 3)


def test_planarize_requires_drawing():
    bare = GadgetInstance(family="3col", graph=graph_from_pairs([(1, 2)]), q=3)
    with pytest.raises(DrawingError):
        planarize_3col(bare)


def test_witness_rejects_unknown_family():
    bare = GadgetInstance(family="other", graph=graph_from_pairs([(1, 2)]), q=3, formula=SAT_2x2)
    with pytest.raises(GadgetError):
        witness_coloring(bare, (True, True))


# ----------- bounded degree ----------- #


def test_degree_params():
    f = formula_from_clauses(3, [[1, -2], [2, 3]])
    p1 = degree_params(f, 7, 1)
    assert (p1.q, p1.beta, p1.t) == (4, 2, 2)
    assert p1.groups == ((1, 2), (3,))
    p2 = degree_params(f, 5, 2)
    assert (p2.q, p2.beta, p2.t) == (3, 3, 1)
    assert p2.slots == 3 ** (2 * 2)
    assert p2.gadget_size == 4 * 2 * 2 - 1


@pytest.mark.parametrize("d, p", [(4, 1), (3, 1), (5, 0)])
def test_degree_params_validation(d: int, p: int):
    with pytest.raises(GadgetError):
        degree_params(formula_from_clauses(1, [[1]]), d, p)


def test_degree_params_requires_used_variables():
    with pytest.raises(GadgetError):
        degree_params(formula_from_clauses(2, [[1]]), 5, 1)


def test_group_encoding():
    assert encode_group([True, False], 3, 2) == (2, 1)
    assert decode_group((2, 1), 3, 2) == (True, False)
    assert decode_group((3, 2), 3, 2) is None
    for bits in _assignments(3):
        assert decode_group(encode_group(bits, 3, 2), 3, 3) == bits
    with pytest.raises(GadgetError):
        encode_group([True, True, True, True], 3, 2)


def test_bad_tuples_single_literal():
    f = formula_from_clauses(1, [[1]])
    # digit 1 encodes x1 = False, digit 2 x1 = True, digit 3 nothing
    assert bad_tuples(f, degree_params(f, 5, 1), 1) == [(1,), (3,)]


def test_degree_instance_full_mode():
    f = formula_from_clauses(1, [[1]])
    inst = sat_to_degree_coloring(f, 5, 1)
    params = inst.params
    assert inst.family == "degree" and inst.q == 3
    assert inst.layout is None and inst.decomposition is not None
    assert inst.certificate_problems() == []
    assert (params["slots"], params["M"], params["N"], params["gadgets"]) == (3, 3, 3, 2)
    assert params["pathwidth"] == pathwidth_of(inst.decomposition)
    assert inst.graph.max_degree <= 5
    assert _proper(inst.graph, lift_assignment(inst, (True,)))
    with pytest.raises(GadgetError):
        lift_assignment(inst, (False,))


@pytest.mark.parametrize("d", [5, 7])
def test_degree_instance_bound_and_witnesses(d: int):
    f = formula_from_clauses(3, [[1, -2], [2, 3]])
    inst = sat_to_degree_coloring(f, d, 1, compact=True)
    assert inst.certificate_problems() == []
    assert inst.graph.max_degree <= d
    assert inst.params["compact"] is True
    for bits in _assignments(3):
        if f.satisfied_by(bits):
            assert _proper(inst.graph, witness_coloring(inst, bits))
        else:
            with pytest.raises(GadgetError):
                witness_coloring(inst, bits)


def test_degree_compact_keeps_only_gadget_rounds():
    f = formula_from_clauses(1, [[1]])
    full = sat_to_degree_coloring(f, 5, 1)
    compact = sat_to_degree_coloring(f, 5, 1, compact=True)
    assert compact.params["M"] == 2 and compact.params["N"] == 3
    assert compact.graph.n < full.graph.n


def test_degree_unsat_is_not_colorable():
    pytest.importorskip("z3")
    inst = sat_to_degree_coloring(UNSAT_1x2, 5, 1, compact=True)
    assert inst.graph.max_degree <= 5
    assert not is_colorable_smt(inst.graph, inst.q)


@pytest.mark.parametrize("formula", [formula_from_clauses(1, [[1]]), UNSAT_1x2])
def test_degree_instance_agrees_with_brute_force_under_rand(formula: CnfFormula):
    inst = sat_to_degree_coloring(formula, 5, 1, compact=True)
    res = run_pathwidth_rand(inst.graph, inst.decomposition, inst.q, 16, 11, z_mode="eval")
    assert res.colorable == (brute_force_sat(formula) is not None)
