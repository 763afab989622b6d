# SPDX-License-Identifier: MIT
"""Instance generators for the two lower-bound families."""
from __future__ import annotations

from .builder import GadgetInstance, GraphBuilder, ListColoringInstance
from .chains import CliqueChain, chain_of_cliques
from .cnf import CnfFormula, brute_force_sat, formula_from_clauses, parse_dimacs_cnf
from .degree import lift_assignment, sat_to_degree_coloring
from .hcol import HCol, build_hcol
from .listcol import cnf_to_list3col, list_coloring_from_assignment
from .pathgadget import forbid, path_gadget
from .plain import CellDrawing, lift_list_coloring, list3col_to_3col
from .planar import cnf_to_planar3col, lift_to_planar, planarize_3col
from .witness import witness_coloring

__all__ = [
    "CnfFormula",
    "parse_dimacs_cnf",
    "formula_from_clauses",
    "brute_force_sat",
    "GraphBuilder",
    "ListColoringInstance",
    "GadgetInstance",
    "CellDrawing",
    "CliqueChain",
    "chain_of_cliques",
    "HCol",
    "build_hcol",
    "cnf_to_list3col",
    "list_coloring_from_assignment",
    "list3col_to_3col",
    "lift_list_coloring",
    "planarize_3col",
    "cnf_to_planar3col",
    "lift_to_planar",
    "path_gadget",
    "forbid",
    "sat_to_degree_coloring",
    "lift_assignment",
    "witness_coloring",
]

