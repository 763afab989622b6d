# SPDX-License-Identifier: MIT
"""Colorings of generated instances read off a satisfying assignment."""
from __future__ import annotations

from typing import Dict, Sequence

from ..errors import GadgetError
from .builder import GadgetInstance
from .degree import lift_assignment
from .listcol import cnf_to_list3col, list_coloring_from_assignment
from .plain import lift_list_coloring, list3col_to_3col
from .planar import lift_to_planar

__all__ = ["witness_coloring"]


def witness_coloring(inst: GadgetInstance, assignment: Sequence[bool]) -> Dict[int, int]:
    """Proper q-coloring of *inst* for a satisfying *assignment* of its formula.

    Raises GadgetError when the assignment falsifies a clause.
    """
    if inst.family == "degree":
        return lift_assignment(inst, assignment)
    formula = inst.formula
    if formula is None:
        raise GadgetError("instance carries no formula")
    if inst.family not in ("3col", "planar3col"):
        raise GadgetError(f"no witness lift for family {inst.family!r}")
    listed = cnf_to_list3col(formula)
    plain = list3col_to_3col(listed)
    coloring = lift_list_coloring(plain, list_coloring_from_assignment(listed, assignment))
    return coloring if inst.family == "3col" else lift_to_planar(inst, coloring)
