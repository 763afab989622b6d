# SPDX-License-Identifier: MIT
"""CNF formulas (DIMACS literal convention) and a brute-force SAT check."""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import FormatError, GadgetError
from ..util import get_logger

__all__ = ["CnfFormula", "parse_dimacs_cnf", "brute_force_sat", "formula_from_clauses"]

logger = get_logger("gadgets")

Clause = Tuple[int, ...]


@dataclass(frozen=True)
class CnfFormula:
    """Variables 1..n; each clause is a tuple of nonzero signed literals."""

    n: int
    clauses: Tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GadgetError(f"variable count must be >= 0, got {self.n}")
        clauses = tuple(tuple(int(lit) for lit in c) for c in self.clauses)
        for j, clause in enumerate(clauses, start=1):
            if not clause:
                raise GadgetError(f"clause {j} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.n:
                    raise GadgetError(f"clause {j}: literal {lit} outside ±[1, {self.n}]")
            if len(set(clause)) != len(clause):
                raise GadgetError(f"clause {j} repeats a literal")
            if any(-lit in clause for lit in clause):
                raise GadgetError(f"clause {j} contains a literal and its negation")
        object.__setattr__(self, "clauses", clauses)

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def max_clause_size(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    def sorted_clause(self, j: int) -> Clause:
        """Literals of clause j (0-based) ordered by variable index."""
        return tuple(sorted(self.clauses[j], key=abs))

    def unused_variables(self) -> List[int]:
        used = {abs(lit) for c in self.clauses for lit in c}
        return [x for x in range(1, self.n + 1) if x not in used]

    def require_all_variables_used(self) -> None:
        missing = self.unused_variables()
        if missing:
            raise GadgetError(f"variable {missing[0]} occurs in no clause")

    def padded(self, copies: int) -> "CnfFormula":
        """The same clause set repeated *copies* times (same satisfiability)."""
        if copies < 1:
            raise GadgetError("copies must be >= 1")
        return CnfFormula(self.n, self.clauses * copies)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """*assignment[i-1]* is the value of variable i."""
        return all(any((lit > 0) == assignment[abs(lit) - 1] for lit in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.n} {self.m}"]
        lines.extend(" ".join(str(lit) for lit in c) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_dimacs().encode("utf-8")).hexdigest()


def brute_force_sat(formula: CnfFormula) -> Optional[Tuple[bool, ...]]:
    """First satisfying assignment in lexicographic order (False < True), or None."""
    for bits in itertools.product((False, True), repeat=formula.n):
        if formula.satisfied_by(bits):
            return bits
    return None


def parse_dimacs_cnf(text: str, *, path: Optional[str] = None) -> CnfFormula:
    """Parse DIMACS CNF; clauses may span lines and end at ``0``."""
    n: Optional[int] = None
    declared_m = 0
    clauses: List[Clause] = []
    current: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError("expected 'p cnf <n> <m>'", path=path, line=lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError as e:
                raise FormatError(f"bad header: {e}", path=path, line=lineno) from e
            continue
        if n is None:
            raise FormatError("clause before 'p cnf' header", path=path, line=lineno)
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError as e:
            raise FormatError(f"bad literal: {e}", path=path, line=lineno) from e
        for lit in lits:
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if n is None:
        raise FormatError("missing 'p cnf' header", path=path)
    if current:
        clauses.append(tuple(current))
    if declared_m and declared_m != len(clauses):
        logger.debug("cnf: header declares %d clauses, found %d", declared_m, len(clauses))
    try:
        return CnfFormula(n, tuple(clauses))
    except GadgetError as e:
        raise FormatError(str(e), path=path) from e


def formula_from_clauses(n: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
    return CnfFormula(n, tuple(tuple(c) for c in clauses))
