# -*- coding: utf-8 -*-
"""
Typed configuration and report models for the cutcolor command line.

Pydantic v2 is used throughout (see pyproject.toml constraints).

Notes:
- `RunConfig` validates what the user asked for before any file is read.
- Reports serialize with `to_json()`; identical configs and seeds give
  identical JSON apart from the `wall_time` field.
"""
from __future__ import annotations

import json
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

__all__ = [
    "Algorithm",
    "Answer",
    "Certificate",
    "RunConfig",
    "RunReport",
    "InstanceMeta",
    "VerifyReport",
    "BenchRow",
    "BenchReport",
]

# --------------------------------------------------------------------------- #
# Common aliases                                                              #
# --------------------------------------------------------------------------- #

Algorithm = Literal["det", "rand", "brute"]
Answer = Literal["yes", "no"]
Certificate = Literal["layout", "decomposition"]


class _Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="ignore")

    def to_json(self, *, exclude: Optional[set[str]] = None) -> str:
        """Stable JSON: sorted keys, two-space indent, trailing newline."""
        data = json.loads(self.model_dump_json(exclude=exclude))
        return json.dumps(data, indent=2, sort_keys=True) + "\n"


# --------------------------------------------------------------------------- #
# Run configuration                                                           #
# --------------------------------------------------------------------------- #
class RunConfig(BaseModel):
    """
    Inputs of one `solve` run after CLI parsing.

    Structured solvers (det, rand) consume exactly one certificate unless
    `auto_layout` asks for one to be computed; the brute-force oracle takes none.
    """

    model_config = ConfigDict(populate_by_name=True, extra="ignore")

    alg: Algorithm = Field("det", alias="algorithm")
    q: int = Field(3, ge=1)
    graph: str
    layout: Optional[str] = None
    decomp: Optional[str] = None
    auto_layout: Optional[Literal["greedy", "exact"]] = None
    trials: int = Field(64, ge=1)
    seed: int = 0
    z_mode: Literal["full", "eval"] = "full"
    jobs: int = Field(1, ge=1)
    # det: keep a table as is while it is no larger than the row index
    skip_within_bound: bool = False
    out: Optional[str] = None

    @model_validator(mode="after")
    def _one_certificate(self) -> "RunConfig":
        given = [x for x in (self.layout, self.decomp) if x]
        if self.alg == "brute":
            if given:
                raise ValueError("the brute-force oracle takes no --layout/--decomp")
            if self.auto_layout:
                raise ValueError("--auto-layout only applies to det and rand")
            return self
        if len(given) > 1:
            raise ValueError("give exactly one of --layout / --decomp")
        if not given and not self.auto_layout:
            raise ValueError(
                f"--alg {self.alg} needs --layout or --decomp (or --auto-layout greedy|exact)"
            )
        if given and self.auto_layout:
            raise ValueError("--auto-layout conflicts with an explicit certificate")
        return self


# --------------------------------------------------------------------------- #
# Reports                                                                     #
# --------------------------------------------------------------------------- #
class RunReport(_Report):
    """Result of `solve`."""

    answer: Answer
    count: Optional[int] = None
    algorithm: Algorithm
    q: int
    seed: int
    certificate: Optional[Certificate] = None
    certificate_source: Optional[str] = Field(
        default=None, description="File path, or 'auto:<strategy>' for computed layouts."
    )
    graph: str
    n: int
    m: int
    cutwidth: Optional[int] = None
    pathwidth: Optional[int] = None
    trials: Optional[int] = None
    trials_run: Optional[int] = None
    witness_trial: Optional[int] = None
    z_mode: Optional[str] = None
    stats: Dict[str, Any] = Field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def exit_code(self) -> int:
        return 0 if self.answer == "yes" else 1


class InstanceMeta(_Report):
    """`meta.json` written next to a generated instance."""

    family: str
    formula_sha256: str
    n_vars: int
    m_clauses: int
    vertices: int
    edges: int
    certificate: Certificate
    cutwidth: Optional[int] = None
    excess: Optional[int] = Field(default=None, description="cutwidth minus n_vars")
    pathwidth: Optional[int] = None
    max_degree: int
    params: Dict[str, Any] = Field(default_factory=dict)
    provenance: Dict[str, int] = Field(default_factory=dict)


class VerifyReport(_Report):
    """Outcome of one named `verify` check."""

    check: str
    passed: bool
    cases: int = 0
    failures: int = 0
    seed: int = 0
    counterexample: Optional[Dict[str, Any]] = None
    notes: List[str] = Field(default_factory=list)


class BenchRow(_Report):
    instance: str
    n: int
    m: int
    q: int
    cutwidth: int
    lower_bound: int
    det_seconds: Optional[float] = None
    det_answer: Optional[Answer] = None
    det_max_table: Optional[int] = None
    rand_seconds: Optional[float] = None
    rand_answer: Optional[Answer] = None
    oracle_refused: bool = False


class BenchReport(_Report):
    rows: List[BenchRow] = Field(default_factory=list)
    q: int
    seed: int
    growth: Dict[str, Optional[float]] = Field(
        default_factory=dict,
        description="Fitted time growth factor per unit cutwidth, keyed by algorithm.",
    )
    agree: bool = True
