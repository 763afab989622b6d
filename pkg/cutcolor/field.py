# SPDX-License-Identifier: MIT
"""Prime fields: prime selection and Gaussian elimination over GF(p).

Matrices are numpy int64 arrays with entries in [0, p). The elimination
kernels keep every intermediate product below p**2 * rank, so int64 is exact
for the small primes the deterministic solver uses.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from sympy import isprime, nextprime, prevprime

from .errors import CutcolorError
from .util import get_logger

__all__ = [
    "FieldPrime",
    "field_prime",
    "random_prime",
    "row_echelon_mod_p",
    "rank_mod_p",
    "RowBasis",
]

logger = get_logger("field")

RANDOM_PRIME_LOW = 2**30
RANDOM_PRIME_HIGH = 2**31


@dataclass(frozen=True)
class FieldPrime:
    """A prime p used as the field size for q colors (p >= q)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise CutcolorError(f"{self.p} is not prime")
        if self.p < self.q:
            raise CutcolorError(f"field prime {self.p} is smaller than q={self.q}")


def field_prime(q: int) -> FieldPrime:
    """Smallest prime p >= q (2 when q <= 2)."""
    if q < 1:
        raise CutcolorError(f"q must be >= 1, got {q}")
    p = q if isprime(q) else int(nextprime(q))
    return FieldPrime(int(p), q)


def random_prime(rng: np.random.Generator) -> int:
    """A prime in [2^30, 2^31): the first prime at or above a uniform draw."""
    r = int(rng.integers(RANDOM_PRIME_LOW, RANDOM_PRIME_HIGH))
    p = int(nextprime(r - 1))
    if p >= RANDOM_PRIME_HIGH:
        p = int(prevprime(RANDOM_PRIME_HIGH))
    return p


def row_echelon_mod_p(M: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Row-reduce *M* over GF(p).

    Returns:
        (R, pivot_cols): R in row-echelon form with unit pivots, and the pivot
        column indices (length = rank).
    """
    R = np.asarray(M, dtype=np.int64) % p
    R = R.copy()
    m, n = R.shape if R.ndim == 2 else (0, 0)
    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(n):
        if pivot_row >= m:
            break
        nz = np.nonzero(R[pivot_row:, col])[0]
        if nz.size == 0:
            continue
        found = pivot_row + int(nz[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        inv = pow(int(R[pivot_row, col]), -1, p)
        R[pivot_row] = (R[pivot_row] * inv) % p
        below = pivot_row + 1 + np.nonzero(R[pivot_row + 1 :, col])[0]
        if below.size:
            factors = R[below, col][:, None]
            R[below] = (R[below] - factors * R[pivot_row][None, :]) % p
        pivot_cols.append(col)
        pivot_row += 1
    return R, pivot_cols


def rank_mod_p(M: np.ndarray, p: int) -> int:
    """Rank of *M* over GF(p)."""
    if M.size == 0:
        return 0
    _, pivots = row_echelon_mod_p(M, p)
    return len(pivots)


class RowBasis:
    """Incremental reduced row basis over GF(p).

    Rows are offered in order; a row is kept iff it is independent of the rows
    kept before it. The stored basis stays in reduced echelon form (every pivot
    column is zero outside its own row), so reducing a candidate is a single
    matrix-vector product.
    """

    def __init__(self, width: int, p: int) -> None:
        self.p = p
        self.width = width
        self._rows = np.zeros((0, width), dtype=np.int64)
        self._pivots: List[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def offer(self, row: np.ndarray) -> bool:
        p = self.p
        r = np.asarray(row, dtype=np.int64) % p
        if self._pivots:
            coeff = r[self._pivots]
            r = (r - coeff @ self._rows) % p
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            return False
        col = int(nz[0])
        r = (r * pow(int(r[col]), -1, p)) % p
        if self._pivots:
            factors = self._rows[:, col][:, None]
            self._rows = (self._rows - factors * r[None, :]) % p
        self._rows = np.vstack([self._rows, r[None, :]])
        self._pivots.append(col)
        return True

    def select(self, rows: np.ndarray) -> List[int]:
        """Indices of the rows of *rows* that extend the basis, in order."""
        kept: List[int] = []
        for k in range(rows.shape[0]):
            if self.rank >= self.width:
                break
            if self.offer(rows[k]):
                kept.append(k)
        return kept
