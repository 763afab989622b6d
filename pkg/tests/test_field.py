# SPDX-License-Identifier: MIT
# tests/test_field.py
from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from sympy import isprime

from cutcolor.errors import CutcolorError
from cutcolor.field import (
    RANDOM_PRIME_HIGH,
    RANDOM_PRIME_LOW,
    FieldPrime,
    RowBasis,
    field_prime,
    random_prime,
    rank_mod_p,
)
from cutcolor.util import make_rng


@pytest.mark.parametrize("q, p", [(1, 2), (2, 2), (3, 3), (4, 5), (8, 11), (13, 13)])
def test_field_prime_is_smallest_prime_at_least_q(q: int, p: int):
    assert field_prime(q).p == p


def test_field_prime_validation():
    with pytest.raises(CutcolorError):
        FieldPrime(4, 3)
    with pytest.raises(CutcolorError):
        FieldPrime(3, 5)
    with pytest.raises(CutcolorError):
        field_prime(0)


def test_random_prime_range_and_reproducibility():
    a = [random_prime(make_rng(s)) for s in range(5)]
    b = [random_prime(make_rng(s)) for s in range(5)]
    assert a == b
    for p in a:
        assert RANDOM_PRIME_LOW <= p < RANDOM_PRIME_HIGH
        assert isprime(p)


def _span_rank(M: np.ndarray, p: int) -> int:
    """Rank over GF(p) from the size of the row space, by enumeration."""
    span = {
        tuple((np.array(coef) @ M) % p)
        for coef in itertools.product(range(p), repeat=M.shape[0])
    }
    return round(math.log(len(span), p))


def test_rank_mod_p_matches_row_space_size():
    rng = make_rng(11)
    for p in (2, 3, 5):
        for _ in range(15):
            rows, cols = (int(x) for x in rng.integers(1, 5, size=2))
            M = rng.integers(0, p, size=(rows, cols))
            assert rank_mod_p(M, p) == _span_rank(M, p)


def test_rank_mod_p_small_cases():
    assert rank_mod_p(np.array([[1, 1], [1, 1]]), 2) == 1
    assert rank_mod_p(np.array([[1, 2], [2, 1]]), 3) == 1  # det = -3
    assert rank_mod_p(np.array([[1, 2], [2, 1]]), 5) == 2
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), 7) == 0


def test_row_basis_select_keeps_first_independent_rows():
    rows = np.array([[1, 0, 1], [2, 0, 2], [0, 1, 0], [1, 1, 1], [0, 0, 1]])
    basis = RowBasis(3, 5)
    assert basis.select(rows) == [0, 2, 4]
    assert basis.rank == 3
    assert basis.offer(np.array([3, 4, 1])) is False
