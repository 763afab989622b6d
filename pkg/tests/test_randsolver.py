# SPDX-License-Identifier: MIT
# tests/test_randsolver.py
from __future__ import annotations

import pytest

from cutcolor.bench import random_graph
from cutcolor.errors import CutcolorError, GraphError
from cutcolor.field import random_prime
from cutcolor.graph import (
    IntroduceEdge,
    LinearLayout,
    complete_graph,
    cycle_graph,
    graph_from_pairs,
    layout_to_nice_decomposition,
    path_graph,
    petersen_graph,
    random_nice_decomposition,
    validate_decomposition,
)
from cutcolor.oracle import is_colorable, pgz_bruteforce, table_entries_bruteforce
from cutcolor.randsolver import (
    compute_PG_all,
    compute_PG_at,
    iter_tables,
    run_pathwidth_rand,
    run_trial,
    solve_cutwidth_rand,
    solve_pathwidth_rand,
    split_bag,
    summarize_trials,
)
from cutcolor.util import make_rng
from cutcolor.weights import sample_weights


def _npd(graph):
    return layout_to_nice_decomposition(graph, LinearLayout.identity(graph.n))


# ----------- bag splits ----------- #


def test_split_bag_puts_fresh_vertices_left():
    g = path_graph(3)
    npd = _npd(g)
    # events: IV1 IV2 IE(1,2) FV1 IV3 IE(2,3) FV2 FV3
    s = split_bag(g, npd, 2)
    assert s.left == (1, 2) and s.right == ()
    s = split_bag(g, npd, 5)
    # vertex 2 has 1 of 2 edges in: still left; vertex 3 has none: left
    assert s.left == (2, 3)
    assert s.l == {2: 1, 3: 0}
    with pytest.raises(GraphError):
        split_bag(g, npd, 99)


def test_split_moves_high_degree_vertex_right():
    g = graph_from_pairs([(1, 2), (1, 3), (1, 4)])
    npd = layout_to_nice_decomposition(g, LinearLayout((2, 3, 1, 4)))
    # after IV1 and its edges to 2 and 3, vertex 1 has 2 of 3 edges in
    idx = next(i for i, ev in enumerate(npd.events, 1) if str(ev) == "IE 3 1")
    s = split_bag(g, npd, idx)
    assert 1 in s.right and s.r[1] == 1


# ----------- tables against the literal sums ----------- #


@pytest.mark.parametrize(
    "graph",
    [
        path_graph(3),
        cycle_graph(4),
        complete_graph(3),
        graph_from_pairs([(1, 2), (2, 3), (1, 3), (3, 4)]),
    ],
    ids=["P3", "C4", "K3", "paw"],
)
def test_tables_match_bruteforce(graph):
    npd = _npd(graph)
    q = 3
    weights = sample_weights(graph, q, 7)
    p = random_prime(make_rng(3))
    for table in iter_tables(graph, npd, q, weights, p):
        want = {
            k: v % p
            for k, v in table_entries_bruteforce(graph, npd, table.index, q, weights).items()
            if v % p
        }
        assert table.as_dict() == want, f"bag {table.index}"


def _tables_agree(graph, npd, q: int, seed: int) -> None:
    weights = sample_weights(graph, q, seed)
    p = random_prime(make_rng(seed + 1))
    for table in iter_tables(graph, npd, q, weights, p):
        want = {
            k: v % p
            for k, v in table_entries_bruteforce(graph, npd, table.index, q, weights).items()
            if v % p
        }
        assert table.as_dict() == want, (graph.edges, [str(ev) for ev in npd.events], table.index)


def test_random_decompositions_are_valid():
    g = petersen_graph()
    rng = make_rng(21)
    for _ in range(10):
        npd = random_nice_decomposition(g, rng)
        assert validate_decomposition(g, npd) == []


def test_tables_match_bruteforce_on_random_decompositions():
    # late edges, delayed forgets and both edge orientations
    rng = make_rng(8)
    orientations = set()
    for k in range(25):
        n = int(rng.integers(2, 6))
        g = random_graph(n, int(rng.integers(1, min(7, n * (n - 1) // 2) + 1)), seed=300 + k)
        npd = random_nice_decomposition(g, rng)
        assert validate_decomposition(g, npd) == []
        orientations.update(ev.u < ev.v for ev in npd.events if isinstance(ev, IntroduceEdge))
        _tables_agree(g, npd, int(rng.integers(2, 4)), k)
    assert orientations == {True, False}


def test_final_table_is_graph_polynomial(c5):
    q = 3
    npd = _npd(c5)
    weights = sample_weights(c5, q, 1)
    p = random_prime(make_rng(2))
    got = {z: v for z, v in compute_PG_all(c5, npd, q, weights, p).items() if v}
    # the layout's decomposition introduces vertices in id order, so edges point up
    want = {z: v % p for z, v in pgz_bruteforce(c5, q, weights).items() if v % p}
    assert got == want


def test_eval_mode_is_polynomial_at_point(c5):
    q, point = 3, 12345
    npd = _npd(c5)
    weights = sample_weights(c5, q, 4)
    p = random_prime(make_rng(9))
    full = compute_PG_all(c5, npd, q, weights, p)
    expected = sum(v * pow(point, z, p) for z, v in full.items()) % p
    assert compute_PG_at(c5, npd, q, weights, p, point) == expected


def test_table_get_and_key_validation():
    g = path_graph(2)
    npd = _npd(g)
    weights = sample_weights(g, 2, 0)
    tables = list(iter_tables(g, npd, 2, weights, 101))
    assert tables[0].get(0, {}, {}) == 1
    with pytest.raises(GraphError):
        tables[1].get(0, {}, {})


# ----------- decisions ----------- #


def test_k4_one_sided(k4):
    npd = _npd(k4)
    assert not solve_pathwidth_rand(k4, npd, 3, trials=8, seed=0)
    res = run_pathwidth_rand(k4, npd, 4, trials=32, seed=7)
    assert res.colorable and res.witness_trial is not None


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_cycles_never_two_colorable(n: int):
    g = cycle_graph(n)
    for seed in range(10):
        assert not solve_cutwidth_rand(g, LinearLayout.identity(n), 2, trials=1, seed=seed)


def test_petersen_found_in_eval_mode(petersen):
    res = run_pathwidth_rand(petersen, _npd(petersen), 3, trials=64, seed=0, z_mode="eval")
    assert res.colorable and res.z_mode == "eval"
    assert res.trials_run == res.witness_trial + 1
    assert len(res.primes) == res.trials_run


def test_same_seed_same_result(petersen):
    npd = _npd(petersen)
    a = run_pathwidth_rand(petersen, npd, 3, trials=16, seed=42)
    b = run_pathwidth_rand(petersen, npd, 3, trials=16, seed=42)
    assert a == b


def test_trials_are_independent_of_order(c5):
    npd = _npd(c5)
    outcomes = [run_trial(c5, npd, 3, 11, i) for i in range(6)]
    assert outcomes[4] == run_trial(c5, npd, 3, 11, 4)
    forward = summarize_trials(outcomes, 6, "full")
    backward = summarize_trials(list(reversed(outcomes)), 6, "full")
    assert forward == backward
    assert forward == run_pathwidth_rand(c5, npd, 3, trials=6, seed=11)


def test_summarize_without_hit_reports_all_trials():
    g = cycle_graph(3)
    npd = _npd(g)
    outcomes = [run_trial(g, npd, 2, 0, i) for i in range(3)]
    res = summarize_trials(outcomes, 3, "full")
    assert not res.colorable and res.trials_run == 3 and res.witness_trial is None


def test_rand_input_validation(c5):
    npd = _npd(c5)
    with pytest.raises(CutcolorError):
        run_pathwidth_rand(c5, npd, 3, trials=0)
    with pytest.raises(CutcolorError):
        run_pathwidth_rand(c5, npd, 3, z_mode="sometimes")  # type: ignore[arg-type]
    with pytest.raises(GraphError):
        run_pathwidth_rand(c5, _npd(cycle_graph(4)), 3)


def test_agrees_with_oracle_on_random_graphs():
    rng = make_rng(23)
    for k in range(25):
        n = int(rng.integers(2, 8))
        g = random_graph(n, int(rng.integers(1, n * (n - 1) // 2 + 1)), seed=500 + k)
        lay = LinearLayout(tuple(int(v) + 1 for v in rng.permutation(n)))
        for q in (2, 3):
            got = solve_cutwidth_rand(g, lay, q, trials=32, seed=k)
            assert got == is_colorable(g, q), (g.edges, q)
