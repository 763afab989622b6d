# SPDX-License-Identifier: MIT
# tests/test_cli.py
from __future__ import annotations

import json
from pathlib import Path

import pytest

typer_testing = pytest.importorskip("typer.testing")

from cutcolor.cli.commands import app  # noqa: E402
from cutcolor.formats import format_decomposition  # noqa: E402
from cutcolor.graph import LinearLayout, layout_to_nice_decomposition  # noqa: E402

runner = typer_testing.CliRunner()


def _run(*args: str):
    return runner.invoke(app, [str(a) for a in args])


def _report(result) -> dict:
    return json.loads(result.stdout)


# ----------- solve ----------- #


def test_det_k4_three_colors_is_no(write_instance, k4):
    col, lay = write_instance("k4", k4)
    result = _run("solve", "--graph", col, "--layout", lay, "--q", "3")
    assert result.exit_code == 1
    report = _report(result)
    assert report["answer"] == "no" and report["algorithm"] == "det"
    assert report["certificate"] == "layout" and report["cutwidth"] == 4
    assert report["stats"]["field_prime"] == 3


def test_det_skip_within_bound_keeps_the_answer(write_instance, petersen):
    col, lay = write_instance("petersen", petersen)
    base = ["solve", "-g", col, "--layout", lay, "--q", "3"]
    plain, skipping = _run(*base), _run(*base, "--skip-within-bound")
    assert plain.exit_code == skipping.exit_code == 0
    a, b = _report(plain), _report(skipping)
    assert a["answer"] == b["answer"] == "yes"
    assert a["stats"]["skip_within_bound"] is False
    assert b["stats"]["skip_within_bound"] is True
    assert b["stats"]["max_table"] <= b["stats"]["max_bound"]


def test_brute_counts_petersen(write_instance, petersen):
    col, _ = write_instance("petersen", petersen)
    result = _run("solve", "-g", col, "-a", "brute")
    assert result.exit_code == 0
    report = _report(result)
    assert report["answer"] == "yes" and report["count"] == 120


def test_rand_k4_four_colors(write_instance, k4):
    col, lay = write_instance("k4", k4)
    result = _run(
        "solve", "-g", col, "--layout", lay, "-a", "rand",
        "--q", "4", "--trials", "32", "--seed", "7",
    )  # fmt: skip
    assert result.exit_code == 0
    report = _report(result)
    assert report["answer"] == "yes" and report["trials"] == 32
    assert report["trials_run"] == report["witness_trial"] + 1
    assert len(report["stats"]["primes"]) == report["trials_run"]


def test_rand_jobs_do_not_change_the_result(write_instance, petersen):
    col, lay = write_instance("petersen", petersen)
    base = ["solve", "-g", col, "--layout", lay, "-a", "rand", "--trials", "16", "--seed", "5"]
    one, four = _run(*base), _run(*base, "--jobs", "4")
    assert one.exit_code == four.exit_code == 0
    a, b = _report(one), _report(four)
    for key in ("answer", "trials_run", "witness_trial", "stats", "pathwidth"):
        assert a[key] == b[key], key


def test_rand_with_decomposition(write_instance, write_text, c5):
    col, _ = write_instance("c5", c5)
    npd = layout_to_nice_decomposition(c5, LinearLayout.identity(5))
    dec = write_text("c5.npd", format_decomposition(npd))
    result = _run("solve", "-g", col, "--decomp", dec, "-a", "rand", "--trials", "8")
    assert result.exit_code == 0
    report = _report(result)
    assert report["certificate"] == "decomposition"
    assert report["pathwidth"] == 2


def test_det_with_decomposition(write_instance, write_text, c5):
    col, _ = write_instance("c5", c5)
    npd = layout_to_nice_decomposition(c5, LinearLayout.identity(5))
    dec = write_text("c5.npd", format_decomposition(npd))
    result = _run("solve", "-g", col, "--decomp", dec, "--q", "2")
    assert result.exit_code == 1
    assert _report(result)["answer"] == "no"


def test_auto_layout(write_instance, c5):
    col, _ = write_instance("c5", c5)
    result = _run("solve", "-g", col, "--auto-layout", "exact")
    assert result.exit_code == 0
    report = _report(result)
    assert report["certificate_source"] == "auto:exact" and report["cutwidth"] == 2


def test_out_file_matches_stdout(tmp_path, write_instance, c5):
    col, lay = write_instance("c5", c5)
    out = tmp_path / "reports" / "c5.json"
    result = _run("solve", "-g", col, "--layout", lay, "-o", out)
    assert result.exit_code == 0
    assert out.read_text(encoding="utf-8") == result.stdout


@pytest.mark.parametrize(
    "extra",
    [
        [],  # det without a certificate
        ["--layout", "LAY", "--decomp", "LAY"],
        ["--layout", "LAY", "--alg", "simplex"],
        ["--layout", "LAY", "--q", "0"],
        ["--layout", "LAY", "--trials", "0"],
        ["--alg", "brute", "--layout", "LAY"],
    ],
)
def test_bad_configuration_exits_2(write_instance, c5, extra: list[str]):
    col, lay = write_instance("c5", c5)
    args = [str(lay) if a == "LAY" else a for a in extra]
    assert _run("solve", "-g", col, *args).exit_code == 2


def test_missing_or_broken_files_exit_2(tmp_path, write_instance, write_text, c5):
    col, lay = write_instance("c5", c5)
    assert _run("solve", "-g", tmp_path / "nope.col", "-a", "brute").exit_code == 2
    short = write_text("short.lay", "layout 4\n1 2 3 4\n")
    assert _run("solve", "-g", col, "--layout", short).exit_code == 2
    env = tmp_path / "x.env"
    assert _run("solve", "-g", col, "--layout", lay, "--env-file", env).exit_code == 2


# ----------- gen ----------- #

CNF = "c (x1 or x2) and (not x1 or x2)\np cnf 2 2\n1 2 0\n-1 2 0\n"


def test_gen_planar(tmp_path, write_text):
    cnf = write_text("f.cnf", CNF)
    out = tmp_path / "planar"
    result = _run("gen", "--cnf", cnf, "-o", out)
    assert result.exit_code == 0, result.output
    assert {p.name for p in out.iterdir()} == {"graph.col", "layout.lay", "meta.json"}
    meta = json.loads((out / "meta.json").read_text(encoding="utf-8"))
    assert meta["family"] == "planar3col" and meta["certificate"] == "layout"
    assert meta["n_vars"] == 2 and meta["m_clauses"] == 2
    assert meta["excess"] == meta["cutwidth"] - 2
    assert meta["provenance"].get("hcol", 0) == 9 * meta["params"]["hcol_copies"]
    assert "planar3col" in result.stdout


def test_gen_degree_compact_then_check(tmp_path, write_text):
    cnf = write_text("f.cnf", CNF)
    out = tmp_path / "degree"
    result = _run("gen", "--cnf", cnf, "-o", out, "-f", "degree", "--d", "5", "--compact")
    assert result.exit_code == 0, result.output
    assert (out / "decomposition.npd").is_file() and not (out / "layout.lay").exists()
    meta = json.loads((out / "meta.json").read_text(encoding="utf-8"))
    assert meta["certificate"] == "decomposition" and meta["max_degree"] <= 5
    assert meta["cutwidth"] is None and meta["pathwidth"] == meta["params"]["pathwidth"]
    check = _run(
        "verify", "-c", "decomp", "-g", out / "graph.col", "--decomp", out / "decomposition.npd"
    )
    assert check.exit_code == 0
    assert _report(check)["passed"] is True


def test_gen_errors_exit_2(tmp_path, write_text):
    cnf = write_text("f.cnf", CNF)
    assert _run("gen", "--cnf", cnf, "-o", tmp_path / "a", "-f", "sudoku").exit_code == 2
    assert _run("gen", "--cnf", tmp_path / "missing.cnf", "-o", tmp_path / "b").exit_code == 2
    bad_d = ["-f", "degree", "--d", "6"]
    assert _run("gen", "--cnf", cnf, "-o", tmp_path / "c", *bad_d).exit_code == 2


# ----------- verify ----------- #


def test_verify_list_and_unknown():
    listed = _run("verify", "--check", "list")
    assert listed.exit_code == 0
    assert "hcol" in listed.stdout.split() and "table" in listed.stdout.split()
    assert _run("verify", "--check", "nope").exit_code == 2


def test_verify_hcol_passes():
    result = _run("verify", "-c", "hcol")
    assert result.exit_code == 0
    report = _report(result)
    assert report["check"] == "hcol" and report["passed"] and report["failures"] == 0


def test_verify_layout_failure_exits_1(write_instance, write_text, c5):
    col, _ = write_instance("c5", c5)
    lay = write_text("bad.lay", "layout 5\n1 2 3 4 4\n")
    # a layout that is not a permutation does not even parse
    assert _run("verify", "-c", "layout", "-g", col, "--layout", lay).exit_code == 2
    k3 = write_text("k3.col", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    short = write_text("short.lay", "layout 2\n2 1\n")
    assert _run("verify", "-c", "layout", "-g", k3, "--layout", short).exit_code == 1


# ----------- bench ----------- #


def test_bench_json(tmp_path):
    out = tmp_path / "bench.json"
    result = _run(
        "bench", "--ctw-min", "2", "--ctw-max", "3", "--n", "12", "--q", "3",
        "--trials", "2", "--json", "-o", out,
    )  # fmt: skip
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert report["agree"] is True and len(report["rows"]) == 2
    assert json.loads(Path(out).read_text(encoding="utf-8")) == report


def test_bench_rejects_unknown_algorithm():
    assert _run("bench", "--alg", "brute", "--n", "8").exit_code == 2


def test_bench_skip_within_bound():
    args = ["bench", "--ctw-min", "2", "--ctw-max", "3", "--n", "12", "--q", "3", "-a", "det"]
    plain, skipping = _run(*args, "--json"), _run(*args, "--json", "--skip-within-bound")
    assert plain.exit_code == skipping.exit_code == 0, skipping.output
    rows = zip(_report(plain)["rows"], _report(skipping)["rows"])
    assert all(a["det_answer"] == b["det_answer"] for a, b in rows)
