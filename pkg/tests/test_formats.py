# SPDX-License-Identifier: MIT
# tests/test_formats.py
from __future__ import annotations

import pytest

from cutcolor.errors import FormatError
from cutcolor.formats import (
    format_decomposition,
    parse_decomposition,
    parse_graph,
    parse_layout,
    read_cnf,
    read_graph,
    write_decomposition,
)
from cutcolor.graph import (
    Forget,
    IntroduceEdge,
    IntroduceVertex,
    LinearLayout,
    layout_to_nice_decomposition,
)


def test_parse_graph_with_comments():
    g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\n\ne 3 1\n")
    assert g.n == 3 and g.edges == ((1, 2), (2, 3), (1, 3))


@pytest.mark.parametrize(
    "text, needle",
    [
        ("e 1 2\n", "before"),
        ("p edge 2 2\ne 1 2\n", "declares 2 edges"),
        ("p edge 2 1\ne 1 3\n", "outside"),
        ("p edge 2 1\nx 1 2\n", "unknown line"),
        ("p edge 2 1\ne 1 two\n", ""),
        ("", "missing"),
    ],
)
def test_parse_graph_errors(text: str, needle: str):
    with pytest.raises(FormatError, match=needle):
        parse_graph(text, path="g.col")


def test_format_error_carries_path_and_line():
    with pytest.raises(FormatError) as info:
        parse_graph("p edge 2 1\ne 1\n", path="bad.col")
    assert info.value.path == "bad.col"
    assert info.value.line == 2
    assert str(info.value).startswith("bad.col:2:")


def test_parse_layout_accepts_wrapped_lines():
    lay = parse_layout("layout 5\n3 1\n5 2 4\n")
    assert lay.order == (3, 1, 5, 2, 4)


@pytest.mark.parametrize("text", ["3 1 2\n", "layout 3\n1 2\n", "layout 3\n1 1 2\n"])
def test_parse_layout_errors(text: str):
    with pytest.raises(FormatError):
        parse_layout(text)


def test_decomposition_text_round_trip(petersen, tmp_path):
    npd = layout_to_nice_decomposition(petersen, LinearLayout.identity(10))
    path = write_decomposition(tmp_path / "p.npd", npd)
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0] == "IV 1"
    assert parse_decomposition(text) == npd
    assert format_decomposition(npd) == text


def test_parse_decomposition_events_and_errors():
    npd = parse_decomposition("c x\nIV 1\niv 2\nIE 2 1\nFV 1\nFV 2\n")
    assert npd.events == (
        IntroduceVertex(1),
        IntroduceVertex(2),
        IntroduceEdge(2, 1),
        Forget(1),
        Forget(2),
    )
    with pytest.raises(FormatError, match="bad event"):
        parse_decomposition("IE 1\n")


def test_read_cnf_multiline_clauses(write_text):
    path = write_text("f.cnf", "c demo\np cnf 3 2\n1 -2\n0 2 3 0\n")
    f = read_cnf(path)
    assert f.n == 3 and f.clauses == ((1, -2), (2, 3))


def test_read_cnf_rejects_tautology(write_text):
    path = write_text("t.cnf", "p cnf 1 1\n1 -1 0\n")
    with pytest.raises(FormatError, match="negation"):
        read_cnf(path)


def test_missing_file_is_a_format_error(tmp_path):
    with pytest.raises(FormatError, match="cannot read"):
        read_graph(tmp_path / "nope.col")
