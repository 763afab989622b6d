# SPDX-License-Identifier: MIT
# tests/test_packaging.py
from __future__ import annotations

import re
import tomllib
from pathlib import Path

import pytest

from cutcolor.verify import check_names

ROOT = Path(__file__).resolve().parents[1]
SCRIPT = ROOT / "scripts" / "check_dist.sh"


@pytest.fixture(scope="module")
def project() -> dict:
    with open(ROOT / "pyproject.toml", "rb") as fh:
        return tomllib.load(fh)["project"]


def test_dist_script_matches_project(project: dict):
    text = SCRIPT.read_text(encoding="utf-8")
    assert f"dist/{project['name'].replace('-', '_')}-*.whl" in text
    assert "[cli]" in text and "cli" in project["optional-dependencies"]
    (console,) = project["scripts"]
    assert f"$venv/bin/{console}" in text


def test_dist_script_runs_known_checks():
    text = SCRIPT.read_text(encoding="utf-8")
    loop = re.search(r"for check in ([\w ]+); do", text)
    assert loop is not None
    assert set(loop.group(1).split()) <= set(check_names())


def test_dist_script_tools_are_dev_dependencies(project: dict):
    dev = " ".join(project["optional-dependencies"]["dev"])
    for tool in ("build", "twine"):
        assert re.search(rf"\b{tool}\b", dev)
