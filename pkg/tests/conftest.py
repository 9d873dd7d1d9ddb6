# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

import os
from pathlib import Path
import zipfile

import httpx
import networkx as nx
import pytest

from trident import Graph, read_edge_list


DATASETS_ENV = "TRIDENT_DATASETS"

# Girvan-Newman American college football network, 2000 season
FOOTBALL_URLS = (
    "https://websites.umich.edu/~mejn/netdata/football.zip",
    "http://www-personal.umich.edu/~mejn/netdata/football.zip",
)


@pytest.fixture
def anyio_backend():
    return "asyncio"


@pytest.fixture(scope="session")
def karate() -> Graph:
    return Graph.from_networkx(nx.karate_club_graph())


@pytest.fixture(scope="session")
def lesmis() -> Graph:
    return Graph.from_networkx(nx.les_miserables_graph())


def _fetch_football(target: Path) -> None:
    failures: list[str] = []
    for url in FOOTBALL_URLS:
        try:
            response = httpx.get(url, follow_redirects=True, timeout=30.0)
            response.raise_for_status()
        except httpx.HTTPError as exc:
            failures.append(f"{url}: {exc}")
            continue
        target.write_bytes(response.content)
        return
    pytest.skip("football network unavailable offline: " + "; ".join(failures))


@pytest.fixture(scope="session")
def football(pytestconfig: pytest.Config) -> Graph:
    """115 teams, 613 games.

    Read from ``TRIDENT_DATASETS/football.txt`` when present; otherwise the
    public archive is downloaded once and kept in the pytest cache.
    """
    root = os.getenv(DATASETS_ENV)
    if root and (Path(root) / "football.txt").exists():
        return read_edge_list(Path(root) / "football.txt")
    assert pytestconfig.cache is not None
    archive = pytestconfig.cache.mkdir("datasets") / "football.zip"
    if not archive.exists():
        _fetch_football(archive)
    with zipfile.ZipFile(archive) as bundle:
        gml = bundle.read("football.gml").decode("utf-8")
    # the first line is a free-text banner the gml grammar rejects
    return Graph.from_networkx(nx.parse_gml(gml.split("\n")[1:]))


@pytest.fixture
def dataset():
    """Return a loader for files under ``TRIDENT_DATASETS``; skips when the file is absent."""
    root = os.getenv(DATASETS_ENV)

    def load(name: str) -> Path:
        if not root:
            pytest.skip(f"{DATASETS_ENV} is not set")
        path = Path(root) / name
        if not path.exists():
            pytest.skip(f"{path} not found")
        return path

    return load
