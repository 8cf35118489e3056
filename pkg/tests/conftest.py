"""Shared oracles written independently of the package code."""

from __future__ import annotations

import itertools

import pytest


def brute_neighbors(n: int) -> list[set[int]]:
    """Queen moves by walking the eight rays from every square."""
    nbrs: list[set[int]] = [set() for _ in range(n * n)]
    for r, c in itertools.product(range(n), repeat=2):
        for dr, dc in [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)]:
            rr, cc = r + dr, c + dc
            while 0 <= rr < n and 0 <= cc < n:
                nbrs[r * n + c].add(rr * n + cc)
                rr, cc = rr + dr, cc + dc
    return nbrs


@pytest.fixture(scope="session")
def oracle_neighbors():
    cache: dict[int, list[set[int]]] = {}

    def get(n: int) -> list[set[int]]:
        if n not in cache:
            cache[n] = brute_neighbors(n)
        return cache[n]

    return get


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
