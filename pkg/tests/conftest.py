"""Shared fixtures and brute-force helpers that do not touch the library's counting code."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

import pytest

from apollonian.graph import build_iterative


def leibniz_det(m):
    """Determinant by the permutation expansion (tiny matrices only)."""
    size = len(m)
    total = 0
    for perm in permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for row, col in enumerate(perm):
            term *= m[row][col]
            if not term:
                break
        total += term
    return total


def fraction_det(m):
    """Determinant by ordinary Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    size = len(a)
    det = Fraction(1)
    for k in range(size):
        pivot = next((i for i in range(k, size) if a[i][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, size):
            factor = a[i][k] / a[k][k]
            for j in range(k, size):
                a[i][j] -= factor * a[k][j]
    assert det.denominator == 1
    return int(det)


def brute_spanning_trees(num_vertices, edges):
    """Count spanning trees by testing every (V-1)-edge subset for acyclicity."""
    count = 0
    for subset in combinations(sorted(edges), num_vertices - 1):
        parent = list(range(num_vertices))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        count += ok
    return count


@pytest.fixture(scope="session")
def graphs():
    return {n: build_iterative(n) for n in range(7)}


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
