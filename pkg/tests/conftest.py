"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the library's own search strategies: domination
is checked over the full power set and walks by iterative-deepening DFS, so
agreement is meaningful.
"""
import sys
from itertools import combinations, permutations
from pathlib import Path

import pytest

from watchwalk import Digraph, Tournament, fixtures

DATA = Path(__file__).resolve().parent.parent / "src" / "watchwalk" / "data"

# one line per acceptance criterion, echoed after the run so they stay
# visible without -s
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def figs():
    return fixtures()


@pytest.fixture()
def three_cycle():
    return Tournament.from_digraph(Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)]))


def oracle_gamma(d: Digraph) -> int:
    full = d.full_mask
    for k in range(1, d.n + 1):
        for combo in combinations(range(d.n), k):
            covered = 0
            for v in combo:
                covered |= d.closed_out(v)
            if covered == full:
                return k
    raise AssertionError("V dominates")


def oracle_watchman(d: Digraph, limit: int = 12):
    """(w, anchored sequence count) by plain DFS over walks, or None."""
    full = d.full_mask
    for v in range(d.n):
        if d.closed_out(v) == full:
            return 0, 1
    for length in range(1, limit + 1):
        count = 0
        for start in range(d.n):
            stack = [(start, d.closed_out(start), 0)]
            paths = [[start]]
            # explicit DFS keeping whole paths; fine at oracle scale
            while stack:
                v, dom, depth = stack.pop()
                path = paths.pop()
                if depth == length:
                    if v == start and dom == full:
                        count += 1
                    continue
                for u in range(d.n):
                    if d.has_arc(v, u):
                        stack.append((u, dom | d.closed_out(u), depth + 1))
                        paths.append(path + [u])
        if count:
            assert count % length == 0
            return length, count // length
    return None


def relabel(t: Tournament, perm) -> Tournament:
    out = [0] * t.n
    for u, v in t.arcs():
        out[perm[u]] |= 1 << perm[v]
    return Tournament(t.n, tuple(out))


def all_relabelings(t: Tournament):
    for perm in permutations(range(t.n)):
        yield relabel(t, perm)
