"""Exact domination numbers and their total / cycle / connected variants.

All searches ascend over set sizes and enumerate k-subsets in lexicographic
order, so the first witness found is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import Digraph, bits, is_strongly_connected


def _greedy_upper_bound(d: Digraph) -> int:
    """Size of a greedy dominating set; caps the exact search."""
    covered = 0
    size = 0
    full = d.full_mask
    while covered != full:
        best_v, best_gain = 0, -1
        for v in range(d.n):
            gain = (d.closed_out(v) & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        covered |= d.closed_out(best_v)
        size += 1
    return size


def domination_number(d: Digraph) -> tuple[int, int]:
    """(gamma, witness mask) for the smallest dominating set."""
    full = d.full_mask
    closed = [d.closed_out(v) for v in range(d.n)]
    ub = _greedy_upper_bound(d)
    for k in range(1, ub + 1):
        for combo in combinations(range(d.n), k):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                mask = 0
                for v in combo:
                    mask |= 1 << v
                return k, mask
    raise AssertionError("greedy bound must be attainable")


def all_minimum_dominating_sets(d: Digraph) -> list[int]:
    """Every dominating set of size gamma, ascending lexicographic order."""
    gamma, _ = domination_number(d)
    full = d.full_mask
    closed = [d.closed_out(v) for v in range(d.n)]
    found = []
    for combo in combinations(range(d.n), gamma):
        covered = 0
        for v in combo:
            covered |= closed[v]
        if covered == full:
            mask = 0
            for v in combo:
                mask |= 1 << v
            found.append(mask)
    return found


def total_domination_number(d: Digraph) -> Optional[tuple[int, int]]:
    """Smallest S giving every vertex an in-neighbour in S; None if impossible.

    A source vertex has no in-neighbour at all, so no total dominating set
    exists when one is present.
    """
    full = d.full_mask
    in_masks = [d.in_mask(v) for v in range(d.n)]
    if any(m == 0 for m in in_masks):
        return None
    for k in range(1, d.n + 1):
        for combo in combinations(range(d.n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(in_masks[v] & mask for v in range(d.n)):
                return k, mask
    return None


def _cycles_of_length(d: Digraph, length: int):
    """Simple directed cycles of the given length, anchored at their minimum
    vertex, in lexicographic DFS order. Yields vertex lists (not closed)."""
    for anchor in range(d.n):
        allowed_high = ~((1 << (anchor + 1)) - 1)  # vertices > anchor
        path = [anchor]
        usedref = [1 << anchor]

        def walk():
            if len(path) == length:
                if d.has_arc(path[-1], anchor):
                    yield list(path)
                return
            for u in bits(d.out[path[-1]] & allowed_high & ~usedref[0]):
                path.append(u)
                usedref[0] |= 1 << u
                yield from walk()
                path.pop()
                usedref[0] ^= 1 << u

        yield from walk()


def cycle_domination_number(d: Digraph) -> Optional[tuple[int, list[int]]]:
    """Length and witness of the shortest dominating directed cycle.

    Length 2 cycles (digons) count in general digraphs; None when no cycle
    of any length dominates.
    """
    full = d.full_mask
    start = 2 if d.has_digon() else 3
    for length in range(start, d.n + 1):
        for cycle in _cycles_of_length(d, length):
            covered = 0
            for v in cycle:
                covered |= d.closed_out(v)
            if covered == full:
                return length, cycle + [cycle[0]]
    return None


def _weakly_connected(d: Digraph, mask: int) -> bool:
    verts = list(bits(mask))
    if len(verts) <= 1:
        return True
    seen = 1 << verts[0]
    frontier = [verts[0]]
    while frontier:
        v = frontier.pop()
        nbrs = (d.out[v] | d.in_mask(v)) & mask & ~seen
        for u in bits(nbrs):
            seen |= 1 << u
            frontier.append(u)
    return seen == mask


def _strongly_connected_subset(d: Digraph, mask: int) -> bool:
    if mask.bit_count() <= 1:
        return True
    sub, _ = d.subgraph(mask)
    return is_strongly_connected(sub)


def connected_domination_numbers(
    d: Digraph,
) -> tuple[Optional[tuple[int, int]], Optional[tuple[int, int]]]:
    """((gamma_wc, witness), (gamma_sc, witness)), either side None when no
    dominating set induces a weakly / strongly connected subdigraph."""
    full = d.full_mask
    closed = [d.closed_out(v) for v in range(d.n)]
    wc = sc = None
    for k in range(1, d.n + 1):
        if wc is not None and sc is not None:
            break
        for combo in combinations(range(d.n), k):
            covered = 0
            mask = 0
            for v in combo:
                covered |= closed[v]
                mask |= 1 << v
            if covered != full:
                continue
            if wc is None and _weakly_connected(d, mask):
                wc = (k, mask)
            if sc is None and _strongly_connected_subset(d, mask):
                sc = (k, mask)
            if wc is not None and sc is not None:
                break
    return wc, sc


@dataclass(frozen=True)
class DominationReport:
    """All five domination parameters with witnesses; None where undefined."""

    gamma: int
    gamma_witness: int
    gamma_t: Optional[int]
    gamma_t_witness: Optional[int]
    gamma_cyc: Optional[int]
    gamma_cyc_witness: Optional[list[int]]
    gamma_wc: Optional[int]
    gamma_wc_witness: Optional[int]
    gamma_sc: Optional[int]
    gamma_sc_witness: Optional[int]


def domination_report(d: Digraph) -> DominationReport:
    gamma, gw = domination_number(d)
    tot = total_domination_number(d)
    cyc = cycle_domination_number(d)
    wc, sc = connected_domination_numbers(d)
    return DominationReport(
        gamma=gamma,
        gamma_witness=gw,
        gamma_t=tot[0] if tot else None,
        gamma_t_witness=tot[1] if tot else None,
        gamma_cyc=cyc[0] if cyc else None,
        gamma_cyc_witness=cyc[1] if cyc else None,
        gamma_wc=wc[0] if wc else None,
        gamma_wc_witness=wc[1] if wc else None,
        gamma_sc=sc[0] if sc else None,
        gamma_sc_witness=sc[1] if sc else None,
    )
