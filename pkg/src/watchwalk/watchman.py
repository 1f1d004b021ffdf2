"""Watchman's walks: existence, exact length, witnesses, and multiplicity.

Two engines compute the watchman number:

* a generic breadth-first search over (current vertex, dominated-set) states,
  usable on any digraph up to the engine cap;
* a fast path for tournaments and semicomplete digraphs that restricts to the
  dominating strong component and counts dominating cycles of the optimal
  length, which is what makes the order 9-10 census tractable.

Multiplicity counts minimum closed dominating walks up to rotation.  Minimum
walks are aperiodic (a periodic walk could be cut down to one period, which
would be shorter and still dominating), so every rotation class of a length-w
walk contains exactly w distinct anchored sequences.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .core import (Digraph, bits, is_dominating_set, strong_components)
from .errors import NotATournamentError, PreconditionError, SizeCapError
from .limits import max_engine_vertices


@dataclass(frozen=True)
class Walk:
    """Closed vertex sequence v0..vk with vk = v0; a bare (v,) is the 0-walk."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("walk needs at least one vertex")
        if len(self.vertices) > 1 and self.vertices[0] != self.vertices[-1]:
            raise ValueError("walk is not closed")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def vertex_mask(self) -> int:
        mask = 0
        for v in self.vertices:
            mask |= 1 << v
        return mask

    def is_valid_in(self, d: Digraph) -> bool:
        return all(d.has_arc(a, b) for a, b in zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class WalkReport:
    exists: bool
    w: Optional[int] = None
    witness: Optional[Walk] = None
    multiplicity: Optional[int] = None


def has_watchman_walk(d: Digraph) -> bool:
    """True iff some maximal strong component's vertex set dominates.

    A closed walk lies inside one strong component and a superset of a
    dominating set still dominates, so the criterion is exact.
    """
    cond = strong_components(d)
    return any(is_dominating_set(d, comp) for comp in cond.components)


def source_criterion(d: Digraph) -> bool:
    """Existence test for digraphs with sources: exactly one source that
    dominates everything else."""
    sources = [v for v in range(d.n) if d.in_mask(v) == 0]
    if not sources:
        raise PreconditionError("source criterion needs at least one source vertex")
    return len(sources) == 1 and d.out_degree(sources[0]) == d.n - 1


def _dominating_vertex(d: Digraph) -> Optional[int]:
    for v in range(d.n):
        if d.closed_out(v) == d.full_mask:
            return v
    return None


def _anchored_shortest(d: Digraph, anchor: int) -> Optional[tuple[int, Walk]]:
    """Shortest closed dominating walk through anchor using vertices >= anchor."""
    full = d.full_mask
    allowed = full & ~((1 << anchor) - 1)
    closed = [d.closed_out(v) for v in range(d.n)]
    start = (anchor, closed[anchor])
    dist = {start: 0}
    parent: dict[tuple[int, int], tuple[int, int]] = {}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        v, dom = state
        step = dist[state]
        for u in bits(d.out[v] & allowed):
            ndom = dom | closed[u]
            nstate = (u, ndom)
            if nstate in dist:
                continue
            dist[nstate] = step + 1
            parent[nstate] = state
            if u == anchor and ndom == full:
                seq = [u]
                cur = nstate
                while cur != start:
                    cur = parent[cur]
                    seq.append(cur[0])
                seq.reverse()
                return step + 1, Walk(tuple(seq))
            queue.append(nstate)
    return None


def _count_closed_dominating_walks(d: Digraph, length: int) -> int:
    """Number of anchored closed dominating vertex sequences of this length."""
    full = d.full_mask
    closed = [d.closed_out(v) for v in range(d.n)]
    total = 0
    for s in range(d.n):
        layer = {(s, closed[s]): 1}
        for _ in range(length):
            nxt: dict[tuple[int, int], int] = {}
            for (v, dom), count in layer.items():
                for u in bits(d.out[v]):
                    key = (u, dom | closed[u])
                    nxt[key] = nxt.get(key, 0) + count
            layer = nxt
        total += layer.get((s, full), 0)
    return total


def watchman_number(d: Digraph) -> WalkReport:
    """Exact watchman number of any digraph via the state-space engine."""
    cap = max_engine_vertices()
    if d.n > cap:
        raise SizeCapError(f"generic walk engine capped at {cap} vertices, got {d.n}")
    dom_vertex = _dominating_vertex(d)
    if dom_vertex is not None:
        return WalkReport(True, 0, Walk((dom_vertex,)), 1)
    if not has_watchman_walk(d):
        return WalkReport(False)
    best: Optional[tuple[int, Walk]] = None
    for anchor in range(d.n):
        found = _anchored_shortest(d, anchor)
        if found is not None and (best is None or found[0] < best[0]):
            best = found
    assert best is not None, "existence check promised a walk"
    w, witness = best
    sequences = _count_closed_dominating_walks(d, w)
    assert sequences % w == 0, "minimum walks are aperiodic"
    return WalkReport(True, w, witness, sequences // w)


# ---------------------------------------------------------------------------
# Tournament / semicomplete fast path, also usable on raw bit-mask rows.

def _masks_domination_number(out: Sequence[int], n: int) -> tuple[int, tuple[int, ...]]:
    full = (1 << n) - 1
    closed = [out[v] | (1 << v) for v in range(n)]
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return k, combo
    raise AssertionError("V always dominates")


def _dominating_cycles(out: Sequence[int], n: int, length: int):
    """Dominating simple cycles of the given length, anchored at their
    minimum vertex; yields vertex tuples (not closed)."""
    full = (1 << n) - 1
    closed = [out[v] | (1 << v) for v in range(n)]
    for anchor in range(n):
        above = full & ~((1 << (anchor + 1)) - 1)
        path = [anchor]
        used = [1 << anchor]
        dom = [closed[anchor]]

        def walk():
            if len(path) == length:
                if (out[path[-1]] >> anchor) & 1 and dom[0] == full:
                    yield tuple(path)
                return
            for u in bits(out[path[-1]] & above & ~used[0]):
                path.append(u)
                saved = dom[0]
                used[0] |= 1 << u
                dom[0] |= closed[u]
                yield from walk()
                path.pop()
                used[0] ^= 1 << u
                dom[0] = saved

        yield from walk()


def _source_component(out: Sequence[int], n: int) -> list[int]:
    """Vertices of the dominating strong component of a semicomplete digraph."""
    comps = _tarjan_masks(out, n)
    # Reverse topological order: the last component found is the source.
    source = comps[-1]
    return list(bits(source))


def _tarjan_masks(out: Sequence[int], n: int) -> list[int]:
    from .core import _tarjan_components

    return _tarjan_components(out, n)


def _tournament_stats(out: Sequence[int], n: int) -> tuple[int, int, int, tuple[int, ...]]:
    """(w, gamma, multiplicity, witness sequence) for a semicomplete digraph
    given as raw out-mask rows.  gamma is taken in the whole digraph; w and
    multiplicity come from the dominating strong component, where they are
    unchanged (every component vertex beats every outside vertex, so a set
    dominates the component iff it dominates everything)."""
    comp = _source_component(out, n)
    if len(comp) < n:
        index = {v: i for i, v in enumerate(comp)}
        sub = []
        cmask = 0
        for v in comp:
            cmask |= 1 << v
        for v in comp:
            row = 0
            for u in bits(out[v] & cmask):
                row |= 1 << index[u]
            sub.append(row)
        w, gamma, mult, seq = _tournament_stats(tuple(sub), len(comp))
        return w, gamma, mult, tuple(comp[v] for v in seq)
    gamma, combo = _masks_domination_number(out, n)
    if gamma == 1:
        return 0, 1, 1, (combo[0],)
    has_digon = any((out[u] >> v) & (out[v] >> u) & 1
                    for u in range(n) for v in bits(out[u]) if v > u)
    lengths = [gamma, gamma + 1] if (gamma >= 3 or has_digon) else [gamma + 1]
    for length in lengths:
        mult = 0
        witness: Optional[tuple[int, ...]] = None
        for cyc in _dominating_cycles(out, n, length):
            if witness is None:
                witness = cyc
            mult += 1
        if mult:
            assert witness is not None
            return length, gamma, mult, witness + (witness[0],)
    raise AssertionError("w must be gamma or gamma + 1 for semicomplete digraphs")


def watchman_number_tournament(t: Digraph) -> WalkReport:
    """Fast exact engine for tournaments and semicomplete digraphs.

    Minimum walks never repeat vertices here, so they are exactly the
    dominating cycles of length w; multiplicity counts them by anchored
    enumeration.
    """
    if not t.is_semicomplete():
        raise NotATournamentError("fast path needs a tournament or semicomplete digraph")
    w, _, mult, seq = _tournament_stats(t.out, t.n)
    return WalkReport(True, w, Walk(seq), mult)


# ---------------------------------------------------------------------------
# Shortest closed walk through a prescribed vertex set.

def _bfs_distances(d: Digraph, src: int) -> list[int]:
    INF = 1 << 30
    dist = [INF] * d.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for u in bits(d.out[v]):
            if dist[u] > dist[v] + 1:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _bfs_path(d: Digraph, src: int, dst: int) -> list[int]:
    """One shortest path src -> dst; ties broken toward lower vertex index."""
    prev = {src: -1}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for u in bits(d.out[v]):
            if u not in prev:
                prev[u] = v
                queue.append(u)
    path = [dst]
    while prev[path[-1]] != -1:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def shortest_closed_walk_through(d: Digraph, s: int) -> Optional[tuple[int, Walk]]:
    """Minimum closed walk visiting every vertex of mask s; None when the
    set spans several strong components.  Held-Karp over the terminals with
    pairwise shortest-path legs."""
    cap = max_engine_vertices()
    if d.n > cap:
        raise SizeCapError(f"walk engine capped at {cap} vertices, got {d.n}")
    if s == 0:
        raise PreconditionError("vertex set must be nonempty")
    terminals = list(bits(s))
    if len(terminals) == 1:
        return 0, Walk((terminals[0],))
    k = len(terminals)
    INF = 1 << 30
    dist = {t: _bfs_distances(d, t) for t in terminals}
    if any(dist[a][b] >= INF for a in terminals for b in terminals):
        return None
    t0 = terminals[0]
    rest = terminals[1:]
    # dp[(mask, i)]: shortest walk from t0 covering terminal subset mask
    # (over rest) and ending at rest[i].
    dp: dict[tuple[int, int], tuple[int, int]] = {}
    for i, t in enumerate(rest):
        dp[(1 << i, i)] = (dist[t0][t], -1)
    fullmask = (1 << (k - 1)) - 1
    for mask in range(1, fullmask + 1):
        for i in range(k - 1):
            if not (mask >> i) & 1 or (mask, i) not in dp:
                continue
            base = dp[(mask, i)][0]
            for j in range(k - 1):
                if (mask >> j) & 1:
                    continue
                cand = base + dist[rest[i]][rest[j]]
                key = (mask | (1 << j), j)
                if key not in dp or cand < dp[key][0]:
                    dp[key] = (cand, i)
    best = None
    for i in range(k - 1):
        total = dp[(fullmask, i)][0] + dist[rest[i]][t0]
        if best is None or total < best[0]:
            best = (total, i)
    assert best is not None
    # Reconstruct the terminal order, then expand each leg.
    order = []
    mask, i = fullmask, best[1]
    while i != -1:
        order.append(rest[i])
        mask, i = mask ^ (1 << i), dp[(mask, i)][1]
    order.append(t0)
    order.reverse()
    order.append(t0)
    walk = [t0]
    for a, b in zip(order, order[1:]):
        walk.extend(_bfs_path(d, a, b)[1:])
    return best[0], Walk(tuple(walk))
