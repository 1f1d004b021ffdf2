"""Digraphs on bit sets, strong components, and tournament path/cycle machinery.

Vertices are 0..n-1 and every out-neighbourhood is a single int bit mask,
so set algebra (union, domination tests) is plain integer arithmetic.
All graph values are immutable after construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import FormatError, NotATournamentError, PreconditionError, SizeCapError
from .limits import max_vertices


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Digraph:
    """Loop-free directed graph; ``out[v]`` has bit u set iff arc (v, u) exists."""

    n: int
    out: tuple[int, ...]

    def __post_init__(self):
        cap = max_vertices()
        if not 1 <= self.n <= cap:
            raise SizeCapError(f"vertex count {self.n} outside 1..{cap}")
        if len(self.out) != self.n:
            raise ValueError(f"expected {self.n} out-neighbourhoods, got {len(self.out)}")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.out):
            if mask & ~full:
                raise ValueError(f"vertex {v} has an arc endpoint outside 0..{self.n - 1}")
            if (mask >> v) & 1:
                raise ValueError(f"loop at vertex {v}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Sequence[tuple[int, int]]) -> "Digraph":
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) outside 0..{n - 1}")
            out[u] |= 1 << v
        return cls(n, tuple(out))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def arc_count(self) -> int:
        return sum(mask.bit_count() for mask in self.out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.out[u]):
                yield u, v

    def closed_out(self, v: int) -> int:
        return self.out[v] | (1 << v)

    def in_mask(self, v: int) -> int:
        mask = 0
        for u in range(self.n):
            if (self.out[u] >> v) & 1:
                mask |= 1 << u
        return mask

    def out_degree(self, v: int) -> int:
        return self.out[v].bit_count()

    def is_tournament(self) -> bool:
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.out[i] >> j) ^ (self.out[j] >> i)) & 1 == 0:
                    return False
        return True

    def is_semicomplete(self) -> bool:
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if not ((self.out[i] >> j) | (self.out[j] >> i)) & 1:
                    return False
        return True

    def has_digon(self) -> bool:
        return any((self.out[u] >> v) & (self.out[v] >> u) & 1
                   for u in range(self.n) for v in bits(self.out[u]) if v > u)

    def subgraph(self, mask: int) -> tuple["Digraph", list[int]]:
        """Induced subdigraph on ``mask``; returns it with the old labels of its vertices."""
        verts = list(bits(mask))
        index = {v: i for i, v in enumerate(verts)}
        out = []
        for v in verts:
            sub = 0
            for u in bits(self.out[v] & mask):
                sub |= 1 << index[u]
            out.append(sub)
        return Digraph(len(verts), tuple(out)), verts

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {self.arc_count}"]
        lines.extend(f"{u} {v}" for u, v in self.arcs())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Tournament(Digraph):
    """Digraph with exactly one arc per unordered pair."""

    def __post_init__(self):
        super().__post_init__()
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.out[i] >> j) ^ (self.out[j] >> i)) & 1 == 0:
                    raise NotATournamentError(
                        f"pair ({i}, {j}) must have exactly one arc")

    @classmethod
    def from_digraph(cls, d: Digraph) -> "Tournament":
        return cls(d.n, d.out)

    def tcode(self) -> str:
        """Row-major pair bits; bit 1 at (i, j), i < j means arc i -> j."""
        parts = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                parts.append("1" if self.has_arc(i, j) else "0")
        body = "".join(parts)
        return f"T {self.n} {body}" if body else f"T {self.n}"

    @classmethod
    def from_tcode(cls, text: str) -> "Tournament":
        fields = text.split()
        if not fields or fields[0] != "T":
            raise FormatError("tournament code must start with 'T'")
        if len(fields) < 2:
            raise FormatError("tournament code missing vertex count")
        try:
            n = int(fields[1])
        except ValueError as exc:
            raise FormatError(f"bad vertex count {fields[1]!r}") from exc
        want = n * (n - 1) // 2
        body = fields[2] if len(fields) > 2 else ""
        if len(body) != want or set(body) - {"0", "1"}:
            raise FormatError(f"expected {want} pair bits, got {body!r}")
        out = [0] * n
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                if body[k] == "1":
                    out[i] |= 1 << j
                else:
                    out[j] |= 1 << i
                k += 1
        return cls(n, tuple(out))


def parse_edge_list(text: str) -> Digraph:
    """Parse the "n m" / "u v" arc-list format; promotes to Tournament when it is one."""
    lines = text.splitlines()
    stripped = [(i + 1, line.strip()) for i, line in enumerate(lines) if line.strip()]
    if not stripped:
        raise FormatError("empty input")
    lineno, header = stripped[0]
    fields = header.split()
    if len(fields) != 2:
        raise FormatError("header must be 'n m'", line=lineno)
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError as exc:
        raise FormatError("header must be two integers", line=lineno) from exc
    if len(stripped) - 1 != m:
        raise FormatError(f"expected {m} arc lines, found {len(stripped) - 1}", line=lineno)
    arcs = []
    for lineno, line in stripped[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError("arc line must be 'u v'", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise FormatError("arc endpoints must be integers", line=lineno) from exc
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"arc ({u}, {v}) outside 0..{n - 1}", line=lineno)
        if u == v:
            raise FormatError(f"loop at vertex {u}", line=lineno)
        arcs.append((u, v))
    d = Digraph.from_arcs(n, arcs)
    if d.is_tournament():
        return Tournament.from_digraph(d)
    return d


def parse_graph(text: str) -> Digraph:
    """Dispatch between the tournament-code and edge-list formats."""
    if text.lstrip().startswith("T "):
        return Tournament.from_tcode(text.strip())
    return parse_edge_list(text)


@dataclass(frozen=True)
class Condensation:
    """Strong components in topological order (sources first) plus the quotient."""

    components: tuple[int, ...]
    quotient: Digraph
    component_of: tuple[int, ...]


def _tarjan_components(out: Sequence[int], n: int) -> list[int]:
    """Maximal strong components as masks, in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[int] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        # Iterative Tarjan: (vertex, iterator position encoded as remaining mask).
        work = [(root, out[root])]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, remaining = work[-1]
            if remaining:
                wbit = remaining & -remaining
                work[-1] = (v, remaining ^ wbit)
                w = wbit.bit_length() - 1
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, out[w]))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = 0
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp |= 1 << w
                        if w == v:
                            break
                    comps.append(comp)
    return comps


def strong_components(d: Digraph) -> Condensation:
    """Maximal strong components and the (acyclic) condensation quotient."""
    comps = _tarjan_components(d.out, d.n)
    comps.reverse()  # Tarjan finishes sinks first; we want sources first.
    component_of = [0] * d.n
    for idx, comp in enumerate(comps):
        for v in bits(comp):
            component_of[v] = idx
    k = len(comps)
    qout = [0] * k
    for u, v in d.arcs():
        cu, cv = component_of[u], component_of[v]
        if cu != cv:
            qout[cu] |= 1 << cv
    quotient = Digraph(k, tuple(qout))
    return Condensation(tuple(comps), quotient, tuple(component_of))


def is_strongly_connected(d: Digraph) -> bool:
    return len(_tarjan_components(d.out, d.n)) == 1


def dominating_strong_component(t: Digraph) -> int:
    """Vertex mask of the source component of the condensation.

    Always exists and dominates all of V for tournaments (and semicomplete
    digraphs, whose condensation is also a transitive tournament).
    """
    if not t.is_semicomplete():
        raise NotATournamentError("dominating strong component needs a semicomplete digraph")
    cond = strong_components(t)
    return cond.components[0]


def is_dominating_set(d: Digraph, s: int) -> bool:
    """True iff s together with its out-neighbours covers every vertex."""
    covered = 0
    for v in bits(s):
        covered |= d.closed_out(v)
    return covered == d.full_mask


def hamilton_path(t: Tournament) -> list[int]:
    """Hamilton path by insertion, scanning vertices in index order.

    Each vertex goes to the first feasible position, so the output is
    deterministic.
    """
    order = [0]
    for v in range(1, t.n):
        placed = False
        for p in range(len(order) + 1):
            ok_prev = p == 0 or t.has_arc(order[p - 1], v)
            ok_next = p == len(order) or t.has_arc(v, order[p])
            if ok_prev and ok_next:
                order.insert(p, v)
                placed = True
                break
        assert placed, "tournament insertion always has a feasible position"
    return order


def _first_three_cycle(t: Digraph) -> Optional[list[int]]:
    for a in range(t.n):
        for b in bits(t.out[a]):
            for c in bits(t.out[b]):
                if c != a and t.has_arc(c, a):
                    return [a, b, c]
    return None


def hamilton_cycle(t: Tournament) -> Optional[list[int]]:
    """Closed sequence through all vertices, or None when not strong.

    Moon-style insertion: grow a cycle either by splicing a single vertex
    between a consecutive dominating/dominated pair, or by appending an
    arc from the all-dominated side to the all-dominating side.
    """
    if not is_strongly_connected(t):
        return None
    if t.n == 1:
        return [0]
    cycle = _first_three_cycle(t)
    assert cycle is not None, "strong tournament on >= 3 vertices has a 3-cycle"
    in_cycle = 0
    for v in cycle:
        in_cycle |= 1 << v
    while in_cycle != t.full_mask:
        inserted = False
        for u in bits(t.full_mask & ~in_cycle):
            for i in range(len(cycle)):
                a, b = cycle[i], cycle[(i + 1) % len(cycle)]
                if t.has_arc(a, u) and t.has_arc(u, b):
                    cycle.insert(i + 1, u)
                    in_cycle |= 1 << u
                    inserted = True
                    break
            if inserted:
                break
        if inserted:
            continue
        # Every remaining vertex either beats or loses to the whole cycle.
        losers = [u for u in bits(t.full_mask & ~in_cycle)
                  if all(t.has_arc(c, u) for c in cycle)]
        found = False
        for u in losers:
            for v in bits(t.out[u] & ~in_cycle):
                if all(t.has_arc(v, c) for c in cycle):
                    cycle.extend([u, v])
                    in_cycle |= (1 << u) | (1 << v)
                    found = True
                    break
            if found:
                break
        assert found, "strongness guarantees an arc from the dominated to the dominating side"
    return cycle + [cycle[0]]


def cycle_through_vertex(t: Tournament, v: int, k: int) -> Optional[list[int]]:
    """A directed k-cycle containing v (closed sequence), or None.

    Never None for strong tournaments with 3 <= k <= n (Moon).
    """
    if not 3 <= k <= t.n:
        raise PreconditionError(f"cycle length {k} outside 3..{t.n}")
    path = [v]
    usedref = [1 << v]

    def extend() -> bool:
        if len(path) == k:
            return t.has_arc(path[-1], v)
        for u in bits(t.out[path[-1]] & ~usedref[0]):
            path.append(u)
            usedref[0] |= 1 << u
            if extend():
                return True
            path.pop()
            usedref[0] ^= 1 << u
        return False

    if extend():
        return path + [v]
    return None
