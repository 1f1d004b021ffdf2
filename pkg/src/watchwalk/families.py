"""Graph families, figure fixtures, constructions, and structural predicates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (Digraph, Tournament, bits, hamilton_path,
                   is_strongly_connected, strong_components)
from .domination import domination_number
from .errors import PreconditionError, SizeCapError
from .limits import max_vertices
from .watchman import Walk

_SIMPLE_COMPONENT_SCORES = {(0,), (1, 1, 1), (1, 1, 2, 2), (2, 2, 2, 2, 2)}


class SplitMix64:
    """SplitMix64 generator: 64-bit state, fixed algorithm, so every seeded
    construction is bit-reproducible across platforms."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def next_bit(self) -> int:
        return self.next64() & 1


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of a complete multipartite graph."""

    part_sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.part_sizes) < 2:
            raise PreconditionError("need at least two parts")
        if any(s < 1 for s in self.part_sizes):
            raise PreconditionError("part sizes must be positive")
        if sum(self.part_sizes) > max_vertices():
            raise SizeCapError(f"total size {sum(self.part_sizes)} exceeds cap")

    @property
    def n(self) -> int:
        return sum(self.part_sizes)

    def part_masks(self) -> list[int]:
        masks = []
        start = 0
        for size in self.part_sizes:
            masks.append(((1 << size) - 1) << start)
            start += size
        return masks


@dataclass(frozen=True)
class ScoreSequence:
    """Non-decreasing out-degree sequence; Landau-validated on construction."""

    scores: tuple[int, ...]

    def __post_init__(self):
        n = len(self.scores)
        if n == 0:
            raise ValueError("empty score sequence")
        if any(a > b for a, b in zip(self.scores, self.scores[1:])):
            raise ValueError("scores must be non-decreasing")
        if sum(self.scores) != n * (n - 1) // 2:
            raise ValueError("scores must sum to n(n-1)/2")
        total = 0
        for k in range(1, n + 1):
            total += self.scores[k - 1]
            if total < k * (k - 1) // 2:
                raise ValueError(f"Landau inequality fails at prefix {k}")


def transitive(n: int) -> Tournament:
    """Arcs i -> j for i < j."""
    if not 1 <= n <= max_vertices():
        raise SizeCapError(f"order {n} outside 1..{max_vertices()}")
    full = (1 << n) - 1
    out = tuple((full >> (v + 1)) << (v + 1) for v in range(n))
    return Tournament(n, out)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def paley(q: int) -> Tournament:
    """Arc (a, b) iff b - a is a nonzero quadratic residue mod q.

    Restricted to prime q with q = 3 (mod 4); prime powers would need field
    arithmetic beyond Z_q.
    """
    if not _is_prime(q):
        raise PreconditionError(f"{q} is not prime")
    if q % 4 != 3:
        raise PreconditionError(f"{q} is not 3 mod 4")
    if q > max_vertices():
        raise SizeCapError(f"order {q} exceeds cap {max_vertices()}")
    residues = {(x * x) % q for x in range(1, q)}
    return circulant(q, residues)


def circulant(n: int, connection_set) -> Tournament:
    """Arcs i -> i+s (mod n) for each s in the connection set."""
    s = set(connection_set)
    if n % 2 == 0:
        raise PreconditionError("circulant tournaments need odd order")
    expect = (n - 1) // 2
    if len(s) != expect or any(not 1 <= x <= n - 1 for x in s):
        raise PreconditionError(f"connection set must pick one of each pair s, {n}-s")
    for x in s:
        if (n - x) in s:
            raise PreconditionError(f"connection set holds both {x} and {n - x}")
    out = []
    for v in range(n):
        row = 0
        for step in s:
            row |= 1 << ((v + step) % n)
        out.append(row)
    return Tournament(n, tuple(out))


def random_tournament(n: int, seed: int) -> Tournament:
    """Each pair (i, j), i < j in row-major order oriented by one PRNG bit."""
    if not 1 <= n <= max_vertices():
        raise SizeCapError(f"order {n} outside 1..{max_vertices()}")
    rng = SplitMix64(seed)
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next_bit():
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
    return Tournament(n, tuple(out))


def random_orientation(spec: PartitionSpec, seed: int) -> Digraph:
    """Seeded orientation of the complete multipartite graph given by spec."""
    rng = SplitMix64(seed)
    masks = spec.part_masks()
    part_of = {}
    for idx, mask in enumerate(masks):
        for v in bits(mask):
            part_of[v] = idx
    n = spec.n
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if part_of[i] == part_of[j]:
                continue
            if rng.next_bit():
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
    return Digraph(n, tuple(out))


def add_source(t: Tournament) -> Tournament:
    """New vertex beating every old vertex."""
    if t.n + 1 > max_vertices():
        raise SizeCapError("adding a vertex exceeds the size cap")
    out = list(t.out) + [t.full_mask]
    return Tournament(t.n + 1, tuple(out))


def add_sink(t: Tournament) -> Tournament:
    """New vertex beaten by every old vertex; preserves w, gamma, and
    multiplicity."""
    if t.n + 1 > max_vertices():
        raise SizeCapError("adding a vertex exceeds the size cap")
    new = 1 << t.n
    out = [row | new for row in t.out] + [0]
    return Tournament(t.n + 1, tuple(out))


def strongify(t: Tournament) -> Tournament:
    """Strongly connected extension of order n+1 preserving gamma.

    Adds a vertex that loses to everything except the start of the insertion
    Hamilton path, closing that path into a Hamilton cycle.  Requires a
    non-strong input with gamma >= 3, which is what makes the new vertex
    unable to shrink a minimum dominating set.
    """
    if is_strongly_connected(t):
        raise PreconditionError("input must not be strongly connected")
    gamma, _ = domination_number(t)
    if gamma < 3:
        raise PreconditionError(f"construction needs gamma >= 3, got {gamma}")
    if t.n + 1 > max_vertices():
        raise SizeCapError("adding a vertex exceeds the size cap")
    u = hamilton_path(t)[0]
    new = 1 << t.n
    out = [row | (0 if v == u else new) for v, row in enumerate(t.out)]
    out.append(1 << u)
    return Tournament(t.n + 1, tuple(out))


def score_sequence(t: Tournament) -> ScoreSequence:
    return ScoreSequence(tuple(sorted(t.out_degree(v) for v in range(t.n))))


def is_simple(t: Tournament) -> bool:
    """True iff t is the unique tournament with its score sequence: every
    strong component's internal scores must be (0), (1,1,1), (1,1,2,2), or
    (2,2,2,2,2)."""
    cond = strong_components(t)
    for comp in cond.components:
        internal = tuple(sorted((t.out[v] & comp).bit_count() for v in bits(comp)))
        if internal not in _SIMPLE_COMPONENT_SCORES:
            return False
    return True


def _induced_acyclic(t: Tournament, mask: int) -> bool:
    verts = list(bits(mask))
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            for c in verts:
                if c == a or c == b:
                    continue
                # cyclic triple in either rotation
                if t.has_arc(a, b) and t.has_arc(b, c) and t.has_arc(c, a):
                    return False
                if t.has_arc(b, a) and t.has_arc(a, c) and t.has_arc(c, b):
                    return False
    return True


def local_transitivity(t: Tournament) -> tuple[bool, bool, bool]:
    """(locally-in, locally-out, locally-transitive) flags: every vertex's
    in- / out-neighbourhood induces an acyclic (transitive) subtournament."""
    in_ok = out_ok = True
    for v in range(t.n):
        if in_ok and not _induced_acyclic(t, t.in_mask(v)):
            in_ok = False
        if out_ok and not _induced_acyclic(t, t.out[v]):
            out_ok = False
        if not in_ok and not out_ok:
            break
    return in_ok, out_ok, in_ok and out_ok


def bipartite_walk_construction(d: Digraph, side_a: int, u_set: int) -> Walk:
    """Closed dominating walk of length 2|A| in an orientation of a complete
    bipartite graph, alternating the U vertices with their privately
    dominated partners in A."""
    side_b = d.full_mask & ~side_a
    if side_a == 0 or side_b == 0:
        raise PreconditionError("both sides must be nonempty")
    for v in range(d.n):
        va = (side_a >> v) & 1
        for w in bits(d.full_mask & ~(1 << v)):
            same = va == ((side_a >> w) & 1)
            adjacent = d.has_arc(v, w) or d.has_arc(w, v)
            if same == adjacent or (d.has_arc(v, w) and d.has_arc(w, v)):
                raise PreconditionError("input is not an orientation of a complete bipartite graph")
    if any(d.in_mask(v) == 0 for v in range(d.n)):
        raise PreconditionError("minimum in-degree must be at least 1")
    if u_set & ~side_b:
        raise PreconditionError("U must be a subset of side B")
    partner = {}
    for a in bits(side_a):
        dominators = [u for u in bits(u_set) if d.has_arc(u, a)]
        if len(dominators) != 1:
            raise PreconditionError(f"vertex {a} must be dominated by exactly one vertex of U")
        partner[a] = dominators[0]
    if len(set(partner.values())) != u_set.bit_count():
        raise PreconditionError("every vertex of U needs a private out-neighbour in A")
    pairs = sorted((u, a) for a, u in partner.items())
    seq = []
    for u, a in pairs:
        seq.extend([u, a])
    seq.append(pairs[0][0])
    return Walk(tuple(seq))


def fig1_path() -> Digraph:
    """Five-vertex directed path; has no watchman's walk."""
    return Digraph.from_arcs(5, [(i, i + 1) for i in range(4)])


def fig2_windmill() -> Digraph:
    """15-vertex windmill: inner blades around a hub, an outer 8-cycle, spokes
    out to it and return arcs back in.  Vertices 0..6 are v1..v7, 7..14 are
    u1..u8."""
    def v(i):
        return i - 1

    def u(i):
        return 6 + i

    arcs = []
    arcs += [(v(7), v(1)), (v(1), v(2)), (v(2), v(7))]
    arcs += [(v(7), v(3)), (v(3), v(4)), (v(4), v(7))]
    arcs += [(v(7), v(5)), (v(5), v(6)), (v(6), v(7))]
    arcs += [(u(i), u(i % 8 + 1)) for i in range(1, 9)]
    arcs += [(v(i), u(i)) for i in range(1, 8)]
    arcs += [(v(7), u(8))]
    arcs += [(u(i), v(i + 1)) for i in range(1, 7)]
    arcs += [(u(8), v(1))]
    return Digraph.from_arcs(15, arcs)


def fig_paley7() -> Tournament:
    return paley(7)


def fig_unique14() -> Tournament:
    """The unique order-7 tournament with gamma 2 and 14 watchman's walks."""
    return circulant(7, {1, 2, 3})


FIXTURES = {
    "fig1_path": fig1_path,
    "fig2_windmill": fig2_windmill,
    "fig_paley7": fig_paley7,
    "fig_unique14": fig_unique14,
}


def fixtures() -> dict[str, Digraph]:
    """All named figure fixtures."""
    return {name: build() for name, build in FIXTURES.items()}
