"""Isomorphism-free tournament enumeration and the order/watchman/domination
multiplicity census.

Enumeration uses canonical augmentation: every representative of order n-1 is
extended by one new vertex in all 2^(n-1) ways, and an extension survives only
when the new vertex lies in the canonical-last orbit of the child.  Each
isomorphism class is therefore produced exactly once, and subtrees of the
augmentation tree are independent, which is what makes work splitting and
checkpointing safe.
"""
from __future__ import annotations

import json
import multiprocessing
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .core import Tournament, bits
from .errors import FormatError, SizeCapError
from .limits import max_canon_vertices, max_census_order
from .watchman import _tournament_stats

Masks = tuple[int, ...]

# Reference-table rows at this order are advisory: mismatches are reported
# but treated as transcription suspects rather than hard failures.
ADVISORY_ORDERS = frozenset({10})


def _canonicalize(out: Sequence[int], n: int) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Minimal-code relabelling of a tournament given as out-mask rows.

    The code is read off pair-by-pair as vertices are placed (bits (i, j) for
    i < j grouped by j), so a partial placement fixes a prefix and the search
    can branch and bound.  Returns (code, one optimal labelling, mask of
    vertices that sit last in some optimal labelling).  The optimal
    labellings form an Aut coset, so that mask is a single orbit.
    """
    best: list[Optional[list[int]]] = [None]
    best_label: list[Optional[list[int]]] = [None]
    last_mask = [0]

    def dfs(placed: list[int], used: int, keys: list[int],
            pkeys: list[int], tight: bool):
        # pkeys[v] holds v's pair bits against the placed prefix, so the
        # candidate scan at each level is O(n).
        j = len(placed)
        if j == n:
            cur_best = best[0]
            if cur_best is None or keys < cur_best:
                best[0] = list(keys)
                best_label[0] = list(placed)
                last_mask[0] = 1 << placed[-1]
            elif keys == cur_best:
                last_mask[0] |= 1 << placed[-1]
            return
        min_key = None
        cands: list[int] = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            key = pkeys[v]
            if min_key is None or key < min_key:
                min_key, cands = key, [v]
            elif key == min_key:
                cands.append(v)
        assert min_key is not None
        cur_best = best[0]
        if tight and cur_best is not None:
            if min_key > cur_best[j]:
                return
            if min_key < cur_best[j]:
                tight = False
        keys.append(min_key)
        for v in cands:
            row = out[v]
            next_pkeys = [(pkeys[u] << 1) | ((row >> u) & 1) for u in range(n)]
            placed.append(v)
            dfs(placed, used | (1 << v), keys, next_pkeys, tight)
            placed.pop()
        keys.pop()

    dfs([], 0, [], [0] * n, True)
    assert best[0] is not None and best_label[0] is not None
    return tuple(best[0]), tuple(best_label[0]), last_mask[0]


def _relabel(out: Sequence[int], label: Sequence[int]) -> Masks:
    """Rows of the tournament with position p holding old vertex label[p]."""
    n = len(label)
    pos = [0] * n
    for p, v in enumerate(label):
        pos[v] = p
    rows = []
    for p in range(n):
        row = 0
        for u in bits(out[label[p]]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Equal codes iff isomorphic; idempotent under re-canonicalization."""

    n: int
    key: tuple[int, ...]

    def to_masks(self) -> Masks:
        out = [0] * self.n
        for j in range(1, self.n):
            word = self.key[j]
            for i in range(j):
                if (word >> (j - 1 - i)) & 1:
                    out[i] |= 1 << j
                else:
                    out[j] |= 1 << i
        return tuple(out)

    def to_tournament(self) -> Tournament:
        return Tournament(self.n, self.to_masks())


def canonical_form(t: Tournament) -> CanonicalCode:
    cap = max_canon_vertices()
    if t.n > cap:
        raise SizeCapError(f"canonical labelling capped at {cap} vertices, got {t.n}")
    key, _, _ = _canonicalize(t.out, t.n)
    return CanonicalCode(t.n, key)


def _children(parent: Masks) -> Iterator[Masks]:
    """Canonical representatives of all order n+1 classes whose canonical-last
    deletion yields the parent's class.  Each class appears exactly once."""
    n = len(parent)
    new = n  # index of the added vertex
    seen: set[tuple[int, ...]] = set()
    for pattern in range(1 << n):
        # bit v of pattern: arc new -> v; otherwise v -> new.
        rows = [parent[v] | (0 if (pattern >> v) & 1 else (1 << new)) for v in range(n)]
        rows.append(pattern)
        key, label, last = _canonicalize(rows, n + 1)
        if not (last >> new) & 1:
            continue
        if key in seen:
            continue
        seen.add(key)
        yield _relabel(rows, label)


def _enumerate_masks(n: int) -> Iterator[Masks]:
    if n == 1:
        yield (0,)
        return
    for parent in _enumerate_masks(n - 1):
        yield from _children(parent)


def enumerate_tournaments(n: int) -> Iterator[Tournament]:
    """Exactly one representative per isomorphism class of n-tournaments."""
    if not 1 <= n <= max_census_order(allow_large=True):
        raise SizeCapError(f"enumeration supports orders 1..{max_census_order(True)}")
    for masks in _enumerate_masks(n):
        yield Tournament(n, masks)


def enumerate_by_dedupe(n: int) -> list[Tournament]:
    """Cross-check oracle: extend every smaller representative in all ways and
    keep one tournament per canonical code, with no deletion test."""
    current: list[Masks] = [(0,)]
    for order in range(2, n + 1):
        nxt: dict[tuple[int, ...], Masks] = {}
        for parent in current:
            m = len(parent)
            for pattern in range(1 << m):
                rows = [parent[v] | (0 if (pattern >> v) & 1 else (1 << m)) for v in range(m)]
                rows.append(pattern)
                key, label, _ = _canonicalize(rows, m + 1)
                if key not in nxt:
                    nxt[key] = _relabel(rows, label)
        current = [nxt[k] for k in sorted(nxt)]
    return [Tournament(n, masks) for masks in current]


# ---------------------------------------------------------------------------
# Census


@dataclass
class CensusTable:
    """Counts of isomorphism classes keyed by (n, w, gamma, m)."""

    rows: dict[tuple[int, int, int, int], int]
    meta: dict = field(default_factory=dict)

    def total(self, n: Optional[int] = None) -> int:
        return sum(count for key, count in self.rows.items()
                   if n is None or key[0] == n)

    def sorted_rows(self) -> list[tuple[tuple[int, int, int, int], int]]:
        return sorted(self.rows.items())

    def to_csv(self) -> str:
        lines = ["n,w,gamma,m,count"]
        for (n, w, gamma, m), count in self.sorted_rows():
            lines.append(f"{n},{w},{gamma},{m},{count}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "rows": [
                {"n": n, "w": w, "gamma": gamma, "m": m, "count": count}
                for (n, w, gamma, m), count in self.sorted_rows()
            ],
            "meta": self.meta,
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "CensusTable":
        rows: dict[tuple[int, int, int, int], int] = {}
        lines = [line.strip() for line in text.splitlines()]
        body = [line for line in lines if line and not line.startswith("#")]
        if not body or body[0] != "n,w,gamma,m,count":
            raise FormatError("census CSV must start with header 'n,w,gamma,m,count'")
        for lineno, line in enumerate(body[1:], start=2):
            fields = line.split(",")
            if len(fields) != 5:
                raise FormatError(f"expected 5 fields, got {len(fields)}", line=lineno)
            try:
                n, w, gamma, m, count = (int(x) for x in fields)
            except ValueError as exc:
                raise FormatError("non-integer census field", line=lineno) from exc
            key = (n, w, gamma, m)
            if key in rows:
                raise FormatError(f"duplicate row {key}", line=lineno)
            rows[key] = count
        return cls(rows)


@dataclass(frozen=True)
class CensusDiff:
    key: tuple[int, int, int, int]
    computed: Optional[int]
    reference: Optional[int]

    @property
    def advisory(self) -> bool:
        return self.key[0] in ADVISORY_ORDERS


def verify_appendix_a(table: CensusTable, reference_path) -> list[CensusDiff]:
    """Every (n, w, gamma, m) discrepancy between the computed table and the
    reference, restricted to the orders the computed table covers."""
    with open(reference_path, "r", encoding="ascii") as handle:
        reference = CensusTable.from_csv(handle.read())
    orders = {key[0] for key in table.rows}
    diffs = []
    keys = set(table.rows) | {k for k in reference.rows if k[0] in orders}
    for key in sorted(keys):
        got = table.rows.get(key)
        want = reference.rows.get(key)
        if got != want:
            diffs.append(CensusDiff(key, got, want))
    return diffs


def _unit_rows(unit: Masks, target: int) -> Counter:
    """Aggregate (w, gamma, m) rows for all order-`target` classes in the
    augmentation subtree rooted at this representative."""
    frontier = [unit]
    for _ in range(target - len(unit)):
        frontier = [child for masks in frontier for child in _children(masks)]
    rows: Counter = Counter()
    for masks in frontier:
        w, gamma, mult, _ = _tournament_stats(masks, target)
        rows[(w, gamma, mult)] += 1
    return rows


def _unit_key(unit: Masks) -> str:
    n = len(unit)
    bits_ = []
    for i in range(n):
        for j in range(i + 1, n):
            bits_.append("1" if (unit[i] >> j) & 1 else "0")
    return f"T {n} {''.join(bits_)}" if bits_ else f"T {n}"


def _unit_worker(args: tuple[Masks, int]) -> tuple[str, dict]:
    unit, target = args
    rows = _unit_rows(unit, target)
    return _unit_key(unit), {json.dumps(k): v for k, v in rows.items()}


def _load_checkpoint(path) -> dict[str, Counter]:
    done: dict[str, Counter] = {}
    try:
        with open(path, "r", encoding="ascii") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError:
                    continue  # torn final line from an interrupted run
                rows = Counter({tuple(json.loads(k)): v
                                for k, v in record["rows"].items()})
                done[record["unit"]] = rows
    except FileNotFoundError:
        pass
    return done


def census(n: int, jobs: int = 1, checkpoint_path=None,
           allow_large: bool = False) -> CensusTable:
    """Full (w, gamma, m) census of order-n tournaments.

    Output is identical regardless of `jobs`; an interrupted run resumes from
    the checkpoint file, skipping completed work units.
    """
    cap = max_census_order(allow_large)
    if not 1 <= n <= cap:
        hint = "" if allow_large else " (pass allow_large for order 10)"
        raise SizeCapError(f"census supports orders 1..{cap}{hint}")
    started = time.time()
    root_order = max(1, n - 2)
    units = list(_enumerate_masks(root_order))
    done = _load_checkpoint(checkpoint_path) if checkpoint_path else {}
    pending = [(unit, n) for unit in units if _unit_key(unit) not in done]

    results: dict[str, Counter] = dict(done)
    ckpt = open(checkpoint_path, "a", encoding="ascii") if checkpoint_path else None
    try:
        if jobs > 1 and len(pending) > 1:
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(jobs) as pool:
                for key, rows in pool.imap_unordered(_unit_worker, pending):
                    counted = Counter({tuple(json.loads(k)): v for k, v in rows.items()})
                    results[key] = counted
                    if ckpt:
                        ckpt.write(json.dumps({"unit": key, "rows": rows}) + "\n")
                        ckpt.flush()
        else:
            for args in pending:
                key, rows = _unit_worker(args)
                results[key] = Counter({tuple(json.loads(k)): v for k, v in rows.items()})
                if ckpt:
                    ckpt.write(json.dumps({"unit": key, "rows": rows}) + "\n")
                    ckpt.flush()
    finally:
        if ckpt:
            ckpt.close()

    merged: Counter = Counter()
    for rows in results.values():
        merged.update(rows)
    table_rows = {(n, w, gamma, m): count
                  for (w, gamma, m), count in merged.items()}
    from . import __version__

    table = CensusTable(table_rows, meta={
        "order": n,
        "engine_version": __version__,
        "runtime_seconds": round(time.time() - started, 3),
        "jobs": jobs,
        "units": len(units),
    })
    return table
