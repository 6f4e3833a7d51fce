"""Domination predicates and exact domination invariants for small graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, GraphError, check_cap, degree_profile, members, popcount, vertex_set

# Largest order for which the 2**n coverage table is materialised.
TABLE_LIMIT = 20


@dataclass(frozen=True)
class DomaticPartition:
    blocks: tuple[int, ...]


@dataclass(frozen=True)
class DominationSummary:
    gamma: int
    domatic: int
    pair_table: tuple[tuple[bool, ...], ...]


def closed_cover(g: Graph, s: int) -> int:
    cover = 0
    for v in members(s):
        cover |= g.closed_nbhd[v]
    return cover


def open_cover(g: Graph, s: int) -> int:
    cover = 0
    for v in members(s):
        cover |= g.open_nbhd[v]
    return cover


@lru_cache(maxsize=64)
def _cover_tables(g: Graph) -> tuple[list[int], list[int]]:
    size = 1 << g.order
    closed = [0] * size
    opened = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        closed[mask] = closed[rest] | g.closed_nbhd[v]
        opened[mask] = opened[rest] | g.open_nbhd[v]
    return closed, opened


@lru_cache(maxsize=64)
def dominating_table(g: Graph) -> bytearray:
    """``table[mask]`` is 1 iff ``mask`` is a dominating set of ``g``."""
    check_cap(g.order, TABLE_LIMIT, "dominating_table")
    full = g.full_mask
    closed, _ = _cover_tables(g)
    return bytearray(c == full for c in closed)


@lru_cache(maxsize=64)
def total_dominating_table(g: Graph) -> bytearray:
    require_no_isolated(g)
    check_cap(g.order, TABLE_LIMIT, "total_dominating_table")
    full = g.full_mask
    _, opened = _cover_tables(g)
    return bytearray(c == full for c in opened)


def require_no_isolated(g: Graph) -> None:
    iso = degree_profile(g).isolated_vertices
    if iso:
        raise GraphError(f"total domination is undefined: isolated vertices {members(iso)}")


def is_dominating(g: Graph, s: int) -> bool:
    return closed_cover(g, s) == g.full_mask


def is_total_dominating(g: Graph, s: int) -> bool:
    require_no_isolated(g)
    return open_cover(g, s) == g.full_mask


def domination_number(g: Graph) -> int:
    for k in range(1, g.order + 1):
        for combo in itertools.combinations(range(g.order), k):
            if is_dominating(g, vertex_set(combo)):
                return k
    raise AssertionError("the full vertex set always dominates")


def enumerate_dominating_sets(g: Graph, k: int) -> list[int]:
    """All dominating ``k``-subsets, sorted by bitmask value."""
    if not 0 <= k <= g.order:
        raise ValueError(f"cardinality {k} outside 0..{g.order}")
    found = [
        s for s in map(vertex_set, itertools.combinations(range(g.order), k)) if is_dominating(g, s)
    ]
    return sorted(found)


def is_minimal_dominating(g: Graph, s: int) -> bool:
    if not is_dominating(g, s):
        return False
    # domination is monotone, so checking single-vertex deletions suffices
    return not any(is_dominating(g, s & ~(1 << v)) for v in members(s))


def enumerate_minimal_dominating_sets(g: Graph, cap: int | None = None) -> list[int]:
    check_cap(g.order, cap, "enumerate_minimal_dominating_sets")
    dom = dominating_table(g)
    out = []
    for s in range(1, 1 << g.order):
        if dom[s] and not any(dom[s & ~(1 << v)] for v in members(s)):
            out.append(s)
    return out


def domatic_number(g: Graph, cap: int | None = None) -> tuple[int, DomaticPartition]:
    """Maximum number of disjoint dominating sets, with a witness partition.

    Tries ``k = delta + 1`` downward. Each attempt assigns vertices in index
    order to at most ``k`` blocks and cuts a branch as soon as some block can
    no longer become dominating even if it received every unassigned vertex.
    """
    check_cap(g.order, cap, "domatic_number")
    dom = dominating_table(g)
    n = g.order
    full = g.full_mask
    upper = degree_profile(g).min_degree + 1
    for k in range(upper, 0, -1):
        blocks = _domatic_attempt(dom, n, full, k)
        if blocks is not None:
            return k, DomaticPartition(tuple(blocks))
    raise AssertionError("k = 1 always succeeds")


def _domatic_attempt(dom: bytearray, n: int, full: int, k: int) -> list[int] | None:
    blocks: list[int] = []

    def place(v: int) -> bool:
        rest = full & ~((1 << v) - 1)
        if len(blocks) + (n - v) < k:
            return False
        for i in range(len(blocks)):
            if not dom[blocks[i] | rest]:
                return False
        if len(blocks) < k and not dom[rest]:
            return False
        if v == n:
            return len(blocks) == k
        bit = 1 << v
        for i in range(len(blocks)):
            blocks[i] |= bit
            if place(v + 1):
                return True
            blocks[i] &= ~bit
        if len(blocks) < k:
            blocks.append(bit)
            if place(v + 1):
                return True
            blocks.pop()
        return False

    return list(blocks) if place(0) else None


def singleton_pair_table(g: Graph) -> tuple[tuple[bool, ...], ...]:
    return tuple(
        tuple(is_dominating(g, (1 << u) | (1 << v)) for v in range(g.order)) for u in range(g.order)
    )


def summarize(g: Graph) -> DominationSummary:
    return DominationSummary(domination_number(g), domatic_number(g)[0], singleton_pair_table(g))


def is_domatic_partition(g: Graph, blocks) -> bool:
    union = 0
    for b in blocks:
        if not b or union & b or not is_dominating(g, b):
            return False
        union |= b
    return union == g.full_mask and popcount(union) == g.order
