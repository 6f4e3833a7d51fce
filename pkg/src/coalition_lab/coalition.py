"""Coalitions, c-partitions, coalition graphs and exact coalition numbers.

Two independent solvers compute C(G): :func:`coalition_number_oracle` checks
every set partition, while :func:`coalition_number_pruned` searches a fixed
number of blocks at a time from the upper bound downward. Both report the
lexicographically smallest restricted-growth string among the optimal
partitions, so their certificates coincide.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from .domination import (
    closed_cover,
    dominating_table,
    domatic_number,
    is_dominating,
    is_minimal_dominating,
)
from .graph import (
    DEFAULT_ORACLE_CAP,
    Graph,
    check_cap,
    degree_profile,
    from_adjacency_masks,
    members,
    popcount,
)
from .partitions import Partition, iter_block_masks

SINGLETON_DOMINATING = "singleton-dominating"
COALITION_MEMBER = "coalition-member"


@dataclass(frozen=True)
class CoalitionCertificate:
    partition: Partition
    block_status: tuple[str, ...]
    witness: tuple[int | None, ...]

    @property
    def order(self) -> int:
        return self.partition.order

    def to_json(self) -> dict:
        return {
            "blocks": self.partition.block_lists(),
            "status": list(self.block_status),
            "witness": list(self.witness),
        }

    @classmethod
    def from_json(cls, data: dict, n: int) -> "CoalitionCertificate":
        return cls(
            Partition.from_lists(data["blocks"], n),
            tuple(data["status"]),
            tuple(data["witness"]),
        )


@dataclass(frozen=True)
class CoalitionGraph:
    graph: Graph
    partition: Partition


@dataclass
class SearchReport:
    value: int
    certificate: object | None = None
    nodes_explored: int = 0
    prunes: Counter = field(default_factory=Counter)
    elapsed: float = 0.0
    method: str = ""

    def stats(self) -> dict:
        return {
            "method": self.method,
            "nodes": self.nodes_explored,
            "prunes": dict(sorted(self.prunes.items())),
            "elapsed": round(self.elapsed, 6),
        }


def _check_pair(a: int, b: int) -> None:
    if not a or not b:
        raise ValueError("coalition sets must be nonempty")
    if a & b:
        raise ValueError(f"coalition sets overlap on {members(a & b)}")


def is_coalition(g: Graph, a: int, b: int) -> bool:
    _check_pair(a, b)
    return not is_dominating(g, a) and not is_dominating(g, b) and is_dominating(g, a | b)


# Shared by the coalition and total-coalition searches: ``table`` is the
# domination (or total-domination) lookup, and ``singleton_ok`` says whether a
# dominating singleton block is acceptable on its own.
def block_witnesses(table, blocks, singleton_ok: bool) -> list[int | None] | None:
    witnesses: list[int | None] = []
    for i, b in enumerate(blocks):
        if table[b]:
            if singleton_ok and not b & (b - 1):
                witnesses.append(None)
                continue
            return None
        for j, c in enumerate(blocks):
            if j != i and not table[c] and table[b | c]:
                witnesses.append(j)
                break
        else:
            return None
    return witnesses


def _certificate(partition: Partition, witnesses) -> CoalitionCertificate:
    status = tuple(SINGLETON_DOMINATING if w is None else COALITION_MEMBER for w in witnesses)
    return CoalitionCertificate(partition, status, tuple(witnesses))


class _Dominance:
    """Domination lookup with the table's ``obj[mask]`` interface, computed on demand."""

    def __init__(self, g: Graph):
        self.g = g

    def __getitem__(self, mask: int) -> bool:
        return closed_cover(self.g, mask) == self.g.full_mask


def _lookup(g: Graph):
    if g.order <= 20:
        return dominating_table(g)
    return _Dominance(g)


def is_c_partition(g: Graph, p: Partition) -> tuple[bool, CoalitionCertificate | None]:
    if p.n != g.order:
        raise ValueError(f"partition covers {p.n} vertices, graph has {g.order}")
    witnesses = block_witnesses(_lookup(g), p.blocks, singleton_ok=True)
    if witnesses is None:
        return False, None
    return True, _certificate(p, witnesses)


def coalition_graph(g: Graph, p: Partition) -> CoalitionGraph:
    blocks = p.blocks
    adj = [0] * len(blocks)
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if is_coalition(g, blocks[i], blocks[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return CoalitionGraph(from_adjacency_masks(adj), p)


def coalition_bounds(g: Graph) -> tuple[int, int]:
    prof = degree_profile(g)
    lower = prof.min_degree + 2 if not prof.full_vertices and prof.min_degree >= 1 else 1
    upper = min(g.order, (prof.max_degree + 3) ** 2 // 4)
    return lower, upper


def verify_certificate(g: Graph, cert: CoalitionCertificate) -> bool:
    """Re-check a certificate from raw neighbourhoods, without lookup tables."""
    full = g.full_mask

    def dominates(s: int) -> bool:
        cover = 0
        for v in range(g.order):
            if s >> v & 1:
                cover |= g.closed_nbhd[v]
        return cover == full

    p = cert.partition
    if p.n != g.order:
        return False
    blocks = p.blocks
    if len(cert.block_status) != len(blocks) or len(cert.witness) != len(blocks):
        return False
    union = 0
    for b in blocks:
        if not b or union & b:
            return False
        union |= b
    if union != full:
        return False
    for i, b in enumerate(blocks):
        status, j = cert.block_status[i], cert.witness[i]
        if status == SINGLETON_DOMINATING:
            if j is not None or popcount(b) != 1 or not dominates(b):
                return False
        elif status == COALITION_MEMBER:
            if not isinstance(j, int) or not 0 <= j < len(blocks) or j == i:
                return False
            c = blocks[j]
            if dominates(b) or dominates(c) or not dominates(b | c):
                return False
        else:
            return False
    return True


def coalition_number_oracle(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> SearchReport:
    """C(G) by checking every set partition of V."""
    check_cap(g.order, cap, "coalition_number_oracle")
    return _oracle(g.order, dominating_table(g), True, _certificate, "oracle")


def _oracle(n: int, table, singleton_ok: bool, make_cert, method: str) -> SearchReport:
    start = time.perf_counter()
    best_k = 0
    best = None
    count = 0
    for blocks in iter_block_masks(n):
        count += 1
        if len(blocks) <= best_k:
            continue
        witnesses = block_witnesses(table, blocks, singleton_ok)
        if witnesses is not None:
            best_k = len(blocks)
            best = (Partition.from_blocks(blocks, n), witnesses)
    report = SearchReport(best_k, nodes_explored=count, method=method)
    if best is not None:
        report.certificate = make_cert(*best)
    report.elapsed = time.perf_counter() - start
    return report


def coalition_number_pruned(g: Graph, cap: int | None = None, lookahead: bool = False) -> SearchReport:
    """C(G) by a top-down search over the number of blocks.

    Starting from the upper bound of :func:`coalition_bounds`, each target
    ``k`` is searched by assigning vertices in index order to an existing
    block or to one new block. A branch is cut when a block would become a
    non-singleton dominating set or when too few vertices remain to open
    ``k`` blocks. The first ``k`` with a valid c-partition is C(G).

    ``lookahead`` additionally cuts branches in which some block can no
    longer find a coalition partner.
    """
    check_cap(g.order, cap, "coalition_number_pruned")
    _, upper = coalition_bounds(g)
    return _top_down(g.order, dominating_table(g), upper, True, lookahead, _certificate, "pruned")


def _top_down(n: int, table, upper: int, singleton_ok: bool, lookahead: bool, make_cert, method: str) -> SearchReport:
    start = time.perf_counter()
    report = SearchReport(0, method=method)
    for k in range(upper, 0, -1):
        found = _search_k(n, table, k, singleton_ok, lookahead, report)
        if found is not None:
            blocks, witnesses = found
            report.value = k
            report.certificate = make_cert(Partition.from_blocks(blocks, n), witnesses)
            break
    report.elapsed = time.perf_counter() - start
    return report


def _search_k(n: int, table, k: int, singleton_ok: bool, lookahead: bool, report: SearchReport):
    blocks: list[int] = []
    prunes = report.prunes
    full = (1 << n) - 1

    def partnerless(rest: int) -> bool:
        can_open = len(blocks) < k
        for i, b in enumerate(blocks):
            if table[b]:
                continue
            if can_open and table[b | rest]:
                continue
            if not any(j != i and not table[c] and table[b | c | rest] for j, c in enumerate(blocks)):
                return True
        return False

    def place(v: int):
        report.nodes_explored += 1
        if len(blocks) + (n - v) < k:
            prunes["too_few_vertices"] += 1
            return None
        if v == n:
            witnesses = block_witnesses(table, blocks, singleton_ok)
            if witnesses is None:
                prunes["invalid_leaf"] += 1
                return None
            return list(blocks), witnesses
        if lookahead and partnerless(full & ~((1 << v) - 1)):
            prunes["partnerless_block"] += 1
            return None
        bit = 1 << v
        for i in range(len(blocks)):
            b = blocks[i]
            if table[b]:
                # a dominating singleton is frozen; growing it can only dominate
                prunes["frozen_singleton"] += 1
                continue
            grown = b | bit
            if table[grown]:
                prunes["dominating_block"] += 1
                continue
            blocks[i] = grown
            found = place(v + 1)
            blocks[i] = b
            if found is not None:
                return found
        if len(blocks) < k:
            blocks.append(bit)
            found = place(v + 1)
            blocks.pop()
            if found is not None:
                return found
        return None

    return place(0)


def coalition_number(g: Graph, method: str = "auto", cap: int | None = None) -> SearchReport:
    if method == "auto":
        method = "oracle" if g.order <= 9 else "pruned"
    if method == "oracle":
        return coalition_number_oracle(g, DEFAULT_ORACLE_CAP if cap is None else cap)
    if method == "pruned":
        return coalition_number_pruned(g, cap)
    raise ValueError(f"unknown method {method!r}")


def minimal_dominating_subset(g: Graph, s: int) -> int:
    """Shrink a dominating set to a minimal one by dropping vertices in index order."""
    for v in members(s):
        if is_dominating(g, s & ~(1 << v)):
            s &= ~(1 << v)
    return s


def split_domatic_construction(g: Graph) -> CoalitionCertificate | None:
    """Build a c-partition by splitting the blocks of a maximum domatic partition.

    All blocks but one are shrunk to minimal dominating sets, the surplus
    going to the remaining "absorbing" block. Every minimal block with two or
    more vertices is split into its smallest vertex and the rest. The
    absorbing block keeps a minimal dominating core, split the same way, and
    the leftover vertices become one extra block; if that block has no
    coalition partner it is merged into the first half of the core. Each
    block is tried as the absorbing one until a valid c-partition appears.
    """
    d, domatic = domatic_number(g)
    for absorb in range(d):
        shrunk = []
        surplus = 0
        for i, b in enumerate(domatic.blocks):
            if i == absorb:
                continue
            core = minimal_dominating_subset(g, b)
            surplus |= b & ~core
            shrunk.append(core)
        big = domatic.blocks[absorb] | surplus
        core = minimal_dominating_subset(g, big)
        leftover = big & ~core

        parts = []
        for c in shrunk:
            parts.extend(_halves(c))
        core_halves = _halves(core)
        parts.extend(core_halves)
        if leftover:
            has_partner = any(
                not is_dominating(g, p) and is_coalition(g, leftover, p) for p in parts
            )
            if has_partner:
                parts.append(leftover)
            elif len(core_halves) == 2:
                parts[parts.index(core_halves[0])] |= leftover
            else:
                continue
        ok, cert = is_c_partition(g, Partition.from_blocks(parts, g.order))
        if ok:
            return cert
    return None


def _halves(s: int) -> list[int]:
    if popcount(s) < 2:
        return [s]
    low = s & -s
    return [low, s ^ low]


def splitting_lemma_holds(g: Graph, d: int) -> bool:
    """Every bipartition of a minimal dominating set ``d`` is a coalition."""
    if popcount(d) < 2 or not is_minimal_dominating(g, d):
        return False
    verts = members(d)
    first = 1 << verts[0]
    rest_bits = [1 << v for v in verts[1:]]
    # fix the smallest vertex in part A to visit each unordered bipartition once
    for code in range(1 << len(rest_bits)):
        a = first
        for idx, bit in enumerate(rest_bits):
            if code >> idx & 1:
                a |= bit
        b = d & ~a
        if b and not is_coalition(g, a, b):
            return False
    return True


def coalition_degree_cap_holds(g: Graph, cert: CoalitionCertificate) -> bool:
    cg = coalition_graph(g, cert.partition).graph
    return max(cg.degrees()) <= degree_profile(g).max_degree + 1

