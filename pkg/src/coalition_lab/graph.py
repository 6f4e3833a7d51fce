"""Simple undirected graphs on at most 64 vertices, stored as neighbourhood bitmasks.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v`` is in
the set. The helpers :func:`vertex_set` and :func:`members` convert between
masks and vertex lists.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_ORDER = 64
DEFAULT_SEARCH_CAP = 16
DEFAULT_ORACLE_CAP = 12


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, undecodable text)."""


class OrderCapExceeded(ValueError):
    """The graph is too large for the requested exact search."""


def search_cap() -> int:
    """Order limit for the exact searches; ``COALITION_LAB_CAP`` overrides it."""
    raw = os.environ.get("COALITION_LAB_CAP")
    if raw is None:
        return DEFAULT_SEARCH_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"COALITION_LAB_CAP must be an integer, got {raw!r}") from None
    return min(cap, MAX_ORDER)


def check_cap(order: int, cap: int | None, what: str) -> None:
    limit = search_cap() if cap is None else cap
    if order > limit:
        raise OrderCapExceeded(f"{what}: order {order} exceeds cap {limit}")


def vertex_set(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    order: int
    open_nbhd: tuple[int, ...]
    closed_nbhd: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return popcount(self.open_nbhd[v])

    def degrees(self) -> list[int]:
        return [popcount(m) for m in self.open_nbhd]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in members(self.open_nbhd[u]) if u < v]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.open_nbhd[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return from_edge_list(self.order, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    full_vertices: int
    isolated_vertices: int


def from_adjacency_masks(open_nbhd: Sequence[int]) -> Graph:
    n = len(open_nbhd)
    return Graph(n, tuple(open_nbhd), tuple(m | (1 << v) for v, m in enumerate(open_nbhd)))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be between 1 and {MAX_ORDER}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return from_adjacency_masks(adj)


def parse_edge_list(text: str) -> Graph:
    """Parse the human edge-list form ``"n; u-v, u-v, ..."``."""
    head, sep, tail = text.strip().partition(";")
    try:
        n = int(head)
    except ValueError:
        raise GraphError(f"edge list must start with the vertex count: {text!r}") from None
    edges = []
    for item in tail.split(","):
        item = item.strip()
        if not item:
            continue
        a, dash, b = item.partition("-")
        if not dash:
            raise GraphError(f"bad edge {item!r}, expected u-v")
        try:
            edges.append((int(a), int(b)))
        except ValueError:
            raise GraphError(f"bad edge {item!r}, expected u-v") from None
    return from_edge_list(n, edges)


# graph6 ------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for v in range(1, g.order):
        nb = g.open_nbhd[v]
        for u in range(v):
            bits.append(nb >> u & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _g6_size_prefix(g.order) + body


def from_graph6(text: str, cap: int = MAX_ORDER) -> Graph:
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise GraphError("empty graph6 line")
    data = [ord(c) - 63 for c in line]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphError(f"graph6 line has bytes outside 63..126: {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError(f"unsupported graph6 size field: {text!r}")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n < 1:
        raise GraphError("graph6 graphs must have at least one vertex here")
    if n > cap:
        raise GraphError(f"graph6 order {n} exceeds cap {cap}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return from_adjacency_masks(adj)


def read_graph6_lines(lines: Iterable[str]) -> list[tuple[int, str]]:
    """Return ``(line_number, text)`` for every non-blank graph6 line."""
    out = []
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if s.startswith(_G6_HEADER):
            s = s[len(_G6_HEADER):]
        if s:
            out.append((lineno, s))
    return out


# named constructions -----------------------------------------------------

def complete(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism(k: int = 3) -> Graph:
    """The circular ladder C_k x K_2; ``prism(3)`` is the triangular prism."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return from_edge_list(2 * k, edges)


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint."""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return from_edge_list(len(pairs), edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.order
    return from_edge_list(a.order + b.order, a.edges() + [(u + shift, v + shift) for u, v in b.edges()])


# structure -----------------------------------------------------------------

def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    full = vertex_set(v for v, d in enumerate(degs) if d == g.order - 1)
    isolated = vertex_set(v for v, d in enumerate(degs) if d == 0)
    return DegreeProfile(min(degs), max(degs), full, isolated)


def is_regular(g: Graph, degree: int | None = None) -> bool:
    degs = set(g.degrees())
    return len(degs) == 1 and (degree is None or degs == {degree})


def components(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for s in range(g.order):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.open_nbhd[v]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    for s in range(g.order):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in members(g.open_nbhd[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def triangle_count(g: Graph) -> int:
    total = 0
    for u, v in g.edges():
        total += popcount(g.open_nbhd[u] & g.open_nbhd[v])
    return total // 3
