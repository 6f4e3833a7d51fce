"""Embedded catalogs of all cubic graphs of order 6, 8 and 10, and graph6 file ingestion.

The catalogs include disconnected graphs (K4 + K4 at order 8, K4 + each
order-6 cubic graph at order 10). Entries are ordered connected-first, then
by graph6 string; the index is only a position in that list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .graph import Graph, GraphError, from_graph6, is_connected, is_regular, petersen, read_graph6_lines
from .isomorphism import is_isomorphic

CATALOG_SIZES = {6: 2, 8: 6, 10: 21}


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    order: int
    index: int
    graph6: str
    graph: Graph
    connected: bool
    is_petersen: bool

    @property
    def ref(self) -> str:
        return f"cubic{self.order}:{self.index}"


@lru_cache(maxsize=None)
def _load(order: int) -> tuple[CatalogEntry, ...]:
    if order not in CATALOG_SIZES:
        raise ValueError(f"no embedded catalog for order {order}; choose from {sorted(CATALOG_SIZES)}")
    text = resources.files("coalition_lab").joinpath(f"data/cubic{order}.g6").read_text()
    lines = [s for _, s in read_graph6_lines(text.splitlines())]
    if len(lines) != CATALOG_SIZES[order]:
        raise CatalogError(f"order-{order} catalog has {len(lines)} graphs, expected {CATALOG_SIZES[order]}")
    pete = petersen()
    entries = []
    for i, line in enumerate(lines):
        g = from_graph6(line)
        if g.order != order or not is_regular(g, 3):
            raise CatalogError(f"order-{order} catalog entry {i} is not a cubic graph on {order} vertices")
        entries.append(CatalogEntry(order, i, line, g, is_connected(g), order == 10 and is_isomorphic(g, pete)))
    for a, b in itertools.combinations(entries, 2):
        if is_isomorphic(a.graph, b.graph):
            raise CatalogError(f"catalog entries {a.ref} and {b.ref} are isomorphic")
    if order == 10 and sum(e.is_petersen for e in entries) != 1:
        raise CatalogError("order-10 catalog must contain the Petersen graph exactly once")
    return tuple(entries)


def load_catalog(order: int) -> list[CatalogEntry]:
    """All cubic graphs of the given order, validated on first load."""
    return list(_load(order))


def all_catalog_entries() -> list[CatalogEntry]:
    return [e for order in sorted(CATALOG_SIZES) for e in _load(order)]


def catalog_entry(ref: str) -> CatalogEntry:
    """Look up ``"cubic10:3"``-style references."""
    head, _, idx = ref.partition(":")
    if not head.startswith("cubic") or not idx.isdigit():
        raise ValueError(f"bad catalog reference {ref!r}, expected e.g. cubic10:3")
    entries = _load(int(head[5:]))
    i = int(idx)
    if i >= len(entries):
        raise ValueError(f"{ref}: index out of range 0..{len(entries) - 1}")
    return entries[i]


def ingest_graph6_file(path: str | Path, expect_regular: int | None = None) -> list[CatalogEntry]:
    """Parse a graph6 file; errors name the 1-based line number."""
    path = Path(path)
    pete = petersen()
    entries = []
    with path.open() as fh:
        for lineno, line in read_graph6_lines(fh):
            try:
                g = from_graph6(line)
            except GraphError as exc:
                raise GraphError(f"{path}:{lineno}: {exc}") from None
            if expect_regular is not None and not is_regular(g, expect_regular):
                raise GraphError(f"{path}:{lineno}: graph is not {expect_regular}-regular")
            entries.append(
                CatalogEntry(
                    g.order,
                    len(entries),
                    line,
                    g,
                    is_connected(g),
                    g.order == 10 and is_regular(g, 3) and is_isomorphic(g, pete),
                )
            )
    return entries
