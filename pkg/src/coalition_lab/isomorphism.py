"""Pairwise isomorphism testing by colour refinement plus individualisation.

Both graphs are refined together so that colour names are comparable; a
mismatch in colour-class sizes rules out an isomorphism immediately. When
refinement stalls, one vertex of the smallest non-singleton class in ``a`` is
individualised and tried against every same-coloured vertex of ``b``.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph, members


def _refine(a: Graph, ca: list[int], b: Graph, cb: list[int]):
    nclasses = len(set(ca))
    while True:
        sa = [(ca[v], tuple(sorted(ca[w] for w in members(a.open_nbhd[v])))) for v in range(a.order)]
        sb = [(cb[v], tuple(sorted(cb[w] for w in members(b.open_nbhd[v])))) for v in range(b.order)]
        if Counter(sa) != Counter(sb):
            return None
        index = {sig: i for i, sig in enumerate(sorted(set(sa)))}
        ca = [index[s] for s in sa]
        cb = [index[s] for s in sb]
        if len(index) == nclasses:
            return ca, cb
        nclasses = len(index)


def _search(a: Graph, ca: list[int], b: Graph, cb: list[int]) -> bool:
    refined = _refine(a, ca, b, cb)
    if refined is None:
        return False
    ca, cb = refined
    sizes = Counter(ca)
    if len(sizes) == a.order:
        pos = {c: v for v, c in enumerate(cb)}
        perm = [pos[c] for c in ca]
        return all(
            b.open_nbhd[perm[v]] == _image(a.open_nbhd[v], perm) for v in range(a.order)
        )
    target = min((size, c) for c, size in sizes.items() if size > 1)[1]
    x = ca.index(target)
    fresh = len(sizes)
    for y in (v for v, c in enumerate(cb) if c == target):
        ca2 = list(ca)
        cb2 = list(cb)
        ca2[x] = fresh
        cb2[y] = fresh
        if _search(a, ca2, b, cb2):
            return True
    return False


def _image(mask: int, perm: list[int]) -> int:
    out = 0
    for v in members(mask):
        out |= 1 << perm[v]
    return out


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.order != b.order or a.num_edges() != b.num_edges():
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return _search(a, [0] * a.order, b, [0] * b.order)
