"""Vertex partitions in restricted-growth form and their exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import members


@dataclass(frozen=True)
class Partition:
    """A partition of ``0..n-1`` stored as a restricted-growth string.

    ``assignment[v]`` is the block index of vertex ``v``; vertex 0 is in block
    0 and every new block index is one more than the largest used so far, so
    blocks are ordered by their smallest vertex.
    """

    assignment: tuple[int, ...]

    def __post_init__(self):
        top = -1
        for v, b in enumerate(self.assignment):
            if b < 0 or b > top + 1:
                raise ValueError(f"not a restricted-growth string at vertex {v}: {self.assignment}")
            top = max(top, b)

    @classmethod
    def from_blocks(cls, blocks: Sequence[int], n: int) -> "Partition":
        """Build from block bitmasks (any order); rejects overlaps, gaps and empty blocks."""
        owner = [-1] * n
        for i, b in enumerate(blocks):
            if not b:
                raise ValueError("empty block")
            for v in members(b):
                if v >= n:
                    raise ValueError(f"vertex {v} outside 0..{n - 1}")
                if owner[v] != -1:
                    raise ValueError(f"vertex {v} appears in more than one block")
                owner[v] = i
        missing = [v for v in range(n) if owner[v] == -1]
        if missing:
            raise ValueError(f"vertices {missing} are not covered by any block")
        relabel: dict[int, int] = {}
        rgs = []
        for v in range(n):
            rgs.append(relabel.setdefault(owner[v], len(relabel)))
        return cls(tuple(rgs))

    @classmethod
    def from_lists(cls, blocks: Sequence[Sequence[int]], n: int) -> "Partition":
        masks = []
        for blk in blocks:
            mask = 0
            for v in blk:
                if mask >> v & 1:
                    raise ValueError(f"vertex {v} appears in more than one block")
                mask |= 1 << v
            masks.append(mask)
        return cls.from_blocks(masks, n)

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def order(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    @property
    def blocks(self) -> tuple[int, ...]:
        out = [0] * self.order
        for v, b in enumerate(self.assignment):
            out[b] |= 1 << v
        return tuple(out)

    def block_lists(self) -> list[list[int]]:
        return [members(b) for b in self.blocks]

    def __str__(self) -> str:
        return "|".join(",".join(map(str, blk)) for blk in self.block_lists())


def parse_partition(text: str, n: int) -> Partition:
    """Parse ``"0,3|1,4|2,5"`` (0-based vertices, ``|`` between blocks)."""
    blocks = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty block in partition {text!r}")
        try:
            blocks.append([int(x) for x in chunk.split(",")])
        except ValueError:
            raise ValueError(f"malformed block {chunk!r} in partition {text!r}") from None
    return Partition.from_lists(blocks, n)


def iter_block_masks(n: int) -> Iterator[list[int]]:
    """Yield every partition of ``0..n-1`` as a list of block bitmasks.

    Partitions come in lexicographic order of their restricted-growth strings,
    each exactly once (Bell(n) in total). The same list object is mutated and
    re-yielded; copy it if you keep it.
    """
    if n <= 0:
        return
    a = [0] * n
    # prefix_max[i] = max(a[0..i])
    prefix_max = [0] * n
    blocks = [(1 << n) - 1]
    yield blocks
    while True:
        j = n - 1
        while j > 0 and a[j] > prefix_max[j - 1]:
            j -= 1
        if j == 0:
            return
        bit = 1 << j
        blocks[a[j]] &= ~bit
        a[j] += 1
        if a[j] == len(blocks):
            blocks.append(bit)
        else:
            blocks[a[j]] |= bit
        top = prefix_max[j] = max(prefix_max[j - 1], a[j])
        for i in range(j + 1, n):
            if a[i]:
                bit = 1 << i
                blocks[a[i]] &= ~bit
                blocks[0] |= bit
                a[i] = 0
            prefix_max[i] = top
        del blocks[top + 1:]
        yield blocks


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
