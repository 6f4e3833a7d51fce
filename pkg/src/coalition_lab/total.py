"""Total coalitions: the coalition machinery with total domination (N(S) = V).

Every operation here rejects graphs with isolated vertices, where total
domination is undefined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalition import SearchReport, _oracle, _top_down, block_witnesses
from .domination import open_cover, require_no_isolated, total_dominating_table
from .graph import DEFAULT_ORACLE_CAP, Graph, check_cap, members
from .partitions import Partition


@dataclass(frozen=True)
class TotalCoalitionCertificate:
    partition: Partition
    witness: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.partition.order

    def to_json(self) -> dict:
        return {"blocks": self.partition.block_lists(), "witness": list(self.witness)}

    @classmethod
    def from_json(cls, data: dict, n: int) -> "TotalCoalitionCertificate":
        return cls(Partition.from_lists(data["blocks"], n), tuple(data["witness"]))


def _make_certificate(partition: Partition, witnesses) -> TotalCoalitionCertificate:
    return TotalCoalitionCertificate(partition, tuple(witnesses))


def is_total_coalition(g: Graph, a: int, b: int) -> bool:
    require_no_isolated(g)
    if not a or not b:
        raise ValueError("total coalition sets must be nonempty")
    if a & b:
        raise ValueError(f"total coalition sets overlap on {members(a & b)}")
    full = g.full_mask
    return open_cover(g, a) != full and open_cover(g, b) != full and open_cover(g, a | b) == full


def is_tc_partition(g: Graph, p: Partition) -> tuple[bool, TotalCoalitionCertificate | None]:
    require_no_isolated(g)
    if p.n != g.order:
        raise ValueError(f"partition covers {p.n} vertices, graph has {g.order}")
    witnesses = block_witnesses(total_dominating_table(g), p.blocks, singleton_ok=False)
    if witnesses is None:
        return False, None
    return True, _make_certificate(p, witnesses)


def verify_total_certificate(g: Graph, cert: TotalCoalitionCertificate) -> bool:
    require_no_isolated(g)
    full = g.full_mask
    p = cert.partition
    if p.n != g.order or len(cert.witness) != p.order:
        return False
    blocks = p.blocks
    for i, b in enumerate(blocks):
        j = cert.witness[i]
        if not isinstance(j, int) or not 0 <= j < len(blocks) or j == i:
            return False
        c = blocks[j]
        if open_cover(g, b) == full or open_cover(g, c) == full or open_cover(g, b | c) != full:
            return False
    return True


def total_coalition_number_oracle(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> SearchReport:
    require_no_isolated(g)
    check_cap(g.order, cap, "total_coalition_number_oracle")
    return _oracle(g.order, total_dominating_table(g), False, _make_certificate, "oracle")


def total_coalition_number_pruned(g: Graph, cap: int | None = None, lookahead: bool = False) -> SearchReport:
    """TC(G) by the top-down block search, cutting any totally dominating block.

    No singleton totally dominates a simple graph, so unlike the coalition
    search there are no frozen blocks. A value of 0 means no total coalition
    partition exists.
    """
    require_no_isolated(g)
    check_cap(g.order, cap, "total_coalition_number_pruned")
    return _top_down(g.order, total_dominating_table(g), g.order, False, lookahead, _make_certificate, "pruned")


def total_coalition_number(g: Graph, method: str = "auto", cap: int | None = None) -> SearchReport:
    if method == "auto":
        method = "oracle" if g.order <= 9 else "pruned"
    if method == "oracle":
        return total_coalition_number_oracle(g, DEFAULT_ORACLE_CAP if cap is None else cap)
    if method == "pruned":
        return total_coalition_number_pruned(g, cap)
    raise ValueError(f"unknown method {method!r}")
