"""Exact coalition, total coalition, domination and domatic numbers of small graphs."""

from .catalog import CatalogEntry, ingest_graph6_file, load_catalog
from .coalition import (
    CoalitionCertificate,
    CoalitionGraph,
    SearchReport,
    coalition_bounds,
    coalition_graph,
    coalition_number,
    coalition_number_oracle,
    coalition_number_pruned,
    is_c_partition,
    is_coalition,
    split_domatic_construction,
    verify_certificate,
)
from .domination import (
    DomaticPartition,
    DominationSummary,
    domatic_number,
    domination_number,
    enumerate_dominating_sets,
    enumerate_minimal_dominating_sets,
    is_dominating,
    is_total_dominating,
    singleton_pair_table,
)
from .graph import (
    DegreeProfile,
    Graph,
    GraphError,
    OrderCapExceeded,
    degree_profile,
    from_edge_list,
    from_graph6,
    is_connected,
    members,
    petersen,
    to_graph6,
    vertex_set,
)
from .isomorphism import is_isomorphic
from .partitions import Partition
from .total import (
    TotalCoalitionCertificate,
    is_tc_partition,
    is_total_coalition,
    total_coalition_number,
)
