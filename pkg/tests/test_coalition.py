import networkx as nx
import pytest
from sympy.utilities.iterables import multiset_partitions

from coalition_lab.catalog import all_catalog_entries, load_catalog
from coalition_lab.coalition import (
    COALITION_MEMBER,
    CoalitionCertificate,
    coalition_bounds,
    coalition_degree_cap_holds,
    coalition_graph,
    coalition_number,
    coalition_number_oracle,
    coalition_number_pruned,
    is_c_partition,
    is_coalition,
    split_domatic_construction,
    verify_certificate,
)
from coalition_lab.graph import (
    OrderCapExceeded,
    complete,
    complete_bipartite,
    cycle,
    from_edge_list,
    petersen,
    prism,
)
from coalition_lab.partitions import Partition

from conftest import random_connected_graph, random_graph
from test_graph import to_nx


def brute_coalition_number(g):
    """Definition-level C(G) with networkx domination checks."""
    h = to_nx(g)
    dom = lambda s: nx.is_dominating_set(h, s)
    best = 0
    for part in multiset_partitions(list(range(g.order))):
        if len(part) <= best:
            continue
        ok = True
        for i, b in enumerate(part):
            if len(b) == 1 and dom(b):
                continue
            if dom(b) or not any(
                j != i and not dom(c) and dom(set(b) | set(c)) for j, c in enumerate(part)
            ):
                ok = False
                break
        if ok:
            best = len(part)
    return best


def singletons(n):
    return Partition(tuple(range(n)))


def test_is_coalition_examples():
    assert not is_coalition(complete(2), 0b01, 0b10)
    assert is_coalition(cycle(4), 0b0001, 0b0010)
    g = petersen()
    assert not any(is_coalition(g, 1 << u, 1 << v) for u in range(10) for v in range(10) if u != v)


def test_is_coalition_rejects_bad_input():
    with pytest.raises(ValueError, match="overlap"):
        is_coalition(cycle(4), 0b011, 0b010)
    with pytest.raises(ValueError, match="nonempty"):
        is_coalition(cycle(4), 0, 0b010)


def test_c_partition_examples():
    ok, cert = is_c_partition(complete(4), singletons(4))
    assert ok and set(cert.block_status) == {"singleton-dominating"}
    ok, cert = is_c_partition(petersen(), singletons(10))
    assert not ok and cert is None
    ok, cert = is_c_partition(cycle(4), singletons(4))
    assert ok and set(cert.block_status) == {COALITION_MEMBER}
    assert verify_certificate(cycle(4), cert)


def test_coalition_graph_examples():
    cg = coalition_graph(complete(4), singletons(4)).graph
    assert cg.order == 4 and cg.num_edges() == 0
    cg = coalition_graph(cycle(4), singletons(4)).graph
    assert cg == complete(4)


def test_bounds():
    assert coalition_bounds(petersen()) == (5, 9)
    assert coalition_bounds(complete_bipartite(3, 3)) == (5, 6)
    assert coalition_bounds(prism()) == (5, 6)
    assert coalition_bounds(complete(4)) == (1, 4)
    assert coalition_bounds(from_edge_list(1, [])) == (1, 1)


def test_oracle_examples():
    assert coalition_number_oracle(complete_bipartite(3, 3)).value == 6
    assert coalition_number_oracle(prism()).value == 6
    assert coalition_number_oracle(petersen()).value == 6
    for n in range(1, 7):
        rep = coalition_number_oracle(complete(n))
        assert rep.value == n


def test_single_vertex():
    g = from_edge_list(1, [])
    for solver in (coalition_number_oracle, coalition_number_pruned):
        rep = solver(g)
        assert rep.value == 1
        assert rep.certificate.block_status == ("singleton-dominating",)


def test_caps():
    with pytest.raises(OrderCapExceeded):
        coalition_number_oracle(cycle(13))
    with pytest.raises(OrderCapExceeded):
        coalition_number_pruned(cycle(17))
    assert coalition_number_pruned(complete(17), cap=17).value == 17


def test_solvers_match_definition(rng):
    # includes disconnected graphs, isolated vertices and full vertices
    for _ in range(60):
        g = random_graph(rng.randint(1, 6), rng.uniform(0.1, 0.9), rng)
        expected = brute_coalition_number(g)
        assert coalition_number_oracle(g).value == expected
        assert coalition_number_pruned(g).value == expected
        assert coalition_number_pruned(g, lookahead=True).value == expected


def test_oracle_pruned_certificates_identical(rng):
    for _ in range(40):
        g = random_graph(rng.randint(1, 8), rng.uniform(0.1, 0.9), rng)
        o = coalition_number_oracle(g)
        p = coalition_number_pruned(g)
        la = coalition_number_pruned(g, lookahead=True)
        assert o.certificate == p.certificate == la.certificate
        assert verify_certificate(g, o.certificate)
        assert o.certificate.order == o.value


def test_bounds_sandwich(rng):
    for _ in range(40):
        g = random_connected_graph(rng.randint(2, 8), rng)
        lower, upper = coalition_bounds(g)
        assert lower <= coalition_number(g).value <= upper


def test_catalog_certificates_respect_degree_cap():
    for entry in all_catalog_entries():
        rep = coalition_number_pruned(entry.graph)
        assert coalition_degree_cap_holds(entry.graph, rep.certificate)
        assert max(coalition_graph(entry.graph, rep.certificate.partition).graph.degrees()) <= 4


def test_determinism():
    g = load_catalog(10)[3].graph
    first = coalition_number_pruned(g).certificate
    assert all(coalition_number_pruned(g).certificate == first for _ in range(3))
    assert coalition_number_oracle(g).certificate == first


def test_verify_rejects_corruption():
    g = cycle(4)
    good = coalition_number_oracle(g).certificate
    assert verify_certificate(g, good)
    # witness pointing at a block whose union with this one does not dominate
    p6 = cycle(6)
    cert = CoalitionCertificate(Partition(tuple(range(6))), (COALITION_MEMBER,) * 6, (3, 0, 0, 0, 0, 0))
    assert not verify_certificate(p6, cert)
    # partition over fewer vertices than the graph
    short = CoalitionCertificate(Partition((0, 1, 2)), (COALITION_MEMBER,) * 3, (1, 0, 0))
    assert not verify_certificate(g, short)
    # wrong status for a dominating singleton
    k2 = complete(2)
    bad = CoalitionCertificate(Partition((0, 1)), (COALITION_MEMBER,) * 2, (1, 0))
    assert not verify_certificate(k2, bad)
    assert not verify_certificate(g, CoalitionCertificate(good.partition, good.block_status, good.witness[:-1]))
    assert not verify_certificate(g, CoalitionCertificate(good.partition, ("bogus",) * 4, good.witness))


def test_certificate_json_roundtrip():
    g = petersen()
    cert = coalition_number_pruned(g).certificate
    again = CoalitionCertificate.from_json(cert.to_json(), g.order)
    assert again == cert and verify_certificate(g, again)


def test_search_report_stats():
    rep = coalition_number_pruned(petersen())
    stats = rep.stats()
    assert stats["method"] == "pruned"
    assert stats["nodes"] == rep.nodes_explored > 0
    assert stats["prunes"]["dominating_block"] > 0


def test_split_construction_is_a_lower_bound():
    for entry in all_catalog_entries():
        cert = split_domatic_construction(entry.graph)
        assert cert is not None
        assert verify_certificate(entry.graph, cert)
        assert cert.order <= coalition_number_pruned(entry.graph).value


def test_split_construction_random(rng):
    for _ in range(40):
        g = random_graph(rng.randint(1, 8), rng.uniform(0.1, 0.9), rng)
        cert = split_domatic_construction(g)
        if cert is not None:
            assert verify_certificate(g, cert)
            assert cert.order <= coalition_number(g).value
