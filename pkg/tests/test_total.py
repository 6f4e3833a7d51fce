import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coalition_lab.catalog import all_catalog_entries
from coalition_lab.domination import open_cover
from coalition_lab.graph import GraphError, complete, cycle, from_edge_list, petersen
from coalition_lab.partitions import Partition
from coalition_lab.total import (
    TotalCoalitionCertificate,
    is_tc_partition,
    is_total_coalition,
    total_coalition_number,
    total_coalition_number_oracle,
    total_coalition_number_pruned,
    verify_total_certificate,
)

from conftest import random_graph
from test_graph import graphs


def no_isolated(g):
    return all(g.degrees())


def test_k2():
    rep = total_coalition_number_oracle(complete(2))
    assert rep.value == 2
    assert rep.certificate.witness == (1, 0)
    assert is_total_coalition(complete(2), 0b01, 0b10)


def test_c4():
    # {0} and {2} have the same open neighbourhood {1,3}; their union misses 0 and 2
    assert not is_total_coalition(cycle(4), 0b0001, 0b0100)
    assert is_total_coalition(cycle(4), 0b0001, 0b0010)
    assert total_coalition_number_oracle(cycle(4)).value == 4
    assert total_coalition_number_pruned(cycle(4)).value == 4


def test_tc_partition_examples():
    ok, cert = is_tc_partition(cycle(4), Partition((0, 1, 2, 3)))
    assert ok and verify_total_certificate(cycle(4), cert)
    # one block holding everything is totally dominating, so it has no partner
    ok, cert = is_tc_partition(cycle(4), Partition((0, 0, 0, 0)))
    assert not ok and cert is None
    ok, _ = is_tc_partition(petersen(), Partition(tuple(range(10))))
    assert not ok


def test_isolated_vertices_rejected():
    g = from_edge_list(3, [(0, 1)])
    for call in (
        lambda: total_coalition_number_oracle(g),
        lambda: total_coalition_number_pruned(g),
        lambda: is_total_coalition(g, 0b001, 0b010),
        lambda: is_tc_partition(g, Partition((0, 1, 2))),
    ):
        with pytest.raises(GraphError, match="isolated"):
            call()


def test_bad_pairs():
    with pytest.raises(ValueError, match="overlap"):
        is_total_coalition(cycle(4), 0b011, 0b001)
    with pytest.raises(ValueError, match="nonempty"):
        is_total_coalition(cycle(4), 0, 0b001)


def test_solvers_agree_random(rng):
    seen = 0
    while seen < 60:
        g = random_graph(rng.randint(2, 8), rng.uniform(0.2, 0.9), rng)
        if not no_isolated(g):
            continue
        seen += 1
        o = total_coalition_number_oracle(g)
        p = total_coalition_number_pruned(g)
        la = total_coalition_number_pruned(g, lookahead=True)
        assert o.value == p.value == la.value
        assert o.certificate == p.certificate == la.certificate
        if o.value:
            assert verify_total_certificate(g, o.certificate)
            assert o.certificate.order == o.value


def test_catalog_certificates():
    for entry in all_catalog_entries():
        rep = total_coalition_number(entry.graph)
        assert rep.value >= 2
        assert verify_total_certificate(entry.graph, rep.certificate)


def test_no_singleton_totally_dominates(rng):
    for _ in range(50):
        g = random_graph(rng.randint(2, 10), rng.uniform(0.2, 0.9), rng)
        if no_isolated(g):
            assert all(open_cover(g, 1 << v) != g.full_mask for v in range(g.order))


def test_verify_rejects_corruption():
    g = cycle(4)
    cert = total_coalition_number_oracle(g).certificate
    assert not verify_total_certificate(g, TotalCoalitionCertificate(cert.partition, cert.witness[:-1]))
    assert not verify_total_certificate(g, TotalCoalitionCertificate(cert.partition, (0,) * 4))
    bad = TotalCoalitionCertificate(Partition((0, 0, 1, 1)), (1, 0))  # each block already totally dominates
    assert not verify_total_certificate(g, bad)


def test_json_roundtrip():
    g = petersen()
    cert = total_coalition_number(g).certificate
    assert TotalCoalitionCertificate.from_json(cert.to_json(), 10) == cert


@given(graphs(max_order=7))
@settings(max_examples=60, deadline=None)
def test_tc_bounded_and_verified(g):
    if not no_isolated(g):
        return
    rep = total_coalition_number_oracle(g)
    assert 0 <= rep.value <= g.order
    if rep.value:
        assert verify_total_certificate(g, rep.certificate)
