import json

import pytest

import linkgraph


def test_dipole_link_graph():
    h = linkgraph.link_graph(linkgraph.dipole(3), 1)
    assert len(h["vertices"]) == 3
    assert len(h["edges"]) == 6


def test_counts_of_k4():
    g = linkgraph.complete(4)
    assert [len(linkgraph.link_graph(g, ell)["vertices"]) for ell in range(1, 5)] == [6, 12, 24, 48]


def test_edge_list_roundtrip():
    g = linkgraph.parse_edge_list("v z\na b\nb c\nc a\na b\n")
    assert g.vertex_count == 4
    assert g.edge_count == 4
    again = linkgraph.parse_edge_list(g.to_edge_list())
    assert again.vertex_ids == g.vertex_ids
    assert g.degree("a") == 3


def test_errors_carry_codes():
    with pytest.raises(linkgraph.LinkgraphError) as info:
        linkgraph.parse_edge_list("a a\n")
    assert info.value.args[0] == "LoopRejected"
    with pytest.raises(linkgraph.LinkgraphError) as info:
        linkgraph.link_graph(linkgraph.complete(6), 5, limit=100)
    assert info.value.args[0] == "LimitExceeded"


def test_colouring_and_minor():
    k5 = linkgraph.complete(5)
    r = linkgraph.recursive_colouring(k5, 4)
    assert r["colours"] <= 3
    assert linkgraph.chromatic_number(linkgraph.dipole(4), 1) == 4
    b = linkgraph.hadwiger_lower_bound(linkgraph.wheel(5), 1)
    assert b["bound"] >= 5
    assert b["verified"]


def test_verify_and_cli():
    report = linkgraph.verify(["Obs3.1"])
    assert report["passed"]
    code, out, err = linkgraph.run_cli(["gen", "petersen"])
    assert code == 0
    assert linkgraph.parse_edge_list(out).edge_count == 15
    code, out, err = linkgraph.run_cli(["build"])
    assert code == 2
    assert json.loads(err)["error"] == "Usage"
