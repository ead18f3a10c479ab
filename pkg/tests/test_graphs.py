"""Graph types, the two text formats, and the covering constructions."""

from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from excfact import (
    Covering,
    CoveringError,
    FormatError,
    Matching,
    Multigraph,
    PreconditionError,
    SimpleGraph,
    StructuralError,
    covering_from_json,
    covering_induced_by_coloring,
    covering_to_json,
    delete_edge_instances,
    encode_graph6,
    find_k_edge_coloring,
    format_edge_list,
    induced_multigraph,
    parse_edge_list,
    parse_graph6,
    underlying_simple,
)
from excfact.families import complete, cycle, petersen
from excfact.oracle import all_matchings, enumerate_labeled_graphs
from strategies import simple_graphs

PETERSEN_EDGE_LINES = """
0 1
1 2
2 3
3 4
4 0
5 7
7 9
9 6
6 8
8 5
0 5
1 6
2 7
3 8
4 9
"""


def test_parse_edge_list_with_header():
    g = parse_edge_list("n 3\n0 1\n1 2")
    assert g.vertex_count == 3
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_parse_edge_list_collapses_duplicates():
    g = parse_edge_list("0 1\n0 1")
    assert g.vertex_count == 2
    assert g.edges == frozenset({(0, 1)})


def test_parse_edge_list_petersen():
    g = parse_edge_list(PETERSEN_EDGE_LINES)
    assert g.vertex_count == 10
    assert g.edge_count == 15
    assert all(g.degree(v) == 3 for v in range(10))
    assert g == petersen()


def test_parse_edge_list_comments_and_blanks():
    g = parse_edge_list("# a comment\n\n0 1  # inline\nn 4\n")
    assert g.vertex_count == 4
    assert g.edges == frozenset({(0, 1)})


@pytest.mark.parametrize(
    "text",
    ["0 0", "0 x", "0", "0 1 2", "n 2\n0 5", "n 1\nn 2", "-1 2"],
)
def test_parse_edge_list_rejects(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_edge_list_round_trip():
    g = petersen()
    assert parse_edge_list(format_edge_list(g)) == g


def test_graph6_single_vertex():
    g = parse_graph6("@")
    assert g == SimpleGraph(1, frozenset())
    assert encode_graph6(g) == "@"


def test_graph6_k3_against_reference_encoder():
    reference = nx.to_graph6_bytes(nx.complete_graph(3), header=False).decode().strip()
    assert encode_graph6(complete(3)) == reference == "Bw"
    assert parse_graph6(reference) == complete(3)


def test_graph6_accepts_standard_header():
    assert parse_graph6(">>graph6<<Bw") == complete(3)


@pytest.mark.parametrize("text", ["", "B", "Bw~extra", "B\x1c", "C" + chr(200)])
def test_graph6_rejects_malformed(text):
    with pytest.raises(FormatError):
        parse_graph6(text)


def test_graph6_round_trip_exhaustive_small():
    for n in range(6):
        for g in enumerate_labeled_graphs(n):
            assert parse_graph6(encode_graph6(g)) == g


def test_graph6_matches_networkx_both_ways():
    for n in range(5):
        for g in enumerate_labeled_graphs(n):
            mirror = nx.Graph()
            mirror.add_nodes_from(range(n))
            mirror.add_edges_from(g.edges)
            reference = nx.to_graph6_bytes(mirror, header=False).decode().strip()
            assert encode_graph6(g) == reference
            decoded = nx.from_graph6_bytes(encode_graph6(g).encode())
            assert frozenset(map(lambda e: (min(e), max(e)), decoded.edges())) == g.edges


@given(simple_graphs(max_vertices=8))
def test_graph6_round_trip_random(g):
    assert parse_graph6(encode_graph6(g)) == g


def test_graph6_extended_vertex_count():
    g = SimpleGraph(63, frozenset({(0, 62), (10, 20)}))
    encoded = encode_graph6(g)
    assert encoded.startswith("~")
    assert parse_graph6(encoded) == g
    mirror = nx.Graph()
    mirror.add_nodes_from(range(63))
    mirror.add_edges_from(g.edges)
    assert encoded == nx.to_graph6_bytes(mirror, header=False).decode().strip()


def test_simple_graph_rejects_loops_and_range():
    with pytest.raises(PreconditionError):
        SimpleGraph(3, frozenset({(1, 1)}))
    with pytest.raises(PreconditionError):
        SimpleGraph(2, frozenset({(0, 2)}))


def test_matching_rejects_shared_vertex():
    with pytest.raises(PreconditionError):
        Matching(frozenset({(0, 1), (1, 2)}))


def test_covering_equality_is_multiset():
    a = Matching(frozenset({(0, 1)}))
    b = Matching(frozenset({(2, 3)}))
    assert Covering((a, b)) == Covering((b, a))
    assert Covering((a, a)) != Covering((a,))
    assert hash(Covering((a, b))) == hash(Covering((b, a)))


def test_induced_multigraph_counts_memberships():
    g = SimpleGraph(2, frozenset({(0, 1)}))
    m = Matching(frozenset({(0, 1)}))
    h = induced_multigraph(g, Covering((m, m)))
    assert h.multiplicity((0, 1)) == 2
    assert h.edge_count == 2


def test_induced_multigraph_of_partition_is_the_graph():
    g = cycle(4)
    classes = [Matching(frozenset({(0, 1), (2, 3)})), Matching(frozenset({(1, 2), (0, 3)}))]
    h = induced_multigraph(g, Covering(tuple(classes)))
    assert h == Multigraph.from_simple(g)


def test_induced_multigraph_rejects_non_edges():
    g = SimpleGraph(3, frozenset({(0, 1)}))
    with pytest.raises(CoveringError):
        induced_multigraph(g, Covering((Matching(frozenset({(1, 2)})),)))


def test_induced_multigraph_size_is_sum_of_matching_sizes(petersen_graph):
    from excfact import excessive_lm_index

    witness = excessive_lm_index(petersen_graph, 4, 5).witness
    h = induced_multigraph(petersen_graph, witness)
    assert h.edge_count == witness.total_size()
    assert 4 * 4 <= h.edge_count <= 4 * 5


@given(simple_graphs(max_vertices=6))
def test_induced_covering_identities_random(g):
    mats = all_matchings(g, 1, 3, cap=100_000)
    sample = mats[::3][:4]
    covering = Covering(tuple(sample))
    h = induced_multigraph(g, covering)
    assert h.edge_count == covering.total_size()
    assert underlying_simple(h) == SimpleGraph(g.vertex_count, covering.edge_support())
    covers = covering.edge_support() == g.edges
    assert (underlying_simple(h) == g) == covers


def test_covering_induced_by_coloring_identity():
    g = cycle(4)
    h = Multigraph.from_simple(g)
    colouring = find_k_edge_coloring(h, 2)
    covering = covering_induced_by_coloring(g, h, colouring)
    assert len(covering) == 2
    assert {frozenset(m.edges) for m in covering} == {frozenset(c) for c in colouring.classes}


def test_covering_induced_by_coloring_doubled_edge():
    g = SimpleGraph(2, frozenset({(0, 1)}))
    h = Multigraph(2, {(0, 1): 2})
    colouring = find_k_edge_coloring(h, 2)
    covering = covering_induced_by_coloring(g, h, colouring)
    e = Matching(frozenset({(0, 1)}))
    assert covering == Covering((e, e))


def test_covering_induced_by_coloring_rejects_mismatch():
    g = cycle(4)
    other = SimpleGraph(4, frozenset({(0, 1)}))
    h = Multigraph.from_simple(other)
    colouring = find_k_edge_coloring(h, 1)
    with pytest.raises(StructuralError):
        covering_induced_by_coloring(g, h, colouring)


def test_underlying_simple():
    h = Multigraph(3, {(0, 1): 3, (1, 2): 1})
    assert underlying_simple(h) == SimpleGraph(3, frozenset({(0, 1), (1, 2)}))
    assert underlying_simple(Multigraph.from_simple(cycle(5))) == cycle(5)


def test_delete_edge_instances_identity_and_order():
    h = Multigraph(3, {(0, 1): 2, (1, 2): 1})
    assert delete_edge_instances(h, 0) == h
    reduced = delete_edge_instances(h, 1)
    assert reduced.multiplicity((0, 1)) == 1
    assert underlying_simple(reduced) == underlying_simple(h)
    with pytest.raises(PreconditionError):
        delete_edge_instances(h, 2)


def test_delete_edge_instances_balanced_surplus():
    # 9 = 3 * (2 + 1) instances over a triangle; removing 3 leaves 3 * 2
    h = Multigraph(3, {(0, 1): 3, (0, 2): 3, (1, 2): 3})
    reduced = delete_edge_instances(h, 3)
    assert reduced.edge_count == 6
    assert underlying_simple(reduced) == underlying_simple(h)
    assert all(reduced.multiplicity(e) == 2 for e in reduced.support())


def test_covering_json_round_trip(petersen_graph):
    from excfact import excessive_lm_index

    witness = excessive_lm_index(petersen_graph, 4, 5).witness
    blob = covering_to_json(witness)
    for matching in blob["matchings"]:
        assert matching == sorted(matching)
        assert all(u < v for u, v in matching)
    assert covering_from_json(blob) == witness


@pytest.mark.parametrize("obj", [{}, {"matchings": 3}, {"matchings": [[(0,)]]}, {"matchings": [[[0, "x"]]]}])
def test_covering_json_rejects_malformed(obj):
    with pytest.raises(FormatError):
        covering_from_json(obj)
