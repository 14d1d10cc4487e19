import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import connected_bipartitions, connected_tripartitions
from parallelo.zonograph import (
    EXAMPLE_GRAPH,
    FacetPair,
    GraphError,
    GraphParseError,
    Parallelohedron3Kind as Kind,
    ZonotopeGraph,
    canonical_form,
    classify_3d,
    contract,
    enumerate_belts,
    enumerate_candidate_graphs,
    enumerate_facets,
    is_all_primitive,
    isomorphic,
    parse_graph,
    projection_survivors,
    reducibility,
)

K5 = ZonotopeGraph.from_edges(5, itertools.combinations(range(1, 6), 2))

# facet pairs and belts as printed for the worked example
EXAMPLE_FACETS = [
    ({1}, {2, 3, 4, 5}), ({1, 2}, {3, 4, 5}), ({1, 5}, {2, 3, 4}), ({1, 2, 3}, {4, 5}), ({1, 2, 5}, {3, 4}),
    ({1, 4, 5}, {2, 3}), ({1, 2, 3, 4}, {5}), ({1, 2, 3, 5}, {4}), ({1, 2, 4, 5}, {3}), ({1, 3, 4, 5}, {2}),
]
EXAMPLE_BELTS = [
    (({1}, {2}, {3, 4, 5}), True, [1, 2, 10]),
    (({1}, {2, 3}, {4, 5}), True, [1, 4, 6]),
    (({1}, {2, 5}, {3, 4}), False, [1, 5]),
    (({1}, {2, 3, 4}, {5}), True, [1, 3, 7]),
    (({1}, {2, 3, 5}, {4}), False, [1, 8]),
    (({1}, {2, 4, 5}, {3}), False, [1, 9]),
    (({1, 2}, {3}, {4, 5}), True, [2, 4, 9]),
    (({1, 2}, {3, 4}, {5}), True, [2, 5, 7]),
    (({1, 5}, {2}, {3, 4}), True, [3, 5, 10]),
    (({1, 5}, {2, 3}, {4}), True, [3, 6, 8]),
    (({1, 2, 3}, {4}, {5}), True, [4, 7, 8]),
    (({1, 2, 5}, {3}, {4}), True, [5, 8, 9]),
    (({1, 4, 5}, {2}, {3}), True, [6, 9, 10]),
]


def test_example_facets_in_order():
    got = [(set(f.first), set(f.second)) for f in enumerate_facets(EXAMPLE_GRAPH)]
    assert got == EXAMPLE_FACETS


def test_example_belts_in_order():
    facets = enumerate_facets(EXAMPLE_GRAPH)
    got = [
        (tuple(set(p) for p in b.parts), b.primitive, [facets.index(f) + 1 for f in b.facets])
        for b in enumerate_belts(EXAMPLE_GRAPH)
    ]
    assert got == EXAMPLE_BELTS


def test_non_facet_partition():
    # {2,5} | {1,3,4}: the second side is disconnected
    pairs = {frozenset((f.first, f.second)) for f in enumerate_facets(EXAMPLE_GRAPH)}
    assert frozenset((frozenset({2, 5}), frozenset({1, 3, 4}))) not in pairs


def test_k5_counts():
    assert len(enumerate_facets(K5)) == len(connected_bipartitions(5, K5.edges)) == 15
    belts = enumerate_belts(K5)
    assert len(belts) == len(connected_tripartitions(5, K5.edges)) == 25
    assert all(b.primitive for b in belts)


def test_path_graph_small():
    g = ZonotopeGraph.from_edges(3, [(1, 2), (2, 3)])
    labels = [f.label() for f in enumerate_facets(g)]
    assert labels == ["{1} and {2,3}", "{1,2} and {3}"]


@pytest.mark.parametrize("g", enumerate_candidate_graphs(5), ids=str)
def test_facets_and_belts_match_brute_force(g):
    facets = {frozenset((f.first, f.second)) for f in enumerate_facets(g)}
    assert facets == connected_bipartitions(5, g.edges)
    belts = enumerate_belts(g)
    assert {frozenset(b.parts) for b in belts} == connected_tripartitions(5, g.edges)
    for b in belts:
        # primitive exactly when every two parts are adjacent, and then with three facets
        joined = all(g.joined(a, c) for a, c in itertools.combinations(b.parts, 2))
        assert b.primitive == joined
        assert len(b.facets) == (3 if joined else 2)


def test_parse_text_and_json():
    assert parse_graph("n=5; edges=1-2,2-3,3-4,4-5,5-1,2-5") == EXAMPLE_GRAPH
    assert parse_graph(" n = 5 ;edges = 1 - 2 , 2-3,3-4 ,4-5,5-1,2-5 ") == EXAMPLE_GRAPH
    assert parse_graph('{"n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[5,1],[2,5]]}') == EXAMPLE_GRAPH
    assert parse_graph(EXAMPLE_GRAPH.to_text()) == EXAMPLE_GRAPH


@pytest.mark.parametrize(
    "text, message",
    [
        ("n=5; edges=1-2,3-4", "graph not connected"),
        ("n=3; edges=1-1,1-2,2-3", "loop"),
        ("n=3; edges=1-2,2-1,2-3", "parallel edge"),
        ("n=3; edges=1-2,2-4", "not a pair of distinct labels"),
        ("n=3", "missing field 'edges'"),
    ],
)
def test_invalid_graphs(text, message):
    with pytest.raises(GraphError, match=message):
        parse_graph(text)


def test_parse_error_position():
    with pytest.raises(GraphParseError) as err:
        parse_graph("n=4;\nedges=1-2,2x3")
    assert (err.value.line, err.value.column) == (2, 11)
    with pytest.raises(GraphParseError) as err:
        parse_graph('{"n": 3, "edges": [[1,2],}')
    assert err.value.line == 1


def test_contract_relabels():
    assert contract(EXAMPLE_GRAPH, (4, 5)).to_text() == "n=4; edges=1-2,1-4,2-3,2-4,3-4"
    with pytest.raises(GraphError):
        contract(EXAMPLE_GRAPH, (1, 3))


@pytest.mark.parametrize(
    "edges, kind",
    [
        ([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], Kind.TRUNCATED_OCTAHEDRON),
        ([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)], Kind.ELONGATED_DODECAHEDRON),
        ([(1, 2), (2, 3), (3, 4), (1, 4)], Kind.RHOMBIC_DODECAHEDRON),
        ([(1, 2), (2, 3), (1, 3), (3, 4)], Kind.HEXAGONAL_PRISM),
        ([(1, 2), (2, 3), (3, 4)], Kind.CUBE),
    ],
)
def test_classify_3d(edges, kind):
    assert classify_3d(ZonotopeGraph.from_edges(4, edges)) is kind


@pytest.mark.parametrize(
    "edge, kind, facets",
    [
        ((1, 2), Kind.RHOMBIC_DODECAHEDRON, [2, 4, 5, 7, 8, 9]),
        ((2, 3), Kind.ELONGATED_DODECAHEDRON, [1, 3, 4, 6, 7, 8]),
        ((4, 5), Kind.ELONGATED_DODECAHEDRON, [1, 2, 4, 6, 9, 10]),
        ((2, 5), Kind.HEXAGONAL_PRISM, None),
    ],
)
def test_example_projections(edge, kind, facets):
    assert classify_3d(contract(EXAMPLE_GRAPH, edge)) is kind
    if facets is not None:
        all_facets = enumerate_facets(EXAMPLE_GRAPH)
        survivors, _ = projection_survivors(EXAMPLE_GRAPH, edge)
        assert [all_facets.index(f) + 1 for f in survivors] == facets


def test_candidate_graphs_match_networkx_atlas():
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 5 and nx.is_connected(h)]
    ours = enumerate_candidate_graphs(5)
    assert len(ours) == len(atlas) == 21
    for h in atlas:
        g = ZonotopeGraph.from_edges(5, [(a + 1, b + 1) for a, b in h.edges])
        assert sum(isomorphic(g, x) for x in ours) == 1


def test_reducibility_matches_biconnected_components():
    for g in enumerate_candidate_graphs(5):
        h = nx.Graph(list(g.edges))
        expected = sorted(sorted(tuple(sorted(e)) for e in comp) for comp in nx.biconnected_component_edges(h))
        assert sorted(sorted(b) for b in reducibility(g)) == expected


def test_all_primitive_graphs():
    names = [g.to_text() for g in enumerate_candidate_graphs(5) if is_all_primitive(g)]
    assert names == ["n=5; edges=1-2,1-3,2-4,3-5,4-5", K5.to_text()]


def test_facet_pair_sides():
    f = FacetPair.of({3, 4}, frozenset(range(1, 6)))
    assert f.first == {1, 2, 5}
    assert f.keeps_together(1, 5) and not f.keeps_together(1, 3)


@given(st.permutations(range(1, 6)))
def test_facet_count_is_label_free(perm):
    g = ZonotopeGraph.from_edges(5, [(perm[a - 1], perm[b - 1]) for a, b in EXAMPLE_GRAPH.edges])
    assert canonical_form(g) == canonical_form(EXAMPLE_GRAPH)
    assert len(enumerate_facets(g)) == 10
    assert sum(b.primitive for b in enumerate_belts(g)) == 10
