import json
from itertools import product

import networkx as nx
import numpy as np
import pydot
import pytest

from metallic_cubes.errors import CapExceededError, UnknownFormatError, VertexNotFoundError
from metallic_cubes.graph import (
    all_pairs_edges,
    are_adjacent,
    bfs_distances,
    bipartition,
    build,
    export,
    hbar,
    to_networkx,
)
from metallic_cubes.strings import MetallicString, parse_text


@pytest.fixture(scope="module")
def cube_3_3():
    return build(3, 3)


def test_path_graph_for_single_letters():
    g = build(3, 1)
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_small_cube():
    g = build(2, 2)
    assert g.order == 5 and g.size == 5
    assert [g.label(j) for j in g.neighbors((0, 1))] == ['00', '02', '11']
    assert are_adjacent(g, (0, 1), (0, 2))
    assert not are_adjacent(g, (0, 2), (1, 1))


def test_empty_word_cube():
    g = build(4, 0)
    assert g.order == 1 and g.size == 0
    assert g.label(0) == '-'


@pytest.mark.parametrize("a, n", list(product([1, 2, 3, 4], [1, 2, 3, 4])))
def test_synthesized_edges_match_pair_scan(a, n):
    g = build(a, n)
    assert list(g.edges()) == all_pairs_edges(g)


def test_index_lookup(cube_3_3):
    assert cube_3_3.index_of(MetallicString((0, 3, 0), 3)) == cube_3_3.index_of((0, 3, 0))
    assert (0, 3, 0) in cube_3_3
    assert (3, 0, 0) not in cube_3_3
    with pytest.raises(VertexNotFoundError):
        cube_3_3.index_of((1, 3, 0))
    with pytest.raises(VertexNotFoundError):
        cube_3_3.index_of(MetallicString((0, 1, 0), 2))
    with pytest.raises(KeyError):
        cube_3_3.index_of(10_000)


def test_distance_is_modified_hamming(cube_3_3):
    g = cube_3_3
    for source in range(0, g.order, 4):
        dist = bfs_distances(g, source)
        assert dist.dtype == np.uint8
        for target in range(g.order):
            assert int(dist[target]) == hbar(g.vertices[source], g.vertices[target])


def test_networkx_view(cube_3_3):
    G = to_networkx(cube_3_3)
    assert G.number_of_nodes() == 33
    assert G.number_of_edges() == cube_3_3.size
    assert nx.is_connected(G)
    assert nx.is_bipartite(G)


@pytest.mark.parametrize("a, n", [(1, 5), (2, 4), (3, 3), (5, 2)])
def test_letter_sum_parity_is_a_proper_coloring(a, n):
    g = build(a, n)
    even, odd, proper = bipartition(g)
    assert proper
    assert len(even) + len(odd) == g.order


def test_cap():
    with pytest.raises(CapExceededError):
        build(6, 8, cap=10)
    with pytest.raises(CapExceededError):
        all_pairs_edges(build(3, 3), cap=10)


def test_edgelist_export():
    assert export(build(3, 1), 'edgelist') == b"0 1\n1 2\n"
    assert export(build(2, 0), 'edgelist') == b""


def test_json_export():
    g = build(2, 2)
    payload = json.loads(export(g, 'json'))
    assert payload['a'] == 2 and payload['n'] == 2
    assert payload['vertices'] == ['00', '01', '02', '10', '11']
    assert payload['edges'] == [[0, 1], [0, 3], [1, 2], [1, 4], [3, 4]]


def test_dot_export_parses_back():
    g = build(2, 3)
    text = export(g, 'dot').decode('utf-8')
    parsed = pydot.graph_from_dot_data(text)[0]
    assert nx.nx_pydot.from_pydot(parsed).number_of_edges() == g.size


def test_export_is_deterministic():
    assert export(build(3, 3), 'dot') == export(build(3, 3), 'dot')
    assert export(build(3, 3), 'json') == export(build(3, 3), 'json')


def test_unknown_format():
    with pytest.raises(UnknownFormatError):
        export(build(2, 2), 'gml')


def test_text_vertices_resolve(cube_3_3):
    assert cube_3_3.label(cube_3_3.index_of(parse_text('203', 3))) == '203'
