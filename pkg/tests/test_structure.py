from itertools import combinations

import pytest

from metallic_cubes.counting import fibonacci, vertex_count
from metallic_cubes.errors import UnsupportedParametersError
from metallic_cubes.graph import build
from metallic_cubes.strings import MetallicString, parse_text
from metallic_cubes.structure import (
    brute_median,
    build_fibonacci_cube,
    canonical_decomposition,
    grid_decomposition,
    median,
    pell_degree_comparison,
    quotient_graph,
    rho_project,
    sigma_embed,
    sigma_is_induced_embedding,
)

SMALL_CUBES = [(a, n) for a in (1, 2, 3) for n in range(2, 7)] + [(4, n) for n in range(2, 6)]


def test_canonical_decomposition_of_3_3():
    result = canonical_decomposition(build(3, 3))
    sizes = {key: len(part) for key, part in result.prefix_parts.items()}
    assert sizes == {(0,): 10, (1,): 10, (2,): 10, (0, 3): 3}
    assert result.cross_edges == 33 - 10
    assert result.valid and result.isomorphic


def test_canonical_decomposition_of_2_2():
    result = canonical_decomposition(build(2, 2))
    assert result.prefix_parts == {(0,): (0, 1), (1,): (3, 4), (0, 2): (2,)}
    assert result.to_dict()['parts'] == {'0': 2, '1': 2, '02': 1}


@pytest.mark.parametrize("a, n", SMALL_CUBES)
def test_canonical_decomposition_holds(a, n):
    result = canonical_decomposition(build(a, n))
    assert result.sizes_ok and result.cross_edges_ok and result.isomorphic
    assert result.cross_edges == vertex_count(a, n) - vertex_count(a, n - 1)


def test_canonical_decomposition_needs_two_letters():
    with pytest.raises(UnsupportedParametersError):
        canonical_decomposition(build(3, 1))


def test_grid_decomposition_of_2_4():
    result = grid_decomposition(build(2, 4))
    assert result.sizes() == [16, 4, 4, 4, 1]
    assert result.class_count == fibonacci(5)
    assert set(result.classes) == {(), (0,), (1,), (2,), (0, 2)}
    assert result.valid


@pytest.mark.parametrize("a", [1, 2, 3, 5])
def test_grid_decomposition_of_length_three(a):
    assert grid_decomposition(build(a, 3)).class_count == 3


@pytest.mark.parametrize("a, n", SMALL_CUBES)
def test_grid_classes_are_grids(a, n):
    result = grid_decomposition(build(a, n))
    assert result.valid and result.grids_ok
    assert sum(result.sizes()) == vertex_count(a, n)


def test_rho_projection():
    assert str(rho_project(parse_text('0030', 3))) == '0010'
    assert rho_project(parse_text('0303', 3)).bits == (0, 1, 0, 1)


def test_quotient_of_length_three_is_a_path():
    quotient = quotient_graph(build(4, 3))
    assert quotient.order == 3
    assert len(quotient.edges) == 2
    assert quotient.isomorphic


@pytest.mark.parametrize("a", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_quotient_is_fibonacci_cube(a, n):
    quotient = quotient_graph(build(a, n))
    assert quotient.order == fibonacci(n + 1)
    assert quotient.isomorphic


def test_fibonacci_cube_small_cases():
    gamma = build_fibonacci_cube(2)
    assert [str(v) for v in gamma.vertices] == ['00', '01', '10']
    assert gamma.edges() == [(0, 1), (0, 2)]
    assert build_fibonacci_cube(4).order == 8


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_fibonacci_cube_is_the_cube_over_one_letter(m):
    gamma = build_fibonacci_cube(m)
    g = build(1, m + 1)
    index = {v.bits: k for k, v in enumerate(gamma.vertices)}
    mapping = [index[g.word(i)[1:]] for i in range(g.order)]
    assert sorted(mapping) == list(range(gamma.order))
    mapped = {tuple(sorted((mapping[i], mapping[j]))) for i, j in g.edges()}
    assert mapped == set(gamma.edges())


@pytest.mark.parametrize("text, a, image", [
    ('1', 2, '000'),
    ('0', 2, '001'),
    ('02', 2, '001010'),
    ('0', 3, '0101'),
    ('2', 3, '0000'),
    ('03', 3, '01010010'),
])
def test_sigma_images(text, a, image):
    assert str(sigma_embed(parse_text(text, a))) == image


def test_sigma_image_lengths():
    assert len(sigma_embed(parse_text('0201', 2))) == 12
    assert len(sigma_embed(parse_text('04012', 4))) == 30


@pytest.mark.parametrize("a", [2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sigma_is_an_induced_embedding(a, n):
    report = sigma_is_induced_embedding(a, n)
    assert report.valid, report.first_violation


def test_sigma_needs_two_letters():
    with pytest.raises(UnsupportedParametersError):
        sigma_embed(parse_text('01', 1))


def test_known_median():
    g = build(3, 2)
    m = median(g, parse_text('10', 3), parse_text('22', 3), parse_text('03', 3))
    assert str(m) == '12'


def test_median_with_repeated_vertex():
    g = build(3, 3)
    u, v = MetallicString((0, 3, 1), 3), MetallicString((2, 2, 0), 3)
    assert median(g, u, u, v) == u
    assert median(g, v, u, v) == v


@pytest.mark.parametrize("a, n", [(2, 3), (3, 2), (1, 5)])
def test_every_triple_has_one_median(a, n):
    g = build(a, n)
    for u, v, w in combinations(range(g.order), 3):
        found = brute_median(g, u, v, w)
        assert len(found) == 1
        assert found[0] == median(g, u, v, w)


def test_pell_graph_degree_argument():
    assert pell_degree_comparison(3) == (5, 4)
