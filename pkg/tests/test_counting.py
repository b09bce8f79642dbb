import pytest

from metallic_cubes.counting import (
    binomial,
    degree_distribution_brute,
    degree_distribution_closed,
    degree_distribution_gf,
    degree_gf,
    degrees_table,
    edge_count_formula,
    edge_count_polynomial,
    edge_count_recurrence,
    edges_table,
    evaluate_polynomial,
    fibonacci,
    fibonacci_identity_check,
    format_polynomial,
    p_value,
    q_value,
    vertex_count,
    vertex_count_closed,
    vertices_table,
)
from metallic_cubes.errors import InvalidAlphabetError, UnsupportedParametersError
from metallic_cubes.graph import all_pairs_edges, build

VERTEX_TABLE = {
    1: [1, 2, 3, 5, 8, 13, 21, 34],
    2: [2, 5, 12, 29, 70, 169, 408, 985],
    3: [3, 10, 33, 109, 360, 1189, 3927, 12970],
    4: [4, 17, 72, 305, 1292, 5473, 23184, 98209],
    5: [5, 26, 135, 701, 3640, 18901, 98145, 509626],
    6: [6, 37, 228, 1405, 8658, 53353, 328776, 2026009],
}

EDGE_POLYNOMIALS = {
    1: [-1, 1],
    2: [1, -2, 2],
    3: [-2, 4, -3, 3],
    4: [2, -6, 9, -4, 4],
    5: [-3, 9, -12, 16, -5, 5],
}

# degree -> number of vertices
DEGREE_TABLE = {
    2: {
        1: {1: 2},
        2: {1: 1, 2: 3, 3: 1},
        3: {2: 4, 3: 4, 4: 4},
        4: {2: 1, 3: 10, 4: 7, 5: 10, 6: 1},
        5: {3: 6, 4: 20, 5: 18, 6: 20, 7: 6},
    },
    3: {
        1: {1: 2, 2: 1},
        2: {1: 1, 2: 3, 3: 5, 4: 1},
        3: {2: 4, 3: 6, 4: 14, 5: 8, 6: 1},
        4: {2: 1, 3: 10, 4: 19, 5: 33, 6: 34, 7: 11, 8: 1},
        5: {3: 6, 4: 23, 5: 60, 6: 85, 7: 108, 8: 63, 9: 14, 10: 1},
    },
}


@pytest.mark.parametrize("a", sorted(VERTEX_TABLE))
def test_vertex_counts_match_table(a):
    for n, expected in enumerate(VERTEX_TABLE[a], start=1):
        assert vertex_count(a, n) == expected
        assert vertex_count_closed(a, n) == expected


def test_vertex_count_base_cases():
    assert vertex_count(7, 0) == 1
    assert vertex_count_closed(7, 0) == 1
    with pytest.raises(InvalidAlphabetError):
        vertex_count(0, 3)


def test_a_equal_one_gives_fibonacci_numbers():
    assert [vertex_count(1, n) for n in range(10)] == [fibonacci(n + 1) for n in range(10)]


def test_binomial_is_zero_outside_range():
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(-1, 0) == 0
    assert binomial(4, -1) == 0


@pytest.mark.parametrize("n", sorted(EDGE_POLYNOMIALS))
def test_edge_polynomials(n):
    assert edge_count_polynomial(n) == EDGE_POLYNOMIALS[n]
    for a in range(1, 7):
        assert edge_count_formula(a, n) == edge_count_recurrence(a, n)


def test_polynomial_formatting():
    assert format_polynomial(EDGE_POLYNOMIALS[3]) == '3a^3-3a^2+4a-2'
    assert format_polynomial(EDGE_POLYNOMIALS[1]) == 'a-1'
    assert format_polynomial([0]) == '0'
    assert evaluate_polynomial(EDGE_POLYNOMIALS[4], 2) == 58


def test_corrected_constants():
    assert edge_count_formula(2, 3) == 18
    assert [edge_count_formula(1, n) for n in (3, 4, 5)] == [2, 5, 10]


@pytest.mark.parametrize("a", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5, 6])
def test_edge_count_matches_built_graph(a, n):
    g = build(a, n)
    assert g.size == edge_count_formula(a, n) == edge_count_recurrence(a, n)
    if g.order <= 2000:
        assert len(all_pairs_edges(g)) == g.size


@pytest.mark.parametrize("n", range(31))
def test_fibonacci_identity(n):
    lhs, rhs = fibonacci_identity_check(n)
    assert lhs == rhs


@pytest.mark.parametrize("a", sorted(DEGREE_TABLE))
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_degree_table_three_routes(a, n):
    expected = DEGREE_TABLE[a][n]
    brute = degree_distribution_brute(build(a, n))
    closed = degree_distribution_closed(a, n)
    gf = degree_distribution_gf(a, n)
    assert brute.counts == expected
    assert closed.counts == expected
    assert gf.counts == expected
    assert brute.weighted_total() == 2 * edge_count_formula(a, n)


@pytest.mark.parametrize("a", [4, 5])
@pytest.mark.parametrize("n", [2, 4, 6])
def test_degree_routes_agree_beyond_tabulated_rows(a, n):
    brute = degree_distribution_brute(build(a, n))
    assert brute.same_counts(degree_distribution_closed(a, n))
    assert brute.same_counts(degree_distribution_gf(a, n))


def test_degree_series_first_rows():
    series = degree_gf(3, 2)
    assert series.coefficients[0] == [1]
    assert series.row(1) == {1: 2, 2: 1}
    assert series.n_max == 2


def test_closed_degrees_need_a_at_least_two():
    with pytest.raises(UnsupportedParametersError):
        degree_distribution_closed(1, 3)
    with pytest.raises(UnsupportedParametersError):
        degree_gf(1, 3)


def test_block_counts_must_fit():
    with pytest.raises(UnsupportedParametersError):
        q_value(3, 3, 1, 1, 0)
    with pytest.raises(UnsupportedParametersError):
        p_value(3, 2, 0, 0, -1)


def test_q_is_symmetric_in_block_counts():
    for l, h in [(0, 1), (1, 2), (0, 2)]:
        assert q_value(4, 7, l, h, 1) == q_value(4, 7, h, l, 1)


def test_vertices_table():
    frame = vertices_table(6, 8)
    assert list(frame.columns) == ['a'] + [str(n) for n in range(1, 9)]
    assert int(frame.loc[frame['a'] == 6, '8'].iloc[0]) == 2026009
    assert int(frame.loc[frame['a'] == 1, '4'].iloc[0]) == 5


def test_edges_table():
    frame = edges_table(4, 5)
    row = frame.loc[frame['n'] == 3].iloc[0]
    assert row['polynomial'] == '3a^3-3a^2+4a-2'
    assert [int(row[f"c{k}"]) for k in range(4)] == [-2, 4, -3, 3]
    assert int(row['a=2']) == 18


def test_degrees_table():
    frame = degrees_table(3, 5)
    row = frame.loc[(frame['a'] == 3) & (frame['n'] == 5)].iloc[0]
    assert [int(row[str(k)]) for k in range(1, 11)] == [0, 0, 6, 23, 60, 85, 108, 63, 14, 1]
    fib_row = frame.loc[(frame['a'] == 1) & (frame['n'] == 3)].iloc[0]
    assert [int(fib_row[str(k)]) for k in range(1, 4)] == [2, 1, 0]
