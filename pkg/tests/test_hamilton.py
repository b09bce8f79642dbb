import pytest

from metallic_cubes.counting import vertex_count
from metallic_cubes.errors import UnsupportedParametersError
from metallic_cubes.graph import build
from metallic_cubes.hamilton import (
    PathWitness,
    hamiltonian_cycle,
    hamiltonian_path,
    matching_from_path,
    validate_witness,
)
from metallic_cubes.strings import parse_text

KNOWN_CYCLE_2_3 = ['111', '110', '100', '101', '102', '002', '001', '000', '010', '020', '021', '011']


def _labels(g, witness):
    return [g.label(i) for i in witness.sequence]


def _witness(g, kind, labels, missed=None):
    return PathWitness(kind, tuple(g.index_of(parse_text(t, g.a)) for t in labels), missed)


def _repeat_prefix(pattern, n):
    return tuple((pattern * n)[:n])


def test_known_paths():
    g = build(3, 2)
    assert _labels(g, hamiltonian_path(3, 2, g)) == [
        '03', '02', '01', '00', '10', '11', '12', '22', '21', '20',
    ]
    g = build(2, 2)
    assert _labels(g, hamiltonian_path(2, 2, g)) == ['02', '01', '00', '10', '11']


@pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_paths_are_valid_with_expected_ends(a, n):
    g = build(a, n)
    path = hamiltonian_path(a, n, g)
    assert path.valid and len(path.sequence) == g.order
    first, last = g.word(path.sequence[0]), g.word(path.sequence[-1])
    if a % 2 == 0:
        assert first == _repeat_prefix((0, a), n)
        assert last == (a - 1,) * n
    else:
        assert first == _repeat_prefix((0, a, a - 1), n)
        assert last == _repeat_prefix((a - 1, 0, a), n)


def test_odd_alphabet_endpoint_words():
    ends = []
    for n in range(1, 5):
        g = build(3, n)
        path = hamiltonian_path(3, n, g)
        ends += [g.label(path.sequence[0]), g.label(path.sequence[-1])]
    assert ends == ['0', '2', '03', '20', '032', '203', '0320', '2032']


def test_known_cycle_validates():
    g = build(2, 3)
    ok, violation = validate_witness(g, _witness(g, 'cycle', KNOWN_CYCLE_2_3))
    assert ok and violation is None


def test_constructed_cycle_of_2_3():
    g = build(2, 3)
    cycle = hamiltonian_cycle(2, 3, g)
    assert cycle.kind == 'cycle' and cycle.valid
    assert sorted(cycle.sequence) == list(range(12))


def test_near_cycle_of_2_2_misses_the_block():
    g = build(2, 2)
    cycle = hamiltonian_cycle(2, 2, g)
    assert cycle.kind == 'near_cycle'
    assert g.label(cycle.missed) == '02'
    assert len(cycle.sequence) == 4


@pytest.mark.parametrize("a", [2, 4])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cycles_and_near_cycles(a, n):
    g = build(a, n)
    cycle = hamiltonian_cycle(a, n, g)
    ok, violation = validate_witness(g, cycle)
    assert ok, violation
    if n % 2:
        assert cycle.kind == 'cycle' and len(cycle.sequence) == g.order
    else:
        assert cycle.kind == 'near_cycle' and len(cycle.sequence) == g.order - 1
        assert g.word(cycle.missed)[:2] == (0, a)


def test_cycle_of_4_3_length():
    assert len(hamiltonian_cycle(4, 3).sequence) == 72


def test_cycle_parameters():
    with pytest.raises(UnsupportedParametersError):
        hamiltonian_cycle(3, 3)
    with pytest.raises(UnsupportedParametersError):
        hamiltonian_cycle(2, 1)


def test_swapped_entries_are_reported():
    g = build(2, 3)
    swapped = list(KNOWN_CYCLE_2_3)
    swapped[1], swapped[6] = swapped[6], swapped[1]
    ok, violation = validate_witness(g, _witness(g, 'cycle', swapped))
    assert not ok
    assert violation.startswith('step 0 is not an edge: 111 -> 001')


def test_incomplete_path_is_rejected():
    g = build(2, 3)
    ok, violation = validate_witness(g, _witness(g, 'path', KNOWN_CYCLE_2_3[:-1]))
    assert not ok
    assert 'covers 11 of 12' in violation


def test_near_cycle_needs_missed_vertex():
    g = build(2, 2)
    witness = _witness(g, 'near_cycle', ['00', '10', '11', '01'])
    assert not validate_witness(g, witness)[0]
    witness.missed = g.index_of((0, 2))
    assert validate_witness(g, witness)[0]


@pytest.mark.parametrize("n", range(9))
def test_parity_bookkeeping(n):
    for a in (2, 4, 6):
        assert (vertex_count(a, n) % 2 == 0) == (n % 2 == 1)
    for a in (1, 3, 5):
        assert (vertex_count(a, n) % 2 == 0) == (n % 3 == 2)


@pytest.mark.parametrize("a, n, edges, perfect", [
    (2, 3, 6, True),
    (3, 3, 16, False),
    (4, 1, 2, True),
    (5, 1, 2, False),
])
def test_matchings(a, n, edges, perfect):
    g = build(a, n)
    matching = matching_from_path(a, n, g)
    assert len(matching.edges) == edges
    assert matching.perfect is perfect
    covered = [v for edge in matching.edges for v in edge]
    assert len(covered) == len(set(covered))
    assert all(j in g.adjacency[i] for i, j in matching.edges)


@pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matching_is_perfect_exactly_for_even_orders(a, n):
    matching = matching_from_path(a, n)
    assert matching.perfect == (vertex_count(a, n) % 2 == 0)
    assert 2 * len(matching.edges) >= vertex_count(a, n) - 1


def test_near_cycle_missed_vertex_must_exist():
    g = build(2, 2)
    witness = _witness(g, 'near_cycle', ['00', '10', '11', '01'], missed=999)
    ok, violation = validate_witness(g, witness)
    assert not ok
    assert 'missed vertex 999' in violation


@pytest.mark.parametrize("kind", ['cycle', 'near_cycle'])
def test_cycles_need_three_vertices(kind):
    g = build(2, 0)
    ok, violation = validate_witness(g, PathWitness(kind, (0,), missed=0))
    assert not ok
    assert 'at least 3 vertices' in violation
    g = build(2, 1)
    ok, violation = validate_witness(g, PathWitness('cycle', (0, 1)))
    assert not ok
