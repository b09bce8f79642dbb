"""
Hamiltonian paths, cycles and matchings of metallic cubes
Constructions are recursive over the canonical decomposition and every
witness is re-checked against the built graph before it is returned.
"""

import logging
from dataclasses import dataclass
from itertools import chain
from typing import Dict, Iterable, List, Optional, Set, Tuple

from metallic_cubes.errors import ConstructionError, UnsupportedParametersError
from metallic_cubes.graph import MetallicCube, build
from metallic_cubes.strings import MetallicString, Word, check_alphabet, is_valid, to_text

logger = logging.getLogger(__name__)

KINDS = ('path', 'cycle', 'near_cycle')


@dataclass
class PathWitness:
    """Vertex ranks in visiting order; near cycles also name the skipped vertex"""
    kind: str
    sequence: Tuple[int, ...]
    missed: Optional[int] = None
    valid: bool = False


@dataclass
class Matching:
    edges: List[Tuple[int, int]]
    exposed: Optional[int] = None

    @property
    def perfect(self) -> bool:
        return self.exposed is None


def _first_violation(g: MetallicCube, w: PathWitness) -> Optional[Tuple[str, Optional[Tuple[str, str]]]]:
    if w.kind not in KINDS:
        return f"unknown witness kind {w.kind!r}", None
    seq = w.sequence
    for i in seq:
        if not 0 <= i < g.order:
            return f"index {i} is not a vertex", None
    if len(set(seq)) != len(seq):
        return "a vertex is visited twice", None

    for k in range(len(seq) - 1):
        u, v = seq[k], seq[k + 1]
        if v not in g.adjacency[u]:
            return f"step {k} is not an edge", (g.label(u), g.label(v))
    if w.kind != 'path':
        if len(seq) < 3:
            return f"{w.kind} needs at least 3 vertices, got {len(seq)}", None
        if seq[0] not in g.adjacency[seq[-1]]:
            return "cycle does not close", (g.label(seq[-1]), g.label(seq[0]))

    if w.kind == 'near_cycle':
        if w.missed is None:
            return "near cycle without a missed vertex", None
        if not 0 <= w.missed < g.order:
            return f"missed vertex {w.missed} is not a vertex", None
        if w.missed in seq or len(seq) != g.order - 1:
            return "near cycle does not cover all vertices but one", None
    elif len(seq) != g.order:
        return f"{w.kind} covers {len(seq)} of {g.order} vertices", None
    return None


def validate_witness(g: MetallicCube, w: PathWitness) -> Tuple[bool, Optional[str]]:
    """Adjacency, closure and coverage; returns the first violation found"""
    problem = _first_violation(g, w)
    if problem is None:
        return True, None
    message, transition = problem
    if transition is not None:
        message = f"{message}: {transition[0]} -> {transition[1]}"
    return False, message


def _certify(g: MetallicCube, w: PathWitness) -> PathWitness:
    problem = _first_violation(g, w)
    if problem is not None:
        raise ConstructionError(f"{w.kind} of Π^{g.a}_{g.n} failed validation: {problem[0]}", problem[1])
    w.valid = True
    return w


def _prefixed(prefix: Word, words: Iterable[Word]) -> Iterable[Word]:
    return (prefix + w for w in words)


class _PathBuilder:
    """Hamiltonian paths H_m of Π^a_m, memoized per length"""

    def __init__(self, a: int):
        self.a = a
        self._memo: Dict[int, List[Word]] = {0: [()], 1: [(x,) for x in range(a)]}

    def words(self, m: int) -> List[Word]:
        if m not in self._memo:
            a = self.a
            shorter, previous = self.words(m - 2), self.words(m - 1)
            # the 0a part runs backwards for odd a so it ends next to 0 H_{m-1} reversed
            block = reversed(shorter) if a % 2 == 1 else shorter
            copies = [
                _prefixed((j,), reversed(previous) if j % 2 == 0 else previous)
                for j in range(a)
            ]
            self._memo[m] = list(chain(_prefixed((0, a), block), *copies))
        return self._memo[m]


def hamiltonian_path(a: int, n: int, g: MetallicCube = None) -> PathWitness:
    check_alphabet(a)
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    g = build(a, n) if g is None else g
    words = _PathBuilder(a).words(n)
    witness = PathWitness('path', tuple(g.index_of(w) for w in words))
    logger.debug(f"Hamiltonian path of Π^{a}_{n}: {g.label(witness.sequence[0])} .. {g.label(witness.sequence[-1])}")
    return _certify(g, witness)


def _open(cycle: List[Word], s: Word, t: Word) -> List[Word]:
    """Walk the cycle from s away from its neighbor t, ending at t"""
    size = len(cycle)
    i = cycle.index(s)
    if cycle[(i - 1) % size] == t:
        return cycle[i:] + cycle[:i]
    if cycle[(i + 1) % size] == t:
        return [cycle[(i - k) % size] for k in range(size)]
    raise ConstructionError("cannot open cycle at a non-edge", (s, t))


def _cycle_edges(cycle: List[Word]) -> Set[frozenset]:
    return {frozenset((cycle[k], cycle[(k + 1) % len(cycle)])) for k in range(len(cycle))}


def _cyclic_pairs(cycle: List[Word]):
    for k in range(len(cycle)):
        yield cycle[k], cycle[(k + 1) % len(cycle)]


class _CycleBuilder:
    """Hamiltonian cycles (m odd) and near cycles (m even) of Π^a_m for even a"""

    def __init__(self, a: int):
        self.a = a
        self._memo: Dict[int, Tuple[List[Word], Optional[Word]]] = {}

    def neighbors(self, w: Word) -> List[Word]:
        found = []
        for p, x in enumerate(w):
            for step in (-1, 1):
                y = x + step
                if 0 <= y <= self.a:
                    candidate = w[:p] + (y,) + w[p + 1:]
                    if is_valid(candidate, self.a):
                        found.append(candidate)
        return found

    def cycle(self, m: int) -> Tuple[List[Word], Optional[Word]]:
        if m not in self._memo:
            self._memo[m] = self._grid_cycle() if m == 2 else self._compose(m)
        return self._memo[m]

    def _grid_cycle(self) -> Tuple[List[Word], Optional[Word]]:
        """Boustrophedon through {0..a-1}^2; 0a is left out"""
        a = self.a
        words = [(i, 0) for i in range(a)]
        words += [(a - 1, c) for c in range(1, a)]
        for t, row in enumerate(range(a - 2, -1, -1)):
            columns = range(a - 1, 0, -1) if t % 2 == 0 else range(1, a)
            words += [(row, c) for c in columns]
        return words, (0, a)

    def _pair(self, k: int, inner: List[Word], missed: Optional[Word]) -> List[Word]:
        """One cycle through copies k and k+1 of Π^a_{m-1}"""
        if missed is not None:
            beta = min(w for w in self.neighbors(missed) if w != missed)
            i = inner.index(beta)
            gamma = min(inner[i - 1], inner[(i + 1) % len(inner)])
            walk = _open(inner, beta, gamma)
            return (
                [(k,) + missed]
                + [(k,) + w for w in walk]
                + [(k + 1,) + w for w in reversed(walk)]
                + [(k + 1,) + missed]
            )
        beta, gamma = min(tuple(sorted(e)) for e in _cycle_edges(inner))
        walk = _open(inner, beta, gamma)
        return [(k,) + w for w in walk] + [(k + 1,) + w for w in reversed(walk)]

    def _merge(self, big: List[Word], pair: List[Word], left: int) -> List[Word]:
        """Join through copies left and left+1 by swapping one matched edge pair"""
        pair_edges = _cycle_edges(pair)
        for u, v in _cyclic_pairs(big):
            if u[0] != left or v[0] != left:
                continue
            p2, q2 = (left + 1,) + u[1:], (left + 1,) + v[1:]
            if frozenset((p2, q2)) in pair_edges:
                return _open(big, u, v) + _open(pair, q2, p2)
        raise ConstructionError(f"no shared edge between copies {left} and {left + 1}")

    def _compose(self, m: int) -> Tuple[List[Word], Optional[Word]]:
        a = self.a
        inner, inner_missed = self.cycle(m - 1)
        pairs = [self._pair(k, inner, inner_missed) for k in range(0, a, 2)]
        big = pairs[0]
        for p in range(1, len(pairs)):
            big = self._merge(big, pairs[p], 2 * p - 1)

        if m == 3:
            return self._insert_block_pieces(big), None

        shorter, shorter_missed = self.cycle(m - 2)
        shorter_edges = _cycle_edges(shorter)
        for u, v in _cyclic_pairs(big):
            if u[:2] != (0, a - 1) or v[:2] != (0, a - 1):
                continue
            if frozenset((u[2:], v[2:])) in shorter_edges:
                block = [(0, a) + w for w in shorter]
                p2, q2 = (0, a) + u[2:], (0, a) + v[2:]
                merged = _open(big, u, v) + _open(block, q2, p2)
                missed = None if shorter_missed is None else (0, a) + shorter_missed
                return merged, missed
        raise ConstructionError(f"no edge to splice the 0{a} part of Π^{a}_{m}")

    def _insert_block_pieces(self, big: List[Word]) -> List[Word]:
        """Π^a_1 is a path, so 0a0..0a(a-1) go in as consecutive pairs"""
        a = self.a
        for i in range(0, a, 2):
            u, v = (0, a - 1, i), (0, a - 1, i + 1)
            if frozenset((u, v)) not in _cycle_edges(big):
                raise ConstructionError("missing edge for the 0a pieces", (u, v))
            big = _open(big, v, u) + [(0, a, i), (0, a, i + 1)]
        return big


def hamiltonian_cycle(a: int, n: int, g: MetallicCube = None) -> PathWitness:
    """A Hamiltonian cycle for odd n, a cycle missing one vertex for even n"""
    check_alphabet(a)
    if a % 2 == 1:
        raise UnsupportedParametersError(f"cycles are constructed for even a only, got a={a}")
    if n < 2:
        raise UnsupportedParametersError(f"cycles need n >= 2, got n={n}")
    g = build(a, n) if g is None else g

    words, missed = _CycleBuilder(a).cycle(n)
    witness = PathWitness(
        'cycle' if missed is None else 'near_cycle',
        tuple(g.index_of(w) for w in words),
        None if missed is None else g.index_of(missed),
    )
    if missed is not None:
        logger.debug(f"Near cycle of Π^{a}_{n} skips {to_text(MetallicString(missed, a))}")
    return _certify(g, witness)


def matching_from_path(a: int, n: int, g: MetallicCube = None) -> Matching:
    """Pair up path neighbors 1-2, 3-4, ...; odd orders leave the last vertex"""
    path = hamiltonian_path(a, n, g)
    seq = path.sequence
    edges = [
        (min(seq[k], seq[k + 1]), max(seq[k], seq[k + 1]))
        for k in range(0, len(seq) - 1, 2)
    ]
    exposed = seq[-1] if len(seq) % 2 == 1 else None
    return Matching(edges, exposed)
