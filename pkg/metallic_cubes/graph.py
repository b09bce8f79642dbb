"""
Metallic cube Π^a_n as an explicit immutable graph
Vertices are kept in lexicographic order; every vertex index in the package
is a position in that order.
"""

import json
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple, Union

import networkx as nx
import numpy as np
import scipy.sparse as sps

from metallic_cubes.config import CAPS, EXPORT_FORMATS
from metallic_cubes.counting import vertex_count
from metallic_cubes.errors import (
    CapExceededError,
    InconsistencyError,
    UnknownFormatError,
    VertexNotFoundError,
)
from metallic_cubes.strings import (
    MetallicString,
    Word,
    check_alphabet,
    check_same_shape,
    iter_words,
    to_text,
)

logger = logging.getLogger(__name__)

VertexRef = Union[int, MetallicString, Word]


@dataclass(frozen=True)
class MetallicCube:
    """Π^a_n: canonical vertex list plus sorted neighbor index lists"""
    a: int
    n: int
    vertices: Tuple[MetallicString, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    _index: Dict[Word, int] = field(repr=False, compare=False, hash=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    def word(self, i: int) -> Word:
        return self.vertices[i].letters

    def label(self, i: int) -> str:
        return to_text(self.vertices[i])

    def __contains__(self, v) -> bool:
        try:
            self.index_of(v)
        except VertexNotFoundError:
            return False
        return True

    def index_of(self, v: VertexRef) -> int:
        if isinstance(v, (int, np.integer)):
            if 0 <= v < len(self.vertices):
                return int(v)
            raise VertexNotFoundError(f"no vertex with index {v} in Π^{self.a}_{self.n}")
        if isinstance(v, MetallicString):
            if v.a != self.a:
                raise VertexNotFoundError(f"{v} is a word over 0..{v.a}, not 0..{self.a}")
            v = v.letters
        try:
            return self._index[tuple(v)]
        except KeyError:
            raise VertexNotFoundError(f"{tuple(v)} is not a vertex of Π^{self.a}_{self.n}")

    def neighbors(self, v: VertexRef) -> Tuple[int, ...]:
        return self.adjacency[self.index_of(v)]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Each edge once, lower index first, sorted"""
        for i, neighbors in enumerate(self.adjacency):
            for j in neighbors:
                if i < j:
                    yield i, j

    def csr(self) -> sps.csr_matrix:
        rows, cols = [], []
        for i, neighbors in enumerate(self.adjacency):
            rows.extend([i] * len(neighbors))
            cols.extend(neighbors)
        data = np.ones(len(rows), dtype=np.int8)
        return sps.csr_matrix((data, (rows, cols)), shape=(self.order, self.order))


def build(a: int, n: int, cap: int = None) -> MetallicCube:
    """Edges by neighbor synthesis: change one letter by ±1 and look the word up"""
    check_alphabet(a)
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    cap = CAPS['vertices'] if cap is None else cap
    size = vertex_count(a, n)
    if size > cap:
        raise CapExceededError(f"Π^{a}_{n}", size, cap)

    words = list(iter_words(a, n))
    index = {w: i for i, w in enumerate(words)}
    adjacency: List[Tuple[int, ...]] = []
    for w in words:
        found = []
        for p, letter in enumerate(w):
            for step in (-1, 1):
                candidate = w[:p] + (letter + step,) + w[p + 1:]
                j = index.get(candidate)
                if j is not None:
                    found.append(j)
        adjacency.append(tuple(sorted(found)))

    vertices = tuple(MetallicString(w, a) for w in words)
    cube = MetallicCube(a, n, vertices, tuple(adjacency), index)
    logger.debug(f"Built Π^{a}_{n}: {cube.order} vertices, {cube.size} edges")
    return cube


def hbar(u: MetallicString, v: MetallicString) -> int:
    """Sum of letterwise absolute differences"""
    check_same_shape(u, v)
    return sum(abs(x - y) for x, y in zip(u.letters, v.letters))


def are_adjacent(g: MetallicCube, u: VertexRef, v: VertexRef) -> bool:
    i, j = g.index_of(u), g.index_of(v)
    return hbar(g.vertices[i], g.vertices[j]) == 1


def distance_dtype(g: MetallicCube):
    """Smallest unsigned type holding a*n, one above the largest distance"""
    bound = g.a * g.n
    for dtype in (np.uint8, np.uint16, np.uint32):
        if bound < np.iinfo(dtype).max:
            return dtype
    return np.uint64


def bfs_distances(g: MetallicCube, source: VertexRef) -> np.ndarray:
    start = g.index_of(source)
    dtype = distance_dtype(g)
    unreached = np.iinfo(dtype).max
    dist = np.full(g.order, unreached, dtype=dtype)
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] == unreached:
                dist[w] = d
                queue.append(w)
    if (dist == unreached).any():
        raise InconsistencyError(f"Π^{g.a}_{g.n} is not connected from {g.label(start)}")
    return dist


def all_pairs_edges(g: MetallicCube, cap: int = None) -> List[Tuple[int, int]]:
    """Edge list by comparing every pair of vertices (test oracle)"""
    cap = CAPS['pair_scan_oracle'] if cap is None else cap
    if g.order > cap:
        raise CapExceededError(f"pair scan of Π^{g.a}_{g.n}", g.order, cap)
    words = [v.letters for v in g.vertices]
    edges = []
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            if sum(abs(x - y) for x, y in zip(words[i], words[j])) == 1:
                edges.append((i, j))
    return edges


def bipartition(g: MetallicCube) -> Tuple[List[int], List[int], bool]:
    """Split by letter-sum parity; the flag says whether the coloring is proper"""
    parity = [sum(v.letters) % 2 for v in g.vertices]
    even = [i for i, p in enumerate(parity) if p == 0]
    odd = [i for i, p in enumerate(parity) if p == 1]
    proper = all(parity[i] != parity[j] for i, j in g.edges())
    return even, odd, proper


def to_networkx(g: MetallicCube) -> nx.Graph:
    G = nx.Graph(a=g.a, n=g.n)
    labels = [g.label(i) for i in range(g.order)]
    G.add_nodes_from(labels)
    G.add_edges_from((labels[i], labels[j]) for i, j in g.edges())
    return G


def export(g: MetallicCube, fmt: str) -> bytes:
    """Serialize as dot, json or edgelist; output depends only on (a, n)"""
    if fmt not in EXPORT_FORMATS:
        raise UnknownFormatError(f"unknown format {fmt!r}, expected one of {EXPORT_FORMATS}")

    if fmt == 'json':
        payload = {
            'a': g.a,
            'n': g.n,
            'vertices': [g.label(i) for i in range(g.order)],
            'edges': [[i, j] for i, j in g.edges()],
        }
        return (json.dumps(payload) + '\n').encode('utf-8')

    G = to_networkx(g)
    if fmt == 'edgelist':
        lines = list(nx.generate_edgelist(G, data=False))
        return ''.join(line + '\n' for line in lines).encode('utf-8')

    dot = nx.nx_pydot.to_pydot(G)
    return dot.to_string().encode('utf-8')
