"""
Structure of metallic cubes
Canonical and grid decompositions, the quotient onto the Fibonacci cube,
the σ-embedding into a Fibonacci cube and medians.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from metallic_cubes.config import CAPS, EXHAUSTIVE_LIMITS
from metallic_cubes.counting import fibonacci, vertex_count
from metallic_cubes.errors import (
    CapExceededError,
    InconsistencyError,
    UnsupportedParametersError,
)
from metallic_cubes.graph import MetallicCube, VertexRef, bfs_distances, build
from metallic_cubes.strings import (
    MetallicString,
    Word,
    check_alphabet,
    iter_words,
    primitive_blocks,
    to_text,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinaryString:
    bits: Tuple[int, ...]
    fibonacci_valid: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'bits', tuple(self.bits))
        valid = all(not (x and y) for x, y in zip(self.bits, self.bits[1:]))
        object.__setattr__(self, 'fibonacci_valid', valid)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return ''.join(str(b) for b in self.bits) or '-'

    def as_int(self) -> int:
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value


@dataclass
class CanonicalDecomposition:
    """Parts keyed by the leading primitive block: (j,) for j < a and (0, a)"""
    a: int
    n: int
    prefix_parts: Dict[Word, Tuple[int, ...]]
    sizes_ok: bool = False
    isomorphic: bool = False
    cross_edges: int = 0
    cross_edges_ok: bool = False
    verified: bool = False

    @property
    def valid(self) -> bool:
        return self.sizes_ok and self.cross_edges_ok and (self.isomorphic or not self.verified)

    def to_dict(self) -> Dict:
        return {
            'kind': 'canonical',
            'a': self.a,
            'n': self.n,
            'parts': {
                to_text(MetallicString(key, self.a)): len(part)
                for key, part in self.prefix_parts.items()
            },
            'cross_edges': self.cross_edges,
            'verdicts': {
                'sizes': self.sizes_ok,
                'cross_edges': self.cross_edges_ok,
                'isomorphic': self.isomorphic if self.verified else None,
            },
        }


@dataclass
class GridDecomposition:
    """Classes keyed by the 0-indexed start positions of the 0a blocks"""
    a: int
    n: int
    classes: Dict[Tuple[int, ...], Tuple[int, ...]]
    sizes_ok: bool = False
    grids_ok: bool = False
    verified: bool = False

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def sizes(self) -> List[int]:
        return sorted((len(c) for c in self.classes.values()), reverse=True)

    @property
    def valid(self) -> bool:
        return (
            self.sizes_ok
            and self.class_count == fibonacci(self.n + 1)
            and (self.grids_ok or not self.verified)
        )

    def to_dict(self) -> Dict:
        return {
            'kind': 'grid',
            'a': self.a,
            'n': self.n,
            'classes': {
                ','.join(str(p) for p in key) or '-': len(members)
                for key, members in self.classes.items()
            },
            'class_count': self.class_count,
            'verdicts': {
                'sizes': self.sizes_ok,
                'class_count': self.class_count == fibonacci(self.n + 1),
                'grids': self.grids_ok if self.verified else None,
            },
        }


@dataclass(frozen=True)
class FibonacciCube:
    """Γ_m: binary strings without 11, Hamming-distance-1 edges"""
    m: int
    vertices: Tuple[BinaryString, ...]
    adjacency: Tuple[Tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j]


@dataclass
class QuotientGraph:
    """Π^a_n / ρ together with its map onto Γ_{n-1}"""
    a: int
    n: int
    vertices: Tuple[BinaryString, ...]
    edges: List[Tuple[int, int]]
    isomorphism: Dict[int, int]
    isomorphic: bool

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass
class EmbeddingReport:
    a: int
    n: int
    injective: bool
    fibonacci_valid: bool
    faithful: bool
    first_violation: Optional[str] = None

    @property
    def valid(self) -> bool:
        return self.injective and self.fibonacci_valid and self.faithful


def canonical_decomposition(g: MetallicCube, verify: bool = True) -> CanonicalDecomposition:
    """a copies of Π^a_{n-1} and one Π^a_{n-2}, split by the first primitive block"""
    a, n = g.a, g.n
    if n < 2:
        raise UnsupportedParametersError(f"canonical decomposition needs n >= 2, got {n}")

    keys = [(j,) for j in range(a)] + [(0, a)]
    members: Dict[Word, List[int]] = {key: [] for key in keys}
    part_of = []
    for i in range(g.order):
        w = g.word(i)
        key = (0, a) if w[:2] == (0, a) else (w[0],)
        members[key].append(i)
        part_of.append(key)

    result = CanonicalDecomposition(a, n, {k: tuple(v) for k, v in members.items()})
    result.sizes_ok = all(
        len(members[key]) == vertex_count(a, n - len(key)) for key in keys
    )
    result.cross_edges = sum(1 for i, j in g.edges() if part_of[i] != part_of[j])
    result.cross_edges_ok = result.cross_edges == vertex_count(a, n) - vertex_count(a, n - 1)

    if verify:
        result.verified = True
        result.isomorphic = all(
            _suffix_map_is_isomorphism(g, key, members[key], part_of) for key in keys
        )
    logger.info(
        f"Canonical decomposition of Π^{a}_{n}: sizes_ok={result.sizes_ok}, "
        f"cross edges={result.cross_edges}"
    )
    return result


def _suffix_map_is_isomorphism(g: MetallicCube, key: Word, part: List[int], part_of) -> bool:
    smaller = build(g.a, g.n - len(key))
    image = {}
    for i in part:
        j = smaller.index_of(g.word(i)[len(key):])
        image[i] = j
    if len(set(image.values())) != smaller.order or len(image) != smaller.order:
        return False
    inner = {
        (min(image[i], image[j]), max(image[i], image[j]))
        for i, j in g.edges()
        if part_of[i] == key and part_of[j] == key
    }
    return inner == set(smaller.edges())


def grid_decomposition(g: MetallicCube, verify: bool = True) -> GridDecomposition:
    a, n = g.a, g.n
    members: Dict[Tuple[int, ...], List[int]] = {}
    class_of = []
    for i, v in enumerate(g.vertices):
        key = primitive_blocks(v).block_positions()
        members.setdefault(key, []).append(i)
        class_of.append(key)

    result = GridDecomposition(a, n, {k: tuple(v) for k, v in sorted(members.items())})
    result.sizes_ok = all(
        len(part) == a ** (n - 2 * len(key)) for key, part in members.items()
    )
    if verify:
        result.verified = True
        result.grids_ok = all(
            _is_grid_class(g, key, part, class_of) for key, part in members.items()
        )
    logger.info(f"Grid decomposition of Π^{a}_{n}: {result.class_count} classes")
    return result


def _is_grid_class(g: MetallicCube, key, part: List[int], class_of) -> bool:
    """Coordinate map onto {0..a-1}^(n-2k) is a bijection and an isomorphism"""
    a = g.a
    covered = set()
    for p in key:
        covered.update((p, p + 1))
    free = [p for p in range(g.n) if p not in covered]

    coords = {i: tuple(g.word(i)[p] for p in free) for i in part}
    if len(set(coords.values())) != a ** len(free):
        return False
    if any(c >= a for point in coords.values() for c in point):
        return False

    for i in part:
        point = coords[i]
        expected = sum((c > 0) + (c < a - 1) for c in point)
        inside = [j for j in g.adjacency[i] if class_of[j] == key]
        if len(inside) != expected:
            return False
        for j in inside:
            if sum(abs(x - y) for x, y in zip(point, coords[j])) != 1:
                return False
    return True


def rho_project(w: MetallicString) -> BinaryString:
    """Letter a becomes 1, every other letter 0"""
    return BinaryString(tuple(1 if x == w.a else 0 for x in w.letters))


def fibonacci_words(m: int):
    if m < 0:
        raise ValueError(f"length must be >= 0, got {m}")
    bits = [0] * m

    def extend(i: int):
        if i == m:
            yield tuple(bits)
            return
        for b in (0, 1):
            if b == 1 and i > 0 and bits[i - 1] == 1:
                continue
            bits[i] = b
            yield from extend(i + 1)

    yield from extend(0)


def build_fibonacci_cube(m: int, cap: int = None) -> FibonacciCube:
    cap = CAPS['vertices'] if cap is None else cap
    size = fibonacci(m + 2)
    if size > cap:
        raise CapExceededError(f"Γ_{m}", size, cap)

    words = list(fibonacci_words(m))
    index = {w: i for i, w in enumerate(words)}
    adjacency = []
    for w in words:
        found = []
        for p in range(m):
            flipped = w[:p] + (1 - w[p],) + w[p + 1:]
            j = index.get(flipped)
            if j is not None:
                found.append(j)
        adjacency.append(tuple(sorted(found)))
    return FibonacciCube(m, tuple(BinaryString(w) for w in words), tuple(adjacency))


def quotient_graph(g: MetallicCube) -> QuotientGraph:
    """Collapse grid classes by ρ and match the result against Γ_{n-1}"""
    if g.n < 1:
        raise UnsupportedParametersError("quotient graph needs n >= 1")

    images = [rho_project(v) for v in g.vertices]
    classes = sorted(set(img.bits for img in images))
    class_index = {bits: k for k, bits in enumerate(classes)}
    edges = set()
    for i, j in g.edges():
        ci, cj = class_index[images[i].bits], class_index[images[j].bits]
        if ci != cj:
            edges.add((min(ci, cj), max(ci, cj)))

    gamma = build_fibonacci_cube(g.n - 1)
    gamma_index = {v.bits: k for k, v in enumerate(gamma.vertices)}
    # the first letter is never a, so its bit is always 0
    isomorphism = {}
    for k, bits in enumerate(classes):
        target = gamma_index.get(bits[1:]) if bits[0] == 0 else None
        if target is not None:
            isomorphism[k] = target

    isomorphic = len(isomorphism) == len(classes) == gamma.order
    if isomorphic:
        mapped = {
            (min(isomorphism[i], isomorphism[j]), max(isomorphism[i], isomorphism[j]))
            for i, j in edges
        }
        isomorphic = mapped == set(gamma.edges())

    logger.info(
        f"Quotient of Π^{g.a}_{g.n}: {len(classes)} classes, {len(edges)} edges, "
        f"isomorphic to Γ_{g.n - 1}: {isomorphic}"
    )
    return QuotientGraph(
        g.a, g.n, tuple(BinaryString(b) for b in classes), sorted(edges), isomorphism, isomorphic
    )


@lru_cache(maxsize=None)
def sigma_blocks(a: int) -> Dict[Word, Tuple[int, ...]]:
    """Images of the primitive blocks 0..a-1 and 0a"""
    if a < 2:
        raise UnsupportedParametersError("σ is only defined for a >= 2")
    if a == 2:
        return {(0,): (0, 0, 1), (1,): (0, 0, 0), (0, 2): (0, 0, 1, 0, 1, 0)}
    table = {}
    for j in range(a):
        table[(j,)] = (0, 0) * j + (0, 1) * (a - 1 - j)
    table[(0, a)] = table[(0,)] + (0, 0, 1) + (0,) * (2 * a - 5)
    return table


def sigma_embed(w: MetallicString) -> BinaryString:
    table = sigma_blocks(w.a)
    bits: List[int] = []
    for block in primitive_blocks(w).blocks:
        bits.extend(table[block])
    return BinaryString(tuple(bits))


def _image_code(a: int, letters: Word) -> int:
    """σ-image as an int; for a = 1 the word already is a Fibonacci string"""
    if a == 1:
        value = 0
        for x in letters:
            value = (value << 1) | x
        return value
    return sigma_embed(MetallicString(letters, a)).as_int()


@lru_cache(maxsize=8)
def _preimages(a: int, n: int) -> Dict[int, int]:
    return {_image_code(a, w): i for i, w in enumerate(iter_words(a, n))}


def sigma_is_induced_embedding(a: int, n: int, cap: int = None) -> EmbeddingReport:
    """σ is injective, lands in Fibonacci strings and keeps exactly the edges"""
    cap = EXHAUSTIVE_LIMITS['sigma_vertices'] if cap is None else cap
    g = build(a, n)
    if g.order > cap:
        raise CapExceededError(f"σ pair check on Π^{a}_{n}", g.order, cap)

    images = [sigma_embed(v) for v in g.vertices]
    report = EmbeddingReport(a, n, True, True, True)

    codes = [img.as_int() for img in images]
    if len(set(codes)) != len(codes):
        report.injective = False
        report.first_violation = "two vertices share a σ-image"
    bad = next((i for i, img in enumerate(images) if not img.fibonacci_valid), None)
    if bad is not None:
        report.fibonacci_valid = False
        report.first_violation = report.first_violation or f"σ({g.label(bad)}) contains 11"

    edges = set(g.edges())
    for i in range(g.order):
        for j in range(i + 1, g.order):
            diff = codes[i] ^ codes[j]
            hamming_one = diff != 0 and diff & (diff - 1) == 0
            if hamming_one != ((i, j) in edges):
                report.faithful = False
                report.first_violation = report.first_violation or (
                    f"{g.label(i)} / {g.label(j)}: adjacent={(i, j) in edges}, "
                    f"Hamming-1={hamming_one}"
                )
                break
        if not report.faithful:
            break

    logger.info(f"σ on Π^{a}_{n}: induced embedding = {report.valid}")
    return report


def median(g: MetallicCube, u: VertexRef, v: VertexRef, w: VertexRef) -> MetallicString:
    """Bitwise majority of the σ-images, pulled back to Π^a_n"""
    x, y, z = (_image_code(g.a, g.word(g.index_of(t))) for t in (u, v, w))
    majority = (x & y) | (y & z) | (x & z)
    preimage = _preimages(g.a, g.n).get(majority)
    if preimage is None:
        raise InconsistencyError(
            f"majority of σ-images of {u}, {v}, {w} is not a σ-image in Π^{g.a}_{g.n}"
        )
    return g.vertices[preimage]


def brute_median(g: MetallicCube, u: VertexRef, v: VertexRef, w: VertexRef) -> List[MetallicString]:
    """Every vertex on a shortest path between each pair of u, v, w"""
    iu, iv, iw = g.index_of(u), g.index_of(v), g.index_of(w)
    du = bfs_distances(g, iu).astype(np.int64)
    dv = bfs_distances(g, iv).astype(np.int64)
    dw = bfs_distances(g, iw).astype(np.int64)
    hits = np.flatnonzero(
        (du + dv == du[iv]) & (dv + dw == dv[iw]) & (du + dw == du[iw])
    )
    return [g.vertices[i] for i in hits]


def _pell_words(n: int):
    if n == 0:
        yield ()
        return
    for head in ((0,), (1,), (2, 2)):
        if len(head) <= n:
            for tail in _pell_words(n - len(head)):
                yield head + tail


def pell_degree_comparison(n: int) -> Tuple[int, int]:
    """(max degree of the Pell graph on length-n words, max degree of Π^2_n)"""
    if n < 1:
        raise ValueError("n must be >= 1")
    words = set(_pell_words(n))
    pell_max = 0
    for w in words:
        neighbors = set()
        for p, x in enumerate(w):
            if x in (0, 1):
                neighbors.add(w[:p] + (1 - x,) + w[p + 1:])
        for p in range(n - 1):
            pair = w[p:p + 2]
            if pair == (1, 1):
                neighbors.add(w[:p] + (2, 2) + w[p + 2:])
            elif pair == (2, 2):
                neighbors.add(w[:p] + (1, 1) + w[p + 2:])
        pell_max = max(pell_max, len(neighbors & words))

    metallic_max = max(len(nb) for nb in build(2, n).adjacency)
    return pell_max, metallic_max
