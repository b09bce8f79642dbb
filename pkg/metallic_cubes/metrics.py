"""
Eccentricities, radius, diameter, center and periphery of metallic cubes
Each quantity comes as a closed form, a membership predicate and a BFS oracle.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
from scipy.sparse.csgraph import shortest_path

from metallic_cubes.config import BFS_CHUNK_SIZE, CAPS
from metallic_cubes.errors import CapExceededError, InconsistencyError
from metallic_cubes.graph import MetallicCube, distance_dtype, hbar
from metallic_cubes.strings import MetallicString, Word, check_alphabet, to_text

logger = logging.getLogger(__name__)


@dataclass
class MetricReport:
    a: int
    n: int
    eccentricities: np.ndarray
    radius: int
    diameter: int
    center: Tuple[MetallicString, ...]
    periphery: Tuple[MetallicString, ...]
    formula_radius: int
    formula_diameter: int
    center_predicate_set: Tuple[MetallicString, ...]
    periphery_formula_set: Tuple[MetallicString, ...]
    verdicts: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self, check: bool = True) -> Dict:
        report = {
            'a': self.a,
            'n': self.n,
            'radius': self.radius,
            'diameter': self.diameter,
            'center': [to_text(v) for v in self.center],
            'periphery': [to_text(v) for v in self.periphery],
            'eccentricities': [int(e) for e in self.eccentricities],
        }
        if check:
            report.update({
                'formula_radius': self.formula_radius,
                'formula_diameter': self.formula_diameter,
                'center_predicate_set': [to_text(v) for v in self.center_predicate_set],
                'periphery_formula_set': [to_text(v) for v in self.periphery_formula_set],
                'verdicts': dict(self.verdicts),
            })
        return report


def eccentricities(g: MetallicCube, cap: int = None) -> np.ndarray:
    """BFS from every vertex, BFS_CHUNK_SIZE sources at a time"""
    cap = CAPS['all_pairs'] if cap is None else cap
    if g.order > cap:
        raise CapExceededError(f"all-pairs BFS on Π^{g.a}_{g.n}", g.order, cap)

    matrix = g.csr()
    ecc = np.zeros(g.order, dtype=distance_dtype(g))
    for start in range(0, g.order, BFS_CHUNK_SIZE):
        sources = np.arange(start, min(start + BFS_CHUNK_SIZE, g.order))
        dist = shortest_path(matrix, directed=False, unweighted=True, indices=sources)
        if np.isinf(dist).any():
            raise InconsistencyError(f"Π^{g.a}_{g.n} is disconnected")
        ecc[sources] = dist.max(axis=1)
    logger.debug(f"Eccentricities of Π^{g.a}_{g.n} computed for {g.order} sources")
    return ecc


def radius_formula(a: int, n: int) -> int:
    check_alphabet(a)
    return (a // 2) * ((n + 1) // 2) + ((a + 1) // 2) * (n // 2)


def diameter_formula(a: int, n: int) -> int:
    check_alphabet(a)
    if n == 0:
        return 0
    return a * n - 1


def periphery_formula(a: int, n: int) -> Tuple[MetallicString, ...]:
    """The two ends of a diameter; they coincide only for (a, n) = (1, 1)"""
    check_alphabet(a)
    if n == 0:
        return (MetallicString((), a),)
    if n % 2 == 0:
        first = (0, a) * (n // 2)
        second = (a - 1,) + (0, a) * ((n - 2) // 2) + (0,)
    else:
        first = (0, a) * ((n - 1) // 2) + (0,)
        second = (a - 1,) + (0, a) * ((n - 1) // 2)
    return tuple(sorted({MetallicString(first, a), MetallicString(second, a)}))


def center_membership(a: int, n: int, v: MetallicString) -> bool:
    eps = a // 2
    letters = v.letters
    if a % 2 == 1 and n % 2 == 1:
        return all(x == eps for x in letters)

    if a % 2 == 1:
        off = [(p, x) for p, x in enumerate(letters, start=1) if x != eps]
        if not off:
            return True
        if len(off) > 1:
            return False
        p, x = off[0]
        return (x == eps + 1 and p % 2 == 0) or (x == eps - 1 and p % 2 == 1)

    # (ε-1)^i ε^(n-i)
    seen_eps = False
    for x in letters:
        if x == eps:
            seen_eps = True
        elif x != eps - 1 or seen_eps:
            return False
    return True


def center_size_formula(a: int, n: int) -> int:
    check_alphabet(a)
    if a % 2 == 0:
        return n + 1
    if n % 2 == 1:
        return 1
    # a = 1 has no letter below ε, so only the even-position raises remain
    return n + 1 if a >= 3 else n // 2 + 1


def eccentricity(v: MetallicString) -> int:
    """e(v) as the largest modified Hamming distance to a valid word"""
    return hbar(v, _farthest_by_scan(v))


def _farthest_by_scan(v: MetallicString) -> MetallicString:
    """Lexicographically least maximizer of h̄(v, ·); letters 0, a-1 and a suffice"""
    a, letters = v.a, v.letters
    n = len(letters)
    candidates = sorted({0, a - 1, a})

    # best[i][z]: largest gain from positions i.. when position i-1 holds a 0 (z = 1)
    best = [[0, 0] for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        for z in (0, 1):
            best[i][z] = max(
                abs(letters[i] - y) + best[i + 1][int(y == 0)]
                for y in candidates
                if y < a or (z and i > 0)
            )

    out: List[int] = []
    z = 0
    for i in range(n):
        target = best[i][z]
        for y in candidates:
            if y == a and not (z and i > 0):
                continue
            if abs(letters[i] - y) + best[i + 1][int(y == 0)] == target:
                out.append(y)
                z = int(y == 0)
                break
    return MetallicString(tuple(out), a)


def remark_rewrite(v: MetallicString) -> MetallicString:
    """Letters above ⌊a/2⌋ drop to 0, the rest climb to a-1, or to a after a 0"""
    a = v.a
    eps = a // 2
    out: List[int] = []
    for x in v.letters:
        after_zero = bool(out) and out[-1] == 0
        if x > eps:
            out.append(0)
        elif x < eps:
            out.append(a if after_zero else a - 1)
        else:
            out.append(a if after_zero else 0)
    return MetallicString(tuple(out), a)


def farthest_vertex(v: MetallicString) -> MetallicString:
    rewritten = remark_rewrite(v)
    exact = _farthest_by_scan(v)
    if hbar(v, rewritten) == hbar(v, exact):
        return rewritten
    logger.debug(f"Rewrite of {v} is not farthest; using {exact}")
    return exact


def metric_report(g: MetallicCube, cap: int = None) -> MetricReport:
    a, n = g.a, g.n
    ecc = eccentricities(g, cap)
    radius, diameter = int(ecc.min()), int(ecc.max())
    center = tuple(g.vertices[i] for i in np.flatnonzero(ecc == radius))
    periphery = tuple(g.vertices[i] for i in np.flatnonzero(ecc == diameter))
    predicate_set = tuple(v for v in g.vertices if center_membership(a, n, v))

    report = MetricReport(
        a=a,
        n=n,
        eccentricities=ecc,
        radius=radius,
        diameter=diameter,
        center=center,
        periphery=periphery,
        formula_radius=radius_formula(a, n),
        formula_diameter=diameter_formula(a, n),
        center_predicate_set=predicate_set,
        periphery_formula_set=periphery_formula(a, n),
    )
    eps_hat = g.index_of((a // 2,) * n)
    report.verdicts = {
        'radius': radius == report.formula_radius,
        'diameter': diameter == report.formula_diameter,
        'center': center == predicate_set,
        'center_size': len(center) == center_size_formula(a, n),
        'periphery': periphery == report.periphery_formula_set,
        'eps_hat_central': int(ecc[eps_hat]) == radius,
        'bounds': radius <= diameter <= 2 * radius,
    }
    logger.info(f"Metrics of Π^{a}_{n}: radius {radius}, diameter {diameter}, |Z| = {len(center)}")
    return report
