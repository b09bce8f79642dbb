"""
Closed-form enumeration for metallic cubes
Vertex counts, edge counts, degree distributions (pair scan, closed form,
generating function) and the Fibonacci identity. Exact integers only.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import TYPE_CHECKING, Dict, List, Tuple

import pandas as pd

from metallic_cubes.errors import InvalidAlphabetError, UnsupportedParametersError

if TYPE_CHECKING:
    from metallic_cubes.graph import MetallicCube

logger = logging.getLogger(__name__)

METHODS = ('brute', 'closed', 'gf')


def _check(a: int, n: int) -> None:
    if not isinstance(a, int) or a < 1:
        raise InvalidAlphabetError(f"alphabet size must be >= 1, got {a!r}")
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")


def binomial(n: int, k: int) -> int:
    """C(n, k), zero whenever an argument is out of range"""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def fibonacci(k: int) -> int:
    """F_0 = 0, F_1 = F_2 = 1"""
    if k < 0:
        raise ValueError("Fibonacci index must be >= 0")
    previous, current = 0, 1
    for _ in range(k):
        previous, current = current, previous + current
    return previous


@lru_cache(maxsize=None)
def vertex_count(a: int, n: int) -> int:
    """s^a_n from s_0 = 1, s_1 = a, s_n = a*s_{n-1} + s_{n-2}"""
    _check(a, n)
    previous, current = 1, a
    if n == 0:
        return 1
    for _ in range(n - 1):
        previous, current = current, a * current + previous
    return current


def vertex_count_closed(a: int, n: int) -> int:
    _check(a, n)
    return sum(binomial(n - k, k) * a ** (n - 2 * k) for k in range(n // 2 + 1))


def edge_count_polynomial(n: int) -> List[int]:
    """Coefficients c_0..c_n with e^a_n = sum c_k a^k"""
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    coefficients = []
    for k in range(n + 1):
        sign = -1 if (n + k) % 2 else 1
        half_up = (n + k + 1) // 2
        coefficients.append(sign * half_up * binomial((n + k) // 2, k))
    return coefficients


def evaluate_polynomial(coefficients: List[int], x: int) -> int:
    result = 0
    for c in reversed(coefficients):
        result = result * x + c
    return result


def format_polynomial(coefficients: List[int], variable: str = 'a') -> str:
    terms = []
    for k in range(len(coefficients) - 1, -1, -1):
        c = coefficients[k]
        if c == 0:
            continue
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            power = variable if k == 1 else f"{variable}^{k}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+{body}" if c > 0 else f"-{body}")
    return ''.join(terms) or '0'


def edge_count_formula(a: int, n: int) -> int:
    _check(a, n)
    return evaluate_polynomial(edge_count_polynomial(n), a)


def edge_count_recurrence(a: int, n: int) -> int:
    """e_n = a*e_{n-1} + e_{n-2} + s_n - s_{n-1}, e_0 = 0, e_1 = a - 1"""
    _check(a, n)
    if n == 0:
        return 0
    previous, current = 0, a - 1
    for m in range(2, n + 1):
        previous, current = current, (
            a * current + previous + vertex_count(a, m) - vertex_count(a, m - 1)
        )
    return current


def fibonacci_identity_check(n: int) -> Tuple[int, int]:
    """Both sides of sum (-1)^(n+k) ceil((n+k)/2) C(floor((n+k)/2), k) = sum F_k F_(n-k)"""
    if n < 0:
        raise ValueError("n must be >= 0")
    lhs = sum(edge_count_polynomial(n))
    rhs = sum(fibonacci(k) * fibonacci(n - k) for k in range(n + 1))
    return lhs, rhs


@dataclass
class DegreeTable:
    """Number of vertices of each degree in Π^a_n"""
    a: int
    n: int
    counts: Dict[int, int] = field(default_factory=dict)
    method: str = 'brute'

    def total(self) -> int:
        return sum(self.counts.values())

    def weighted_total(self) -> int:
        return sum(degree * count for degree, count in self.counts.items())

    def row(self, max_degree: int, min_degree: int = 0) -> List[int]:
        return [self.counts.get(k, 0) for k in range(min_degree, max_degree + 1)]

    def same_counts(self, other: 'DegreeTable') -> bool:
        return (self.a, self.n) == (other.a, other.n) and self.counts == other.counts

    def to_dict(self) -> Dict:
        return {
            'a': self.a,
            'n': self.n,
            'method': self.method,
            'counts': {str(k): v for k, v in sorted(self.counts.items())},
        }


@dataclass
class SeriesTable:
    """Coefficient rows c[n][k] of a bivariate series, truncated at n_max"""
    a: int
    coefficients: List[List[int]]

    @property
    def n_max(self) -> int:
        return len(self.coefficients) - 1

    def row(self, n: int) -> Dict[int, int]:
        return {k: c for k, c in enumerate(self.coefficients[n]) if c}


def degree_distribution_brute(g: 'MetallicCube') -> DegreeTable:
    tally = Counter(len(neighbors) for neighbors in g.adjacency)
    return DegreeTable(g.a, g.n, dict(sorted(tally.items())), 'brute')


def _check_block_counts(a: int, n: int, l: int, h: int, k: int) -> None:
    _check(a, n)
    if a < 2:
        raise UnsupportedParametersError("q/p counts need a >= 2")
    if min(l, h, k) < 0 or 2 * h + 2 * l + k > n:
        raise UnsupportedParametersError(
            f"block counts l={l}, h={h}, k={k} do not fit in length {n}"
        )


def q_value(a: int, n: int, l: int, h: int, k: int) -> int:
    """Arrangements of l 0a-blocks, h 0(a-1)-blocks and k free letters 0/(a-1)

    Free letters are filled independently, so a vertex whose free letters form
    j extra 0(a-1) pairs is counted C(h+j, j) times.
    """
    _check_block_counts(a, n, l, h, k)
    rest = n - 2 * h - 2 * l - k
    return (
        binomial(n - h - l, h)
        * binomial(n - 2 * h - l, l)
        * binomial(n - 2 * h - 2 * l, k)
        * 2 ** k
        * (a - 2) ** rest
    )


def p_value(a: int, n: int, l: int, h: int, k: int) -> int:
    """Vertices with exactly l 0a-blocks, h 0(a-1)-blocks and k free letters"""
    _check_block_counts(a, n, l, h, k)
    total = 0
    for j in range(k // 2 + 1):
        sign = -1 if j % 2 else 1
        total += sign * binomial(h + j, j) * q_value(a, n, l, h + j, k - 2 * j)
    return total


def degree_distribution_closed(a: int, n: int) -> DegreeTable:
    """Degree 2n - 3l - h - k summed over all feasible block counts"""
    _check(a, n)
    if a == 1:
        raise UnsupportedParametersError(
            "no closed degree distribution for a = 1; use the brute table"
        )
    counts: Counter = Counter()
    for l in range(n // 2 + 1):
        for h in range((n - 2 * l) // 2 + 1):
            for k in range(n - 2 * l - 2 * h + 1):
                value = p_value(a, n, l, h, k)
                if value:
                    counts[2 * n - 3 * l - h - k] += value
    return DegreeTable(a, n, dict(sorted(counts.items())), 'closed')


def _poly_mul(p: List[int], q: List[int]) -> List[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _poly_add(p: List[int], q: List[int]) -> List[int]:
    out = [0] * max(len(p), len(q))
    for i, x in enumerate(p):
        out[i] += x
    for i, y in enumerate(q):
        out[i] += y
    return out


def degree_gf(a: int, n_max: int) -> SeriesTable:
    """Rows of 1 / (1 - (2y + (a-2)y^2)x - (y - y^2 + y^3)x^2)"""
    _check(a, n_max)
    if a < 2:
        raise UnsupportedParametersError("the degree generating function needs a >= 2")
    first = [0, 2, a - 2]
    second = [0, 1, -1, 1]
    rows: List[List[int]] = [[1]]
    for n in range(1, n_max + 1):
        row = _poly_mul(first, rows[n - 1])
        if n >= 2:
            row = _poly_add(row, _poly_mul(second, rows[n - 2]))
        while len(row) > 1 and row[-1] == 0:
            row.pop()
        rows.append(row)
    return SeriesTable(a, rows)


def degree_distribution_gf(a: int, n: int) -> DegreeTable:
    series = degree_gf(a, n)
    return DegreeTable(a, n, dict(sorted(series.row(n).items())), 'gf')


def vertices_table(max_a: int, max_n: int) -> pd.DataFrame:
    """s^a_n with one row per a and one column per n"""
    records = []
    for a in range(1, max_a + 1):
        record = {'a': a}
        for n in range(1, max_n + 1):
            record[str(n)] = vertex_count(a, n)
        records.append(record)
    return pd.DataFrame.from_records(records)


def edges_table(max_a: int, max_n: int) -> pd.DataFrame:
    """e^a_n as coefficient rows in a plus the evaluated values"""
    records = []
    for n in range(1, max_n + 1):
        coefficients = edge_count_polynomial(n)
        record = {'n': n, 'polynomial': format_polynomial(coefficients)}
        for k in range(max_n + 1):
            record[f"c{k}"] = coefficients[k] if k < len(coefficients) else 0
        for a in range(1, max_a + 1):
            record[f"a={a}"] = edge_count_formula(a, n)
        records.append(record)
    return pd.DataFrame.from_records(records)


def degrees_table(max_a: int, max_n: int) -> pd.DataFrame:
    """Δ_{n,k} rows; a >= 2 from the generating function, a = 1 by pair scan"""
    from metallic_cubes.graph import build

    records = []
    for a in range(1, max_a + 1):
        for n in range(1, max_n + 1):
            if a == 1:
                table = degree_distribution_brute(build(1, n))
            else:
                table = degree_distribution_gf(a, n)
            record = {'a': a, 'n': n}
            for k in range(1, 2 * max_n + 1):
                record[str(k)] = table.counts.get(k, 0)
            records.append(record)
    return pd.DataFrame.from_records(records)
