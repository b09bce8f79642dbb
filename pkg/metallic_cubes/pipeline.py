"""
Verification pipeline
Runs every closed form of the toolkit against its brute-force oracle for one
(a, n): counts → edges → degrees → structure → embedding → metrics → Hamiltonicity
"""

import logging
from datetime import datetime
from itertools import combinations
from typing import Dict

import numpy as np

from metallic_cubes.config import CAPS, EXHAUSTIVE_LIMITS, SAMPLING
from metallic_cubes.counting import (
    degree_distribution_brute,
    degree_distribution_closed,
    degree_distribution_gf,
    edge_count_formula,
    edge_count_recurrence,
    vertex_count,
    vertex_count_closed,
)
from metallic_cubes.graph import all_pairs_edges, bipartition, build, hbar
from metallic_cubes.hamilton import hamiltonian_cycle, hamiltonian_path, matching_from_path
from metallic_cubes.metrics import farthest_vertex, metric_report
from metallic_cubes.strings import iter_words
from metallic_cubes.structure import (
    brute_median,
    canonical_decomposition,
    grid_decomposition,
    median,
    quotient_graph,
    sigma_is_induced_embedding,
)

logger = logging.getLogger(__name__)


class VerificationPipeline:
    """
    Formula-versus-oracle suite for a single metallic cube
    """

    def __init__(self, a: int, n: int, vertex_cap: int = None, all_pairs_cap: int = None, seed: int = None):
        self.a = a
        self.n = n
        self.vertex_cap = CAPS['vertices'] if vertex_cap is None else vertex_cap
        self.all_pairs_cap = CAPS['all_pairs'] if all_pairs_cap is None else all_pairs_cap
        self.seed = SAMPLING['seed'] if seed is None else seed
        self.rng = np.random.default_rng(self.seed)

        logger.info(f"🚀 Building Π^{a}_{n} for verification...")
        self.g = build(a, n, cap=self.vertex_cap)
        logger.info(f"✅ {self.g.order} vertices, {self.g.size} edges")

    def _stage_counts(self) -> Dict:
        a, n = self.a, self.n
        enumerated = sum(1 for _ in iter_words(a, n))
        values = {
            'recurrence': vertex_count(a, n),
            'closed': vertex_count_closed(a, n),
            'enumerated': enumerated,
        }
        return {'values': values, 'passed': len(set(values.values())) == 1}

    def _stage_edges(self) -> Dict:
        a, n, g = self.a, self.n, self.g
        values = {
            'formula': edge_count_formula(a, n),
            'recurrence': edge_count_recurrence(a, n),
            'built': g.size,
        }
        if g.order <= CAPS['pair_scan_oracle']:
            values['pair_scan'] = len(all_pairs_edges(g))
        return {'values': values, 'passed': len(set(values.values())) == 1}

    def _stage_degrees(self) -> Dict:
        brute = degree_distribution_brute(self.g)
        routes = {'brute': brute.counts}
        passed = brute.weighted_total() == 2 * self.g.size
        if self.a >= 2:
            closed = degree_distribution_closed(self.a, self.n)
            gf = degree_distribution_gf(self.a, self.n)
            routes['closed'] = closed.counts
            routes['gf'] = gf.counts
            passed = passed and brute.same_counts(closed) and brute.same_counts(gf)
        return {
            'routes': {name: {str(k): v for k, v in c.items()} for name, c in routes.items()},
            'passed': passed,
        }

    def _stage_bipartite(self) -> Dict:
        even, odd, proper = bipartition(self.g)
        return {'even': len(even), 'odd': len(odd), 'passed': proper}

    def _stage_structure(self) -> Dict:
        g = self.g
        result = {}
        if self.n >= 2:
            canonical = canonical_decomposition(g)
            result['canonical'] = canonical.to_dict()
        grid = grid_decomposition(g)
        result['grid'] = grid.to_dict()
        quotient = quotient_graph(g) if self.n >= 1 else None
        result['quotient_isomorphic'] = None if quotient is None else quotient.isomorphic
        result['passed'] = (
            (self.n < 2 or canonical.valid)
            and grid.valid
            and (quotient is None or quotient.isomorphic)
        )
        return result

    def _stage_embedding(self) -> Dict:
        if self.a < 2:
            return {'status': 'skipped', 'reason': 'σ is the identity for a = 1'}
        if self.g.order > EXHAUSTIVE_LIMITS['sigma_vertices']:
            logger.warning(f"⚠️  σ pair check skipped: {self.g.order} vertices")
            return {'status': 'skipped', 'reason': 'above the pair-check limit'}
        report = sigma_is_induced_embedding(self.a, self.n)
        return {
            'injective': report.injective,
            'fibonacci_valid': report.fibonacci_valid,
            'faithful': report.faithful,
            'first_violation': report.first_violation,
            'passed': report.valid,
        }

    def _stage_median(self) -> Dict:
        g = self.g
        if g.order <= EXHAUSTIVE_LIMITS['median_vertices']:
            triples = list(combinations(range(g.order), 3))
            for u, v, w in triples:
                found = brute_median(g, u, v, w)
                if len(found) != 1 or found[0] != median(g, u, v, w):
                    return {'mode': 'exhaustive', 'passed': False,
                            'first_violation': [g.label(u), g.label(v), g.label(w)]}
            return {'mode': 'exhaustive', 'triples': len(triples), 'passed': True}

        count = SAMPLING['median_triples']
        picks = self.rng.integers(0, g.order, size=(count, 3))
        for u, v, w in picks:
            m = median(g, int(u), int(v), int(w))
            x, y, z = g.vertices[u], g.vertices[v], g.vertices[w]
            on_paths = (
                hbar(x, m) + hbar(m, y) == hbar(x, y)
                and hbar(y, m) + hbar(m, z) == hbar(y, z)
                and hbar(x, m) + hbar(m, z) == hbar(x, z)
            )
            if not on_paths:
                return {'mode': 'sampled', 'passed': False,
                        'first_violation': [g.label(u), g.label(v), g.label(w)]}
        return {'mode': 'sampled', 'triples': count, 'passed': True}

    def _stage_metrics(self) -> Dict:
        g = self.g
        if g.order > self.all_pairs_cap:
            logger.warning(f"⚠️  Metric oracle skipped: {g.order} vertices above {self.all_pairs_cap}")
            return {'status': 'skipped', 'reason': 'above the all-pairs cap'}
        report = metric_report(g, cap=self.all_pairs_cap)

        if g.order <= EXHAUSTIVE_LIMITS['farthest_vertices']:
            chosen = range(g.order)
        else:
            chosen = self.rng.choice(g.order, size=SAMPLING['farthest_vertices'], replace=False)
        farthest_ok = all(
            hbar(g.vertices[i], farthest_vertex(g.vertices[i])) == int(report.eccentricities[i])
            for i in chosen
        )
        verdicts = dict(report.verdicts, farthest_vertex=farthest_ok)
        return {
            'radius': report.radius,
            'diameter': report.diameter,
            'center_size': len(report.center),
            'verdicts': verdicts,
            'passed': all(verdicts.values()),
        }

    def _stage_hamilton(self) -> Dict:
        a, n, g = self.a, self.n, self.g
        result = {}
        path = hamiltonian_path(a, n, g)
        result['path'] = path.valid
        matching = matching_from_path(a, n, g)
        covered = {v for e in matching.edges for v in e}
        result['matching_perfect'] = matching.perfect
        result['matching'] = (
            len(covered) == 2 * len(matching.edges)
            and matching.perfect == (g.order % 2 == 0)
            and all(j in g.adjacency[i] for i, j in matching.edges)
        )
        if a % 2 == 0 and n >= 2:
            cycle = hamiltonian_cycle(a, n, g)
            result['cycle_kind'] = cycle.kind
            result['cycle'] = cycle.valid and cycle.kind == ('cycle' if n % 2 else 'near_cycle')
        result['passed'] = result['path'] and result['matching'] and result.get('cycle', True)
        return result

    def run(self) -> Dict:
        """Run every stage; a failing stage is recorded and the rest still run"""
        start_time = datetime.now()
        logger.info(f"🔍 Verifying Π^{self.a}_{self.n}...")

        results = {
            'a': self.a,
            'n': self.n,
            'seed': self.seed,
            'status': 'processing',
            'stages': {},
        }
        stages = [
            ('counts', self._stage_counts),
            ('edges', self._stage_edges),
            ('degrees', self._stage_degrees),
            ('bipartite', self._stage_bipartite),
            ('structure', self._stage_structure),
            ('embedding', self._stage_embedding),
            ('median', self._stage_median),
            ('metrics', self._stage_metrics),
            ('hamilton', self._stage_hamilton),
        ]
        for name, stage in stages:
            logger.info(f"📐 Stage: {name}")
            try:
                outcome = stage()
                outcome.setdefault('status', 'completed')
            except Exception as e:
                logger.error(f"❌ Stage {name} failed: {e}", exc_info=True)
                outcome = {'status': 'failed', 'error': str(e), 'passed': False}
            results['stages'][name] = outcome
            if outcome.get('passed') is False:
                logger.warning(f"⚠️  Stage {name} did not pass")

        passed = all(s.get('passed', True) for s in results['stages'].values())
        elapsed = (datetime.now() - start_time).total_seconds()
        results.update({
            'status': 'completed',
            'passed': passed,
            'processing_time_seconds': elapsed,
        })
        logger.info(f"{'✅' if passed else '❌'} Verification finished in {elapsed:.2f}s")
        return results


def run_verification(a: int, n: int, vertex_cap: int = None, all_pairs_cap: int = None, seed: int = None) -> Dict:
    return VerificationPipeline(a, n, vertex_cap, all_pairs_cap, seed).run()
