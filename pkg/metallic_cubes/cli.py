"""
Command-line interface
Data goes to standard output, diagnostics to standard error.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple

from metallic_cubes.config import CAPS, DEFAULT_RANGES, EXPORT_FORMATS, LOGGING, SAMPLING, TABLE_KINDS
from metallic_cubes.counting import (
    degree_distribution_brute,
    degree_distribution_closed,
    degree_distribution_gf,
    degrees_table,
    edges_table,
    vertices_table,
)
from metallic_cubes.errors import (
    CapExceededError,
    ConstructionError,
    InconsistencyError,
    MetallicCubeError,
)
from metallic_cubes.graph import build, export
from metallic_cubes.hamilton import PathWitness, hamiltonian_cycle, hamiltonian_path, validate_witness
from metallic_cubes.metrics import metric_report
from metallic_cubes.pipeline import run_verification
from metallic_cubes.strings import parse_text
from metallic_cubes.structure import (
    canonical_decomposition,
    grid_decomposition,
    quotient_graph,
    sigma_embed,
    sigma_is_induced_embedding,
)

logger = logging.getLogger(__name__)

COMMANDS = ['generate', 'tables', 'degrees', 'metrics', 'decompose', 'embed', 'hamilton', 'verify']

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


@dataclass
class RunConfig:
    command: str
    a: int = 2
    n: int = 3
    kind: Optional[str] = None
    format: Optional[str] = None
    max_a: Optional[int] = None
    max_n: Optional[int] = None
    vertex_cap: int = CAPS['vertices']
    all_pairs_cap: int = CAPS['all_pairs']
    seed: int = SAMPLING['seed']
    check: bool = False
    cycle: bool = False
    verify: bool = False
    validate: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.vertex_cap <= 0 or self.all_pairs_cap <= 0:
            raise ValueError("caps must be positive")
        for name in ('max_a', 'max_n'):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"--{name.replace('_', '-')} must be positive, got {value}")


def _dump(payload) -> str:
    return json.dumps(payload, indent=2) + '\n'


def _run_generate(config: RunConfig) -> Tuple[int, str]:
    g = build(config.a, config.n, cap=config.vertex_cap)
    return EXIT_OK, export(g, config.format or 'edgelist').decode('utf-8')


def _run_tables(config: RunConfig) -> Tuple[int, str]:
    kind = config.kind
    ranges = DEFAULT_RANGES[kind]
    max_a = ranges['max_a'] if config.max_a is None else config.max_a
    max_n = ranges['max_n'] if config.max_n is None else config.max_n
    builders = {'vertices': vertices_table, 'edges': edges_table, 'degrees': degrees_table}
    frame = builders[kind](max_a, max_n)
    return EXIT_OK, frame.to_csv(index=False, lineterminator='\n')


def _run_degrees(config: RunConfig) -> Tuple[int, str]:
    a, n = config.a, config.n
    g = build(a, n, cap=config.vertex_cap)
    tables = [degree_distribution_brute(g)]
    if a >= 2:
        tables += [degree_distribution_closed(a, n), degree_distribution_gf(a, n)]
    agree = all(t.same_counts(tables[0]) for t in tables)
    payload = {'a': a, 'n': n, 'routes': [t.to_dict() for t in tables], 'agree': agree}
    return (EXIT_OK if agree else EXIT_FAILED), _dump(payload)


def _run_metrics(config: RunConfig) -> Tuple[int, str]:
    g = build(config.a, config.n, cap=config.vertex_cap)
    report = metric_report(g, cap=config.all_pairs_cap)
    status = EXIT_FAILED if config.check and not report.passed else EXIT_OK
    return status, _dump(report.to_dict(check=config.check))


def _run_decompose(config: RunConfig) -> Tuple[int, str]:
    g = build(config.a, config.n, cap=config.vertex_cap)
    payload = {}
    valid = True
    if g.n >= 2:
        canonical = canonical_decomposition(g, verify=config.verify)
        payload['canonical'] = canonical.to_dict()
        valid = valid and canonical.valid
    grid = grid_decomposition(g, verify=config.verify)
    payload['grid'] = grid.to_dict()
    valid = valid and grid.valid
    if g.n >= 1:
        quotient = quotient_graph(g)
        payload['quotient'] = {
            'vertices': [str(b) for b in quotient.vertices],
            'edges': [list(e) for e in quotient.edges],
            'isomorphic': quotient.isomorphic,
        }
        valid = valid and quotient.isomorphic
    status = EXIT_FAILED if config.verify and not valid else EXIT_OK
    return status, _dump(payload)


def _run_embed(config: RunConfig) -> Tuple[int, str]:
    if config.check:
        report = sigma_is_induced_embedding(config.a, config.n)
        payload = {
            'a': report.a,
            'n': report.n,
            'injective': report.injective,
            'fibonacci_valid': report.fibonacci_valid,
            'faithful': report.faithful,
            'first_violation': report.first_violation,
        }
        return (EXIT_OK if report.valid else EXIT_FAILED), _dump(payload)
    g = build(config.a, config.n, cap=config.vertex_cap)
    lines = [f"{g.label(i)} {sigma_embed(v)}" for i, v in enumerate(g.vertices)]
    return EXIT_OK, ''.join(line + '\n' for line in lines)


def _read_witness(config: RunConfig, g) -> PathWitness:
    with open(config.validate, encoding='utf-8') as handle:
        labels = [line.strip() for line in handle if line.strip()]
    sequence = tuple(g.index_of(parse_text(label, config.a)) for label in labels)
    if not config.cycle:
        return PathWitness('path', sequence)
    if len(sequence) == g.order:
        return PathWitness('cycle', sequence)
    absent = sorted(set(range(g.order)) - set(sequence))
    return PathWitness('near_cycle', sequence, absent[0] if len(absent) == 1 else None)


def _run_hamilton(config: RunConfig) -> Tuple[int, str]:
    g = build(config.a, config.n, cap=config.vertex_cap)
    if config.validate:
        try:
            witness = _read_witness(config, g)
        except MetallicCubeError as e:
            return EXIT_FAILED, f"invalid: {e}\n"
        ok, violation = validate_witness(g, witness)
        return (EXIT_OK, "valid\n") if ok else (EXIT_FAILED, f"invalid: {violation}\n")

    if config.cycle:
        witness = hamiltonian_cycle(config.a, config.n, g)
        if witness.missed is not None:
            logger.info(f"Near cycle; missed vertex {g.label(witness.missed)}")
    else:
        witness = hamiltonian_path(config.a, config.n, g)
    return EXIT_OK, ''.join(g.label(i) + '\n' for i in witness.sequence)


def _run_verify(config: RunConfig) -> Tuple[int, str]:
    results = run_verification(
        config.a, config.n,
        vertex_cap=config.vertex_cap,
        all_pairs_cap=config.all_pairs_cap,
        seed=config.seed,
    )
    results.pop('processing_time_seconds', None)
    return (EXIT_OK if results['passed'] else EXIT_FAILED), _dump(results)


HANDLERS = {
    'generate': _run_generate,
    'tables': _run_tables,
    'degrees': _run_degrees,
    'metrics': _run_metrics,
    'decompose': _run_decompose,
    'embed': _run_embed,
    'hamilton': _run_hamilton,
    'verify': _run_verify,
}


def run(config: RunConfig) -> Tuple[int, str]:
    """Execute one command; returns (exit status, standard output text)"""
    try:
        return HANDLERS[config.command](config)
    except CapExceededError as e:
        logger.error(f"❌ {e}")
        return EXIT_CAP, ''
    except (ConstructionError, InconsistencyError) as e:
        logger.error(f"❌ {e}", exc_info=True)
        return EXIT_FAILED, ''
    except (MetallicCubeError, ValueError) as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE, ''


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--a', type=int, default=2, help="alphabet size a >= 1")
    common.add_argument('--n', type=int, default=3, help="word length n >= 0")
    common.add_argument('--vertex-cap', type=int, default=CAPS['vertices'])
    common.add_argument('--allpairs-cap', type=int, default=CAPS['all_pairs'])
    common.add_argument('--seed', type=int, default=SAMPLING['seed'])
    common.add_argument('-v', '--verbose', action='store_true')
    common.add_argument('-q', '--quiet', action='store_true')

    parser = argparse.ArgumentParser(
        prog='metallic-cubes',
        description="Metallic cubes: construction, enumeration, structure, metrics and Hamiltonicity",
    )
    sub = parser.add_subparsers(dest='command', required=True)

    generate = sub.add_parser('generate', parents=[common], help="export Π^a_n")
    generate.add_argument('--format', choices=EXPORT_FORMATS, default='edgelist')

    tables = sub.add_parser('tables', parents=[common], help="vertex, edge or degree tables as CSV")
    tables.add_argument('kind', choices=TABLE_KINDS)
    tables.add_argument('--max-a', type=int)
    tables.add_argument('--max-n', type=int)
    tables.add_argument('--format', choices=['csv'], default='csv')

    sub.add_parser('degrees', parents=[common], help="degree distribution by every route")

    metrics = sub.add_parser('metrics', parents=[common], help="eccentricity report as JSON")
    metrics.add_argument('--check', action='store_true', help="compare against the closed forms")

    decompose = sub.add_parser('decompose', parents=[common], help="canonical and grid decompositions")
    decompose.add_argument('--verify', action='store_true', help="check induced isomorphisms")

    embed = sub.add_parser('embed', parents=[common], help="σ-images in the Fibonacci cube")
    embed.add_argument('--check', action='store_true')

    hamilton = sub.add_parser('hamilton', parents=[common], help="Hamiltonian path or cycle")
    hamilton.add_argument('--cycle', action='store_true')
    hamilton.add_argument('--validate', metavar='FILE', help="check a witness, one vertex per line")

    sub.add_parser('verify', parents=[common], help="every closed form against its oracle")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        a=args.a,
        n=args.n,
        kind=getattr(args, 'kind', None),
        format=getattr(args, 'format', None),
        max_a=getattr(args, 'max_a', None),
        max_n=getattr(args, 'max_n', None),
        vertex_cap=args.vertex_cap,
        all_pairs_cap=args.allpairs_cap,
        seed=args.seed,
        check=getattr(args, 'check', False),
        cycle=getattr(args, 'cycle', False),
        verify=getattr(args, 'verify', False),
        validate=getattr(args, 'validate', None),
    )


def main(argv: List[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr, **LOGGING)

    try:
        config = config_from_args(args)
    except ValueError as e:
        parser.error(str(e))

    status, output = run(config)
    sys.stdout.write(output)
    sys.stdout.flush()
    return status
