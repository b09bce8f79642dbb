"""
Configuration for the metallic cube toolkit
"""

# Size limits
CAPS = {
    'vertices': 5_000_000,       # largest s^a_n we materialize
    'all_pairs': 25_000,         # largest |V| for BFS from every vertex
    'pair_scan_oracle': 2_000,   # largest |V| for the O(|V|^2) edge scan
}

# Randomized checks
SAMPLING = {
    'median_triples': 10_000,
    'farthest_vertices': 1_000,
    'seed': 20240101,
}

# Exhaustive checks below these sizes, sampled above
EXHAUSTIVE_LIMITS = {
    'median_vertices': 40,
    'farthest_vertices': 2_000,
    'sigma_vertices': 2_000,
}

# All-pairs BFS runs in blocks of sources
BFS_CHUNK_SIZE = 512

# Output formats
EXPORT_FORMATS = ['dot', 'json', 'edgelist']
TABLE_KINDS = ['vertices', 'edges', 'degrees']

DEFAULT_RANGES = {
    'vertices': {'max_a': 6, 'max_n': 8},
    'edges': {'max_a': 6, 'max_n': 5},
    'degrees': {'max_a': 3, 'max_n': 5},
}

# Vertices are written as digit strings up to this alphabet size
DIGIT_ALPHABET_MAX = 9
EMPTY_WORD_TEXT = '-'

LOGGING = {
    'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
    'datefmt': '%H:%M:%S',
}
