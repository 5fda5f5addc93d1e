"""Perfect codes in hypercubes, Fibonacci/Lucas cubes, and their circular generalizations."""

from .limits import ResourceLimitError
from .words import (
    BitWord,
    Family,
    FIBONACCI,
    HYPERCUBE,
    LUCAS,
    MAX_LENGTH,
    circulation,
    count_weight_level,
    enumerate_family,
    gen_fibonacci,
    gen_lucas,
    has_circular_ones_run,
    has_ones_run,
    is_fibonacci,
    is_lucas,
    is_member,
    iter_family_bits,
    parse_family,
)
from .graphs import (
    InducedGraph,
    VertexSet,
    build_graph,
    closed_neighborhood,
    hamming_distance,
)
from .codes import (
    CodeSet,
    SearchOutcome,
    count_perfect_codes_dfs,
    enumerate_perfect_codes_naive,
    find_perfect_code,
    is_code,
    is_dominating,
    is_perfect_code,
    search_constrained,
)
from .hamming import HammingCode, build_hamming, construct_gen_lucas_code
from .claims import CLAIM_IDS, ClaimReport, run_all, run_claim

__version__ = "0.1.0"

__all__ = [
    "BitWord",
    "CLAIM_IDS",
    "ClaimReport",
    "CodeSet",
    "FIBONACCI",
    "Family",
    "HYPERCUBE",
    "HammingCode",
    "InducedGraph",
    "LUCAS",
    "MAX_LENGTH",
    "ResourceLimitError",
    "SearchOutcome",
    "VertexSet",
    "build_graph",
    "build_hamming",
    "circulation",
    "closed_neighborhood",
    "construct_gen_lucas_code",
    "count_perfect_codes_dfs",
    "count_weight_level",
    "enumerate_family",
    "enumerate_perfect_codes_naive",
    "find_perfect_code",
    "gen_fibonacci",
    "gen_lucas",
    "hamming_distance",
    "has_circular_ones_run",
    "has_ones_run",
    "is_code",
    "is_dominating",
    "is_fibonacci",
    "is_lucas",
    "is_member",
    "is_perfect_code",
    "iter_family_bits",
    "parse_family",
    "run_all",
    "run_claim",
    "search_constrained",
]
