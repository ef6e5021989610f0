"""Directed hypergraph coloring toolkit.

Construct, analyze, and properly color directed hypergraphs: two-edge
forbidden-pattern checks, four constructive coloring algorithms with audited
run traces, an exact chromatic-number oracle, lower-bound tower
constructions, and the good-coloring edge bound.
"""

__version__ = "0.1.0"

from .algorithms import (
    ALGORITHM_IDS,
    HeadStar,
    InvariantViolationError,
    PreconditionError,
    RunTrace,
    TraceEvent,
    augment_i0,
    classify_head_star,
    color_head_tail_3,
    color_i0_4,
    color_i0_r4_2,
    color_one_head,
)
from .bounds import (
    GoodColoring,
    RoleConflictError,
    f_bound,
    induce_good_coloring,
    verify_good_coloring,
)
from .core import (
    BLUE,
    COLOR_NAMES,
    GREEN,
    RED,
    YELLOW,
    Coloring,
    DirectedEdge,
    DirectedHypergraph,
    ParseError,
    ValidationError,
    edge,
    is_proper,
    is_two_to_one,
    normalize,
    parse,
    parse_coloring,
    serialize,
    serialize_coloring,
)
from .fuzzing import FuzzFailure, FuzzReport, run_fuzz
from .generators import GENERATOR_KINDS, GenSpec, gen_h2_tower, gen_perm_tower, gen_random, paper_i, paper_r
from .patterns import (
    CONDITION_IDS,
    PATTERN_EDGES,
    PATTERN_IDS,
    IntersectionProfile,
    PatternReport,
    check_condition,
    classify_intersection,
    classify_pair,
    contains_pattern,
    pair_satisfies,
)
from .solver import ChromaticResult, chromatic_number, find_proper_coloring

__all__ = [
    "ALGORITHM_IDS",
    "BLUE",
    "COLOR_NAMES",
    "CONDITION_IDS",
    "ChromaticResult",
    "Coloring",
    "DirectedEdge",
    "DirectedHypergraph",
    "FuzzFailure",
    "FuzzReport",
    "GENERATOR_KINDS",
    "GREEN",
    "GenSpec",
    "GoodColoring",
    "HeadStar",
    "IntersectionProfile",
    "InvariantViolationError",
    "ParseError",
    "PatternReport",
    "PreconditionError",
    "PATTERN_EDGES",
    "PATTERN_IDS",
    "RED",
    "RoleConflictError",
    "RunTrace",
    "TraceEvent",
    "ValidationError",
    "YELLOW",
    "augment_i0",
    "check_condition",
    "chromatic_number",
    "classify_head_star",
    "classify_intersection",
    "classify_pair",
    "color_head_tail_3",
    "color_i0_4",
    "color_i0_r4_2",
    "color_one_head",
    "contains_pattern",
    "edge",
    "f_bound",
    "find_proper_coloring",
    "gen_h2_tower",
    "gen_perm_tower",
    "gen_random",
    "induce_good_coloring",
    "is_proper",
    "is_two_to_one",
    "normalize",
    "pair_satisfies",
    "paper_i",
    "paper_r",
    "parse",
    "parse_coloring",
    "run_fuzz",
    "serialize",
    "serialize_coloring",
    "verify_good_coloring",
]
