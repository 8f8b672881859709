"""Adinkras: edge-colored, dashed, graded bipartite graphs built as hypercube quotients."""

from .constructors import (
    build_complete_bipartite,
    build_complete_even,
    build_folded_cube,
    build_hypercube,
    build_quotient,
)
from .dashing import apply_dashing, canonical_dashing_hypercube, solve_dashings, validate_totally_odd
from .gf2code import BitVector, LinearCode, classify, d2n_family, enumerate_codewords, rref_basis
from .graph import ColoredGraph, Edge, format_agf, parse_agf
from .heights import assign_heights, move, movable_vertices, valise
from .representations import export_dot, from_latin, to_latin, to_matrix
from .structure import bicolor_report, exchange_group, extract_code, is_quadrilateral
from .susy import emit_rules, render, verify_algebra

__version__ = "0.1.0"
