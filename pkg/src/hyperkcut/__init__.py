"""Enumerate all minimum k-cut-sets of a hypergraph with positive hyperedge costs."""

from .core import (
    CutSet,
    Hypergraph,
    InvalidArgument,
    VertexPartition,
    components_after_removal,
    crossing_set,
    cut_value,
    is_k_cut_set,
)
from .enumerate import (
    EnumerationReport,
    EnumerationStats,
    enum_min_cutsets_k2,
    enum_min_k_cutsets,
    min_k_cut_value,
)
from .flow import TerminalCutResult, min_terminal_cut, min_terminal_cut_value
from .io import ParseError, emit_instance, parse_instance, report_to_json
from .oracle import SizeGuardError, brute_force_all_min_terminal_cuts, brute_force_min_k_cutsets

__all__ = [
    "CutSet",
    "EnumerationReport",
    "EnumerationStats",
    "Hypergraph",
    "InvalidArgument",
    "ParseError",
    "SizeGuardError",
    "TerminalCutResult",
    "VertexPartition",
    "brute_force_all_min_terminal_cuts",
    "brute_force_min_k_cutsets",
    "components_after_removal",
    "crossing_set",
    "cut_value",
    "emit_instance",
    "enum_min_cutsets_k2",
    "enum_min_k_cutsets",
    "is_k_cut_set",
    "min_k_cut_value",
    "min_terminal_cut",
    "min_terminal_cut_value",
    "parse_instance",
    "report_to_json",
]

__version__ = "0.1.0"
