"""Comparison toolkit for elastic-degenerate strings."""

from .acronym import AcronymInstance, acronym_decide, acronym_report
from .core import (CapExceeded, EDString, ParseError, enumerate_language,
                   membership, parse_eds, serialize_eds, stats)
from .edsm import (DistanceResult, OccurrenceReport, approx_edsm,
                   approx_intersect, approx_intersect_bounded, doubly_edsm)
from .generate import ov_to_edsi, random_eds
from .graph import (active_prefixes, build_augmented, build_cell_edges,
                    build_full, reachability)
from .intersect import (WitnessResult, count_matching_pairs, intersect_decide,
                        longest_witness, shortest_witness, witness)
from .lcpindex import build_arena, build_index
from .similarity import (longest_common_subsequence, longest_common_substring,
                         matching_statistics)
from .unary import (compute_lengths, parse_compact, serialize_compact, sumset,
                    unary_intersect)

__version__ = "0.1.0"

__all__ = [
    "AcronymInstance", "CapExceeded", "DistanceResult", "EDString",
    "OccurrenceReport", "ParseError", "WitnessResult", "acronym_decide",
    "acronym_report", "active_prefixes", "approx_edsm", "approx_intersect",
    "approx_intersect_bounded", "build_arena", "build_augmented",
    "build_cell_edges", "build_full", "build_index", "compute_lengths",
    "count_matching_pairs", "doubly_edsm", "enumerate_language",
    "intersect_decide", "longest_common_subsequence",
    "longest_common_substring", "longest_witness", "matching_statistics",
    "membership", "ov_to_edsi", "parse_compact", "parse_eds", "random_eds",
    "reachability", "serialize_compact", "serialize_eds", "shortest_witness",
    "stats", "sumset", "unary_intersect", "witness",
]
