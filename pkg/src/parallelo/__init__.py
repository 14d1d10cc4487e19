"""Exact checks of gain-cycle generation for four-dimensional parallelohedra.

Space-filling zonotopes are handled through their graphs
(:mod:`parallelo.zonograph`, :mod:`parallelo.venkov`), cross-checked by a
generator-based oracle (:mod:`parallelo.oracle`).  Non-zonotopal
parallelohedra with a 24-cell summand are handled through sliced Delone
tilings of D4 (:mod:`parallelo.d4`).
"""

from .d4 import SlicingConfig, base_star, sliced_star, slice_census, venkov_from_star, verify_nonzonotopal
from .oracle import GeneratorSet, graph_crosscheck, oracle_belts, oracle_facets
from .venkov import GainReport, VenkovGraph, build_venkov, check_gain_generation
from .zonograph import EXAMPLE_GRAPH, ZonotopeGraph, enumerate_belts, enumerate_facets, parse_graph

__all__ = [
    "EXAMPLE_GRAPH",
    "GainReport",
    "GeneratorSet",
    "SlicingConfig",
    "VenkovGraph",
    "ZonotopeGraph",
    "base_star",
    "build_venkov",
    "check_gain_generation",
    "enumerate_belts",
    "enumerate_facets",
    "graph_crosscheck",
    "oracle_belts",
    "oracle_facets",
    "parse_graph",
    "slice_census",
    "sliced_star",
    "venkov_from_star",
    "verify_nonzonotopal",
]
