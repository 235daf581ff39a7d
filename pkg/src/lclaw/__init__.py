"""Exact maximum weight independent set for l-claw-free graphs."""

from lclaw.clawfree import Solution, line_graph_root, max_weight_matching, mwis_bruteforce, mwis_clawfree
from lclaw.driver import detect_claw_packing, lift_by_isolated_vertex, mwis_2k2free, mwis_lclaw
from lclaw.family import ClassViolation, Family, algorithm_alpha, gamma, gamma2, verify_good_family
from lclaw.graph import Claw, Graph, anti_neighborhood, is_claw_free, is_l_claw_free, neighborhood
from lclaw.instances import Instance, emit_dimacs, parse_dimacs
from lclaw.patterns import enumerate_embeddings, pattern_catalog

__all__ = [
    "ClassViolation",
    "Claw",
    "Family",
    "Graph",
    "Instance",
    "Solution",
    "algorithm_alpha",
    "anti_neighborhood",
    "detect_claw_packing",
    "emit_dimacs",
    "enumerate_embeddings",
    "gamma",
    "gamma2",
    "is_claw_free",
    "is_l_claw_free",
    "lift_by_isolated_vertex",
    "line_graph_root",
    "max_weight_matching",
    "mwis_2k2free",
    "mwis_bruteforce",
    "mwis_clawfree",
    "mwis_lclaw",
    "neighborhood",
    "parse_dimacs",
    "pattern_catalog",
    "verify_good_family",
]
