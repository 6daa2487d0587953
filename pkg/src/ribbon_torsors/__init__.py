"""
Rotor-routing and Bernardi torsors on ribbon graphs.

Ribbon graphs (rotation systems), divisors and break divisors, spanning
trees, the two actions of the degree-0 Picard group on spanning trees, and
witness-pair searches that locate base vertices where the actions differ.
"""

from .ribbon_graph import RibbonGraph, from_edge_rotations, genus
from .divisors import Divisor, picard_structure, reduce_divisor
from .trees import enumerate_trees
from .torsor import Kind, action_permutation, divisor_permutation, scan_bases, torsors_equal

__all__ = [
    "RibbonGraph", "from_edge_rotations", "genus", "Divisor", "picard_structure",
    "reduce_divisor", "enumerate_trees", "Kind", "action_permutation",
    "divisor_permutation", "scan_bases", "torsors_equal",
]
