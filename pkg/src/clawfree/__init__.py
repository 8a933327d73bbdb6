"""Graphs claw-free together with their complements, Boolean sums sharing
homogeneous triples, and reconstruction up to complementation."""

from .catalog import named
from .detect import component_shapes, find_claw, find_cotriangle, find_triangle, h3, is_forb_bruteforce
from .edgegraph import bipartition, edge_graph, parity_coloring
from .graph import (
    Graph,
    GraphError,
    boolean_sum,
    canonical_code,
    cartesian_product,
    complement,
    induced,
    is_isomorphic,
    make_graph,
)
from .theorems import (
    all_decompositions,
    classify,
    condition3,
    decompose,
    lemma_ggu_check,
    same_h3,
)

__version__ = "0.1.0"
