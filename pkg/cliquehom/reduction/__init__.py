"""
Circuits, clock-construction projector instances and the reduction to graphs.
"""

from cliquehom.reduction.circuit import Circuit, Gate, nearest_neighbour_gates, parse_circuit, sparsify
from cliquehom.reduction.clock import ProjectorTerm, SatInstance, bravyi_projectors, propagation_states
from cliquehom.reduction.pipeline import (
    ReductionReport, combine_gadgets, decide_homology, gadget_for_term, reduce_to_graph,
    reduction_report,
)
from cliquehom.reduction.oracle import dense_range_rank, kernel_oracle, range_vectors

__all__ = [
    'Circuit', 'Gate', 'nearest_neighbour_gates', 'parse_circuit', 'sparsify', 'ProjectorTerm',
    'SatInstance', 'bravyi_projectors', 'propagation_states', 'ReductionReport', 'combine_gadgets',
    'decide_homology', 'gadget_for_term', 'reduce_to_graph', 'reduction_report', 'kernel_oracle',
    'range_vectors', 'dense_range_rank',
]
