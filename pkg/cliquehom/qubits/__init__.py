"""
Qubit encoding: the n-triangle graph and integer qubit states as cycles.
"""

from cliquehom.qubits.encoding import (
    IntState, QubitRegister, basis_zero_one, computational_cycles, state_to_cycle,
    triangle_graph,
)

__all__ = [
    'IntState', 'QubitRegister', 'basis_zero_one', 'computational_cycles',
    'state_to_cycle', 'triangle_graph',
]
