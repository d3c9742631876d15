"""
Gadgets that lift qubit states in the independence complex, and their algebra.
"""

from cliquehom.gadgets.gadget import GadgetGraph, GadgetVerdict, from_complex_neighbourhoods
from cliquehom.gadgets.algebra import (
    add_gadgets, relabel_qubits, sum_gadgets, tensor_classical, tensor_identity,
)
from cliquehom.gadgets.filling import Surface, fill_cycle_general, fill_surface
from cliquehom.gadgets.surgery import PLANS, Seam, SurgeryPlan, gadget_pythagorean, perform_surgery, pythagorean_target
from cliquehom.gadgets.library import (
    GADGETS, build_gadget, gadget_classical, gadget_cnot_entangled, gadget_prop_prime,
    gadget_two_qubit_entangled, list_gadgets,
)
from cliquehom.gadgets.verify import verify_gadget

__all__ = [
    'GadgetGraph', 'GadgetVerdict', 'from_complex_neighbourhoods', 'add_gadgets', 'sum_gadgets',
    'relabel_qubits', 'tensor_classical', 'tensor_identity', 'Surface', 'fill_cycle_general', 'fill_surface', 'PLANS',
    'Seam', 'SurgeryPlan', 'gadget_pythagorean', 'perform_surgery', 'pythagorean_target', 'GADGETS',
    'build_gadget', 'gadget_classical', 'gadget_cnot_entangled', 'gadget_prop_prime',
    'gadget_two_qubit_entangled', 'list_gadgets', 'verify_gadget',
]
