"""Tests for relabelling, tensoring and adding gadgets."""

import pytest

from cliquehom.complex import independence_complex
from cliquehom.exceptions import ConstructionError, DomainError
from cliquehom.gadgets import (
    GadgetGraph, add_gadgets, gadget_classical, gadget_two_qubit_entangled, relabel_qubits, sum_gadgets,
    tensor_classical, tensor_identity, verify_gadget,
)
from cliquehom.homology import betti, solve_boundary_membership
from cliquehom.qubits.encoding import IntState, QubitRegister, state_to_cycle


def entangled_pair(include_step4):
    return add_gadgets(gadget_two_qubit_entangled('00-11'), gadget_two_qubit_entangled('01-10'),
                       include_step4=include_step4)


class TestRelabel:

    def test_sequence_and_mapping(self):
        g = gadget_classical('01')
        assert relabel_qubits(g, [3, 1]).targets == [IntState.basis('10')]
        assert relabel_qubits(g, {0: 2, 1: 5}).qubits == [2, 5]

    def test_moved_gadget_still_lifts(self):
        g = relabel_qubits(gadget_two_qubit_entangled('01-10'), [4, 2])
        assert g.qubits == [2, 4]
        assert g.targets == [IntState(2, {'10': 1, '01': -1})]
        assert verify_gadget(g).passes

    def test_not_a_bijection(self):
        g = gadget_classical('01')
        with pytest.raises(DomainError):
            relabel_qubits(g, [1, 1])
        with pytest.raises(DomainError):
            relabel_qubits(g, [0])


class TestTensor:

    def test_classical(self):
        g = tensor_classical(gadget_two_qubit_entangled('00-11'), 2, 1)
        assert g.targets == [IntState(3, {'001': 1, '111': -1})]
        assert verify_gadget(g).passes

    def test_classical_in_the_middle(self):
        g = tensor_classical(relabel_qubits(gadget_classical('00'), [0, 2]), 1, 1)
        assert g.targets == [IntState.basis('010')]
        assert verify_gadget(g).passes

    def test_identity(self):
        g = tensor_identity(gadget_classical('0'), 1)
        assert g.targets == [IntState.basis('00'), IntState.basis('01')]
        verdict = verify_gadget(g)
        assert verdict.passes, verdict.reasons
        assert verdict.lifted_subspace_dim == 2

    def test_occupied_qubit(self):
        g = gadget_classical('00')
        with pytest.raises(DomainError):
            tensor_classical(g, 1, 0)
        with pytest.raises(DomainError):
            tensor_identity(g, 0)
        with pytest.raises(DomainError):
            tensor_classical(g, 2, 2)


class TestAddGadgets:

    def test_two_classical_states(self):
        g = add_gadgets(gadget_classical('00'), gadget_classical('11'))
        k = independence_complex(g.graph(), 4)
        assert betti(k, 1) == 2
        assert verify_gadget(g).passes

    def test_identical_mediators_merge(self):
        g = add_gadgets(gadget_classical('00', gid='p'), gadget_classical('00', gid='q'))
        assert g.mediators == ['m:p:0']
        assert g.targets == [IntState.basis('00')]

    def test_name_collision(self):
        with pytest.raises(ConstructionError):
            add_gadgets(gadget_classical('00'), gadget_classical('00'))

    def test_disjoint_supports(self):
        left = gadget_classical('0', gid='l')
        right = relabel_qubits(gadget_classical('0', gid='r'), [1])
        g = add_gadgets(left, right)
        assert frozenset(('m:l:0', 'm:r:0')) in g.edges
        assert len(g.targets) == 3
        assert verify_gadget(g).passes

    def test_without_step4_has_wrong_euler_characteristic(self):
        k = independence_complex(entangled_pair(False).graph(), 8)
        # 1 - f0 + f1 - ... is 1: only one class survives
        assert 1 - k.euler_characteristic() == 1
        assert betti(k, 1, reduced=True) == 1

    def test_with_step4_keeps_sums_apart(self, two_qubits):
        g = entangled_pair(True)
        k = independence_complex(g.graph(), 8)
        assert betti(k, 1) == 2
        plus = state_to_cycle(two_qubits, IntState(2, {'00': 1, '11': 1}))
        other = state_to_cycle(two_qubits, IntState(2, {'01': 1, '10': 1}))
        assert solve_boundary_membership(k, plus) is None
        assert solve_boundary_membership(k, other) is None
        assert solve_boundary_membership(k, plus - other) is None
        assert verify_gadget(g).passes

    def test_untracked_targets(self):
        g = add_gadgets(gadget_classical('00'), gadget_classical('11'), track_targets=False)
        assert g.targets == []
        assert g.supports == {'m:c00:0': frozenset({0, 1}), 'm:c11:0': frozenset({0, 1})}

    def test_partial_overlap_targets(self):
        left = gadget_classical('00', gid='l')
        right = relabel_qubits(gadget_classical('11', gid='r'), [1, 2])
        g = add_gadgets(left, right)
        assert g.qubits == [0, 1, 2]
        assert len(g.targets) == 4
        assert verify_gadget(g, reg=QubitRegister(3)).passes


def single_qubit(gid, neighbours, links=()):
    """Gadget on qubit 0 whose mediators have the given graph neighbours."""
    edges = {frozenset((f"m:{gid}:{k}", v)) for k, seen in enumerate(neighbours) for v in seen}
    edges |= {frozenset((f"m:{gid}:{i}", f"m:{gid}:{j}")) for i, j in links}
    return GadgetGraph(name=gid, qubits=[0], mediators=[f"m:{gid}:{k}" for k in range(len(neighbours))],
                       edges=edges)


class TestMergeRule:

    def test_mediators_seeing_every_vertex_stay_apart(self):
        full = ('x:0', 'a:0', 'b:0')
        g = add_gadgets(single_qubit('p', [full]), single_qubit('q', [full]))
        assert g.mediators == ['m:p:0', 'm:q:0']
        assert frozenset(('m:p:0', 'm:q:0')) in g.edges

    def test_ambiguous_key_is_not_merged(self):
        g = add_gadgets(single_qubit('p', [('b:0',), ('b:0',)]), single_qubit('q', [('b:0',)]))
        assert g.mediators == ['m:p:0', 'm:p:1', 'm:q:0']

    def test_inconsistent_links_are_not_merged(self):
        left = single_qubit('p', [('b:0',), ('a:0',)])
        right = single_qubit('q', [('b:0',), ('a:0',)], links=[(0, 1)])
        g = add_gadgets(left, right)
        assert g.mediators == ['m:p:0', 'm:p:1', 'm:q:1']
        assert frozenset(('m:p:0', 'm:q:1')) in g.edges
        assert frozenset(('m:p:1', 'm:q:1')) in g.edges

    def test_consistent_links_merge(self):
        left = single_qubit('p', [('b:0',), ('a:0',)], links=[(0, 1)])
        right = single_qubit('q', [('b:0',), ('a:0',)], links=[(0, 1)])
        assert add_gadgets(left, right).mediators == ['m:p:0', 'm:p:1']

    @pytest.mark.slow
    def test_pythagorean_pair_keeps_every_mediator(self):
        from cliquehom.gadgets import gadget_pythagorean
        first, second = gadget_pythagorean(1), gadget_pythagorean(2)
        g = sum_gadgets([first, second])
        assert len(g.mediators) == len(first.mediators) + len(second.mediators)


class TestSumGadgets:

    def test_only_overlapping_gadgets_are_joined(self):
        left = gadget_classical('0', gid='l')
        right = relabel_qubits(gadget_classical('0', gid='r'), [1])
        other = gadget_classical('1', gid='s')
        g = sum_gadgets([left, right, other], track_targets=False)
        assert frozenset(('m:l:0', 'm:s:0')) in g.edges
        assert frozenset(('m:l:0', 'm:r:0')) not in g.edges
        assert frozenset(('m:r:0', 'm:s:0')) not in g.edges
        assert g.qubits == [0, 1]

    def test_pair_matches_add(self):
        first, second = gadget_two_qubit_entangled('00-11'), gadget_two_qubit_entangled('01-10')
        summed = sum_gadgets([first, second])
        added = add_gadgets(first, second)
        assert summed.edges == added.edges
        assert summed.mediators == added.mediators
        assert summed.targets == added.targets

    def test_disjoint_sum_still_lifts(self):
        left = gadget_classical('0', gid='l')
        right = relabel_qubits(gadget_classical('1', gid='r'), [1])
        k = independence_complex(sum_gadgets([left, right]).graph(), 4)
        assert betti(k, 1, reduced=True) == 1

    def test_empty(self):
        with pytest.raises(DomainError):
            sum_gadgets([])

    def test_name_collision(self):
        with pytest.raises(ConstructionError):
            sum_gadgets([gadget_classical('00'), gadget_classical('11'), gadget_classical('00')])
