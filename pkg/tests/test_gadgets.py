"""Tests for hardcoded gadgets, the registry, general filling and verification."""

import pytest

from cliquehom import create_app
from cliquehom.complex import independence_complex
from cliquehom.exceptions import ConstructionError, DomainError, ValidationError
from cliquehom.gadgets import (
    GADGETS, GadgetGraph, build_gadget, fill_cycle_general, gadget_classical, gadget_cnot_entangled,
    gadget_prop_prime, gadget_two_qubit_entangled, list_gadgets, verify_gadget,
)
from cliquehom.gadgets.filling import surface_from_chain, vertex_fans
from cliquehom.homology import betti
from cliquehom.qubits.encoding import IntState, QubitRegister, state_to_cycle


class TestClassicalGadget:

    @pytest.mark.parametrize('bits', ['0', '1', '00', '01', '10', '11', '000', '101'])
    def test_lifts_its_basis_state(self, bits):
        verdict = verify_gadget(gadget_classical(bits))
        assert verdict.passes, verdict.reasons
        assert verdict.lifted_basis == [IntState.basis(bits)]
        assert verdict.betti_observed == 2 ** len(bits) - 1

    def test_verdict_f_vector_reaches_the_top(self):
        assert verify_gadget(gadget_classical('0')).f_vector == [4, 2]
        assert verify_gadget(gadget_classical('00')).f_vector == [7, 13, 4]

    def test_mediator_edges(self):
        g = gadget_classical('01', gid='t')
        assert g.mediators == ['m:t:0']
        assert g.neighbours('m:t:0') == {'b:0', 'a:1'}
        assert g.validate() == []

    def test_wrong_target_fails(self):
        verdict = verify_gadget(gadget_classical('00'), [IntState.basis('01')])
        assert not verdict.passes
        assert 'lifted subspace contains states outside span(targets)' in verdict.reasons
        assert 'some target states are not lifted' in verdict.reasons

    def test_rejects_bad_bits(self):
        with pytest.raises(DomainError):
            gadget_classical('')
        with pytest.raises(DomainError):
            gadget_classical('00000')
        with pytest.raises(DomainError):
            gadget_classical('0a')


class TestEntangledGadgets:

    @pytest.mark.parametrize('pattern,target', [
        ('00-11', {'00': 1, '11': -1}),
        ('01-10', {'01': 1, '10': -1}),
    ])
    def test_two_qubit(self, pattern, target):
        g = gadget_two_qubit_entangled(pattern)
        verdict = verify_gadget(g)
        assert len(g.mediators) == 3
        assert verdict.passes, verdict.reasons
        assert verdict.lifted_basis == [IntState(2, target)]
        assert verdict.betti_observed == 3

    def test_unknown_pattern(self):
        with pytest.raises(DomainError):
            gadget_two_qubit_entangled('00+11')

    def test_cnot_counts(self):
        g = gadget_cnot_entangled(1)
        k = independence_complex(g.graph(), 4)
        assert k.f_vector() == [14, 61, 97, 43, 1]
        assert betti(k, 2, reduced=True) == 7

    @pytest.mark.parametrize('which,target', [
        (1, {'010': -1, '101': 1}),
        (2, {'011': 1, '100': -1}),
    ])
    def test_cnot_variants(self, which, target):
        verdict = verify_gadget(gadget_cnot_entangled(which))
        assert verdict.passes, verdict.reasons
        assert verdict.lifted_basis == [IntState(3, target).normalized()]
        assert verdict.f_vector == [14, 61, 97, 43, 1]

    @pytest.mark.parametrize('flips', [[0], [2], [0, 2], [0, 1, 2]])
    def test_cnot_flips(self, flips):
        g = gadget_cnot_entangled(flips=flips)
        assert g.targets == [IntState(3, {'101': 1, '010': -1}).flip(flips)]
        assert verify_gadget(g).passes

    def test_flip_out_of_range(self):
        with pytest.raises(DomainError):
            gadget_cnot_entangled(flips=[3])

    def test_prop_prime(self):
        g = gadget_prop_prime()
        assert g.qubits == [0, 1, 2, 3]
        assert g.targets == [IntState(4, {'1000': 1, '1101': -1})]
        assert verify_gadget(g).passes


class TestGeneralFilling:

    def test_entangled_hexagon(self, two_qubits):
        g = fill_cycle_general(two_qubits, IntState(2, {'01': 1, '10': -1}))
        # six face mediators and an apex
        assert len(g.mediators) == 7
        assert verify_gadget(g).passes

    @pytest.mark.parametrize('policy,euler', [('edge-or-vertex', 8), ('edge', 14)])
    def test_octahedron_policies(self, three_qubits, policy, euler):
        g = fill_cycle_general(three_qubits, IntState.basis('000'), policy=policy)
        k = independence_complex(g.graph(), 8)
        assert k.euler_characteristic() == euler
        assert verify_gadget(g).passes is (policy == 'edge-or-vertex')

    def test_vertex_fans_on_octahedron(self, three_qubits):
        surface = surface_from_chain(state_to_cycle(three_qubits, IntState.basis('000')))
        fans = vertex_fans(surface)
        # six vertices of degree four, one diagonal each
        assert len(fans) == 6
        assert not set(fans) & set(surface.dual_pairs())
        assert all(i < j for i, j in fans)

    def test_hexagon_ignores_policy(self, two_qubits):
        state = IntState(2, {'01': 1, '10': -1})
        edge = fill_cycle_general(two_qubits, state, policy='edge')
        fan = fill_cycle_general(two_qubits, state, policy='edge-or-vertex')
        assert edge.graph() == fan.graph()

    def test_retired_policy_name(self, three_qubits):
        with pytest.raises(DomainError):
            fill_cycle_general(three_qubits, IntState.basis('000'), policy='vertex-star')

    def test_default_policy(self, three_qubits):
        g = fill_cycle_general(three_qubits, IntState(3, {'000': 1, '111': -1}))
        assert len(g.construction_log) == 2
        assert 'edge filling not certified' in g.construction_log[0]
        assert 'edge-or-vertex' in g.construction_log[-1]
        assert verify_gadget(g).passes

    def test_default_policy_on_cycles_keeps_edge(self, two_qubits):
        g = fill_cycle_general(two_qubits, IntState(2, {'01': 1, '10': -1}))
        assert len(g.construction_log) == 1
        assert 'policy edge;' in g.construction_log[0]

    def test_explicit_policy_is_not_refilled(self, three_qubits):
        g = fill_cycle_general(three_qubits, IntState.basis('000'), policy='edge')
        assert len(g.construction_log) == 1
        assert not verify_gadget(g).passes

    def test_plain_policy_from_configuration(self, three_qubits):
        create_app('testing', PLAIN_FILLER_POLICY='edge-or-vertex')
        g = fill_cycle_general(three_qubits, IntState.basis('000'))
        assert len(g.construction_log) == 1
        assert 'edge-or-vertex' in g.construction_log[0]

    def test_operand_order(self, three_qubits):
        g = fill_cycle_general(three_qubits, IntState.basis('01'), qubits=[2, 0])
        assert g.qubits == [0, 2]
        assert g.targets == [IntState.basis('10')]

    @pytest.mark.parametrize('state', [
        IntState(2, {'00': 2, '11': -1}),
        IntState(1, {'0': 1, '1': -1}),
        IntState(3, {'000': 1, '111': 1}),
    ])
    def test_rejects_non_surfaces(self, three_qubits, state):
        with pytest.raises(ConstructionError):
            fill_cycle_general(three_qubits, state)

    def test_unknown_policy(self, two_qubits):
        with pytest.raises(DomainError):
            fill_cycle_general(two_qubits, IntState.basis('00'), policy='greedy')


class TestGadgetGraph:

    def test_json_round_trip(self):
        g = gadget_cnot_entangled(2)
        restored = GadgetGraph.from_json(g.to_json())
        assert restored.to_dict() == g.to_dict()
        assert restored.graph() == g.graph()

    def test_malformed_json(self):
        with pytest.raises(ValidationError):
            GadgetGraph.from_json('{"qubits": [0]')
        with pytest.raises(ValidationError):
            GadgetGraph.from_json('{"qubits": [0]}')

    def test_rejects_triangle_edges(self):
        data = gadget_classical('0').to_dict()
        data['edges'].append(['x:0', 'b:0'])
        with pytest.raises(ValidationError):
            GadgetGraph.from_dict(data)

    def test_rename_mediators(self):
        g = gadget_two_qubit_entangled().rename_mediators('z')
        assert g.mediators == ['m:z:0', 'm:z:1', 'm:z:2']
        assert all(v.startswith('m:z:') or QubitRegister.qubit_of(v) is not None
                   for e in g.edges for v in e)
        assert verify_gadget(g).passes

    def test_graph_on_register(self):
        g = gadget_classical('1')
        assert len(g.graph(QubitRegister(3)).vertices) == 10
        assert len(g.graph().vertices) == 4

    def test_verify_register_check(self):
        with pytest.raises(DomainError):
            verify_gadget(gadget_classical('00'), reg=QubitRegister(1))


class TestRegistry:

    def test_list(self):
        names = list_gadgets()
        assert names == sorted(GADGETS)
        assert {'cnot-1', 'cnot-2', 'ent-00-11', 'pyth-1', 'prop-prime', 'classical-101'} <= set(names)

    def test_build(self):
        assert build_gadget('classical-0110').targets == [IntState.basis('0110')]
        assert build_gadget('ent-01-10').name == 'ent-01-10'

    def test_unknown(self):
        with pytest.raises(DomainError):
            build_gadget('toffoli')
