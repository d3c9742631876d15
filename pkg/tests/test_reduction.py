"""Tests for circuits, the clock construction, the graph reduction and the kernel oracle."""

import pytest
from hypothesis import given, settings, strategies as st

from cliquehom import create_app
from cliquehom.complex import complement
from cliquehom.exceptions import ConstructionError, DomainError, ParseError, ResourceError, ValidationError
from cliquehom.gadgets import verify_gadget
from cliquehom.qubits.encoding import IntState
from cliquehom.reduction import (
    Circuit, Gate, ProjectorTerm, SatInstance, bravyi_projectors, decide_homology, dense_range_rank,
    gadget_for_term, kernel_oracle, nearest_neighbour_gates, parse_circuit, propagation_states, range_vectors,
    reduce_to_graph, reduction_report, sparsify,
)

CNOT_CIRCUIT = """
# one CNOT checking the witness
qubits 2
witness 1
output 0
cnot 1 0
"""

LONG_CNOT = "qubits 3\nwitness 1 2\noutput 0\ncnot 0 2\n"

TWO_GATES = "qubits 3\nwitness 1 2\noutput 0\ncnot 1 0\ncnot 2 1\n"

PYTH_1 = {'011': -5, '100': 4, '101': 3}
PYTH_2 = {'010': -5, '100': 3, '101': -4}
PROP_PRIME = {'1000': 1, '1101': -1}


@st.composite
def random_circuits(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    gate = st.builds(lambda q: Gate('pyth', (q,)), st.integers(0, n - 1))
    if n > 1:
        pairs = st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True)
        gate = gate | pairs.map(lambda p: Gate('cnot', tuple(p)))
    gates = draw(st.lists(gate, min_size=1, max_size=6))
    witness = draw(st.sets(st.integers(0, n - 1)))
    return Circuit(n, gates, tuple(witness), draw(st.integers(0, n - 1)))


@st.composite
def small_circuits(draw):
    n = draw(st.integers(min_value=1, max_value=2))
    gate = st.builds(lambda q: Gate('pyth', (q,)), st.integers(0, n - 1))
    if n > 1:
        gate = gate | st.permutations([0, 1]).map(lambda p: Gate('cnot', tuple(p)))
    gates = draw(st.lists(gate, min_size=1, max_size=3))
    return Circuit(n, gates, tuple(draw(st.sets(st.integers(0, n - 1)))), draw(st.integers(0, n - 1)))


def instance(n, *terms):
    return SatInstance(n, [ProjectorTerm(tuple(q), IntState(len(q), s), f"t[{i}]")
                           for i, (q, s) in enumerate(terms)])


PARSIMONY_CASES = [
    instance(1, ((0,), {'0': 1})),
    instance(1, ((0,), {'0': 1}), ((0,), {'1': 1})),
    instance(2, ((0, 1), {'00': 1})),
    instance(2, ((0, 1), {'00': 1}), ((0, 1), {'11': 1})),
    instance(2, ((0, 1), {'01': 1, '10': -1})),
    instance(2, ((0, 1), {'00': 1, '11': -1}), ((0, 1), {'01': 1, '10': -1})),
    instance(2, ((0,), {'1': 1}), ((1,), {'0': 1})),
    instance(2, ((1, 0), {'01': 1})),
    instance(2, ((0, 1), {'00': 1, '11': -1}), ((0,), {'0': 1})),
    instance(3, ((0, 1, 2), {'101': 1, '010': -1})),
    instance(3, ((0, 2), {'00': 1, '11': -1}), ((1,), {'1': 1})),
    instance(3, ((0, 1), {'01': 1, '10': -1}), ((1, 2), {'01': 1, '10': -1})),
    instance(3, ((0, 1, 2), {'000': 1}), ((0, 1, 2), {'111': 1})),
    instance(3, ((0, 1), {'00': 1}), ((1, 2), {'11': 1}), ((0, 2), {'01': 1, '10': -1})),
    instance(3, ((2, 0), {'10': 1, '01': -1})),
    instance(3, ((0, 1, 2), {'011': 1, '100': -1}), ((0,), {'1': 1})),
    instance(3, ((0, 1, 2), {'000': 1, '111': -1})),
    instance(3, ((0, 1, 2), {'110': 1}), ((0, 1), {'00': 1, '11': -1})),
    instance(4, ((0, 1), {'00': 1, '11': -1}), ((2, 3), {'00': 1, '11': -1})),
    instance(4, ((0, 1, 2, 3), {'1000': 1, '1101': -1})),
    instance(4, ((0, 3), {'01': 1, '10': -1}), ((1,), {'0': 1}), ((2,), {'1': 1})),
    instance(4, ((0, 1), {'01': 1}), ((1, 2), {'01': 1, '10': -1}), ((2, 3), {'00': 1})),
    pytest.param(instance(3, ((0, 1, 2), PYTH_1)), id='pyth-1', marks=pytest.mark.slow),
    pytest.param(instance(3, ((0, 1, 2), PYTH_2)), id='pyth-2', marks=pytest.mark.slow),
    pytest.param(instance(3, ((0, 1, 2), PYTH_1), ((0, 1, 2), PYTH_2)), id='pyth-pair',
                 marks=pytest.mark.slow),
    pytest.param(instance(3, ((0, 1, 2), PYTH_1), ((1, 2, 0), PYTH_2)), id='pyth-pair-rotated',
                 marks=pytest.mark.slow),
    pytest.param(instance(3, ((2, 0, 1), PYTH_1), ((0, 1, 2), {'000': 1})), id='pyth-permuted-classical',
                 marks=pytest.mark.slow),
    pytest.param(instance(3, ((0, 1, 2), PYTH_2), ((0, 2), {'01': 1, '10': -1})), id='pyth-entangled',
                 marks=pytest.mark.slow),
    pytest.param(instance(4, ((0, 1, 2, 3), PROP_PRIME), ((0, 1), {'10': 1})), id='prop-prime-classical',
                 marks=pytest.mark.slow),
    pytest.param(instance(4, ((0, 1, 2, 3), PROP_PRIME), ((1, 3), {'00': 1, '11': -1})),
                 id='prop-prime-entangled', marks=pytest.mark.slow),
]


class TestCircuit:

    def test_parse(self):
        c = parse_circuit(CNOT_CIRCUIT)
        assert c.n_qubits == 2
        assert c.witness == (1,)
        assert c.inputs == (0,)
        assert c.gates == [Gate('cnot', (1, 0))]
        assert parse_circuit(c.to_text()) == c

    def test_explicit_inputs(self):
        c = parse_circuit("qubits 3\nwitness 2\ninput 0\noutput 1\npyth 1\nid 0\n")
        assert c.inputs == (0,)
        assert 'input 0' in c.to_text()
        assert c.to_dict()['gates'] == [['pyth', 1], ['id', 0]]

    @pytest.mark.parametrize('text,line', [
        ('cnot 0 1\n', 1),
        ('qubits 2\ntoffoli 0 1\n', 2),
        ('qubits 2\ncnot 0 5\n', 2),
        ('qubits 2\noutput 0\ncnot 1 1\n', 3),
        ('qubits 2\npyth 0 1\n', 2),
        ('qubits 2\nwitness x\n', 2),
        ('qubits 0\n', 1),
        ('', 1),
    ])
    def test_parse_errors(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_circuit(text)
        assert info.value.line == line
        assert info.value.to_dict()['error'] == 'PARSE_ERROR'

    def test_overlapping_registers(self):
        with pytest.raises(ParseError):
            parse_circuit('qubits 2\nwitness 0\ninput 0\n')

    def test_gate_counts(self):
        assert parse_circuit(TWO_GATES).gate_counts() == {0: 1, 1: 2, 2: 1}


class TestSparsify:

    def test_nearest_neighbour(self):
        gates = nearest_neighbour_gates(parse_circuit(LONG_CNOT))
        assert len(gates) == 7
        assert Gate('cnot', (0, 1)) in gates
        assert all(abs(g.operands[0] - g.operands[1]) == 1 for g in gates)

    def test_reverse_direction(self):
        gates = nearest_neighbour_gates(parse_circuit('qubits 3\noutput 0\ncnot 2 0\n'))
        assert gates[3] == Gate('cnot', (2, 1))

    def test_grid_layout(self):
        grid = sparsify(parse_circuit(TWO_GATES))
        assert grid.n_qubits == 6
        assert grid.inputs == (0,)
        assert grid.output == 3
        assert len(grid.gates) == 13
        assert max(grid.gate_counts().values()) <= 7
        assert grid.validate() == []

    def test_long_range_grid(self):
        grid = sparsify(parse_circuit(LONG_CNOT))
        assert grid.n_qubits == 21
        assert max(grid.gate_counts().values()) <= 7

    @settings(max_examples=60, deadline=None)
    @given(random_circuits())
    def test_random_circuit_bounds(self, c):
        grid = sparsify(c)
        assert max(grid.gate_counts().values()) <= 7
        inst = bravyi_projectors(c, sparsified=True)
        assert inst.locality() <= 4
        assert inst.max_incidence() <= 28

    def test_invalid_circuit(self):
        with pytest.raises(DomainError):
            sparsify(Circuit(2, [Gate('cnot', (0, 0))]))


class TestClock:

    def test_propagation_states(self):
        assert propagation_states(Gate('id', (0,))) == [
            IntState(3, {'010': 1, '100': -1}), IntState(3, {'011': 1, '101': -1})]
        cnot = propagation_states(Gate('cnot', (0, 1)))
        assert cnot[3] == IntState(4, {'0111': 1, '1010': -1})
        pyth = propagation_states(Gate('pyth', (0,)))
        assert pyth[0] == IntState(3, {'010': 5, '100': -3, '101': 4})
        assert pyth[1] == IntState(3, {'011': 5, '100': -4, '101': -3})

    def test_single_cnot_instance(self):
        inst = bravyi_projectors(parse_circuit(CNOT_CIRCUIT))
        assert inst.n == 4
        assert inst.n_computational == 2 and inst.n_particles == 1
        assert inst.counts_by_provenance() == {'clock1': 1, 'clock2': 1, 'in': 1, 'out': 1, 'prop': 4}
        assert inst.locality() == 4
        assert kernel_oracle(inst) == 1

    def test_pair_terms(self):
        inst = bravyi_projectors(parse_circuit(TWO_GATES))
        counts = inst.counts_by_provenance()
        # unborn-dead is already emitted by clock4
        assert counts['clock3'] == 4 and counts['clock4'] == 3 and counts['clock5'] == 2
        assert counts['clock6'] == 1 and counts['prop-prime'] == 1
        prime = next(t for t in inst.terms if t.kind == 'prop-prime')
        assert prime.qubits == (3, 4, 5, 6)
        assert prime.state == IntState(4, {'1000': 1, '1101': -1})

    def test_sparsified_bounds(self):
        inst = bravyi_projectors(parse_circuit(TWO_GATES), sparsified=True)
        assert inst.n == 6 + 2 * 13
        assert inst.locality() == 4
        assert inst.max_incidence() <= 28
        assert inst.validate() == []
        assert all(k - j == 1 for t in inst.terms if t.kind == 'clock3'
                   for j, k in [tuple(map(int, t.provenance[7:-1].split(',')))])

    def test_sparsified_inputs_checked_at_first_gate(self):
        c = parse_circuit("qubits 3\nwitness 0 1\noutput 2\ncnot 0 1\ncnot 1 2\n")
        grid = sparsify(c)
        assert grid.inputs == (2,)
        assert grid.gates[1] == Gate('id', (2,))
        inst = bravyi_projectors(c, sparsified=True)
        term = next(t for t in inst.terms if t.provenance == 'in[2]')
        n = grid.n_qubits
        assert term.qubits == (n + 2, n + 3, 2)
        assert term.state == IntState.basis('011')

    def test_inputs_checked_on_first_particle(self):
        inst = bravyi_projectors(parse_circuit(TWO_GATES))
        term = next(t for t in inst.terms if t.kind == 'in')
        assert term.qubits == (3, 4, 0)

    def test_no_gates(self):
        with pytest.raises(DomainError):
            bravyi_projectors(parse_circuit('qubits 1\noutput 0\n'))

    def test_term_key(self):
        left = ProjectorTerm((1, 0), IntState.basis('01'))
        right = ProjectorTerm((0, 1), IntState(2, {'10': 3}))
        assert left.key() == right.key()
        with pytest.raises(ValidationError):
            ProjectorTerm((0, 0), IntState.basis('00'))

    def test_instance_json(self):
        inst = bravyi_projectors(parse_circuit(CNOT_CIRCUIT))
        assert SatInstance.from_json(inst.to_json()).to_dict() == inst.to_dict()
        with pytest.raises(ValidationError):
            SatInstance.from_json('{"n": 5, "terms": [{"qubits": [0, 1, 2, 3, 4], '
                                  '"state": {"n": 5, "terms": {"00000": 1}}}]}')
        with pytest.raises(ValidationError):
            SatInstance.from_json('not json')


class TestKernelOracle:

    def test_range_vectors(self):
        inst = instance(2, ((0,), {'0': 1}))
        assert range_vectors(inst) == [{0: 1}, {1: 1}]

    @pytest.mark.parametrize('inst,kernel', [
        (instance(2, ((0, 1), {'00': 1}), ((0, 1), {'11': 1})), 2),
        (instance(2, ((0, 1), {'01': 1, '10': -1})), 3),
        (instance(3), 8),
    ])
    def test_examples(self, inst, kernel):
        assert kernel_oracle(inst) == kernel

    def test_dense_range_rank(self):
        assert dense_range_rank([{0: 1, 1: -1}, {0: 2, 1: -2}, {2: 3}], 4) == 2
        assert dense_range_rank([{0: 5, 3: -4}, {0: 3, 3: 4}], 4) == 2
        assert dense_range_rank([], 8) == 0

    def test_independent_of_sparse_rank(self, monkeypatch):
        def refuse(*args, **kwargs):
            raise AssertionError('sparse rank used')

        monkeypatch.setattr('cliquehom.homology.linalg.rank_exact', refuse)
        monkeypatch.setattr('cliquehom.homology.linalg.echelon_basis', refuse)
        assert kernel_oracle(instance(3, ((0, 1, 2), PYTH_1), ((0, 1, 2), PYTH_2))) == 6

    def test_cap(self):
        inst = bravyi_projectors(parse_circuit(TWO_GATES), sparsified=True)
        with pytest.raises(ResourceError):
            kernel_oracle(inst)
        with pytest.raises(ResourceError):
            kernel_oracle(instance(3), dense_cap=2)


class TestReduction:

    def test_gadget_for_term(self):
        term = ProjectorTerm((2, 0), IntState.basis('10'), 'in[0]')
        g = gadget_for_term(term, gid='q')
        assert g.qubits == [0, 2]
        assert g.mediators == ['m:q:0']
        assert g.targets == [IntState.basis('01')]
        assert g.name == 'in[0]:q'

    def test_gadget_with_constant_bits(self):
        term = ProjectorTerm((0, 1, 2, 3), IntState(4, {'0111': 1, '1010': -1}))
        g = gadget_for_term(term)
        assert verify_gadget(g).passes

    def test_unsupported_state(self):
        with pytest.raises(ConstructionError):
            gadget_for_term(ProjectorTerm((0,), IntState(1, {'0': 1, '1': -1})))

    def test_empty_instance(self):
        graph, l = reduce_to_graph(instance(2))
        assert l == 1
        assert decide_homology(graph, l) == (True, 4)

    @pytest.mark.parametrize('inst', PARSIMONY_CASES)
    def test_parsimonious(self, inst):
        graph, l = reduce_to_graph(inst)
        nontrivial, value = decide_homology(graph, l)
        kernel = kernel_oracle(inst)
        assert value == kernel
        assert nontrivial is (kernel > 0)

    def test_cnot_circuit(self):
        inst = bravyi_projectors(parse_circuit(CNOT_CIRCUIT))
        graph, l = reduce_to_graph(inst)
        assert decide_homology(graph, l) == (True, 1)
        report = reduction_report(inst, graph, l).to_dict()
        assert report['n'] == 4 and report['l'] == 3
        assert report['vertices'] == 12 + report['mediators']
        assert report['terms_by_provenance']['prop'] == 4

    def test_clique_phrasing(self):
        inst = PARSIMONY_CASES[5]
        graph, l = reduce_to_graph(inst, complement_graph=True)
        plain, _ = reduce_to_graph(inst)
        assert graph == complement(plain)
        assert decide_homology(graph, l, mode='clique') == decide_homology(plain, l)

    @pytest.mark.slow
    def test_sparsified_degree_bound(self):
        c = parse_circuit('qubits 2\nwitness 1\noutput 0\npyth 0\ncnot 1 0\npyth 1\n')
        graph, _ = reduce_to_graph(bravyi_projectors(c, sparsified=True))
        assert graph.max_degree() <= 298

    @pytest.mark.slow
    @settings(max_examples=8, deadline=None)
    @given(small_circuits())
    def test_random_sparsified_degree_bound(self, c):
        graph, _ = reduce_to_graph(bravyi_projectors(c, sparsified=True))
        assert graph.max_degree() <= 298

    def test_qubit_cap(self):
        create_app('testing', QUBIT_CAP=1)
        with pytest.raises(ResourceError):
            reduce_to_graph(instance(2))

    def test_decide_errors(self, g2):
        with pytest.raises(DomainError):
            decide_homology(g2, -1)
        with pytest.raises(DomainError):
            decide_homology(g2, 1, mode='flag')
