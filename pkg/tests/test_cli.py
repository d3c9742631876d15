"""Tests for the command line interface."""

import json

import pytest

from cliquehom.cli import cli, main
from cliquehom.complex.io import write_graph
from cliquehom.gadgets import gadget_classical
from cliquehom.qubits.encoding import triangle_graph

CNOT_CIRCUIT = "qubits 2\nwitness 1\noutput 0\ncnot 1 0\n"


@pytest.fixture
def g2_file(tmp_path):
    path = tmp_path / 'g2.txt'
    write_graph(triangle_graph(2), path)
    return str(path)


@pytest.fixture
def circuit_file(tmp_path):
    path = tmp_path / 'cnot.circ'
    path.write_text(CNOT_CIRCUIT)
    return str(path)


def invoke(runner, *args):
    return runner.invoke(cli, ['--env', 'testing', *args])


class TestBettiCommands:

    def test_betti_yes(self, runner, g2_file):
        result = invoke(runner, 'betti', '--graph', g2_file, '--dim', '1')
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload['betti'] == 4
        assert payload['answer'] == 'YES'

    def test_betti_no(self, runner, g2_file):
        result = invoke(runner, 'betti', '--graph', g2_file, '--dim', '0')
        assert result.exit_code == 1
        assert json.loads(result.output)['nontrivial'] is False

    def test_clique_mode(self, runner, g2_file):
        result = invoke(runner, 'betti', '--graph', g2_file, '--dim', '0', '--mode', 'clique')
        assert result.exit_code == 0
        assert json.loads(result.output)['betti'] == 1

    def test_complex_betti_report(self, runner, g2_file):
        result = invoke(runner, 'complex', 'betti', '--graph', g2_file, '--dim', '1', '--max-dim', '1')
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload['report']['betti'] == [1, 4]
        assert payload['f_vector'][:2] == [6, 9]

    def test_human_output(self, runner, g2_file):
        result = invoke(runner, 'betti', '--graph', g2_file, '--dim', '1', '--human')
        assert result.exit_code == 0
        assert 'answer' in result.output and 'YES' in result.output

    def test_negative_dimension(self, runner, g2_file):
        result = invoke(runner, 'betti', '--graph', g2_file, '--dim', '-1')
        assert result.exit_code == 2
        assert json.loads(result.output)['error'] == 'DOMAIN_ERROR'

    def test_malformed_graph(self, runner, tmp_path):
        path = tmp_path / 'bad.txt'
        path.write_text('a b\na b c\n')
        result = invoke(runner, 'betti', '--graph', str(path), '--dim', '0')
        assert result.exit_code == 2
        payload = json.loads(result.output)
        assert payload['error'] == 'PARSE_ERROR'
        assert payload['line'] == 2


class TestGraphCommands:

    def test_complement(self, runner, g2_file):
        result = invoke(runner, 'graph', 'complement', '--graph', g2_file)
        assert result.exit_code == 0
        assert len(json.loads(result.output)['edges']) == 9

    def test_random_is_seeded(self, runner):
        first = invoke(runner, 'graph', 'random', '--vertices', '8', '--seed', '3')
        second = invoke(runner, 'graph', 'random', '--vertices', '8', '--seed', '3')
        assert first.output == second.output
        assert len(json.loads(first.output)['vertices']) == 8


class TestGadgetCommands:

    def test_list(self, runner):
        result = invoke(runner, 'gadget', 'list')
        assert 'cnot-1' in json.loads(result.output)['gadgets']

    def test_build_and_verify(self, runner, tmp_path):
        path = tmp_path / 'ent.json'
        build = invoke(runner, 'gadget', 'build', 'ent-00-11', '--out', str(path))
        assert build.exit_code == 0
        result = invoke(runner, 'gadget', 'verify', str(path))
        assert result.exit_code == 0
        assert json.loads(result.output)['passes'] is True

    def test_verify_failure(self, runner, tmp_path):
        data = json.loads(gadget_classical('00').to_json())
        data['targets'] = [{'n': 2, 'terms': {'01': 1}}]
        path = tmp_path / 'wrong.json'
        path.write_text(json.dumps(data))
        result = invoke(runner, 'gadget', 'verify', str(path))
        assert result.exit_code == 1
        assert json.loads(result.output)['passes'] is False

    def test_unknown_gadget(self, runner):
        result = invoke(runner, 'gadget', 'build', 'toffoli')
        assert result.exit_code == 2
        assert json.loads(result.output)['error'] == 'DOMAIN_ERROR'


class TestReductionCommands:

    def test_oracle(self, runner, circuit_file):
        result = invoke(runner, 'oracle', '--circuit', circuit_file)
        assert result.exit_code == 0
        assert json.loads(result.output) == {'kernel_dim': 1, 'n': 4, 'terms': 8}

    def test_reduce_then_decide(self, runner, circuit_file, tmp_path):
        graph_path = tmp_path / 'reduced.json'
        result = invoke(runner, 'reduce', '--circuit', circuit_file, '--out', str(graph_path))
        assert result.exit_code == 0
        assert json.loads(result.output)['l'] == 3
        decided = invoke(runner, 'betti', '--graph', str(graph_path), '--dim', '3')
        assert decided.exit_code == 0
        assert json.loads(decided.output)['betti'] == 1

    def test_needs_one_source(self, runner, circuit_file):
        result = invoke(runner, 'oracle', '--circuit', circuit_file, '--instance', circuit_file)
        assert result.exit_code == 2
        assert json.loads(result.output)['error'] == 'VALIDATION_ERROR'

    def test_projectors_round_trip(self, runner, circuit_file, tmp_path):
        path = tmp_path / 'inst.json'
        result = invoke(runner, 'projectors', '--circuit', circuit_file, '--out', str(path))
        assert json.loads(result.output)['by_provenance']['prop'] == 4
        oracle = invoke(runner, 'oracle', '--instance', str(path))
        assert json.loads(oracle.output)['kernel_dim'] == 1

    def test_sparsify(self, runner, tmp_path):
        path = tmp_path / 'two.circ'
        path.write_text("qubits 3\nwitness 1 2\noutput 0\ncnot 1 0\ncnot 2 1\n")
        result = invoke(runner, 'sparsify', '--circuit', str(path))
        assert json.loads(result.output) == {'qubits': 6, 'gates': 13, 'max_gates_per_qubit': 4, 'output': 3}

    def test_bad_circuit(self, runner, tmp_path):
        path = tmp_path / 'bad.circ'
        path.write_text("qubits 2\nswap 0 1\n")
        result = invoke(runner, 'oracle', '--circuit', str(path))
        assert result.exit_code == 2
        assert json.loads(result.output)['line'] == 2


class TestSusyCommand:

    def test_check(self, runner, g2_file):
        result = invoke(runner, 'susy', 'check', '--graph', g2_file)
        assert result.exit_code == 0
        assert json.loads(result.output)['groundspace_dims'] == [0, 0, 4]


class TestMain:

    def test_usage_error(self, capsys):
        assert main(['--env', 'testing', 'betti']) == 2
        assert 'USAGE_ERROR' in capsys.readouterr().out

    def test_exit_code(self, g2_file):
        assert main(['--env', 'testing', 'betti', '--graph', g2_file, '--dim', '0']) == 1

    def test_bad_environment(self, runner):
        result = runner.invoke(cli, ['--env', 'staging', 'gadget', 'list'])
        assert result.exit_code == 2
        assert json.loads(result.output)['error'] == 'CONFIGURATION_ERROR'
