"""Test configuration and fixtures for cliquehom."""

import pytest
import sympy
import sympy.matrices.normalforms
from click.testing import CliRunner
from hypothesis import HealthCheck, settings

from cliquehom import create_app
from cliquehom.complex.graph import Graph
from cliquehom.homology.boundary import boundary_matrix
from cliquehom.qubits.encoding import QubitRegister, triangle_graph

# toolkit is idempotent across examples
settings.register_profile('cliquehom', suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile('cliquehom')


@pytest.fixture(autouse=True)
def toolkit():
    """Testing configuration installed for every test."""
    return create_app('testing')


@pytest.fixture
def runner():
    """Click test runner."""
    return CliRunner()


@pytest.fixture
def two_qubits():
    return QubitRegister(2)


@pytest.fixture
def three_qubits():
    return QubitRegister(3)


@pytest.fixture
def g2():
    """Two disjoint triangles."""
    return triangle_graph(2)


@pytest.fixture
def path_graph():
    return Graph(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])


def smith_betti(k, p):
    """β_p from Smith normal forms of dense sympy boundary matrices (test oracle)."""
    def rank(q):
        if q < 1 or q > k.max_dim or not k.count(q) or not k.count(q - 1):
            return 0
        matrix = sympy.Matrix(boundary_matrix(k, q).to_dense())
        snf = sympy.matrices.normalforms.smith_normal_form(matrix, domain=sympy.ZZ)
        return sum(1 for i in range(min(snf.shape)) if snf[i, i] != 0)

    return k.count(p) - rank(p) - rank(p + 1)
