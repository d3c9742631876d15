"""
Exact check of which computational-cycle combinations a gadget fills.

Inside C_{n-1} of the gadget's independence complex every computational
cycle is reduced against an echelon basis of im ∂_n. The residuals span a
quotient in which a combination of cycles is a boundary exactly when its
residuals cancel, so the lifted subspace is the null space of the residual
matrix.
"""

import logging
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence

import sympy

from cliquehom.complex.cliques import SimplicialComplex, independence_complex
from cliquehom.complex.graph import Graph
from cliquehom.config import current_config
from cliquehom.exceptions import DomainError
from cliquehom.gadgets.gadget import GadgetGraph, GadgetVerdict
from cliquehom.homology.boundary import boundary_matrix, chain_to_vector
from cliquehom.homology.engine import betti
from cliquehom.homology.linalg import echelon_basis
from cliquehom.qubits.encoding import IntState, QubitRegister, state_to_cycle


logger = logging.getLogger(__name__)


def _to_int_state(n: int, vector: Sequence) -> IntState:
    values = [sympy.Rational(v) for v in vector]
    denominator = reduce(sympy.ilcm, (int(v.q) for v in values), 1)
    integers = [int(v * denominator) for v in values]
    g = reduce(gcd, (abs(v) for v in integers if v), 0) or 1
    return IntState(n, {format(i, f'0{n}b'): v // g
                        for i, v in enumerate(integers) if v}).normalized()


def full_f_vector(graph: Graph, k: SimplicialComplex) -> List[int]:
    """f-vector through the top dimension, materializing past k.max_dim when needed."""
    cap = current_config().MAX_DIM_CAP
    while not k.complete and k.max_dim < cap:
        k = independence_complex(graph, k.max_dim + 1)
    if not k.complete:
        logger.warning(f"f-vector of {graph} truncated at the dimension cap {cap}")
    f = k.f_vector()
    while f and not f[-1]:
        f.pop()
    return f


def _rank(vectors: List[List[int]]) -> int:
    if not vectors:
        return 0
    return sympy.Matrix(vectors).rank()


def verify_gadget(g: GadgetGraph, targets: Optional[List[IntState]] = None,
                  reg: Optional[QubitRegister] = None) -> GadgetVerdict:
    """
    Verify that a gadget lifts exactly the span of its targets.

    Args:
        g: Gadget to check, on its own qubits
        targets: States expected to be lifted (default: the gadget's targets)
        reg: Unused beyond validation; the check always runs on the gadget's qubits

    Returns:
        GadgetVerdict; ``passes`` holds iff the lifted subspace equals span(targets)
        and reduced β_{n-1} = 2^n - rank(targets)
    """
    targets = list(g.targets if targets is None else targets)
    n = len(g.qubits)
    if n == 0:
        raise DomainError('Gadget touches no qubits')
    if reg is not None and any(q >= reg.n for q in g.qubits):
        raise DomainError(f"Gadget qubits {g.qubits} do not fit a register of {reg.n}")
    for t in targets:
        if t.n != n:
            raise DomainError(f"Target {t} is not a state on {n} qubits")

    graph = g.graph()
    k = independence_complex(graph, n)

    image = echelon_basis(boundary_matrix(k, n).columns)
    local = QubitRegister(max(g.qubits) + 1)
    residuals = []
    for index in range(2 ** n):
        bits = format(index, f'0{n}b')
        cycle = state_to_cycle(local, IntState.basis(bits), g.qubits)
        residual, scale = image.reduce({i: int(v) for i, v in chain_to_vector(k, cycle).items()})
        residuals.append({row: Fraction(v) / scale for row, v in residual.items()})

    rows = sorted({r for res in residuals for r in res})
    if rows:
        data = [[sympy.Rational(res.get(r, Fraction(0)).numerator, res.get(r, Fraction(0)).denominator)
                 for res in residuals] for r in rows]
        null = sympy.Matrix(data).nullspace()
    else:
        null = [sympy.Matrix([1 if i == j else 0 for i in range(2 ** n)]) for j in range(2 ** n)]
    lifted = [_to_int_state(n, list(v)) for v in null]

    lifted_vectors = [s.to_vector() for s in lifted]
    target_vectors = [t.to_vector() for t in targets]
    target_rank = _rank(target_vectors)
    joint_rank = _rank(lifted_vectors + target_vectors)
    observed = betti(k, n - 1, reduced=True)
    expected = 2 ** n - target_rank

    reasons = []
    if joint_rank != target_rank:
        reasons.append('lifted subspace contains states outside span(targets)')
    if joint_rank != len(lifted):
        reasons.append('some target states are not lifted')
    if observed != expected:
        reasons.append(f"reduced β_{n - 1} is {observed}, expected {expected}")

    verdict = GadgetVerdict(
        lifted_subspace_dim=len(lifted), lifted_basis=lifted, betti_observed=observed,
        passes=not reasons, expected_betti=expected, target_rank=target_rank,
        f_vector=full_f_vector(graph, k), reasons=reasons)
    logger.info(f"verify {g.name}: lifted {len(lifted)}, β={observed}, passes={verdict.passes}")
    return verdict
