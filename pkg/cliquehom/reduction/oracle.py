"""
Exact joint-kernel dimension of a projector instance.

The range of Σ_t |ψ_t⟩⟨ψ_t| ⊗ I is spanned by the vectors ψ_t ⊗ |r⟩ over
basis states r of the untouched qubits, so the joint kernel has dimension
2^n minus the rank of that family. The rank is taken on the dense
matrix over the rationals, independently of the sparse engine behind the
Betti numbers.
"""

import logging
from itertools import product
from typing import Dict, List, Optional

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from cliquehom.config import current_config
from cliquehom.exceptions import ResourceError
from cliquehom.reduction.clock import SatInstance


logger = logging.getLogger(__name__)


def range_vectors(inst: SatInstance) -> List[Dict[int, int]]:
    """Sparse vectors spanning the range of the instance's Hamiltonian."""
    n = inst.n
    vectors, seen = [], set()
    for term in inst.terms:
        rest = [q for q in range(n) if q not in term.qubits]
        for fill in product('01', repeat=len(rest)):
            vector = {}
            for bits, c in term.state.terms.items():
                full = ['0'] * n
                for q, bit in zip(term.qubits, bits):
                    full[q] = bit
                for q, bit in zip(rest, fill):
                    full[q] = bit
                vector[int(''.join(full), 2)] = c
            key = tuple(sorted(vector.items()))
            if key not in seen:
                seen.add(key)
                vectors.append(vector)
    return vectors


def dense_range_rank(vectors: List[Dict[int, int]], size: int) -> int:
    """Exact rank of the vectors laid out as rows of a dense rational matrix."""
    if not vectors:
        return 0
    rows = [[QQ(v.get(i, 0)) for i in range(size)] for v in vectors]
    return DomainMatrix(rows, (len(rows), size), QQ).rank()


def kernel_oracle(inst: SatInstance, dense_cap: Optional[int] = None) -> int:
    """
    Dimension of the joint kernel of all projector terms.

    Args:
        inst: Projector instance
        dense_cap: Qubit cap (default: configured DENSE_CAP)

    Returns:
        2^n - rank of the Hamiltonian's range
    """
    cap = dense_cap if dense_cap is not None else current_config().DENSE_CAP
    if inst.n > cap:
        raise ResourceError(f"Kernel oracle is capped at {cap} qubits, instance has {inst.n}")
    vectors = range_vectors(inst)
    dimension = 2 ** inst.n - dense_range_rank(vectors, 2 ** inst.n)
    logger.info(f"Kernel oracle: {len(vectors)} range vectors on {inst.n} qubits, kernel {dimension}")
    return dimension
