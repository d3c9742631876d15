"""
Betti numbers, homology reports, Laplacian kernels and boundary membership.

All homology is over the rationals. Betti numbers use the two-rank formula
β_p = f_p - rank ∂_p - rank ∂_{p+1} and never build a Laplacian.

Laplacian index convention: 𝓛_p = ∂_pᵀ∂_p + ∂_{p+1}∂_{p+1}ᵀ acts on C_p,
so ker 𝓛_p ≅ H_p. With ``reduced=True`` the augmentation takes the place of
∂_0 and the kernel is reduced homology.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import eigsh

from cliquehom.complex.cliques import SimplicialComplex
from cliquehom.complex.simplex import Chain
from cliquehom.exceptions import DomainError, PreconditionError
from cliquehom.homology.boundary import BoundaryMatrix, boundary_matrix, chain_to_vector
from cliquehom.homology.linalg import rank_exact, solve_exact


logger = logging.getLogger(__name__)

ZERO_TOLERANCE = 1e-8
DENSE_EIGEN_LIMIT = 600
# eigenvalues requested past the exact kernel
GAP_MODES = 8


@dataclass
class HomologyReport:
    """Per-dimension Betti numbers, f-vector and Euler characteristics."""
    f_vector: List[int]
    betti: List[int]
    betti_reduced: List[int]
    euler: int
    euler_reduced: int
    complete: bool = True

    def validate(self) -> List[str]:
        """Check Euler–Poincaré and the reduced/plain relations."""
        errors = []
        if self.complete:
            alternating = sum((-1) ** p * b for p, b in enumerate(self.betti))
            if alternating != self.euler:
                errors.append(f"Euler–Poincaré mismatch: {alternating} != {self.euler}")
        if self.euler_reduced != 1 - self.euler:
            errors.append('Reduced Euler characteristic must equal 1 - χ')
        if self.betti and self.f_vector and self.f_vector[0] > 0:
            if self.betti_reduced[0] != self.betti[0] - 1:
                errors.append('Reduced β_0 must equal β_0 - 1')
        if self.betti[1:] != self.betti_reduced[1:]:
            errors.append('Reduced and plain Betti numbers differ above dimension 0')
        return errors

    def to_dict(self) -> Dict[str, Any]:
        return {
            'f_vector': list(self.f_vector),
            'betti': list(self.betti),
            'betti_reduced': list(self.betti_reduced),
            'euler': self.euler,
            'euler_reduced': self.euler_reduced,
        }


def _require_materialized(k: SimplicialComplex, p: int) -> None:
    if p < 0:
        raise DomainError(f"Homology dimension must be non-negative, got {p}")
    if p + 1 > k.max_dim and not k.complete:
        raise DomainError(
            f"β_{p} needs faces of dimension {p + 1}; complex is materialized to {k.max_dim}")


def _rank(k: SimplicialComplex, p: int, reduced: bool, cache: Optional[Dict] = None) -> int:
    if p < 0:
        return 0
    key = (p, reduced and p == 0)
    if cache is not None and key in cache:
        return cache[key]
    if p == 0:
        value = 1 if (reduced and k.count(0) > 0) else 0
    elif p > k.max_dim:
        value = 0
    else:
        value = rank_exact(boundary_matrix(k, p))
    if cache is not None:
        cache[key] = value
    return value


def betti(k: SimplicialComplex, p: int, reduced: bool = False, cache: Optional[Dict] = None) -> int:
    """
    Betti number β_p (or reduced β̃_p) of ``k`` over the rationals.

    Args:
        k: Complex materialized at dimensions p-1, p and p+1
        p: Homology dimension
        reduced: Use the augmented chain complex
        cache: Optional dict reused across calls on the same complex

    Returns:
        β_p = f_p - rank ∂_p - rank ∂_{p+1}
    """
    _require_materialized(k, p)
    f_p = k.count(p) if p <= k.max_dim else 0
    value = f_p - _rank(k, p, reduced, cache) - _rank(k, p + 1, reduced, cache)
    logger.debug(f"β{'~' if reduced else ''}_{p} = {value} for {k}")
    return value


def homology_report(k: SimplicialComplex, max_dim: Optional[int] = None) -> HomologyReport:
    """
    Homology report for every dimension whose Betti number is computable.

    A complete complex reports dimensions 0..top; otherwise 0..max_dim-1.
    An explicit ``max_dim`` truncates the report further.
    """
    top = k.top_dim if k.complete else k.max_dim - 1
    if max_dim is not None:
        if max_dim > top and not k.complete:
            raise DomainError(f"Report to dimension {max_dim} needs faces of dimension {max_dim + 1}")
        top = min(top, max_dim)
    cache: Dict = {}
    plain = [betti(k, p, False, cache) for p in range(top + 1)]
    reduced = [betti(k, p, True, cache) for p in range(top + 1)]
    whole = k.complete and top >= k.top_dim
    f_vector = k.f_vector()[:top + 1] if k.complete else k.f_vector()
    euler = sum((-1) ** d * n for d, n in enumerate(f_vector))
    report = HomologyReport(f_vector=f_vector, betti=plain, betti_reduced=reduced,
                            euler=euler, euler_reduced=1 - euler, complete=whole)
    logger.info(f"Homology report: f={f_vector} betti={plain}")
    return report


def _laplacian(k: SimplicialComplex, p: int, reduced: bool) -> sparse.csr_matrix:
    size = k.count(p)
    lower = boundary_matrix(k, p, augmented=reduced).to_scipy() if (p > 0 or reduced) else None
    upper = boundary_matrix(k, p + 1).to_scipy() if p + 1 <= k.max_dim else None
    result = sparse.csr_matrix((size, size), dtype=np.int64)
    if lower is not None and lower.shape[0] > 0:
        result = result + (lower.T @ lower)
    if upper is not None and upper.shape[1] > 0:
        result = result + (upper @ upper.T)
    return result.tocsr()


def laplacian_matrix(k: SimplicialComplex, p: int, reduced: bool = False) -> sparse.csr_matrix:
    """Integer combinatorial Laplacian 𝓛_p on C_p."""
    _require_materialized(k, p)
    return _laplacian(k, p, reduced)


def laplacian_kernel_dim(k: SimplicialComplex, p: int, reduced: bool = False) -> int:
    """
    Exact dimension of ker 𝓛_p, computed by rank; equals β_p.

    Returns 0 when p is above the top dimension of a complete complex.
    """
    if p < 0:
        raise DomainError(f"Laplacian dimension must be non-negative, got {p}")
    if k.complete and p > k.top_dim:
        return 0
    _require_materialized(k, p)
    size = k.count(p)
    if size == 0:
        return 0
    lap = _laplacian(k, p, reduced).tocsc()
    columns = []
    for j in range(size):
        start, end = lap.indptr[j], lap.indptr[j + 1]
        columns.append({int(i): int(v) for i, v in zip(lap.indices[start:end], lap.data[start:end]) if v != 0})
    return size - rank_exact(columns)


def _eigenvalues(k: SimplicialComplex, p: int, reduced: bool) -> Optional[np.ndarray]:
    _require_materialized(k, p)
    size = k.count(p)
    if size == 0:
        return None
    lap = _laplacian(k, p, reduced).astype(float)
    if size <= DENSE_EIGEN_LIMIT:
        return np.linalg.eigvalsh(lap.toarray())
    count = laplacian_kernel_dim(k, p, reduced) + GAP_MODES
    if count >= size - 1:
        logger.debug(f"𝓛_{p}: {count} modes of {size} requested, using the dense solver")
        return np.linalg.eigvalsh(lap.toarray())
    values = eigsh(lap, k=count, sigma=-1e-3, which='LM', return_eigenvectors=False)
    return np.sort(values)


def laplacian_min_eigenvalue_estimate(k: SimplicialComplex, p: int,
                                      reduced: bool = False) -> Optional[float]:
    """
    Approximate smallest nonzero eigenvalue of 𝓛_p (diagnostic only).

    Returns:
        Floating point estimate, or None when C_p is empty or 𝓛_p has no nonzero eigenvalue
    """
    values = _eigenvalues(k, p, reduced)
    if values is None:
        return None
    positive = values[values > ZERO_TOLERANCE]
    return float(positive.min()) if positive.size else None


def laplacian_spectrum_summary(k: SimplicialComplex, p: int, reduced: bool = False) -> Dict[str, Any]:
    """Numerical zero-mode count and gap of 𝓛_p, labelled approximate."""
    values = _eigenvalues(k, p, reduced)
    if values is None:
        return {'approximate': True, 'zero_modes': None, 'min_nonzero_eigenvalue': None}
    positive = values[values > ZERO_TOLERANCE]
    return {
        'approximate': True,
        'zero_modes': int(np.sum(np.abs(values) <= ZERO_TOLERANCE)),
        'min_nonzero_eigenvalue': float(positive.min()) if positive.size else None,
    }


def solve_boundary_membership(k: SimplicialComplex, c: Chain) -> Optional[Chain]:
    """
    Find a (p+1)-chain Ψ with ∂Ψ = c.

    Args:
        k: Complex materialized at dimension p+1
        c: A p-cycle of k

    Returns:
        Ψ when c is a boundary, otherwise None
    """
    p = c.dimension
    if not c.boundary().is_zero():
        raise PreconditionError('Chain is not a cycle')
    if c.is_zero():
        return Chain(p + 1)
    _require_materialized(k, p)
    rhs = chain_to_vector(k, c)
    if p + 1 > k.max_dim:
        return None
    matrix: BoundaryMatrix = boundary_matrix(k, p + 1)
    solution = solve_exact(matrix.columns, rhs)
    if solution is None:
        return None
    faces = k.faces_of(p + 1)
    return Chain(p + 1, {faces[j]: Fraction(v) for j, v in solution.items()})
