"""
Exact homology over the rationals: boundary matrices, sparse ranks, Betti
numbers, Laplacian kernels and boundary-membership solving.
"""

from cliquehom.homology.boundary import BoundaryMatrix, boundary_matrix, chain_to_vector
from cliquehom.homology.linalg import EchelonBasis, dense_rank, rank_exact, solve_exact
from cliquehom.homology.engine import (
    HomologyReport, betti, homology_report, laplacian_kernel_dim,
    laplacian_min_eigenvalue_estimate, laplacian_spectrum_summary, solve_boundary_membership,
)

__all__ = [
    'BoundaryMatrix', 'boundary_matrix', 'chain_to_vector', 'EchelonBasis', 'dense_rank',
    'rank_exact', 'solve_exact', 'HomologyReport', 'betti', 'homology_report',
    'laplacian_kernel_dim', 'laplacian_min_eigenvalue_estimate', 'laplacian_spectrum_summary',
    'solve_boundary_membership',
]
