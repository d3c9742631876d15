"""
Boundary matrices of simplicial complexes.

Rows are indexed by (p-1)-faces and columns by p-faces, both in the
complex's canonical face order. Entries are the signs of the standard
alternating boundary, starting the sum at vertex 0.
"""

from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np
from scipy import sparse

from cliquehom.complex.cliques import SimplicialComplex
from cliquehom.complex.simplex import Chain
from cliquehom.exceptions import DomainError, PreconditionError


@dataclass
class BoundaryMatrix:
    """Sparse integer matrix of the boundary map C_p -> C_{p-1}."""
    dimension: int
    n_rows: int
    n_cols: int
    columns: List[Dict[int, int]] = field(default_factory=list)
    augmented: bool = False

    def to_scipy(self) -> sparse.csc_matrix:
        rows, cols, data = [], [], []
        for j, column in enumerate(self.columns):
            for i, value in column.items():
                rows.append(i)
                cols.append(j)
                data.append(value)
        return sparse.csc_matrix((np.array(data, dtype=np.int64), (rows, cols)),
                                 shape=(self.n_rows, self.n_cols))

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.n_cols for _ in range(self.n_rows)]
        for j, column in enumerate(self.columns):
            for i, value in column.items():
                dense[i][j] = value
        return dense

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)


def _check_dimension(k: SimplicialComplex, p: int) -> None:
    if p < 0:
        raise DomainError(f"Boundary dimension must be non-negative, got {p}")
    if p > k.max_dim and not k.complete:
        raise DomainError(f"Dimension {p} is above the materialized dimension {k.max_dim}")


def boundary_matrix(k: SimplicialComplex, p: int, augmented: bool = False) -> BoundaryMatrix:
    """
    Boundary matrix ∂_p of ``k``.

    Args:
        k: Simplicial complex materialized at p-1 and p
        p: Dimension of the column simplices
        augmented: For p = 0, return the augmentation map (one row of ones)

    Returns:
        BoundaryMatrix with one column per p-face
    """
    _check_dimension(k, p)
    faces = k.faces_of(p)
    if p == 0:
        if augmented:
            return BoundaryMatrix(0, 1, len(faces), [{0: 1} for _ in faces], augmented=True)
        return BoundaryMatrix(0, 0, len(faces), [{} for _ in faces])

    row_index = k.index_map(p - 1)
    columns = []
    for simplex in faces:
        column = {}
        for i in range(len(simplex)):
            column[row_index[simplex[:i] + simplex[i + 1:]]] = (-1) ** i
        columns.append(column)
    return BoundaryMatrix(p, len(row_index), len(faces), columns, augmented=augmented)


def chain_to_vector(k: SimplicialComplex, chain: Chain) -> Dict[int, object]:
    """Sparse coordinate vector of ``chain`` in the face basis of ``k``."""
    index = k.index_map(chain.dimension)
    vector = {}
    for simplex, coefficient in chain.terms.items():
        if simplex not in index:
            raise PreconditionError(f"Simplex {simplex} is not a face of the complex")
        vector[index[simplex]] = coefficient
    return vector
