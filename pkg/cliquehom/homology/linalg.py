"""
Exact linear algebra for boundary matrices.

Ranks use fraction-free elimination on sparse integer columns: a column is
reduced against the pivot columns in registration order, each step scaling
by the pivot value and then dividing out the content so entries stay
small. New pivots are chosen Markowitz style, preferring rows with few
nonzeros and unit entries. A dense Fraction eliminator is kept as an oracle.
"""

import heapq
import logging
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from cliquehom.homology.boundary import BoundaryMatrix


logger = logging.getLogger(__name__)

SparseVector = Dict[int, int]


def _content(vector: Dict[int, int]) -> int:
    g = 0
    for value in vector.values():
        g = gcd(g, value)
        if g == 1:
            break
    return g


class EchelonBasis:
    """
    Incrementally built echelon basis of a column space over the rationals.

    ``reduce`` maps a vector to a residual containing no pivot rows; the
    residual is zero exactly when the vector lies in the span.
    """

    def __init__(self, row_weights: Optional[Dict[int, int]] = None):
        self.row_weights = row_weights or {}
        self.pivot_order: Dict[int, int] = {}
        self.pivot_rows: List[int] = []
        self.columns: List[SparseVector] = []

    @property
    def rank(self) -> int:
        return len(self.columns)

    def reduce(self, vector: SparseVector) -> Tuple[SparseVector, Fraction]:
        """
        Reduce ``vector`` against the pivot columns.

        Returns:
            (residual, scale) with residual = scale * vector - (span element)
        """
        current = {i: int(v) for i, v in vector.items() if v != 0}
        scale = Fraction(1)
        heap = [self.pivot_order[r] for r in current if r in self.pivot_order]
        heapq.heapify(heap)
        while heap:
            order = heapq.heappop(heap)
            row = self.pivot_rows[order]
            a = current.get(row)
            if a is None:
                continue
            column = self.columns[order]
            p = column[row]
            g = gcd(p, a)
            mp, ma = p // g, a // g
            if mp != 1:
                current = {i: v * mp for i, v in current.items()}
                scale *= mp
            for i, v in column.items():
                updated = current.get(i, 0) - ma * v
                if updated == 0:
                    current.pop(i, None)
                else:
                    if i not in current and i in self.pivot_order and i != row:
                        heapq.heappush(heap, self.pivot_order[i])
                    current[i] = updated
            content = _content(current)
            if content > 1:
                current = {i: v // content for i, v in current.items()}
                scale /= content
        return current, scale

    def add(self, vector: SparseVector) -> bool:
        """Reduce and register ``vector``; returns True when it raised the rank."""
        residual, _ = self.reduce(vector)
        if not residual:
            return False
        row = min(residual, key=lambda r: (self.row_weights.get(r, 0), abs(residual[r]) != 1, r))
        self.pivot_order[row] = len(self.columns)
        self.pivot_rows.append(row)
        self.columns.append(residual)
        return True

    def contains(self, vector: SparseVector) -> bool:
        residual, _ = self.reduce(vector)
        return not residual


def row_weights(columns: Sequence[SparseVector]) -> Dict[int, int]:
    weights: Dict[int, int] = {}
    for column in columns:
        for i in column:
            weights[i] = weights.get(i, 0) + 1
    return weights


def echelon_basis(columns: Sequence[SparseVector]) -> EchelonBasis:
    """Echelon basis of the span of ``columns``; sparse columns first."""
    basis = EchelonBasis(row_weights(columns))
    for j in sorted(range(len(columns)), key=lambda j: (len(columns[j]), j)):
        if columns[j]:
            basis.add(columns[j])
    return basis


def rank_exact(m) -> int:
    """
    Exact rank over the rationals.

    Args:
        m: BoundaryMatrix or a sequence of sparse integer columns

    Returns:
        Rank of the matrix
    """
    columns = m.columns if isinstance(m, BoundaryMatrix) else m
    if not columns:
        return 0
    rank = echelon_basis(columns).rank
    logger.debug(f"rank_exact: {len(columns)} columns -> rank {rank}")
    return rank


def dense_rank(rows: Sequence[Sequence]) -> int:
    """Textbook Gaussian elimination over Fractions (test oracle)."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    if not matrix:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for r in range(n_rows):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col] / matrix[rank][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def solve_exact(columns: Sequence[SparseVector], rhs: Dict[int, object]) -> Optional[Dict[int, Fraction]]:
    """
    Solve ``sum_j y_j * columns[j] = rhs`` exactly.

    Columns are processed in index order so the returned solution is
    deterministic for a fixed input ordering.

    Returns:
        Sparse solution {column index: coefficient}, or None if rhs is not in the span
    """
    pivots: Dict[int, int] = {}
    basis: List[Tuple[Dict[int, Fraction], Dict[int, Fraction]]] = []

    def reduce(vector: Dict[int, Fraction], combo: Dict[int, Fraction]):
        vector, combo = dict(vector), dict(combo)
        changed = True
        while changed:
            changed = False
            for row in sorted(r for r in vector if r in pivots):
                factor = vector.get(row)
                if not factor:
                    continue
                pivot_vector, pivot_combo = basis[pivots[row]]
                for i, v in pivot_vector.items():
                    updated = vector.get(i, Fraction(0)) - factor * v
                    if updated == 0:
                        vector.pop(i, None)
                    else:
                        vector[i] = updated
                for j, v in pivot_combo.items():
                    updated = combo.get(j, Fraction(0)) - factor * v
                    if updated == 0:
                        combo.pop(j, None)
                    else:
                        combo[j] = updated
                changed = True
        return vector, combo

    for j, column in enumerate(columns):
        vector, combo = reduce({i: Fraction(v) for i, v in column.items()}, {j: Fraction(1)})
        if not vector:
            continue
        row = min(vector, key=lambda r: (abs(vector[r]) != 1, r))
        pivot_value = vector[row]
        vector = {i: v / pivot_value for i, v in vector.items()}
        combo = {i: v / pivot_value for i, v in combo.items()}
        pivots[row] = len(basis)
        basis.append((vector, combo))

    residual, combo = reduce({i: Fraction(v) for i, v in rhs.items() if v != 0}, {})
    if residual:
        return None
    return {j: -v for j, v in combo.items() if v != 0}
