"""
Fermion hard-core model on a graph.

Sector p is spanned by the independent sets of size p in canonical order;
the empty set is the vacuum. The supercharge block Q† from sector p to
sector p-1 is the boundary matrix of the independence complex, with the
augmentation as the p = 1 block, so the zero-energy states of
H = QQ† + Q†Q in sector p realize the reduced homology in dimension p-1.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from cliquehom.complex.cliques import enumerate_cliques
from cliquehom.complex.graph import Graph, complement
from cliquehom.complex.simplex import Simplex
from cliquehom.config import current_config
from cliquehom.exceptions import DomainError, ResourceError
from cliquehom.homology.linalg import rank_exact


logger = logging.getLogger(__name__)


class HardCoreModel:
    """Independent-set sectors of one graph."""

    def __init__(self, g: Graph, sector_cap: Optional[int] = None):
        self.graph = g
        cap = sector_cap if sector_cap is not None else current_config().SECTOR_CAP
        layers = enumerate_cliques(complement(g), len(g.vertices)) if g.vertices else []
        self.sectors: List[List[Simplex]] = [[()]] + [layer for layer in layers if layer]
        for p, basis in enumerate(self.sectors):
            if len(basis) > cap:
                raise ResourceError(f"Sector {p} has {len(basis)} states, above the cap {cap}")
        self._index = [{s: i for i, s in enumerate(basis)} for basis in self.sectors]

    @property
    def max_fermions(self) -> int:
        return len(self.sectors) - 1

    def basis(self, p: int) -> List[Simplex]:
        if p < 0:
            raise DomainError(f"Fermion number must be non-negative, got {p}")
        return self.sectors[p] if p < len(self.sectors) else []

    def supercharge_block(self, p: int) -> np.ndarray:
        """Q† from sector p to sector p-1 (rows: sector p-1, columns: sector p)."""
        columns = self.basis(p)
        rows = self.basis(p - 1) if p >= 1 else []
        block = np.zeros((len(rows), len(columns)), dtype=np.int64)
        if p < 1:
            return block
        index = self._index[p - 1]
        for j, s in enumerate(columns):
            for i in range(len(s)):
                block[index[s[:i] + s[i + 1:]], j] = (-1) ** i
        return block

    def homology_hamiltonian(self, p: int) -> np.ndarray:
        """Sector block of ∂ᵀ∂ + ∂∂ᵀ built from the supercharge blocks."""
        down = self.supercharge_block(p)
        up = self.supercharge_block(p + 1)
        size = len(self.basis(p))
        result = np.zeros((size, size), dtype=np.int64)
        if down.size:
            result += down.T @ down
        if up.size:
            result += up @ up.T
        return result

    def hopping_hamiltonian(self, p: int) -> np.ndarray:
        """
        Sector block from the hopping-plus-potential form.

        Diagonal: occupied sites plus empty sites with no occupied neighbour.
        Off-diagonal: a fermion hops between neighbouring sites i, j with sign
        (-1)^(pos_σ(j) + pos_τ(i)).
        """
        basis = self.basis(p)
        index = self._index[p] if p < len(self._index) else {}
        size = len(basis)
        result = np.zeros((size, size), dtype=np.int64)
        g = self.graph
        for col, sigma in enumerate(basis):
            occupied = set(sigma)
            blocked = set().union(*(g.neighbours(v) for v in sigma)) if sigma else set()
            free = sum(1 for v in g.vertices if v not in occupied and v not in blocked)
            result[col, col] = len(sigma) + free
            for pos_j, j in enumerate(sigma):
                rest = sigma[:pos_j] + sigma[pos_j + 1:]
                for i in g.neighbours(j):
                    if i in occupied or any(g.has_edge(i, v) for v in rest):
                        continue
                    tau = tuple(sorted(rest + (i,), key=g.index))
                    row = index[tau]
                    result[row, col] += (-1) ** (pos_j + tau.index(i))
        return result

    def groundspace_dim(self, p: int) -> int:
        size = len(self.basis(p))
        if size == 0:
            return 0
        h = self.homology_hamiltonian(p)
        columns = [{int(i): int(h[i, j]) for i in np.nonzero(h[:, j])[0]} for j in range(size)]
        return size - rank_exact(columns)


def supercharge_block(g: Graph, p: int) -> np.ndarray:
    return HardCoreModel(g).supercharge_block(p)


def hopping_hamiltonian_sector(g: Graph, p: int) -> np.ndarray:
    return HardCoreModel(g).hopping_hamiltonian(p)


def homology_hamiltonian_sector(g: Graph, p: int) -> np.ndarray:
    return HardCoreModel(g).homology_hamiltonian(p)


def hardcore_hamiltonian_sector(g: Graph, p: int, form: str = 'hopping') -> np.ndarray:
    """
    Integer sector-p block of H = QQ† + Q†Q.

    Args:
        g: Graph
        p: Fermion number
        form: 'hopping' for the displayed hopping-plus-potential form, 'homology' for ∂ᵀ∂ + ∂∂ᵀ
    """
    if p < 0:
        raise DomainError(f"Fermion number must be non-negative, got {p}")
    if form == 'hopping':
        return hopping_hamiltonian_sector(g, p)
    if form == 'homology':
        return homology_hamiltonian_sector(g, p)
    raise DomainError(f"Unknown Hamiltonian form {form!r}")


def susy_groundspace_dims(g: Graph) -> List[int]:
    """Exact zero-energy dimension of every fermion-number sector."""
    model = HardCoreModel(g)
    return [model.groundspace_dim(p) for p in range(model.max_fermions + 1)]


@dataclass
class SusyReport:
    sector_dims: List[int]
    groundspace_dims: List[int]
    reduced_betti: List[int]
    forms_agree: bool
    pairing_ranks: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def matches_homology(self) -> bool:
        return self.groundspace_dims == self.reduced_betti

    def to_dict(self) -> Dict[str, Any]:
        return {
            'sector_dims': list(self.sector_dims),
            'groundspace_dims': list(self.groundspace_dims),
            'reduced_betti_shifted': list(self.reduced_betti),
            'forms_agree': self.forms_agree,
            'matches_homology': self.matches_homology,
        }


def _rank(matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    return rank_exact([{int(i): int(matrix[i, j]) for i in np.nonzero(matrix[:, j])[0]}
                       for j in range(matrix.shape[1])])


def susy_report(g: Graph) -> SusyReport:
    """
    Compare the hard-core ground spaces with the reduced homology of I(g).

    The reduced Betti numbers come from the ranks of the supercharge blocks:
    β̃_{p-1} = dim sector p - rank Q†_p - rank Q†_{p+1}.
    """
    model = HardCoreModel(g)
    top = model.max_fermions
    sector_dims = [len(model.basis(p)) for p in range(top + 1)]
    ranks = [_rank(model.supercharge_block(p)) for p in range(top + 2)]
    reduced = [sector_dims[p] - ranks[p] - ranks[p + 1] for p in range(top + 1)]
    ground = [model.groundspace_dim(p) for p in range(top + 1)]
    agree = all(np.array_equal(model.hopping_hamiltonian(p), model.homology_hamiltonian(p))
                for p in range(top + 1))
    pairing = [(_rank(model.supercharge_block(p + 1) @ model.supercharge_block(p + 1).T),
                _rank(model.supercharge_block(p + 1).T @ model.supercharge_block(p + 1)))
               for p in range(top)]
    report = SusyReport(sector_dims, ground, reduced, agree, pairing)
    logger.info(f"SUSY check on {g}: ground {ground}, matches {report.matches_homology}")
    return report
