"""
Simplicial complexes and clique enumeration.

Clique and independence complexes are built by ordered extension: a clique
is only ever extended by common neighbours that come later in the vertex
order, so every clique is produced exactly once and never by a general
subgraph search.
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence

from cliquehom.complex.graph import Graph, complement
from cliquehom.complex.simplex import Simplex, vertex_key
from cliquehom.config import current_config
from cliquehom.exceptions import DomainError, ResourceError, ValidationError


logger = logging.getLogger(__name__)


class SimplicialComplex:
    """
    Finite abstract simplicial complex materialized up to ``max_dim``.

    ``faces[d]`` lists the d-simplices in canonical order. ``complete`` is
    True when it is known that no simplices exist above ``max_dim``.
    """

    def __init__(self, vertices: Sequence[str], faces: List[List[Simplex]],
                 max_dim: int, complete: bool = False):
        self.vertices = list(vertices)
        self.faces = [list(layer) for layer in faces]
        while len(self.faces) < max_dim + 1:
            self.faces.append([])
        self.max_dim = max_dim
        self.complete = complete
        self._indices: Dict[int, Dict[Simplex, int]] = {}

    @classmethod
    def from_maximal_faces(cls, maximal_faces: Iterable[Iterable[str]],
                           vertices: Optional[Iterable[str]] = None) -> 'SimplicialComplex':
        """Downward closure of a family of faces."""
        closure = set()
        names = set(str(v) for v in vertices) if vertices is not None else set()
        for face in maximal_faces:
            ordered = tuple(sorted((str(v) for v in face), key=vertex_key))
            if len(set(ordered)) != len(ordered):
                raise ValidationError(f"Face {face} repeats a vertex")
            names.update(ordered)
            for size in range(1, len(ordered) + 1):
                closure.update(combinations(ordered, size))
        closure.update((v,) for v in names)
        top = max((len(s) for s in closure), default=1) - 1
        layers = [[] for _ in range(top + 1)]
        for simplex in closure:
            layers[len(simplex) - 1].append(simplex)
        for layer in layers:
            layer.sort(key=lambda s: [vertex_key(v) for v in s])
        return cls(sorted(names, key=vertex_key), layers, top, complete=True)

    @property
    def top_dim(self) -> int:
        """Highest dimension with at least one materialized face (-1 if empty)."""
        for d in range(len(self.faces) - 1, -1, -1):
            if self.faces[d]:
                return d
        return -1

    def f_vector(self) -> List[int]:
        return [len(layer) for layer in self.faces]

    def faces_of(self, dimension: int) -> List[Simplex]:
        if dimension < 0:
            return []
        if dimension > self.max_dim:
            if self.complete:
                return []
            raise DomainError(
                f"Dimension {dimension} is above the materialized dimension {self.max_dim}")
        return self.faces[dimension]

    def count(self, dimension: int) -> int:
        return len(self.faces_of(dimension))

    def index_of(self, simplex: Simplex) -> int:
        dimension = len(simplex) - 1
        if dimension not in self._indices:
            self._indices[dimension] = {s: i for i, s in enumerate(self.faces_of(dimension))}
        return self._indices[dimension][simplex]

    def index_map(self, dimension: int) -> Dict[Simplex, int]:
        if dimension not in self._indices:
            self._indices[dimension] = {s: i for i, s in enumerate(self.faces_of(dimension))}
        return self._indices[dimension]

    def contains(self, simplex: Iterable[str]) -> bool:
        ordered = tuple(sorted(simplex, key=vertex_key))
        dimension = len(ordered) - 1
        if dimension > self.max_dim:
            return False
        return ordered in self.index_map(dimension)

    def skeleton(self, dimension: int) -> 'SimplicialComplex':
        kept = self.faces[:dimension + 1]
        return SimplicialComplex(self.vertices, kept, dimension,
                                 complete=self.complete and dimension >= self.top_dim)

    def maximal_faces(self) -> List[Simplex]:
        """Faces not contained in a materialized face one dimension higher."""
        maximal = []
        for d, layer in enumerate(self.faces):
            covered = set()
            if d + 1 < len(self.faces):
                for simplex in self.faces[d + 1]:
                    for i in range(len(simplex)):
                        covered.add(simplex[:i] + simplex[i + 1:])
            maximal.extend(s for s in layer if s not in covered)
        return maximal

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def one_skeleton_graph(self) -> Graph:
        return Graph(self.vertices, self.faces[1] if len(self.faces) > 1 else [])

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector()}, max_dim={self.max_dim})"


def enumerate_cliques(g: Graph, max_size: int) -> List[List[Simplex]]:
    """
    All cliques of ``g`` with 1..max_size vertices, grouped by size.

    Each list is in lexicographic order of the canonical vertex order.
    """
    n = len(g.vertices)
    forward = [0] * n
    for edge in g.edges:
        u, v = sorted(g.index(w) for w in edge)
        forward[u] |= 1 << v

    layers: List[List[Simplex]] = [[] for _ in range(max_size)]
    names = g.vertices

    def extend(clique: List[int], candidates: int) -> None:
        layers[len(clique) - 1].append(tuple(names[i] for i in clique))
        if len(clique) == max_size:
            return
        while candidates:
            low = candidates & -candidates
            j = low.bit_length() - 1
            candidates ^= low
            clique.append(j)
            extend(clique, candidates & forward[j])
            clique.pop()

    if max_size >= 1:
        for i in range(n):
            extend([i], forward[i])
    return layers


def clique_complex(g: Graph, max_dim: int, dim_cap: Optional[int] = None) -> SimplicialComplex:
    """
    Clique complex of ``g`` materialized through dimension ``max_dim``.

    Args:
        g: Input graph
        max_dim: Highest simplex dimension to enumerate
        dim_cap: Optional override of the configured MAX_DIM_CAP

    Returns:
        SimplicialComplex whose d-faces are the (d+1)-cliques of g
    """
    if max_dim < 0:
        raise DomainError('max_dim must be non-negative')
    cap = dim_cap if dim_cap is not None else current_config().MAX_DIM_CAP
    if max_dim > cap:
        raise ResourceError(f"Requested dimension {max_dim} exceeds the cap {cap}")

    layers = enumerate_cliques(g, max_dim + 1)
    complete = not layers[max_dim] or _no_larger_clique(g, layers[max_dim])
    logger.debug(f"Clique complex of {g} to dim {max_dim}: f={[len(l) for l in layers]}")
    return SimplicialComplex(g.vertices, layers, max_dim, complete=complete)


def _no_larger_clique(g: Graph, top_layer: List[Simplex]) -> bool:
    for simplex in top_layer:
        common = g.neighbours(simplex[0])
        for v in simplex[1:]:
            common &= g.neighbours(v)
            if not common:
                break
        if common:
            return False
    return True


def independence_complex(g: Graph, max_dim: int, dim_cap: Optional[int] = None) -> SimplicialComplex:
    """Independence complex I(g) = Cl(complement(g))."""
    return clique_complex(complement(g), max_dim, dim_cap=dim_cap)


def is_flag(k: SimplicialComplex) -> bool:
    """True iff ``k`` is the clique complex of its own 1-skeleton."""
    if not k.complete:
        raise DomainError('is_flag needs a complex materialized to its top dimension')
    top = k.top_dim
    if top < 1:
        return True
    cliques = enumerate_cliques(k.one_skeleton_graph(), top + 2)
    for d in range(top + 1):
        if set(cliques[d]) != set(k.faces[d]):
            return False
    return not cliques[top + 1]
