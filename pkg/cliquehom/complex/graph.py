"""
Undirected simple graphs.

Vertex identifiers are strings; the vertex order is fixed at construction
(ascending ``vertex_key``) and determines simplex orientation downstream.
"""

import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import networkx as nx

from cliquehom.complex.simplex import vertex_key
from cliquehom.exceptions import ValidationError


logger = logging.getLogger(__name__)

Edge = FrozenSet[str]


class Graph:
    """Undirected simple graph with a canonical vertex order."""

    def __init__(self, vertices: Iterable, edges: Iterable[Tuple] = ()):
        names = [str(v) for v in vertices]
        if len(set(names)) != len(names):
            raise ValidationError('Duplicate vertex identifiers')
        self.vertices: List[str] = sorted(names, key=vertex_key)
        self._index: Dict[str, int] = {v: i for i, v in enumerate(self.vertices)}
        self._adjacency: Dict[str, Set[str]] = {v: set() for v in self.vertices}
        self.edges: Set[Edge] = set()
        for edge in edges:
            self._add_edge(*edge)

    def _add_edge(self, u, v) -> None:
        u, v = str(u), str(v)
        if u == v:
            raise ValidationError(f"Self-loop on vertex {u}")
        for w in (u, v):
            if w not in self._index:
                raise ValidationError(f"Edge endpoint {w} is not a declared vertex")
        self.edges.add(frozenset((u, v)))
        self._adjacency[u].add(v)
        self._adjacency[v].add(u)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> 'Graph':
        return cls(g.nodes(), g.edges())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    def index(self, vertex: str) -> int:
        return self._index[vertex]

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._index

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adjacency.get(u, ())

    def neighbours(self, vertex: str) -> Set[str]:
        return set(self._adjacency[vertex])

    def degree(self, vertex: str) -> int:
        return len(self._adjacency[vertex])

    def max_degree(self) -> int:
        return max((len(n) for n in self._adjacency.values()), default=0)

    def induced(self, vertices: Iterable[str]) -> 'Graph':
        keep = set(vertices)
        return Graph(keep, [tuple(e) for e in self.edges if e <= keep])

    def union(self, other: 'Graph') -> 'Graph':
        return Graph(set(self.vertices) | set(other.vertices),
                     [tuple(e) for e in self.edges | other.edges])

    def with_edges(self, vertices: Iterable[str], edges: Iterable[Tuple[str, str]]) -> 'Graph':
        """Copy extended by extra vertices and edges."""
        return Graph(set(self.vertices) | set(vertices),
                     [tuple(e) for e in self.edges] + list(edges))

    def sorted_edges(self) -> List[Tuple[str, str]]:
        pairs = [tuple(sorted(e, key=vertex_key)) for e in self.edges]
        return sorted(pairs, key=lambda p: (vertex_key(p[0]), vertex_key(p[1])))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


def complement(g: Graph) -> Graph:
    """Same vertex set; edges are exactly the non-edges of ``g``."""
    h = nx.complement(g.to_networkx())
    result = Graph(g.vertices, h.edges())
    logger.debug(f"Complement of {g}: {len(result.edges)} edges")
    return result


def complete_graph(vertices: Iterable) -> Graph:
    names = [str(v) for v in vertices]
    return Graph(names, combinations(names, 2))
