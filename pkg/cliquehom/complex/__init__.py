"""
Graphs, oriented simplices, chains and the clique / independence complexes
built from them.
"""

from cliquehom.complex.graph import Graph, complement
from cliquehom.complex.simplex import Chain, Simplex, canonical_simplex, vertex_key, wedge
from cliquehom.complex.cliques import (
    SimplicialComplex, clique_complex, enumerate_cliques, independence_complex, is_flag
)

__all__ = [
    'Graph', 'complement', 'Chain', 'Simplex', 'canonical_simplex', 'vertex_key', 'wedge',
    'SimplicialComplex', 'clique_complex', 'enumerate_cliques', 'independence_complex', 'is_flag',
]
