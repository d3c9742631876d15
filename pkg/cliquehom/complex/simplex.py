"""
Oriented simplices and chains with exact rational coefficients.

A simplex is stored as the tuple of its vertex identifiers in canonical
order (ascending ``vertex_key``). Orientation signs are computed on the fly
from the parity of the permutation that sorts a vertex sequence.
"""

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from cliquehom.exceptions import ValidationError

Simplex = Tuple[str, ...]
Coefficient = Union[int, Fraction]

_QUBIT_VERTEX = re.compile(r'^([xab]):(\d+)(.*)$')
_CHUNK = re.compile(r'(\d+)')
_KIND_RANK = {'x': 0, 'a': 1, 'b': 2}


def _natural(text: str) -> Tuple:
    return tuple((0, int(part), '') if part.isdigit() else (1, 0, part)
                 for part in _CHUNK.split(text) if part != '')


@lru_cache(maxsize=None)
def vertex_key(name: str) -> Tuple:
    """
    Total order on vertex identifiers.

    Qubit vertices ``x:i``, ``a:i``, ``b:i`` (optionally with a copy suffix)
    come first, ordered by qubit and then x < a < b. Mediators ``m:...``
    follow, and any other label comes last in natural order.
    """
    match = _QUBIT_VERTEX.match(name)
    if match:
        kind, qubit, rest = match.groups()
        return (0, int(qubit), _KIND_RANK[kind], _natural(rest))
    if name.startswith('m:'):
        return (1, 0, 0, _natural(name[2:]))
    return (2, 0, 0, _natural(name))


def permutation_sign(keys: List) -> int:
    """Parity of the permutation sorting ``keys`` (all distinct)."""
    sign = 1
    items = list(keys)
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign


def canonical_simplex(vertices: Iterable[str]) -> Tuple[Optional[Simplex], int]:
    """
    Canonical form of an oriented vertex sequence.

    Returns:
        (simplex, sign); simplex is None and sign 0 when a vertex repeats
    """
    seq = [str(v) for v in vertices]
    if len(set(seq)) != len(seq):
        return None, 0
    keys = [vertex_key(v) for v in seq]
    sign = permutation_sign(keys)
    return tuple(sorted(seq, key=vertex_key)), sign


def facets(simplex: Simplex) -> Iterator[Tuple[Simplex, int]]:
    """Yield (facet, sign) pairs of the standard alternating boundary."""
    for i in range(len(simplex)):
        yield simplex[:i] + simplex[i + 1:], (-1) ** i


class Chain:
    """Sparse formal sum of oriented p-simplices with rational coefficients."""

    __slots__ = ('dimension', 'terms')

    def __init__(self, dimension: int, terms: Optional[Mapping[Simplex, Coefficient]] = None):
        self.dimension = dimension
        self.terms: Dict[Simplex, Fraction] = {}
        for simplex, coefficient in (terms or {}).items():
            if len(simplex) != dimension + 1:
                raise ValidationError(
                    f"Simplex {simplex} does not have dimension {dimension}")
            self._accumulate(simplex, Fraction(coefficient))

    @classmethod
    def from_oriented(cls, dimension: int,
                      items: Iterable[Tuple[Iterable[str], Coefficient]]) -> 'Chain':
        """Build a chain from (vertex sequence, coefficient) pairs in any order."""
        chain = cls(dimension)
        for vertices, coefficient in items:
            simplex, sign = canonical_simplex(vertices)
            if simplex is None:
                continue
            if len(simplex) != dimension + 1:
                raise ValidationError(f"Simplex {simplex} does not have dimension {dimension}")
            chain._accumulate(simplex, sign * Fraction(coefficient))
        return chain

    @classmethod
    def simplex(cls, *vertices: str) -> 'Chain':
        return cls.from_oriented(len(vertices) - 1, [(vertices, 1)])

    def _accumulate(self, simplex: Simplex, coefficient: Fraction) -> None:
        if coefficient == 0:
            return
        total = self.terms.get(simplex, Fraction(0)) + coefficient
        if total == 0:
            self.terms.pop(simplex, None)
        else:
            self.terms[simplex] = total

    def copy(self) -> 'Chain':
        other = Chain(self.dimension)
        other.terms = dict(self.terms)
        return other

    def _check_compatible(self, other: 'Chain') -> None:
        if self.dimension != other.dimension:
            raise ValidationError(
                f"Cannot combine chains of dimension {self.dimension} and {other.dimension}")

    def __add__(self, other: 'Chain') -> 'Chain':
        self._check_compatible(other)
        result = self.copy()
        for simplex, coefficient in other.terms.items():
            result._accumulate(simplex, coefficient)
        return result

    def __sub__(self, other: 'Chain') -> 'Chain':
        return self + (-other)

    def __neg__(self) -> 'Chain':
        return self * -1

    def __mul__(self, scalar: Coefficient) -> 'Chain':
        if not isinstance(scalar, (int, Rational)):
            return NotImplemented
        result = Chain(self.dimension)
        if scalar != 0:
            result.terms = {s: c * scalar for s, c in self.terms.items()}
        return result

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dimension == other.dimension and self.terms == other.terms

    def __hash__(self):
        return hash((self.dimension, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"Chain({self.dimension}, 0)"
        parts = [f"{c}*[{' '.join(s)}]" for s, c in sorted(self.terms.items())]
        return f"Chain({self.dimension}, {' + '.join(parts)})"

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[Simplex]:
        return sorted(self.terms, key=lambda s: [vertex_key(v) for v in s])

    def vertices(self) -> List[str]:
        found = {v for simplex in self.terms for v in simplex}
        return sorted(found, key=vertex_key)

    def boundary(self) -> 'Chain':
        """Standard alternating boundary; the boundary of a 0-chain is the zero (-1)-chain."""
        result = Chain(self.dimension - 1)
        if self.dimension == 0:
            return result
        for simplex, coefficient in self.terms.items():
            for face, sign in facets(simplex):
                result._accumulate(face, sign * coefficient)
        return result

    def augmentation(self) -> Fraction:
        """Sum of coefficients of a 0-chain (the reduced-homology augmentation)."""
        if self.dimension != 0:
            return Fraction(0)
        return sum(self.terms.values(), Fraction(0))

    def map_vertices(self, mapping: Mapping[str, str]) -> 'Chain':
        """Relabel vertices; simplices whose image repeats a vertex vanish."""
        return Chain.from_oriented(
            self.dimension,
            (([mapping.get(v, v) for v in simplex], c) for simplex, c in self.terms.items()))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def to_dict(self) -> Dict[str, str]:
        return {' '.join(s): str(c) for s, c in sorted(self.terms.items())}


def wedge(a: Chain, b: Chain) -> Chain:
    """
    Bilinear wedge product of two chains.

    Vertex lists are concatenated; a repeated vertex annihilates the term and
    the sign comes from sorting into canonical order.
    """
    result = Chain(a.dimension + b.dimension + 1)
    for sa, ca in a.terms.items():
        for sb, cb in b.terms.items():
            simplex, sign = canonical_simplex(sa + sb)
            if simplex is None:
                continue
            result._accumulate(simplex, sign * ca * cb)
    return result
