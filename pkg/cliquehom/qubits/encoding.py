"""
Qubit register, integer states and the state-to-cycle map.

Qubit i owns the triangle (x:i, a:i, b:i). Its two basis 0-cycles are
|0⟩ = [x:i] - [a:i] and |1⟩ = [x:i] - [b:i]; a bitstring maps to the wedge
of the per-qubit cycles taken in ascending qubit order, so the face that
picks x on every qubit always carries coefficient +1.
"""

import logging
import re
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from cliquehom.complex.graph import Graph
from cliquehom.complex.simplex import Chain
from cliquehom.exceptions import DomainError, ValidationError


logger = logging.getLogger(__name__)

VERTEX_KINDS = ('x', 'a', 'b')
_BITS = re.compile(r'^[01]+$')


@dataclass(frozen=True)
class QubitRegister:
    """n qubits, each contributing the vertex triple (x:i, a:i, b:i)."""
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"A register needs at least one qubit, got {self.n}")

    @staticmethod
    def vertex(i: int, kind: str) -> str:
        if kind not in VERTEX_KINDS:
            raise DomainError(f"Unknown qubit vertex kind {kind!r}")
        return f"{kind}:{i}"

    @staticmethod
    def qubit_of(name: str) -> Optional[int]:
        """Qubit index of a triangle vertex, None for any other label."""
        kind, _, rest = name.partition(':')
        if kind in VERTEX_KINDS and rest.isdigit():
            return int(rest)
        return None

    def triangle(self, i: int) -> Tuple[str, str, str]:
        if not 0 <= i < self.n:
            raise DomainError(f"Qubit {i} is outside a register of {self.n}")
        return tuple(self.vertex(i, kind) for kind in VERTEX_KINDS)

    def vertices(self) -> List[str]:
        return [v for i in range(self.n) for v in self.triangle(i)]

    def edges(self) -> List[Tuple[str, str]]:
        result = []
        for i in range(self.n):
            x, a, b = self.triangle(i)
            result.extend([(x, a), (x, b), (a, b)])
        return result


class IntState:
    """
    Integer-coefficient state on n qubits.

    Bitstring position j is qubit j of whatever operand list the state is
    attached to; character '0' is the leftmost tensor factor convention.
    """

    __slots__ = ('n', 'terms')

    def __init__(self, n: int, terms: Mapping[str, int]):
        self.n = n
        self.terms: Dict[str, int] = {}
        for bits, coefficient in terms.items():
            if len(bits) != n or not _BITS.match(bits):
                raise ValidationError(f"Bitstring {bits!r} is not a {n}-qubit basis label")
            if int(coefficient) != coefficient:
                raise ValidationError(f"Coefficient {coefficient} of |{bits}⟩ is not an integer")
            if coefficient:
                self.terms[bits] = self.terms.get(bits, 0) + int(coefficient)
        self.terms = {b: c for b, c in sorted(self.terms.items()) if c}
        if not self.terms:
            raise ValidationError('A state needs at least one nonzero coefficient')

    @classmethod
    def basis(cls, bits: str) -> 'IntState':
        return cls(len(bits), {bits: 1})

    @classmethod
    def from_dict(cls, data: Mapping) -> 'IntState':
        try:
            return cls(int(data['n']), {str(k): int(v) for k, v in data['terms'].items()})
        except (KeyError, TypeError, AttributeError) as e:
            raise ValidationError(f"Malformed state: {str(e)}")

    def to_dict(self) -> Dict:
        return {'n': self.n, 'terms': dict(self.terms)}

    def normalized(self) -> 'IntState':
        """Divide by the coefficient gcd and make the first coefficient positive."""
        g = reduce(gcd, (abs(c) for c in self.terms.values()))
        first = next(iter(self.terms.values()))
        sign = 1 if first > 0 else -1
        return IntState(self.n, {b: sign * c // g for b, c in self.terms.items()})

    def tensor(self, other: 'IntState') -> 'IntState':
        return IntState(self.n + other.n, {
            b1 + b2: c1 * c2 for b1, c1 in self.terms.items() for b2, c2 in other.terms.items()})

    def permute(self, order: Sequence[int]) -> 'IntState':
        """New state whose qubit j is this state's qubit ``order[j]``."""
        if sorted(order) != list(range(self.n)):
            raise DomainError(f"{list(order)} is not a permutation of {self.n} qubits")
        return IntState(self.n, {''.join(b[i] for i in order): c for b, c in self.terms.items()})

    def flip(self, qubits: Sequence[int]) -> 'IntState':
        """Apply X on the given qubits."""
        def flipped(bits: str) -> str:
            return ''.join(('1' if ch == '0' else '0') if i in qubits else ch
                           for i, ch in enumerate(bits))
        return IntState(self.n, {flipped(b): c for b, c in self.terms.items()})

    def scaled(self, factor: int) -> 'IntState':
        return IntState(self.n, {b: c * factor for b, c in self.terms.items()})

    def __add__(self, other: 'IntState') -> 'IntState':
        if self.n != other.n:
            raise DomainError('Cannot add states on different qubit counts')
        merged = dict(self.terms)
        for b, c in other.terms.items():
            merged[b] = merged.get(b, 0) + c
        return IntState(self.n, merged)

    def __neg__(self) -> 'IntState':
        return self.scaled(-1)

    def constant_bits(self) -> Dict[int, str]:
        """Qubits whose bit is the same in every basis state of the support."""
        strings = list(self.terms)
        return {i: strings[0][i] for i in range(self.n)
                if all(s[i] == strings[0][i] for s in strings)}

    def restrict(self, qubits: Sequence[int]) -> 'IntState':
        """Drop the other qubits; only valid when they carry constant bits."""
        constant = self.constant_bits()
        dropped = [i for i in range(self.n) if i not in qubits]
        if any(i not in constant for i in dropped):
            raise DomainError('Only qubits with constant bits can be factored out')
        return IntState(len(qubits), {''.join(b[i] for i in qubits): c
                                      for b, c in self.terms.items()})

    def to_label(self) -> str:
        """Compact label such as 00-11 or -5011+4100+3101."""
        parts = []
        for bits, c in self.terms.items():
            sign = '-' if c < 0 else '+'
            parts.append(f"{sign}{abs(c) if abs(c) != 1 else ''}{bits}")
        return ''.join(parts).lstrip('+')

    def is_classical(self) -> bool:
        return len(self.terms) == 1

    def to_vector(self) -> List[int]:
        vector = [0] * (2 ** self.n)
        for bits, c in self.terms.items():
            vector[int(bits, 2)] = c
        return vector

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntState):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    def __repr__(self) -> str:
        parts = [f"{c:+d}|{b}⟩" for b, c in self.terms.items()]
        return f"IntState({' '.join(parts)})"


def triangle_graph(n: int) -> Graph:
    """The graph G_n of n disjoint triangles."""
    if n <= 0:
        raise DomainError(f"triangle_graph needs n >= 1, got {n}")
    reg = QubitRegister(n)
    return Graph(reg.vertices(), reg.edges())


def basis_zero_one(i: int) -> Tuple[Chain, Chain]:
    """The 0-cycles |0⟩_i = [x:i] - [a:i] and |1⟩_i = [x:i] - [b:i]."""
    x, a, b = (QubitRegister.vertex(i, kind) for kind in VERTEX_KINDS)
    zero = Chain(0, {(x,): 1, (a,): -1})
    one = Chain(0, {(x,): 1, (b,): -1})
    return zero, one


def _bitstring_faces(bits: str, qubits: Sequence[int]) -> Iterator[Tuple[Tuple[str, ...], int]]:
    ordered = sorted(range(len(qubits)), key=lambda j: qubits[j])
    choices = []
    for j in ordered:
        q = qubits[j]
        other = 'a' if bits[j] == '0' else 'b'
        choices.append(((f"x:{q}", 1), (f"{other}:{q}", -1)))
    for picks in product(*choices):
        sign = 1
        for _, s in picks:
            sign *= s
        yield tuple(v for v, _ in picks), sign


def state_to_cycle(reg: QubitRegister, s: IntState,
                   qubits: Optional[Sequence[int]] = None) -> Chain:
    """
    Cycle of an integer state in I(G_n).

    Args:
        reg: Register the state lives in
        s: Integer state; its bit position j sits on register qubit qubits[j]
        qubits: Register qubits the state is attached to (default 0..n-1)

    Returns:
        The (k-1)-chain Σ n_e ∧_q ([x_q] - [v_q]) over the state's k qubits
    """
    qubits = list(range(reg.n)) if qubits is None else list(qubits)
    if len(qubits) != s.n:
        raise DomainError(f"State has {s.n} qubits but {len(qubits)} operands were given")
    if len(set(qubits)) != len(qubits) or any(not 0 <= q < reg.n for q in qubits):
        raise DomainError(f"Invalid qubit operands {qubits} for a register of {reg.n}")
    terms: Dict[Tuple[str, ...], int] = {}
    for bits, coefficient in s.terms.items():
        for face, sign in _bitstring_faces(bits, qubits):
            terms[face] = terms.get(face, 0) + sign * coefficient
    return Chain(s.n - 1, {f: c for f, c in terms.items() if c})


def computational_cycles(reg: QubitRegister) -> List[Tuple[str, Chain]]:
    """All 2^n computational cycles in lexicographic bitstring order."""
    return [(''.join(bits), state_to_cycle(reg, IntState.basis(''.join(bits))))
            for bits in product('01', repeat=reg.n)]
