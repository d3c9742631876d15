"""
Quantum k-SAT instances from the clock construction.

Clock particle t (1-based) occupies two qubits appended after the N
computational qubits: N + 2(t-1) and N + 2(t-1) + 1. Its states are
unborn = 00, active₁ = 01, active₂ = 10 and dead = 11. Every Hamiltonian
term is decomposed into rank-1 projectors onto integer states.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from cliquehom.exceptions import DomainError, ValidationError
from cliquehom.qubits.encoding import IntState
from cliquehom.reduction.circuit import Circuit, Gate, sparsify


logger = logging.getLogger(__name__)

UNBORN, ACTIVE_1, ACTIVE_2, DEAD = '00', '01', '10', '11'

# Pythagorean rotation scaled by 5: columns are the images of |0⟩ and |1⟩
PYTH_SCALE = 5
PYTH_IMAGES = {'0': {'0': 3, '1': -4}, '1': {'0': 4, '1': 3}}

CLOCK_PAIR_TERMS = {
    'clock3': (ACTIVE_1 + ACTIVE_1, ACTIVE_1 + ACTIVE_2, ACTIVE_2 + ACTIVE_1, ACTIVE_2 + ACTIVE_2),
    'clock4': (ACTIVE_1 + DEAD, ACTIVE_2 + DEAD, UNBORN + DEAD),
    'clock5': (UNBORN + ACTIVE_1, UNBORN + ACTIVE_2, UNBORN + DEAD),
}


@dataclass(frozen=True)
class ProjectorTerm:
    """Rank-1 projector onto ``state`` acting on ``qubits`` (bit j on qubits[j])."""
    qubits: Tuple[int, ...]
    state: IntState
    provenance: str = ''

    def __post_init__(self):
        if len(self.qubits) != self.state.n:
            raise ValidationError(f"Term on {len(self.qubits)} qubits carries a {self.state.n}-qubit state")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValidationError(f"Term repeats a qubit: {self.qubits}")

    @property
    def kind(self) -> str:
        return self.provenance.split('[', 1)[0]

    def key(self) -> Tuple:
        """Identity up to qubit order and overall scale."""
        order = sorted(range(len(self.qubits)), key=lambda j: self.qubits[j])
        return tuple(self.qubits[j] for j in order), self.state.permute(order).normalized()

    def to_dict(self) -> Dict[str, Any]:
        return {'qubits': list(self.qubits), 'state': self.state.to_dict(), 'provenance': self.provenance}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'ProjectorTerm':
        try:
            return cls(tuple(int(q) for q in data['qubits']), IntState.from_dict(data['state']),
                       str(data.get('provenance', '')))
        except (KeyError, TypeError) as e:
            raise ValidationError(f"Malformed projector term: {str(e)}")


@dataclass
class SatInstance:
    """Quantum k-SAT instance: n qubits and a list of rank-1 projector terms."""
    n: int
    terms: List[ProjectorTerm] = field(default_factory=list)
    n_computational: Optional[int] = None
    n_particles: int = 0

    def validate(self) -> List[str]:
        errors = []
        for i, term in enumerate(self.terms):
            if any(not 0 <= q < self.n for q in term.qubits):
                errors.append(f"Term {i} acts outside 0..{self.n - 1}")
            if len(term.qubits) > 4:
                errors.append(f"Term {i} acts on {len(term.qubits)} > 4 qubits")
        return errors

    def incidence(self) -> Dict[int, int]:
        counts = {q: 0 for q in range(self.n)}
        for term in self.terms:
            for q in term.qubits:
                counts[q] += 1
        return counts

    def max_incidence(self) -> int:
        return max(self.incidence().values(), default=0)

    def locality(self) -> int:
        return max((len(t.qubits) for t in self.terms), default=0)

    def counts_by_provenance(self) -> Dict[str, int]:
        return dict(sorted(Counter(t.kind for t in self.terms).items()))

    def to_dict(self) -> Dict[str, Any]:
        data = {'n': self.n, 'terms': [t.to_dict() for t in self.terms]}
        if self.n_computational is not None:
            data['n_computational'] = self.n_computational
            data['n_particles'] = self.n_particles
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'SatInstance':
        try:
            instance = cls(int(data['n']), [ProjectorTerm.from_dict(t) for t in data['terms']],
                           data.get('n_computational'), int(data.get('n_particles', 0)))
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"Malformed instance: {str(e)}")
        errors = instance.validate()
        if errors:
            raise ValidationError('; '.join(errors))
        return instance

    @classmethod
    def from_json(cls, text: str) -> 'SatInstance':
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise ValidationError(f"Instance file is not valid JSON: {str(e)}")


def _gate_images(gate: Gate, bits: str) -> Tuple[int, Dict[str, int]]:
    """(scale, scale·U|bits⟩) with integer coefficients."""
    if gate.kind == 'cnot':
        control, target = bits
        flipped = target if control == '0' else ('1' if target == '0' else '0')
        return 1, {control + flipped: 1}
    if gate.kind == 'pyth':
        return PYTH_SCALE, dict(PYTH_IMAGES[bits])
    if gate.kind == 'id':
        return 1, {bits: 1}
    raise DomainError(f"No propagation rule for gate {gate.kind!r}")


def propagation_states(gate: Gate) -> List[IntState]:
    """States |a₁⟩|ψ⟩ - |a₂⟩U|ψ⟩ over the gate's basis inputs, on (clock, clock, operands)."""
    states = []
    for bits in (''.join(p) for p in product('01', repeat=len(gate.operands))):
        scale, image = _gate_images(gate, bits)
        terms = {ACTIVE_1 + bits: scale}
        for out, c in image.items():
            terms[ACTIVE_2 + out] = terms.get(ACTIVE_2 + out, 0) - c
        states.append(IntState(2 + len(gate.operands), terms).normalized())
    return states


def bravyi_projectors(c: Circuit, sparsified: bool = False) -> SatInstance:
    """
    Rank-1 projector terms of the clock Hamiltonian of ``c``.

    Args:
        c: Circuit over {cnot, pyth, id}
        sparsified: Lay the circuit out on the grid first; clock pair terms then
            only couple neighbouring particles

    Returns:
        SatInstance on N + 2L qubits, duplicate terms removed
    """
    if sparsified:
        c = sparsify(c)
    errors = c.validate()
    if errors:
        raise DomainError('; '.join(errors))
    if not c.gates:
        raise DomainError('A clock construction needs at least one gate')

    N, L = c.n_qubits, len(c.gates)

    def particle(t: int) -> Tuple[int, int]:
        return N + 2 * (t - 1), N + 2 * (t - 1) + 1

    terms: List[ProjectorTerm] = []

    def emit(qubits: Sequence[int], state: IntState, provenance: str) -> None:
        terms.append(ProjectorTerm(tuple(qubits), state, provenance))

    emit(particle(1), IntState.basis(UNBORN), 'clock1')
    emit(particle(L), IntState.basis(DEAD), 'clock2')

    if sparsified:
        pairs = [(j, j + 1) for j in range(1, L)]
    else:
        pairs = list(combinations(range(1, L + 1), 2))
    for name, patterns in CLOCK_PAIR_TERMS.items():
        for j, k in pairs:
            for bits in patterns:
                emit(particle(j) + particle(k), IntState.basis(bits), f"{name}[{j},{k}]")
    for j in range(1, L):
        emit(particle(j) + particle(j + 1), IntState.basis(DEAD + UNBORN), f"clock6[{j}]")

    # on the grid a qubit is checked when the first gate acting on it starts
    first_touch = {}
    if sparsified:
        for t, gate in enumerate(c.gates, start=1):
            for q in gate.operands:
                first_touch.setdefault(q, t)
    for b in c.inputs:
        emit(particle(first_touch.get(b, 1)) + (b,), IntState.basis(ACTIVE_1 + '1'), f"in[{b}]")

    for t, gate in enumerate(c.gates, start=1):
        for state in propagation_states(gate):
            emit(particle(t) + gate.operands, state, f"prop[{t}]")
    for t in range(1, L):
        emit(particle(t) + particle(t + 1),
             IntState(4, {ACTIVE_2 + UNBORN: 1, DEAD + ACTIVE_1: -1}), f"prop-prime[{t}]")

    emit(particle(L) + (c.output,), IntState.basis(ACTIVE_2 + '1'), 'out')

    unique, seen = [], set()
    for term in terms:
        key = term.key()
        if key not in seen:
            seen.add(key)
            unique.append(term)

    instance = SatInstance(N + 2 * L, unique, n_computational=N, n_particles=L)
    logger.info(f"Clock instance: {instance.n} qubits, {len(unique)} terms "
                f"({len(terms) - len(unique)} duplicates dropped), max incidence {instance.max_incidence()}")
    return instance
