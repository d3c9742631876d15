"""
Verification circuits over {CNOT, U_Pyth} and their sparsified form.

Circuit text format::

    qubits 3
    witness 2
    output 0
    cnot 0 2
    pyth 1
    id 0

Lines may carry ``#`` comments. Qubits not listed as witness form the input
register, which starts in |0⟩. An optional ``input i ...`` line overrides the
input register explicitly.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from cliquehom.exceptions import DomainError, ParseError


logger = logging.getLogger(__name__)

GATE_ARITY = {'cnot': 2, 'pyth': 1, 'id': 1}


@dataclass(frozen=True)
class Gate:
    kind: str
    operands: Tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind} {' '.join(map(str, self.operands))}"


@dataclass
class Circuit:
    """Gate sequence on N qubits with witness, input and output registers."""
    n_qubits: int
    gates: List[Gate] = field(default_factory=list)
    witness: Tuple[int, ...] = ()
    output: int = 0
    inputs: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        self.witness = tuple(sorted(set(self.witness)))
        if self.inputs is None:
            self.inputs = tuple(q for q in range(self.n_qubits) if q not in self.witness)
        else:
            self.inputs = tuple(sorted(set(self.inputs)))

    def validate(self) -> List[str]:
        errors = []
        if self.n_qubits < 1:
            errors.append('A circuit needs at least one qubit')
        for q in self.witness + self.inputs + (self.output,):
            if not 0 <= q < self.n_qubits:
                errors.append(f"Qubit {q} is out of range")
        if set(self.witness) & set(self.inputs):
            errors.append('Input and witness registers overlap')
        for gate in self.gates:
            if gate.kind not in GATE_ARITY:
                errors.append(f"Unknown gate {gate.kind!r}")
                continue
            if len(gate.operands) != GATE_ARITY[gate.kind]:
                errors.append(f"{gate.kind} takes {GATE_ARITY[gate.kind]} operands")
            if len(set(gate.operands)) != len(gate.operands):
                errors.append(f"{gate} repeats an operand")
            if any(not 0 <= q < self.n_qubits for q in gate.operands):
                errors.append(f"{gate} acts outside 0..{self.n_qubits - 1}")
        return errors

    def gate_counts(self) -> Dict[int, int]:
        """Number of gates acting on each qubit."""
        counts = {q: 0 for q in range(self.n_qubits)}
        for gate in self.gates:
            for q in gate.operands:
                counts[q] += 1
        return counts

    def to_text(self) -> str:
        lines = [f"qubits {self.n_qubits}"]
        if self.witness:
            lines.append(f"witness {' '.join(map(str, self.witness))}")
        default_inputs = tuple(q for q in range(self.n_qubits) if q not in self.witness)
        if self.inputs != default_inputs:
            lines.append(f"input {' '.join(map(str, self.inputs))}")
        lines.append(f"output {self.output}")
        lines.extend(str(g) for g in self.gates)
        return '\n'.join(lines) + '\n'

    def to_dict(self) -> Dict:
        return {
            'qubits': self.n_qubits,
            'witness': list(self.witness),
            'inputs': list(self.inputs),
            'output': self.output,
            'gates': [[g.kind, *g.operands] for g in self.gates],
        }


def _int(token: str, number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected a qubit index, got {token!r}", line=number)
    if value < 0:
        raise ParseError(f"negative qubit index {value}", line=number)
    return value


def parse_circuit(text: str) -> Circuit:
    """
    Parse the circuit text format.

    Raises:
        ParseError: unknown gate, bad operand or malformed header, with the line number
    """
    n_qubits = None
    witness: List[int] = []
    inputs: Optional[List[int]] = None
    output = 0
    gates: List[Tuple[Gate, int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split('#', 1)[0].split()
        if not tokens:
            continue
        head, args = tokens[0].lower(), tokens[1:]
        if n_qubits is None and head != 'qubits':
            raise ParseError("the 'qubits N' header must come first", line=number)
        if head == 'qubits':
            if n_qubits is not None or len(args) != 1:
                raise ParseError("expected a single 'qubits N' header", line=number)
            n_qubits = _int(args[0], number)
            if n_qubits < 1:
                raise ParseError('a circuit needs at least one qubit', line=number)
        elif head == 'witness':
            witness.extend(_int(a, number) for a in args)
        elif head == 'input':
            inputs = (inputs or []) + [_int(a, number) for a in args]
        elif head == 'output':
            if len(args) != 1:
                raise ParseError("expected 'output i'", line=number)
            output = _int(args[0], number)
        elif head in GATE_ARITY:
            if len(args) != GATE_ARITY[head]:
                raise ParseError(f"{head} takes {GATE_ARITY[head]} operand(s)", line=number)
            gates.append((Gate(head, tuple(_int(a, number) for a in args)), number))
        else:
            raise ParseError(f"unknown gate or directive {tokens[0]!r}", line=number)

        used = list(args) if head != 'qubits' else []
        for q in (_int(a, number) for a in used):
            if q >= n_qubits:
                raise ParseError(f"qubit {q} is out of range for {n_qubits} qubits", line=number)
        if head in GATE_ARITY and len(set(args)) != len(args):
            raise ParseError(f"{head} repeats an operand", line=number)

    if n_qubits is None:
        raise ParseError("missing 'qubits N' header", line=1)
    circuit = Circuit(n_qubits, [g for g, _ in gates], tuple(witness), output,
                      tuple(inputs) if inputs is not None else None)
    errors = circuit.validate()
    if errors:
        raise ParseError('; '.join(errors))
    logger.debug(f"Parsed circuit: {n_qubits} qubits, {len(circuit.gates)} gates")
    return circuit


def _swap(p: int, q: int) -> List[Gate]:
    return [Gate('cnot', (p, q)), Gate('cnot', (q, p)), Gate('cnot', (p, q))]


def nearest_neighbour_gates(c: Circuit) -> List[Gate]:
    """Rewrite every CNOT on distant qubits as SWAPs in, the CNOT, SWAPs back out."""
    result: List[Gate] = []
    for gate in c.gates:
        if gate.kind != 'cnot' or abs(gate.operands[0] - gate.operands[1]) == 1:
            result.append(gate)
            continue
        control, target = gate.operands
        if control < target:
            chain = [(p - 1, p) for p in range(target, control + 1, -1)]
            moved = control + 1
        else:
            chain = [(p, p + 1) for p in range(target, control - 1)]
            moved = control - 1
        swaps = [g for p, q in chain for g in _swap(p, q)]
        result.extend(swaps)
        result.append(Gate('cnot', (control, moved)))
        result.extend(g for p, q in reversed(chain) for g in _swap(p, q))
    return result


def sparsify(c: Circuit) -> Circuit:
    """
    Lay the circuit out on an n × T' grid of qubits.

    Qubits sit on a line in index order. After SWAP insertion every gate is
    nearest-neighbour and column t of the grid holds gate t, identity gates on
    the other rows, and then SWAPs (three CNOTs each, bottom row first)
    moving every row to column t+1. Cell (r, t) is qubit t·n + r.

    Returns:
        Circuit on n·T' qubits whose input register is the column-0 cells of the
        original input rows and whose output is the original output row in the last column
    """
    errors = c.validate()
    if errors:
        raise DomainError('; '.join(errors))
    n = c.n_qubits
    line = nearest_neighbour_gates(c)
    columns = max(len(line), 1)

    def cell(row: int, column: int) -> int:
        return column * n + row

    gates: List[Gate] = []
    for t, gate in enumerate(line):
        gates.append(Gate(gate.kind, tuple(cell(r, t) for r in gate.operands)))
        gates.extend(Gate('id', (cell(r, t),)) for r in range(n) if r not in gate.operands)
        if t + 1 < columns:
            for r in reversed(range(n)):
                gates.extend(_swap(cell(r, t), cell(r, t + 1)))

    inputs = tuple(cell(r, 0) for r in c.inputs)
    witness = tuple(q for q in range(n * columns) if q not in inputs)
    result = Circuit(n * columns, gates, witness, cell(c.output, columns - 1), inputs)
    logger.info(f"Sparsified {n}x{len(c.gates)} circuit into {n}x{columns} grid, {len(gates)} gates")
    return result
