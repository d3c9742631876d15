"""
Hardcoded gadgets and the named gadget registry.

Gadgets here live on local qubits 0..k-1 and are placed on register qubits
with ``relabel_qubits``. Neighbourhood tables list, per mediator, the qubit
vertices it shares a complex edge with; the graph edges are the complement.
"""

import logging
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Sequence

from cliquehom.exceptions import DomainError
from cliquehom.gadgets.algebra import relabel_qubits, tensor_classical
from cliquehom.gadgets.gadget import GadgetGraph, from_complex_neighbourhoods
from cliquehom.gadgets.surgery import gadget_pythagorean
from cliquehom.qubits.encoding import IntState


logger = logging.getLogger(__name__)

# |00⟩ - |11⟩ on local qubits 0, 1
ENT_NEIGHBOURHOODS = {
    1: ('a:1', 'x:0', 'b:1'),
    2: ('b:1', 'b:0', 'x:1'),
    3: ('x:1', 'a:0', 'a:1'),
}

# |101⟩ - |010⟩ on local qubits 0, 1, 2
CNOT_NEIGHBOURHOODS = {
    1: ('b:0', 'a:1', 'x:2', 'x:1', 'a:0', 'b:1'),
    2: ('x:0', 'a:1', 'b:2', 'x:2', 'b:1', 'a:2'),
    3: ('x:0', 'x:1', 'b:2', 'b:0', 'a:2', 'a:0'),
    4: ('b:0', 'a:1', 'b:2'),
    5: ('a:0', 'b:1', 'a:2'),
}


def _swap_ab(vertex: str, flips: Iterable[int]) -> str:
    kind, _, rest = vertex.partition(':')
    if kind in ('a', 'b') and int(rest) in flips:
        return f"{'b' if kind == 'a' else 'a'}:{rest}"
    return vertex


def _complement_pair(base: str, flips: Sequence[int]) -> IntState:
    state = IntState(len(base), {base: 1, ''.join('1' if c == '0' else '0' for c in base): -1})
    return state.flip(flips)


def _hardcoded(name: str, gid: str, n: int, table: Dict[int, Sequence[str]], base: str,
               flips: Sequence[int]) -> GadgetGraph:
    flips = sorted(set(flips))
    if any(not 0 <= q < n for q in flips):
        raise DomainError(f"Flip qubits {flips} are outside 0..{n - 1}")
    mediators = {f"m:{gid}:{k}": [_swap_ab(v, flips) for v in seen] for k, seen in table.items()}
    target = _complement_pair(base, flips)
    return from_complex_neighbourhoods(
        name, range(n), mediators, combinations(mediators, 2), [target],
        log=[f"{name}: hardcoded table, a/b swapped on {flips}"])


def gadget_classical(bits: str, gid: str = None) -> GadgetGraph:
    """
    Single-mediator gadget lifting the basis state |bits⟩.

    The mediator's graph neighbours are the triangle vertices off the cycle:
    b for a 0 bit and a for a 1 bit.
    """
    if not 1 <= len(bits) <= 4 or set(bits) - {'0', '1'}:
        raise DomainError(f"Classical gadgets need 1 to 4 bits, got {bits!r}")
    gid = gid or f"c{bits}"
    mediator = f"m:{gid}:0"
    edges = {frozenset((mediator, f"{'b' if bit == '0' else 'a'}:{i}")) for i, bit in enumerate(bits)}
    return GadgetGraph(name=f"classical-{bits}", qubits=list(range(len(bits))),
                       mediators=[mediator], edges=edges, targets=[IntState.basis(bits)],
                       construction_log=[f"classical |{bits}⟩"])


def gadget_two_qubit_entangled(pattern: str = '00-11', flips: Sequence[int] = None) -> GadgetGraph:
    """
    Three-mediator gadget lifting an entangled two-qubit state.

    Args:
        pattern: '00-11' for |00⟩-|11⟩ or '01-10' for |01⟩-|10⟩
        flips: Explicit a/b swaps; overrides ``pattern`` (|e⟩-|ē⟩ with e = flips of 00)
    """
    if flips is None:
        if pattern not in ('00-11', '01-10'):
            raise DomainError(f"Unknown entangled pattern {pattern!r}")
        flips = [] if pattern == '00-11' else [1]
    name = f"ent-{_complement_pair('00', flips).normalized().to_label()}"
    return _hardcoded(name, 'e' + ''.join(map(str, flips)), 2, ENT_NEIGHBOURHOODS, '00', flips)


def gadget_cnot_entangled(which: int = 1, flips: Sequence[int] = None) -> GadgetGraph:
    """
    Five-mediator gadget lifting |101⟩-|010⟩ (which=1) or |011⟩-|100⟩ (which=2).

    With ``flips`` the first variant is relabelled a/b on those qubits,
    giving |e⟩-|ē⟩ for any e.
    """
    if flips is None:
        if which not in (1, 2):
            raise DomainError(f"CNOT gadget variant must be 1 or 2, got {which}")
        # swapping the first two qubits of 101 gives 011
        flips = [] if which == 1 else [0, 1]
    target = _complement_pair('101', flips)
    name = f"cnot-{target.normalized().to_label()}"
    return _hardcoded(name, 'n' + ''.join(map(str, flips)), 3, CNOT_NEIGHBOURHOODS, '101', flips)


def gadget_prop_prime() -> GadgetGraph:
    """|1000⟩ - |1101⟩: the clock hand-over term, an entangled pair with two classical bits."""
    core = gadget_two_qubit_entangled('00-11')
    placed = relabel_qubits(core, {0: 1, 1: 3})
    placed = tensor_classical(placed, 0, 1)
    placed = tensor_classical(placed, 2, 0)
    return placed.copy(name='prop-prime')


def _classical_entries() -> Dict[str, Callable[[], GadgetGraph]]:
    entries = {}
    for k in (1, 2, 3):
        for value in range(2 ** k):
            bits = format(value, f'0{k}b')
            entries[f"classical-{bits}"] = (lambda b=bits: gadget_classical(b))
    return entries


GADGETS: Dict[str, Callable[[], GadgetGraph]] = {
    **_classical_entries(),
    'ent-00-11': lambda: gadget_two_qubit_entangled('00-11'),
    'ent-01-10': lambda: gadget_two_qubit_entangled('01-10'),
    'cnot-1': lambda: gadget_cnot_entangled(1),
    'cnot-2': lambda: gadget_cnot_entangled(2),
    'pyth-1': lambda: gadget_pythagorean(1),
    'pyth-2': lambda: gadget_pythagorean(2),
    'prop-prime': gadget_prop_prime,
}


def build_gadget(name: str) -> GadgetGraph:
    """Build a registered gadget; ``classical-<bits>`` accepts up to 4 bits."""
    if name.startswith('classical-') and name not in GADGETS:
        return gadget_classical(name[len('classical-'):])
    if name not in GADGETS:
        raise DomainError(f"Unknown gadget {name!r}; known: {', '.join(sorted(GADGETS))}")
    return GADGETS[name]()


def list_gadgets() -> List[str]:
    return sorted(GADGETS)
