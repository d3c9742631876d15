"""
Projector algebra on gadgets: placement, addition and tensoring.

Adding two gadgets merges mediators that see exactly the same qubit
vertices when the match is unambiguous, keeps the rest, and joins every
remaining mediator of one set to every remaining mediator of the other by a
graph edge. Summing many gadgets applies the same step only between gadgets
that share a qubit; gadgets on disjoint qubits stay joined in the complex.
"""

import logging
from collections import Counter, defaultdict
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Set, Tuple, Union

from cliquehom.exceptions import ConstructionError, DomainError
from cliquehom.gadgets.gadget import GadgetGraph, is_mediator, qubit_vertices
from cliquehom.qubits.encoding import IntState, QubitRegister


logger = logging.getLogger(__name__)

QubitMap = Union[Mapping[int, int], Sequence[int]]


def _adjacency(g: GadgetGraph) -> Dict[str, Set[str]]:
    adjacency: Dict[str, Set[str]] = {m: set() for m in g.mediators}
    for edge in g.edges:
        u, v = tuple(edge)
        if u in adjacency:
            adjacency[u].add(v)
        if v in adjacency:
            adjacency[v].add(u)
    return adjacency


def _rename_vertex(vertex: str, mapping: Mapping[int, int]) -> str:
    q = QubitRegister.qubit_of(vertex)
    if q is None:
        return vertex
    return f"{vertex.split(':', 1)[0]}:{mapping[q]}"


def _insert_bit(state: IntState, position: int, bit: str) -> IntState:
    return IntState(state.n + 1, {b[:position] + bit + b[position:]: c
                                  for b, c in state.terms.items()})


def _dedupe(states: Iterable[IntState]) -> List[IntState]:
    seen, result = set(), []
    for state in states:
        key = state.normalized()
        if key not in seen:
            seen.add(key)
            result.append(state)
    return result


def relabel_qubits(g: GadgetGraph, mapping: QubitMap) -> GadgetGraph:
    """
    Move a gadget onto other qubits.

    Args:
        g: Gadget to move
        mapping: Old qubit -> new qubit (a sequence maps g.qubits[j] -> mapping[j])

    Returns:
        Gadget on the image qubits with targets reordered to the new qubit order
    """
    if not isinstance(mapping, Mapping):
        if len(mapping) != len(g.qubits):
            raise DomainError(f"Expected {len(g.qubits)} target qubits, got {len(mapping)}")
        mapping = dict(zip(g.qubits, mapping))
    if set(mapping) != set(g.qubits) or len(set(mapping.values())) != len(mapping):
        raise DomainError(f"Qubit map {dict(mapping)} is not a bijection on {g.qubits}")
    new_qubits = sorted(mapping[q] for q in g.qubits)
    order = [g.qubits.index(next(q for q in g.qubits if mapping[q] == new)) for new in new_qubits]
    return g.copy(
        qubits=new_qubits,
        edges={frozenset(_rename_vertex(v, mapping) for v in e) for e in g.edges},
        targets=[t.permute(order) for t in g.targets],
        supports={m: frozenset(mapping[q] for q in s if q in mapping) for m, s in g.supports.items()},
        construction_log=g.construction_log + [f"relabel qubits {dict(sorted(mapping.items()))}"],
    )


def tensor_classical(g: GadgetGraph, qubit: int, bit: int) -> GadgetGraph:
    """
    Tensor every lifted state with |bit⟩ on a new qubit.

    Each mediator gains a graph edge to the new qubit's vertex off the
    |bit⟩ cycle: b for bit 0, a for bit 1.
    """
    if qubit in g.qubits:
        raise DomainError(f"Qubit {qubit} is already attached to {g.name}")
    if bit not in (0, 1):
        raise DomainError(f"Classical bit must be 0 or 1, got {bit}")
    vertex = QubitRegister.vertex(qubit, 'b' if bit == 0 else 'a')
    qubits = sorted(g.qubits + [qubit])
    position = qubits.index(qubit)
    return g.copy(
        name=f"{g.name}@{qubit}={bit}",
        qubits=qubits,
        edges=g.edges | {frozenset((m, vertex)) for m in g.mediators},
        targets=[_insert_bit(t, position, str(bit)) for t in g.targets],
        supports={m: s | {qubit} for m, s in g.supports.items()},
        construction_log=g.construction_log + [f"tensor |{bit}⟩ on qubit {qubit}"],
    )


def tensor_identity(g: GadgetGraph, qubit: int) -> GadgetGraph:
    """Add an untouched qubit; every target is lifted with both |0⟩ and |1⟩ there."""
    if qubit in g.qubits:
        raise DomainError(f"Qubit {qubit} is already attached to {g.name}")
    qubits = sorted(g.qubits + [qubit])
    position = qubits.index(qubit)
    targets = [_insert_bit(t, position, bit) for t in g.targets for bit in '01']
    return g.copy(
        name=f"{g.name}@{qubit}=I",
        qubits=qubits,
        targets=targets,
        construction_log=g.construction_log + [f"tensor identity on qubit {qubit}"],
    )


def _extend_targets(g: GadgetGraph, qubits: List[int]) -> List[IntState]:
    extended = g
    for q in qubits:
        if q not in extended.qubits:
            extended = tensor_identity(extended, q)
    return extended.targets


QubitKeys = Dict[str, FrozenSet[str]]


def _qubit_keys(g: GadgetGraph) -> QubitKeys:
    adjacency = _adjacency(g)
    return {m: frozenset(v for v in adjacency[m] if not is_mediator(v)) for m in g.mediators}


def _merge_map(g1: GadgetGraph, g2: GadgetGraph, keys1: QubitKeys, keys2: QubitKeys) -> Dict[str, str]:
    """
    Mediators of g2 that merge into a mediator of g1.

    A pair merges when both see exactly the same qubit vertices, that key is
    unique in both gadgets, neither mediator sees every qubit vertex of its
    gadget, and its links to the pairs merged so far agree in g1 and g2.
    """
    count1, count2 = Counter(keys1.values()), Counter(keys2.values())
    by_key = {key: m for m, key in keys1.items()}
    full1, full2 = frozenset(qubit_vertices(g1.qubits)), frozenset(qubit_vertices(g2.qubits))

    merged: Dict[str, str] = {}
    for m2 in g2.mediators:
        key = keys2[m2]
        if count1[key] != 1 or count2[key] != 1 or key in (full1, full2):
            continue
        m1 = by_key[key]
        if all((frozenset((m1, p1)) in g1.edges) == (frozenset((m2, p2)) in g2.edges)
               for p2, p1 in merged.items()):
            merged[m2] = m1
    return merged


SumParts = Tuple[List[str], Set[FrozenSet[str]], Dict[str, FrozenSet[int]], int, int]


def _sum(gadgets: Sequence[GadgetGraph], include_step4: bool, overlapping_only: bool) -> SumParts:
    names = [m for g in gadgets for m in g.mediators]
    clash = [m for m, n in Counter(names).items() if n > 1]
    if clash:
        raise ConstructionError(f"Mediator names collide: {sorted(clash)[:3]}; rename one gadget first")

    mediators: List[str] = []
    edges: Set[FrozenSet[str]] = set()
    supports: Dict[str, FrozenSet[int]] = {}
    owned: List[List[str]] = []
    keys = [_qubit_keys(g) for g in gadgets]
    by_qubit: Dict[int, List[int]] = defaultdict(list)
    merges = step4 = 0
    for i, g in enumerate(gadgets):
        if overlapping_only:
            earlier = sorted({j for q in g.qubits for j in by_qubit[q]})
        else:
            earlier = list(range(i))
        merged: Dict[str, str] = {}
        for j in earlier:
            final = dict(zip(gadgets[j].mediators, owned[j]))
            for m2, m1 in _merge_map(gadgets[j], g, keys[j], keys[i]).items():
                merged.setdefault(m2, final[m1])
        merges += len(merged)

        for edge in g.edges:
            renamed = frozenset(merged.get(v, v) for v in edge)
            if len(renamed) == 2:
                edges.add(renamed)
        for m in g.mediators:
            target = merged.get(m, m)
            supports[target] = supports.get(target, frozenset()) | g.supports[m]
        kept = [m for m in g.mediators if m not in merged]
        mediators.extend(kept)

        if include_step4:
            absorbed = set(merged.values())
            joined = sorted({a for j in earlier for a in owned[j]} - absorbed)
            for a in joined:
                for m in kept:
                    edge = frozenset((a, m))
                    if edge not in edges:
                        edges.add(edge)
                        step4 += 1

        owned.append([merged.get(m, m) for m in g.mediators])
        for q in g.qubits:
            by_qubit[q].append(i)
    return mediators, edges, supports, merges, step4


def _targets(gadgets: Sequence[GadgetGraph], qubits: List[int]) -> List[IntState]:
    return _dedupe(t for g in gadgets for t in _extend_targets(g, qubits))


def add_gadgets(g1: GadgetGraph, g2: GadgetGraph, include_step4: bool = True,
                track_targets: bool = True) -> GadgetGraph:
    """
    Sum of two projectors as one gadget.

    Args:
        g1: First gadget
        g2: Second gadget; its mediator names must differ from g1's
        include_step4: Add graph edges between every unmerged mediator of g1
            and every unmerged mediator of g2
        track_targets: Extend both target lists to the union of qubits

    Returns:
        Gadget lifting the span of both target sets
    """
    mediators, edges, supports, merges, step4 = _sum([g1, g2], include_step4, overlapping_only=False)
    qubits = sorted(set(g1.qubits) | set(g2.qubits))
    targets = _targets([g1, g2], qubits) if track_targets else []
    logger.debug(f"add {g1.name} + {g2.name}: {merges} merged, {step4} step-4 edges")
    return GadgetGraph(
        name=f"{g1.name}+{g2.name}", qubits=qubits, mediators=mediators, edges=edges,
        targets=targets, supports=supports,
        construction_log=g1.construction_log + g2.construction_log + [
            f"add {g1.name} + {g2.name}: merged {merges}, step4 edges {step4}"],
    )


def sum_gadgets(gadgets: Sequence[GadgetGraph], include_step4: bool = True, track_targets: bool = True,
                name: str = 'sum') -> GadgetGraph:
    """
    Sum of many projectors, adding each gadget to the earlier ones it overlaps.

    Merging and step 4 only happen between gadgets that share a qubit;
    gadgets on disjoint qubits are filled independently and stay joined in
    the complex.

    Raises:
        DomainError: for an empty sequence
    """
    if not gadgets:
        raise DomainError('Cannot sum an empty list of gadgets')
    mediators, edges, supports, merges, step4 = _sum(gadgets, include_step4, overlapping_only=True)
    qubits = sorted({q for g in gadgets for q in g.qubits})
    targets = _targets(gadgets, qubits) if track_targets else []
    logger.info(f"Summed {len(gadgets)} gadgets on {len(qubits)} qubits: {merges} merged, "
                f"{step4} step-4 edges")
    return GadgetGraph(
        name=name, qubits=qubits, mediators=mediators, edges=edges, targets=targets, supports=supports,
        construction_log=[line for g in gadgets for line in g.construction_log] + [
            f"sum of {len(gadgets)} gadgets: merged {merges}, step4 edges {step4}"],
    )
