"""
Gadget graphs: mediators attached to qubit triangles.

A gadget is described by its graph edges from mediators to the triangle
vertices of the qubits it touches and between its own mediators. Qubits the
gadget does not touch carry no edges to its mediators, so in the
independence complex every mediator is joined with the rest of the register
and the gadget acts as P ⊗ I.
"""

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from cliquehom.complex.graph import Graph
from cliquehom.complex.simplex import vertex_key
from cliquehom.exceptions import ConstructionError, ValidationError
from cliquehom.qubits.encoding import IntState, QubitRegister, VERTEX_KINDS


logger = logging.getLogger(__name__)


def qubit_vertices(qubits: Iterable[int]) -> List[str]:
    return [QubitRegister.vertex(q, kind) for q in sorted(qubits) for kind in VERTEX_KINDS]


def is_mediator(name: str) -> bool:
    return name.startswith('m:')


@dataclass
class GadgetGraph:
    """
    Mediators and edges realizing a set of lifted states.

    ``targets`` are states whose bit j lives on ``qubits[j]`` (``qubits`` is
    kept sorted). ``supports`` records, per mediator, the qubits of the
    gadget it came from.
    """
    name: str
    qubits: List[int]
    mediators: List[str]
    edges: Set[FrozenSet[str]] = field(default_factory=set)
    targets: List[IntState] = field(default_factory=list)
    supports: Dict[str, FrozenSet[int]] = field(default_factory=dict)
    construction_log: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.qubits = sorted(self.qubits)
        self.mediators = sorted(self.mediators, key=vertex_key)
        for m in self.mediators:
            self.supports.setdefault(m, frozenset(self.qubits))

    def validate(self) -> List[str]:
        errors = []
        allowed = set(qubit_vertices(self.qubits)) | set(self.mediators)
        for edge in self.edges:
            if len(edge) != 2 or not edge <= allowed:
                errors.append(f"Edge {sorted(edge)} leaves the gadget's vertex set")
            elif not any(is_mediator(v) for v in edge):
                errors.append(f"Edge {sorted(edge)} would change a qubit triangle")
        for state in self.targets:
            if state.n != len(self.qubits):
                errors.append(f"Target {state} does not live on {len(self.qubits)} qubits")
        return errors

    def neighbours(self, mediator: str) -> Set[str]:
        return {v for e in self.edges if mediator in e for v in e if v != mediator}

    def qubit_neighbours(self, mediator: str) -> FrozenSet[str]:
        return frozenset(v for v in self.neighbours(mediator) if not is_mediator(v))

    def graph(self, reg: Optional[QubitRegister] = None) -> Graph:
        """
        Graph of qubit triangles plus this gadget.

        Args:
            reg: Register whose triangles to include; defaults to the gadget's own qubits
        """
        if reg is None:
            vertices = qubit_vertices(self.qubits)
            edges = [e for q in self.qubits for e in _triangle_edges(q)]
        else:
            vertices, edges = reg.vertices(), reg.edges()
        return Graph(vertices + self.mediators, edges + [tuple(e) for e in self.edges])

    def complex_neighbourhoods(self) -> Dict[str, Set[str]]:
        """Vertices each mediator shares an independence-complex edge with, inside the gadget."""
        local = set(qubit_vertices(self.qubits)) | set(self.mediators)
        return {m: local - self.neighbours(m) - {m} for m in self.mediators}

    def to_dict(self) -> Dict[str, Any]:
        edges = sorted((sorted(e, key=vertex_key) for e in self.edges),
                       key=lambda p: (vertex_key(p[0]), vertex_key(p[1])))
        return {
            'name': self.name,
            'qubits': list(self.qubits),
            'mediators': list(self.mediators),
            'edges': edges,
            'targets': [t.to_dict() for t in self.targets],
            'supports': {m: sorted(s) for m, s in sorted(self.supports.items(),
                                                         key=lambda kv: vertex_key(kv[0]))},
            'construction_log': list(self.construction_log),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'GadgetGraph':
        try:
            gadget = cls(
                name=str(data.get('name', 'gadget')),
                qubits=[int(q) for q in data['qubits']],
                mediators=[str(m) for m in data['mediators']],
                edges={frozenset(str(v) for v in e) for e in data['edges']},
                targets=[IntState.from_dict(t) for t in data.get('targets', [])],
                supports={str(m): frozenset(int(q) for q in s)
                          for m, s in data.get('supports', {}).items()},
                construction_log=[str(line) for line in data.get('construction_log', [])],
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"Malformed gadget: {str(e)}")
        errors = gadget.validate()
        if errors:
            raise ValidationError('; '.join(errors))
        return gadget

    @classmethod
    def from_json(cls, text: str) -> 'GadgetGraph':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"Gadget file is not valid JSON: {str(e)}")
        return cls.from_dict(data)

    def copy(self, **changes) -> 'GadgetGraph':
        values = dict(
            name=self.name, qubits=list(self.qubits), mediators=list(self.mediators),
            edges=set(self.edges), targets=list(self.targets), supports=dict(self.supports),
            construction_log=list(self.construction_log))
        values.update(changes)
        return GadgetGraph(**values)

    def rename_mediators(self, gid: str) -> 'GadgetGraph':
        """Rename mediators to m:<gid>:<k> keeping their order."""
        mapping = {m: f"m:{gid}:{k}" for k, m in enumerate(self.mediators)}
        return self.copy(
            mediators=[mapping[m] for m in self.mediators],
            edges={frozenset(mapping.get(v, v) for v in e) for e in self.edges},
            supports={mapping[m]: s for m, s in self.supports.items()},
        )

    def __repr__(self) -> str:
        return (f"GadgetGraph({self.name!r}, qubits={self.qubits}, "
                f"mediators={len(self.mediators)}, edges={len(self.edges)})")


def _triangle_edges(q: int) -> List[Tuple[str, str]]:
    x, a, b = (QubitRegister.vertex(q, kind) for kind in VERTEX_KINDS)
    return [(x, a), (x, b), (a, b)]


def from_complex_neighbourhoods(name: str, qubits: Iterable[int],
                                neighbourhoods: Mapping[str, Iterable[str]],
                                mediator_links: Iterable[Tuple[str, str]],
                                targets: Iterable[IntState],
                                log: Optional[List[str]] = None) -> GadgetGraph:
    """
    Build a gadget from the complex side.

    Args:
        name: Gadget name
        qubits: Qubits the gadget touches
        neighbourhoods: Per mediator, the qubit vertices it is complex-adjacent to
        mediator_links: Mediator pairs that are complex-adjacent
        targets: States the gadget lifts

    Returns:
        GadgetGraph whose graph edges are the complement of the complex adjacency
    """
    qubits = sorted(set(qubits))
    local = set(qubit_vertices(qubits))
    mediators = sorted(neighbourhoods, key=vertex_key)
    edges: Set[FrozenSet[str]] = set()
    for m in mediators:
        seen = set(neighbourhoods[m])
        stray = seen - local
        if stray:
            raise ConstructionError(f"Mediator {m} sees vertices outside the gadget: {sorted(stray)}")
        edges.update(frozenset((m, v)) for v in local - seen)
    linked = {frozenset(p) for p in mediator_links}
    for m1, m2 in combinations(mediators, 2):
        if frozenset((m1, m2)) not in linked:
            edges.add(frozenset((m1, m2)))
    gadget = GadgetGraph(name=name, qubits=qubits, mediators=mediators, edges=edges,
                         targets=list(targets), construction_log=list(log or []))
    logger.debug(f"Built {gadget}")
    return gadget


@dataclass
class GadgetVerdict:
    """Outcome of checking which computational-cycle combinations a gadget fills."""
    lifted_subspace_dim: int
    lifted_basis: List[IntState]
    betti_observed: int
    passes: bool
    expected_betti: int = 0
    target_rank: int = 0
    f_vector: List[int] = field(default_factory=list)
    reasons: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'lifted_subspace_dim': self.lifted_subspace_dim,
            'lifted_basis': [s.to_dict() for s in self.lifted_basis],
            'betti_observed': self.betti_observed,
            'expected_betti': self.expected_betti,
            'target_rank': self.target_rank,
            'f_vector': list(self.f_vector),
            'passes': self.passes,
            'reasons': list(self.reasons),
        }
