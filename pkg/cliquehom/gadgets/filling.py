"""
General cycle filling.

A closed surface (a cycle whose faces have coefficients ±1 and whose ridges
each lie in exactly two faces) is filled by giving every face its own
mediator, linking mediators of neighbouring faces, and coning all
mediators off with one apex. Surfaces produced by surgery carry labelled
vertices; ``projection`` maps each label back to its triangle vertex.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from cliquehom.complex.simplex import Chain, Simplex, vertex_key
from cliquehom.config import FILLER_POLICIES, current_config
from cliquehom.exceptions import ConstructionError, DomainError
from cliquehom.gadgets.gadget import GadgetGraph, from_complex_neighbourhoods
from cliquehom.gadgets.verify import verify_gadget
from cliquehom.qubits.encoding import IntState, QubitRegister, state_to_cycle


logger = logging.getLogger(__name__)


@dataclass
class Surface:
    """Closed surface given by its faces over (possibly labelled) vertices."""
    dimension: int
    faces: List[Simplex]
    projection: Dict[str, str] = field(default_factory=dict)

    def original(self, vertex: str) -> str:
        return self.projection.get(vertex, vertex)

    def vertices(self) -> List[str]:
        return sorted({v for f in self.faces for v in f}, key=vertex_key)

    def ridge_map(self) -> Dict[Tuple[str, ...], List[int]]:
        ridges: Dict[Tuple[str, ...], List[int]] = defaultdict(list)
        for i, face in enumerate(self.faces):
            for j in range(len(face)):
                ridges[face[:j] + face[j + 1:]].append(i)
        return ridges

    def dual_pairs(self) -> List[Tuple[int, int]]:
        """Face pairs sharing a ridge."""
        return sorted(tuple(sorted(ids)) for ids in self.ridge_map().values() if len(ids) == 2)

    def vertex_stars(self) -> Dict[str, List[int]]:
        stars: Dict[str, List[int]] = defaultdict(list)
        for i, face in enumerate(self.faces):
            for v in face:
                stars[v].append(i)
        return stars

    def euler_characteristic(self) -> int:
        counts = defaultdict(set)
        for face in self.faces:
            for size in range(1, len(face) + 1):
                counts[size].update(combinations(face, size))
        return sum((-1) ** (size - 1) * len(s) for size, s in counts.items())


def surface_from_chain(chain: Chain, projection: Optional[Dict[str, str]] = None) -> Surface:
    if any(abs(c) != 1 for c in chain.terms.values()):
        raise ConstructionError('Filling needs a cycle whose coefficients are all ±1')
    return Surface(chain.dimension, chain.support(), dict(projection or {}))


def check_closed_surface(surface: Surface) -> None:
    """Raise ConstructionError unless the surface is a connected closed manifold."""
    if surface.dimension not in (1, 2):
        raise ConstructionError(
            f"Only 1- and 2-dimensional surfaces can be filled, got dimension {surface.dimension}")
    ridges = surface.ridge_map()
    bad = [r for r, ids in ridges.items() if len(ids) != 2]
    if bad:
        raise ConstructionError(f"Support is not a closed surface: ridge {bad[0]} lies in "
                                f"{len(ridges[bad[0]])} faces")
    dual = nx.Graph()
    dual.add_nodes_from(range(len(surface.faces)))
    dual.add_edges_from(surface.dual_pairs())
    if not nx.is_connected(dual):
        raise ConstructionError('Support is not strongly connected')
    if surface.dimension == 2:
        for v, star in surface.vertex_stars().items():
            link = nx.Graph()
            link.add_edges_from(tuple(u for u in surface.faces[i] if u != v) for i in star)
            if not nx.is_connected(link) or any(d != 2 for _, d in link.degree()):
                raise ConstructionError(f"Link of {v} is not a single cycle")


def check_no_folds(surface: Surface) -> None:
    """Neighbouring faces must project to different triangle-vertex faces."""
    for i, j in surface.dual_pairs():
        a = frozenset(surface.original(v) for v in surface.faces[i])
        b = frozenset(surface.original(v) for v in surface.faces[j])
        if a == b:
            raise ConstructionError(f"Faces {surface.faces[i]} and {surface.faces[j]} fold onto "
                                    f"the same original face")


def vertex_fans(surface: Surface) -> List[Tuple[int, int]]:
    """
    Face pairs that triangulate the ring of faces around every vertex.

    The faces around a vertex of degree d form a cycle under ridge sharing;
    the first of them (in face order) is joined to the d - 3 faces it does
    not already share a ridge with.
    """
    adjacent: Dict[int, Set[int]] = defaultdict(set)
    for i, j in surface.dual_pairs():
        adjacent[i].add(j)
        adjacent[j].add(i)
    pairs = set()
    for star in surface.vertex_stars().values():
        first = min(star)
        pairs.update((first, i) for i in star if i != first and i not in adjacent[first])
    return sorted(pairs)


def resolve_policy(policy: Optional[str], setting: str = 'FILLER_POLICY') -> str:
    policy = policy or getattr(current_config(), setting)
    if policy not in FILLER_POLICIES:
        raise DomainError(f"Unknown filler policy {policy!r}; use one of {', '.join(FILLER_POLICIES)}")
    return policy


def fill_surface(surface: Surface, qubits: Sequence[int], targets: List[IntState],
                 policy: Optional[str] = None, gid: str = 'f', name: str = 'fill',
                 log: Optional[List[str]] = None) -> GadgetGraph:
    """
    Fill a closed surface with mediators.

    Args:
        surface: Closed surface (checked here)
        qubits: Qubits the gadget attaches to
        targets: States the filled surface lifts
        policy: 'edge' links mediators of faces sharing a ridge; 'edge-or-vertex' also
            fans out the faces around each vertex. 1-dimensional surfaces ignore it
        gid: Mediator name prefix
        name: Gadget name

    Returns:
        GadgetGraph with one mediator per face and an apex
    """
    policy = resolve_policy(policy)
    check_closed_surface(surface)
    check_no_folds(surface)

    faces = surface.faces
    face_mediators = [f"m:{gid}:{i}" for i in range(len(faces))]
    neighbourhoods: Dict[str, Set[str]] = {
        m: {surface.original(v) for v in face} for m, face in zip(face_mediators, faces)}

    pairs = surface.dual_pairs()
    if surface.dimension == 2 and policy == 'edge-or-vertex':
        pairs = pairs + vertex_fans(surface)
    links: Set[Tuple[str, str]] = {(face_mediators[i], face_mediators[j]) for i, j in pairs}

    apex = f"m:{gid}:{len(faces)}"
    neighbourhoods[apex] = set()
    links.update((apex, m) for m in face_mediators)

    entry = f"{name}: filled {len(faces)} faces with policy {policy}; {len(pairs)} mediator links, apex {apex}"
    logger.debug(entry)
    return from_complex_neighbourhoods(name, qubits, neighbourhoods, links, targets,
                                       log=list(log or []) + [entry])


def fill_cycle_general(reg: QubitRegister, target: IntState, qubits: Optional[Sequence[int]] = None,
                       policy: Optional[str] = None, gid: str = 'f') -> GadgetGraph:
    """
    Filler gadget for a ±1 integer state whose cycle is a closed surface.

    Args:
        reg: Register holding the qubits
        target: State on 2 or 3 qubits with coefficients ±1
        qubits: Register qubits of the state's bit positions (default 0..k-1)
        policy: Mediator adjacency policy. Without one the configured plain policy is
            tried first and, when the verdict rejects it, the surface is refilled
            with edge-or-vertex

    Returns:
        GadgetGraph lifting exactly ``target``
    """
    qubits = list(range(target.n)) if qubits is None else list(qubits)
    if target.n not in (2, 3):
        raise ConstructionError(f"General filling supports 2 or 3 qubits, got {target.n}")
    if any(abs(c) != 1 for c in target.terms.values()):
        raise ConstructionError(f"General filling needs ±1 coefficients, got {target}")
    surface = surface_from_chain(state_to_cycle(reg, target, qubits))
    ordered = sorted(qubits)
    placed = target.permute([qubits.index(q) for q in ordered])
    name = f"fill-{target.to_label()}"
    chosen = resolve_policy(policy, 'PLAIN_FILLER_POLICY')
    gadget = fill_surface(surface, ordered, [placed], policy=chosen, gid=gid, name=name)
    if policy is not None or chosen == 'edge-or-vertex' or surface.dimension == 1:
        return gadget

    verdict = verify_gadget(gadget)
    if verdict.passes:
        return gadget
    entry = f"{name}: {chosen} filling not certified ({'; '.join(verdict.reasons)}), refilling"
    logger.info(entry)
    return fill_surface(surface, ordered, [placed], policy='edge-or-vertex', gid=gid, name=name,
                        log=[entry])
