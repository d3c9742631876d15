"""
Simplicial surgery for states with non-unit integer coefficients.

A surgery plan lists a ring of pieces (small integer states whose cycles are
spheres), a split vertex w and two poles u, v adjacent to w. Every piece is
slit open along u-w-v; the side of the slit whose face on (w, u) runs
u -> w keeps w#i, the other side becomes w#(i+1), so consecutive pieces glue
along the slit and the ring closes up. Attachments are extra sphere copies
that share labels with a ring piece; the shared faces cancel in the sum and
the copy is glued on by connected sum. All other vertices are tagged per
copy and project back to their triangle vertex.

Seam plans glue a tree of pieces instead of a ring. Each seam slits two
pieces at the same split vertex between the same poles and glues them
crosswise: the 'L' side of one piece meets the 'R' side of the other. The
poles of both pieces are identified, every other vertex stays per piece.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from cliquehom.complex.simplex import Chain, Simplex, canonical_simplex, vertex_key
from cliquehom.exceptions import ConstructionError, DomainError
from cliquehom.gadgets.filling import (
    Surface, check_closed_surface, check_no_folds, fill_surface, resolve_policy,
)
from cliquehom.gadgets.gadget import GadgetGraph
from cliquehom.qubits.encoding import IntState, QubitRegister, state_to_cycle


logger = logging.getLogger(__name__)

REGISTER = QubitRegister(3)


@dataclass
class Attachment:
    """Sphere copies of ``state`` glued to ring pieces along the ``shared`` vertices."""
    state: Dict[str, int]
    pieces: Tuple[int, ...]
    shared: Tuple[str, ...]


@dataclass
class Seam:
    pieces: Tuple[int, int]
    split: str
    poles: Tuple[str, str]


@dataclass
class SurgeryPlan:
    """Either a ring of pieces slit at one vertex, or a tree of ``pieces`` joined by ``seams``."""
    name: str
    target: Dict[str, int]
    ring: Tuple[Dict[str, int], ...] = ()
    split: str = ''
    poles: Tuple[str, ...] = ()
    attachments: Tuple[Attachment, ...] = ()
    pieces: Tuple[Dict[str, int], ...] = ()
    seams: Tuple[Seam, ...] = ()


@dataclass
class SurgeryResult:
    plan: SurgeryPlan
    surface: Surface
    chain: Chain
    log: List[str] = field(default_factory=list)

    @property
    def counts(self) -> Tuple[int, int, int]:
        """(V, E, F) of the glued surface."""
        edges = {tuple(f[:j] + f[j + 1:]) for f in self.surface.faces for j in range(3)}
        return len(self.surface.vertices()), len(edges), len(self.surface.faces)


_B = {'100': 1}
_C = {'101': 1}
_D = {'010': 1}
_A = {'011': -1}

PLANS = {
    1: SurgeryPlan(
        name='pyth-1',
        target={'011': -5, '100': 4, '101': 3},
        ring=(_B, _B, _B, _B, _C, _C, _C),
        split='b:0',
        poles=('x:1', 'a:1'),
        attachments=(
            Attachment(_A, (2, 3), ('x:0', 'x:1', 'x:2')),
            Attachment(_A, (4, 5, 6), ('x:0', 'x:1', 'x:2', 'b:2')),
        ),
    ),
    # 3(C + D - B) + C + 2D; C + D - B is a 14-face sphere
    2: SurgeryPlan(
        name='pyth-2',
        target={'010': -5, '100': 3, '101': -4},
        pieces=({'101': 1, '010': 1, '100': -1},) * 3 + (_C, _D, _D),
        seams=(
            Seam((0, 3), 'b:0', ('x:1', 'a:1')),
            Seam((0, 1), 'a:2', ('a:1', 'b:1')),
            Seam((0, 2), 'x:0', ('x:2', 'b:2')),
            Seam((1, 4), 'a:0', ('x:1', 'b:1')),
            Seam((2, 5), 'a:0', ('x:1', 'b:1')),
        ),
    ),
}


def _cycle_order(link: nx.Graph, start: str) -> List[str]:
    order = [start]
    previous, current = None, start
    while True:
        options = sorted((n for n in link.neighbors(current) if n != previous), key=vertex_key)
        if previous is None:
            options = options[:1]
        nxt = options[0]
        if nxt == start:
            return order
        order.append(nxt)
        previous, current = current, nxt


def slit_sides(chain: Chain, split: str, poles: Tuple[str, str]) -> Dict[Simplex, str]:
    """
    Assign each face containing the split vertex to side 'L' or 'R'.

    The link of the split vertex is cut at the two poles; the side whose
    face on the edge (split, first pole) induces the orientation
    pole -> split is 'L'.
    """
    u, v = poles
    star = {f: c for f, c in chain.terms.items() if split in f}
    link = nx.Graph()
    edge_face = {}
    for face in star:
        rest = tuple(x for x in face if x != split)
        link.add_edge(*rest)
        edge_face[frozenset(rest)] = face
    if (not link.number_of_nodes() or not nx.is_connected(link)
            or any(d != 2 for _, d in link.degree()) or u not in link or v not in link):
        raise ConstructionError(f"Link of {split} is not a cycle through {u} and {v}")

    order = _cycle_order(link, u)
    cut = order.index(v)
    first_arc = {frozenset((order[i], order[i + 1])) for i in range(cut)}

    face = edge_face[frozenset((order[0], order[1]))]
    edge, sign = canonical_simplex((u, split))
    boundary = Chain(2, {face: star[face]}).boundary()
    induced = sign * boundary.terms.get(edge, 0)
    first_side = 'L' if induced > 0 else 'R'
    other_side = 'R' if first_side == 'L' else 'L'
    return {f: (first_side if frozenset(x for x in f if x != split) in first_arc else other_side)
            for f in star}


def _piece_label(vertex: str, tag: str, plan: SurgeryPlan, index: int, side: Optional[str]) -> str:
    if vertex in plan.poles:
        return vertex
    if vertex == plan.split:
        k = index if side == 'L' else (index + 1) % len(plan.ring)
        return f"{vertex}#{k}"
    return f"{vertex}#{tag}"


FaceSink = Callable[[Simplex, object, Sequence[str]], None]


def _glue_ring(plan: SurgeryPlan, add_face: FaceSink, log: List[str]) -> None:
    log.append(f"{plan.name}: ring of {len(plan.ring)} pieces split at {plan.split} "
               f"with poles {plan.poles[0]}, {plan.poles[1]}")
    for i, state in enumerate(plan.ring):
        chain = state_to_cycle(REGISTER, IntState(3, state))
        sides = slit_sides(chain, plan.split, plan.poles)
        for face, c in chain.terms.items():
            add_face(face, c, [_piece_label(x, f"p{i}", plan, i, sides.get(face)) for x in face])

    copy = 0
    for attachment in plan.attachments:
        if plan.split in attachment.shared:
            raise ConstructionError('Attachments cannot share the split vertex')
        chain = state_to_cycle(REGISTER, IntState(3, attachment.state))
        for i in attachment.pieces:
            labels_of = {x: _piece_label(x, f"p{i}", plan, i, None) for x in attachment.shared}
            for face, c in chain.terms.items():
                add_face(face, c, [labels_of.get(x, f"{x}#a{copy}") for x in face])
            log.append(f"attach {IntState(3, attachment.state).to_label()} copy a{copy} to piece {i} "
                       f"along {list(attachment.shared)}")
            copy += 1


def _glue_seams(plan: SurgeryPlan, add_face: FaceSink, log: List[str]) -> None:
    log.append(f"{plan.name}: {len(plan.pieces)} pieces joined by {len(plan.seams)} seams")
    chains = [state_to_cycle(REGISTER, IntState(3, state)) for state in plan.pieces]
    poles = UnionFind()
    split_labels: Dict[Tuple[int, Simplex, str], str] = {}
    for seam in plan.seams:
        i, j = seam.pieces
        if not (0 <= i < len(chains) and 0 <= j < len(chains)) or i == j:
            raise ConstructionError(f"{plan.name}: seam {seam.pieces} does not join two pieces")
        for pole in seam.poles:
            poles.union(f"{pole}#p{i}", f"{pole}#p{j}")
        w = seam.split
        for piece, other in ((i, j), (j, i)):
            for face, side in slit_sides(chains[piece], w, seam.poles).items():
                split_labels[piece, face, w] = f"{w}#p{piece}" if side == 'L' else f"{w}#p{other}"
        log.append(f"seam p{i}-p{j} at {w} between {seam.poles[0]}, {seam.poles[1]}")

    root = {label: min(group) for group in poles.to_sets() for label in group}
    for i, chain in enumerate(chains):
        for face, c in chain.terms.items():
            labels = []
            for x in face:
                plain = f"{x}#p{i}"
                labels.append(split_labels.get((i, face, x), root.get(plain, plain)))
            add_face(face, c, labels)


def perform_surgery(plan: SurgeryPlan) -> SurgeryResult:
    """
    Glue the plan's pieces into one surface and validate it.

    Returns:
        SurgeryResult whose surface is a closed sphere without folds projecting
        onto ± the target cycle

    Raises:
        ConstructionError: when any validation step fails
    """
    if bool(plan.ring) == bool(plan.pieces):
        raise ConstructionError(f"{plan.name}: a plan needs either a ring or seamed pieces")
    if plan.pieces and plan.attachments:
        raise ConstructionError(f"{plan.name}: attachments only apply to ring plans")
    log: List[str] = []
    total = Chain(2)
    projection: Dict[str, str] = {}

    def add_face(face: Simplex, coefficient, labels: Sequence[str]) -> None:
        nonlocal total
        for label, original in zip(labels, face):
            projection[label] = original
        total = total + Chain.from_oriented(2, [(labels, coefficient)])

    if plan.ring:
        _glue_ring(plan, add_face, log)
    else:
        _glue_seams(plan, add_face, log)

    if any(abs(c) != 1 for c in total.terms.values()):
        raise ConstructionError(f"{plan.name}: glued chain has coefficients other than ±1")
    if not total.boundary().is_zero():
        raise ConstructionError(f"{plan.name}: glued chain is not closed")

    used = {x for f in total.terms for x in f}
    surface = Surface(2, total.support(), {k: v for k, v in projection.items() if k in used})
    check_closed_surface(surface)
    chi = surface.euler_characteristic()
    if chi != 2:
        raise ConstructionError(f"{plan.name}: glued surface has Euler characteristic {chi}, not 2")
    check_no_folds(surface)

    expected = state_to_cycle(REGISTER, IntState(3, plan.target))
    projected = total.map_vertices(surface.projection)
    if projected != expected and projected != -expected:
        raise ConstructionError(f"{plan.name}: glued surface does not project onto the target cycle")

    result = SurgeryResult(plan, surface, total, log)
    v, e, f = result.counts
    log.append(f"surface V={v} E={e} F={f}")
    logger.info(f"Surgery {plan.name}: V={v} E={e} F={f}")
    return result


@lru_cache(maxsize=None)
def _pythagorean(which: int, policy: str) -> GadgetGraph:
    plan = PLANS[which]
    result = perform_surgery(plan)
    return fill_surface(result.surface, [0, 1, 2], [IntState(3, plan.target)], policy=policy,
                        gid=f"p{which}", name=plan.name, log=result.log)


def gadget_pythagorean(which: int, policy: Optional[str] = None) -> GadgetGraph:
    """
    Surgery gadget for a Pythagorean propagation state.

    Args:
        which: 1 for -5|011⟩+4|100⟩+3|101⟩, 2 for -5|010⟩+3|100⟩-4|101⟩
        policy: Filler policy for the glued surface (default from configuration)
    """
    if which not in PLANS:
        raise DomainError(f"Pythagorean gadget must be 1 or 2, got {which}")
    return _pythagorean(which, resolve_policy(policy)).copy()


def pythagorean_target(which: int) -> IntState:
    if which not in PLANS:
        raise DomainError(f"Pythagorean gadget must be 1 or 2, got {which}")
    return IntState(3, PLANS[which].target)
