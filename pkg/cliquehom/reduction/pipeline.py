"""
Reduction from projector instances to graphs.

Each rank-1 term becomes a gadget on its qubits: constant bits are peeled
off as classical tensor factors and the remaining state is matched against
the hardcoded gadgets, the Pythagorean surgeries or the general filler. Each
term gadget is then added to the earlier ones sharing a qubit, giving one
gadget over the register's triangles.
The (n-1)-th reduced Betti number of the resulting independence complex
equals the dimension of the instance's satisfying subspace.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from cliquehom.complex.cliques import clique_complex, independence_complex
from cliquehom.complex.graph import Graph, complement
from cliquehom.config import current_config
from cliquehom.exceptions import ConstructionError, DomainError, ResourceError
from cliquehom.gadgets.algebra import relabel_qubits, sum_gadgets, tensor_classical
from cliquehom.gadgets.filling import fill_cycle_general
from cliquehom.gadgets.gadget import GadgetGraph
from cliquehom.gadgets.library import gadget_classical, gadget_cnot_entangled, gadget_two_qubit_entangled
from cliquehom.gadgets.surgery import PLANS, gadget_pythagorean, pythagorean_target
from cliquehom.homology.engine import betti
from cliquehom.qubits.encoding import IntState, QubitRegister, triangle_graph
from cliquehom.reduction.clock import ProjectorTerm, SatInstance


logger = logging.getLogger(__name__)

MODES = ('independence', 'clique')


@dataclass
class ReductionReport:
    """Summary of one reduction."""
    n: int
    l: int
    n_vertices: int
    n_edges: int
    max_degree: int
    n_mediators: int
    n_terms: int
    terms_by_provenance: Dict[str, int] = field(default_factory=dict)
    mode: str = 'independence'
    max_incidence: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'l': self.l,
            'vertices': self.n_vertices,
            'edges': self.n_edges,
            'max_degree': self.max_degree,
            'mediators': self.n_mediators,
            'terms': self.n_terms,
            'terms_by_provenance': dict(self.terms_by_provenance),
            'mode': self.mode,
            'max_incidence': self.max_incidence,
        }


def _complement_pair(state: IntState) -> Optional[str]:
    """First bitstring e when the state is a multiple of |e⟩ - |ē⟩."""
    if len(state.terms) != 2:
        return None
    (e, c1), (f, c2) = state.terms.items()
    if c1 != -c2 or any(x == y for x, y in zip(e, f)):
        return None
    return e


def _core_gadget(state: IntState, policy: Optional[str]) -> GadgetGraph:
    """Gadget on local qubits 0..k-1 lifting a state with no constant bits."""
    k = state.n
    e = _complement_pair(state)
    if e is not None and k == 2:
        return gadget_two_qubit_entangled(flips=[i for i, bit in enumerate(e) if bit == '1'])
    if e is not None and k == 3:
        return gadget_cnot_entangled(flips=[i for i, bit in enumerate(e) if bit != '101'[i]])
    if k == 3:
        normalized = state.normalized()
        for which in sorted(PLANS):
            if normalized == pythagorean_target(which).normalized():
                return gadget_pythagorean(which, policy)
    if k in (2, 3) and all(abs(c) == 1 for c in state.terms.values()):
        return fill_cycle_general(QubitRegister(k), state, policy=policy)
    raise ConstructionError(f"No gadget construction for {state}")


def gadget_for_term(term: ProjectorTerm, policy: Optional[str] = None, gid: str = 't') -> GadgetGraph:
    """
    Gadget lifting one projector term, placed on the term's qubits.

    Args:
        term: Rank-1 projector term
        policy: Filler policy for filled and surgery gadgets
        gid: Mediator name prefix

    Returns:
        GadgetGraph on sorted(term.qubits) with mediators named m:<gid>:<k>
    """
    state = term.state.normalized()
    constant = state.constant_bits()
    free = [i for i in range(state.n) if i not in constant]
    if not free:
        placed = gadget_classical(''.join(constant[i] for i in range(state.n)))
    else:
        placed = relabel_qubits(_core_gadget(state.restrict(free), policy), free)
        for i in sorted(constant):
            placed = tensor_classical(placed, i, int(constant[i]))
    placed = relabel_qubits(placed, {i: term.qubits[i] for i in range(state.n)})
    return placed.rename_mediators(gid).copy(name=f"{term.provenance or 'term'}:{gid}")


def combine_gadgets(inst: SatInstance, policy: Optional[str] = None,
                    include_step4: bool = True) -> Optional[GadgetGraph]:
    """Sum the gadgets of every term into one gadget; None for an empty instance."""
    if not inst.terms:
        return None
    gadgets = [gadget_for_term(term, policy, gid=f"t{index}") for index, term in enumerate(inst.terms)]
    combined = sum_gadgets(gadgets, include_step4=include_step4, track_targets=False, name='reduction')
    combined.construction_log = combined.construction_log[-200:]
    return combined


def reduce_to_graph(inst: SatInstance, policy: Optional[str] = None, complement_graph: bool = False,
                    include_step4: bool = True) -> Tuple[Graph, int]:
    """
    Graph whose independence complex encodes the instance.

    Args:
        inst: Projector instance
        policy: Filler policy for filled and surgery gadgets
        complement_graph: Return the complement, for the clique-complex phrasing

    Returns:
        (graph, l) with l = n - 1
    """
    errors = inst.validate()
    if errors:
        raise DomainError('; '.join(errors))
    cap = current_config().QUBIT_CAP
    if inst.n > cap:
        raise ResourceError(f"Instance has {inst.n} qubits, above the cap {cap}")

    reg = QubitRegister(inst.n)
    combined = combine_gadgets(inst, policy, include_step4)
    graph = triangle_graph(inst.n) if combined is None else combined.graph(reg)
    logger.info(f"Reduced {len(inst.terms)} terms on {inst.n} qubits to {graph}")
    if complement_graph:
        graph = complement(graph)
    return graph, inst.n - 1


def reduction_report(inst: SatInstance, graph: Graph, l: int, mode: str = 'independence') -> ReductionReport:
    mediators = sum(1 for v in graph.vertices if v.startswith('m:'))
    return ReductionReport(
        n=inst.n, l=l, n_vertices=len(graph.vertices), n_edges=len(graph.edges),
        max_degree=graph.max_degree(), n_mediators=mediators, n_terms=len(inst.terms),
        terms_by_provenance=inst.counts_by_provenance(), mode=mode,
        max_incidence=inst.max_incidence())


def decide_homology(g: Graph, l: int, mode: str = 'independence') -> Tuple[bool, int]:
    """
    Decide whether the l-th reduced homology of I(g) or Cl(g) is nontrivial.

    Returns:
        (nontrivial, reduced β_l)
    """
    if l < 0:
        raise DomainError(f"Homology dimension must be non-negative, got {l}")
    if mode not in MODES:
        raise DomainError(f"Mode must be one of {', '.join(MODES)}, got {mode!r}")
    build = independence_complex if mode == 'independence' else clique_complex
    k = build(g, l + 1)
    value = betti(k, l, reduced=True)
    logger.info(f"β̃_{l} of the {mode} complex of {g}: {value}")
    return value > 0, value
