"""
Command line interface for cliquehom.

Every command prints byte-stable JSON on stdout (or a table with --human).
Decision commands exit 0 for YES / nontrivial / pass, 1 for NO, and 2 with
a structured error payload on failure.
"""

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click
import networkx as nx

from cliquehom import create_app
from cliquehom.complex.cliques import clique_complex, independence_complex
from cliquehom.complex.graph import Graph, complement
from cliquehom.complex.io import dumps, graph_to_dict, read_graph, write_graph
from cliquehom.config import FILLER_POLICIES
from cliquehom.exceptions import CliqueHomException, ParseError, ValidationError
from cliquehom.gadgets.gadget import GadgetGraph
from cliquehom.gadgets.library import build_gadget, list_gadgets
from cliquehom.gadgets.verify import verify_gadget
from cliquehom.homology.engine import betti, homology_report
from cliquehom.reduction.circuit import parse_circuit, sparsify
from cliquehom.reduction.clock import SatInstance, bravyi_projectors
from cliquehom.reduction.oracle import kernel_oracle
from cliquehom.reduction.pipeline import MODES, decide_homology, reduce_to_graph, reduction_report
from cliquehom.susy.hardcore import susy_report


logger = logging.getLogger(__name__)

YES, NO, ERROR = 0, 1, 2


def handle_errors(command: Callable) -> Callable:
    """Turn exceptions into the structured error payload and exit code 2."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except CliqueHomException as e:
            logger.error(f"{command.__name__} failed: {str(e)}")
            click.echo(dumps(e.to_dict()), nl=False)
            sys.exit(e.exit_code)
        except OSError as e:
            logger.error(f"{command.__name__} failed: {str(e)}")
            click.echo(dumps({'error': 'IO_ERROR', 'message': str(e)}), nl=False)
            sys.exit(ERROR)
    return wrapper


def emit(payload: Dict[str, Any], human: bool = False, out: Optional[str] = None) -> None:
    text = dumps(payload)
    if out:
        Path(out).write_text(text)
        logger.info(f"Wrote report to {out}")
    if human:
        for key, value in sorted(payload.items()):
            click.echo(f"{key:<24} {value}")
    elif not out:
        click.echo(text, nl=False)


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON in {path}: {e.msg}", line=e.lineno)


def _load_instance(instance: Optional[str], circuit: Optional[str], sparsified: bool) -> SatInstance:
    if bool(instance) == bool(circuit):
        raise ValidationError('Give exactly one of --instance or --circuit')
    if instance:
        return SatInstance.from_dict(_read_json(instance))
    return bravyi_projectors(parse_circuit(Path(circuit).read_text()), sparsified=sparsified)


def _build_complex(g: Graph, mode: str, max_dim: int):
    return independence_complex(g, max_dim) if mode == 'independence' else clique_complex(g, max_dim)


mode_option = click.option('--mode', type=click.Choice(MODES), default='independence', show_default=True)
human_option = click.option('--human', is_flag=True, help='Print a table instead of JSON')


@click.group()
@click.option('--env', 'config_name', default=None, help='Configuration name (development, testing, production)')
@click.option('--max-dim-cap', type=int, default=None, help='Largest complex dimension to materialize')
@click.option('--dense-cap', type=int, default=None, help='Qubit cap of the kernel oracle')
@click.option('--policy', type=click.Choice(FILLER_POLICIES), default=None, help='Filler mediator adjacency')
@click.pass_context
def cli(ctx, config_name, max_dim_cap, dense_cap, policy):
    """Exact clique homology and circuit-to-graph reductions."""
    overrides = {}
    if max_dim_cap is not None:
        overrides['MAX_DIM_CAP'] = max_dim_cap
    if dense_cap is not None:
        overrides['DENSE_CAP'] = dense_cap
    if policy is not None:
        overrides['FILLER_POLICY'] = policy
        overrides['PLAIN_FILLER_POLICY'] = policy
    try:
        ctx.obj = create_app(config_name, **overrides)
    except CliqueHomException as e:
        click.echo(dumps(e.to_dict()), nl=False)
        sys.exit(e.exit_code)


@cli.command()
@click.option('--circuit', type=click.Path(exists=True), default=None)
@click.option('--instance', type=click.Path(exists=True), default=None)
@click.option('--sparsify', 'sparsified', is_flag=True, help='Lay the circuit out on the grid first')
@click.option('--complement', 'as_complement', is_flag=True, help='Emit the complement (clique phrasing)')
@click.option('--out', type=click.Path(), default=None, help='Write the graph JSON here')
@human_option
@handle_errors
def reduce(circuit, instance, sparsified, as_complement, out, human):
    """Reduce a circuit or projector instance to a graph."""
    inst = _load_instance(instance, circuit, sparsified)
    graph, l = reduce_to_graph(inst, complement_graph=as_complement)
    mode = 'clique' if as_complement else 'independence'
    report = reduction_report(inst, graph, l, mode)
    if out:
        Path(out).write_text(dumps({'graph': graph_to_dict(graph), 'l': l, 'mode': mode}))
    emit(report.to_dict(), human)


@cli.command('betti')
@click.option('--graph', 'graph_path', type=click.Path(exists=True), required=True)
@click.option('--dim', type=int, required=True, help='Homology dimension l')
@mode_option
@human_option
@handle_errors
def betti_command(graph_path, dim, mode, human):
    """Decide whether the l-th reduced homology is nontrivial."""
    g = read_graph(graph_path)
    nontrivial, value = decide_homology(g, dim, mode)
    emit({'betti': value, 'dim': dim, 'mode': mode, 'nontrivial': nontrivial,
          'answer': 'YES' if nontrivial else 'NO'}, human)
    sys.exit(YES if nontrivial else NO)


@cli.group('complex')
def complex_group():
    """Complex level commands."""


@complex_group.command('betti')
@click.option('--graph', 'graph_path', type=click.Path(exists=True), required=True)
@click.option('--dim', type=int, required=True)
@click.option('--max-dim', type=int, default=None, help='Also report every dimension up to this one')
@mode_option
@human_option
@handle_errors
def complex_betti(graph_path, dim, max_dim, mode, human):
    """Betti number β_dim (plus a full report up to --max-dim)."""
    g = read_graph(graph_path)
    top = max(dim, max_dim if max_dim is not None else dim)
    k = _build_complex(g, mode, top + 1)
    value = betti(k, dim)
    payload = {'betti': value, 'dim': dim, 'mode': mode, 'f_vector': k.f_vector()}
    if max_dim is not None:
        payload['report'] = homology_report(k, max_dim).to_dict()
    emit(payload, human)
    sys.exit(YES if value > 0 else NO)


@cli.group('graph')
def graph_group():
    """Graph utilities."""


@graph_group.command('complement')
@click.option('--graph', 'graph_path', type=click.Path(exists=True), required=True)
@click.option('--out', type=click.Path(), default=None)
@handle_errors
def graph_complement(graph_path, out):
    """Complement of a graph."""
    h = complement(read_graph(graph_path))
    if out:
        write_graph(h, out)
    else:
        click.echo(dumps(graph_to_dict(h)), nl=False)


@graph_group.command('random')
@click.option('--vertices', type=int, required=True)
@click.option('--probability', type=float, default=0.5, show_default=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--out', type=click.Path(), default=None)
@handle_errors
def graph_random(vertices, probability, seed, out):
    """Seeded G(n, p) random graph for property checks."""
    g = Graph.from_networkx(nx.relabel_nodes(nx.gnp_random_graph(vertices, probability, seed=seed), str))
    if out:
        write_graph(g, out)
    else:
        click.echo(dumps(graph_to_dict(g)), nl=False)


@cli.group('gadget')
def gadget_group():
    """Build, verify and list gadgets."""


@gadget_group.command('build')
@click.argument('name')
@click.option('--out', type=click.Path(), default=None)
@handle_errors
def gadget_build(name, out):
    """Build a named gadget."""
    g = build_gadget(name)
    if out:
        Path(out).write_text(g.to_json())
        click.echo(f"✅ Wrote {g.name} ({len(g.mediators)} mediators) to {out}", err=True)
    else:
        click.echo(g.to_json(), nl=False)


@gadget_group.command('verify')
@click.argument('path', type=click.Path(exists=True))
@human_option
@handle_errors
def gadget_verify(path, human):
    """Verify that a gadget file lifts exactly its targets."""
    g = GadgetGraph.from_json(Path(path).read_text())
    verdict = verify_gadget(g)
    emit(verdict.to_dict(), human)
    sys.exit(YES if verdict.passes else NO)


@gadget_group.command('list')
def gadget_list():
    """Names accepted by 'gadget build'."""
    click.echo(dumps({'gadgets': list_gadgets()}), nl=False)


@cli.command()
@click.option('--instance', type=click.Path(exists=True), default=None)
@click.option('--circuit', type=click.Path(exists=True), default=None)
@click.option('--sparsify', 'sparsified', is_flag=True)
@human_option
@handle_errors
def oracle(instance, circuit, sparsified, human):
    """Exact joint-kernel dimension of a projector instance."""
    inst = _load_instance(instance, circuit, sparsified)
    dimension = kernel_oracle(inst)
    emit({'kernel_dim': dimension, 'n': inst.n, 'terms': len(inst.terms)}, human)
    sys.exit(YES if dimension > 0 else NO)


@cli.group('susy')
def susy_group():
    """Fermion hard-core model checks."""


@susy_group.command('check')
@click.option('--graph', 'graph_path', type=click.Path(exists=True), required=True)
@human_option
@handle_errors
def susy_check(graph_path, human):
    """Compare ground-space dimensions with reduced Betti numbers."""
    report = susy_report(read_graph(graph_path))
    emit(report.to_dict(), human)
    sys.exit(YES if report.matches_homology and report.forms_agree else NO)


@cli.command('sparsify')
@click.option('--circuit', type=click.Path(exists=True), required=True)
@click.option('--out', type=click.Path(), default=None)
@handle_errors
def sparsify_command(circuit, out):
    """Grid layout of a circuit."""
    result = sparsify(parse_circuit(Path(circuit).read_text()))
    if out:
        Path(out).write_text(result.to_text())
    counts = result.gate_counts()
    emit({'qubits': result.n_qubits, 'gates': len(result.gates),
          'max_gates_per_qubit': max(counts.values(), default=0), 'output': result.output})


@cli.command()
@click.option('--circuit', type=click.Path(exists=True), required=True)
@click.option('--sparsify', 'sparsified', is_flag=True)
@click.option('--out', type=click.Path(), default=None)
@handle_errors
def projectors(circuit, sparsified, out):
    """Clock-construction projector instance of a circuit."""
    inst = bravyi_projectors(parse_circuit(Path(circuit).read_text()), sparsified=sparsified)
    if out:
        Path(out).write_text(inst.to_json())
        emit({'n': inst.n, 'terms': len(inst.terms), 'max_incidence': inst.max_incidence(),
              'locality': inst.locality(), 'by_provenance': inst.counts_by_provenance()})
    else:
        click.echo(inst.to_json(), nl=False)


def main(argv: Optional[List[str]] = None) -> int:
    """Console entry point; returns the exit code."""
    try:
        cli.main(args=argv, prog_name='cliquehom', standalone_mode=False)
    except SystemExit as e:
        return int(e.code or 0)
    except click.ClickException as e:
        e.show()
        click.echo(dumps({'error': 'USAGE_ERROR', 'message': e.format_message()}), nl=False)
        return ERROR
    return YES
