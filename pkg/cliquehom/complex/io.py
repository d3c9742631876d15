"""
Graph and complex file formats.

Edge lists hold one ``u v`` pair per line with ``#`` comments; a line with a
single token declares an isolated vertex. JSON graphs are
``{"vertices": [...], "edges": [[u, v], ...]}`` and complexes are exported as
``{"maximal_faces": [[v, ...], ...]}``.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from cliquehom.complex.cliques import SimplicialComplex
from cliquehom.complex.graph import Graph
from cliquehom.exceptions import ParseError, ValidationError


logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def parse_edge_list(text: str) -> Graph:
    vertices, edges = [], []
    seen = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", line=number)
        for token in tokens:
            if token not in seen:
                seen.add(token)
                vertices.append(token)
        if len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise ParseError(f"self-loop on {tokens[0]}", line=number)
            edges.append((tokens[0], tokens[1]))
    return Graph(vertices, edges)


def format_edge_list(g: Graph) -> str:
    lines = []
    covered = {v for e in g.edges for v in e}
    lines.extend(v for v in g.vertices if v not in covered)
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return '\n'.join(lines) + '\n'


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    return {'vertices': list(g.vertices), 'edges': [list(e) for e in g.sorted_edges()]}


def graph_from_dict(data: Dict[str, Any]) -> Graph:
    try:
        return Graph(data['vertices'], [tuple(e) for e in data['edges']])
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed graph JSON: {str(e)}")
    except ValidationError as e:
        raise ParseError(e.message)


def complex_to_dict(k: SimplicialComplex) -> Dict[str, Any]:
    return {'maximal_faces': [list(s) for s in k.maximal_faces()]}


def complex_from_dict(data: Dict[str, Any]) -> SimplicialComplex:
    try:
        return SimplicialComplex.from_maximal_faces(data['maximal_faces'])
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed complex JSON: {str(e)}")


def dumps(data: Any) -> str:
    """Byte-stable JSON used for every report."""
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


def read_graph(path: PathLike) -> Graph:
    """Read a graph from JSON (by extension or content) or an edge list."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if str(path).endswith('.json') or stripped.startswith('{'):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno)
        if 'graph' in data and isinstance(data['graph'], dict):
            data = data['graph']
        return graph_from_dict(data)
    try:
        return parse_edge_list(text)
    except ValidationError as e:
        raise ParseError(e.message)


def write_graph(g: Graph, path: PathLike) -> None:
    if str(path).endswith('.json'):
        Path(path).write_text(dumps(graph_to_dict(g)))
    else:
        Path(path).write_text(format_edge_list(g))
    logger.info(f"Wrote {g} to {path}")
