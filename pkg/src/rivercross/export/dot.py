"""
Graphviz DOT rendering.

Renderers yield DOT text line by line; join them with :func:`render` or
write them with :func:`write_dot`. Vertices are listed in canonical state
order and edges in canonical order of their endpoints, so identical inputs
give identical text. States with the boat on the left bank are filled
black.
"""

from pathlib import Path
from typing import Any, Iterable, Iterator, Optional, Union

import networkx as nx  # type: ignore[import-untyped]

from rivercross.graph import StateGraph
from rivercross.lift import FiberLattice
from rivercross.model import Side


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r"\""))


def _node_style(state: Any) -> str:
    if state.boat is Side.LEFT:
        return "style=filled, fillcolor=black, fontcolor=white"
    return "style=solid"


def state_graph_dot(
    graph: StateGraph,
    states: Optional[Iterable[Any]] = None,
    name: str = "states",
) -> Iterator[str]:
    """Render a state graph, or the subgraph on ``states``, undirected.

    Every transition is reversible, so each pair of opposite transitions is
    drawn once, labelled with the move leaving the lesser state.
    """
    keep = set(graph.states if states is None else states)
    yield f"graph {_gvquote(name)} {{\n"
    yield '  node [shape=box, fontname="monospace"];\n'
    for state in sorted(keep):
        yield f"  {_gvquote(str(state))} [{_node_style(state)}];\n"
    for source, move, target in graph.edges():
        if source not in keep or target not in keep:
            continue
        if not source < target:
            continue
        yield (
            f"  {_gvquote(str(source))} -- {_gvquote(str(target))} "
            f"[label={_gvquote(str(move))}];\n"
        )
    yield "}\n"


def dag_dot(dag: nx.DiGraph, name: str = "optimal") -> Iterator[str]:
    """Render a layered DAG (nodes carry ``layer``, edges ``move``)."""
    yield f"digraph {_gvquote(name)} {{\n"
    yield "  rankdir=LR;\n"
    yield '  node [shape=box, fontname="monospace"];\n'
    layers: dict = {}
    for state, data in dag.nodes(data=True):
        layers.setdefault(data["layer"], []).append(state)
    for layer in sorted(layers):
        yield "  { rank=same;\n"
        for state in sorted(layers[layer]):
            yield f"    {_gvquote(str(state))} [{_node_style(state)}];\n"
        yield "  }\n"
    edges = sorted(
        dag.edges(data=True), key=lambda e: (e[0].sort_key, e[1].sort_key)
    )
    for source, target, data in edges:
        yield (
            f"  {_gvquote(str(source))} -> {_gvquote(str(target))} "
            f"[label={_gvquote(str(data['move']))}];\n"
        )
    yield "}\n"


def fiber_dot(lattice: FiberLattice, name: str = "fiber") -> Iterator[str]:
    """Render a fiber lattice, one rank per layer."""

    def node_id(j: int, state: Any) -> str:
        return _gvquote(f"{j}:{state}")

    yield f"digraph {_gvquote(name)} {{\n"
    yield "  rankdir=LR;\n"
    yield '  node [shape=box, fontname="monospace"];\n'
    for j, layer in enumerate(lattice.layers):
        yield f"  {{ rank=same; // layer {j}, {len(layer)} states\n"
        for state in layer:
            yield (
                f"    {node_id(j, state)} [label={_gvquote(str(state))}, "
                f"{_node_style(state)}];\n"
            )
        yield "  }\n"
    edges = sorted(
        lattice.graph.edges(data=True),
        key=lambda e: (e[0][0], e[0][1].sort_key, e[1][1].sort_key),
    )
    for (j, source), (k, target), data in edges:
        yield (
            f"  {node_id(j, source)} -> {node_id(k, target)} "
            f"[label={_gvquote(str(data['move']))}];\n"
        )
    yield "}\n"


def render(lines: Iterable[str]) -> str:
    return "".join(lines)


def write_dot(lines: Iterable[str], path: Union[str, Path]) -> Path:
    """Write DOT lines to ``path``, creating parent directories."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8") as f:
        f.writelines(lines)
    return target
