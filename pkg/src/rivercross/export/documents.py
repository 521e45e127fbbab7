"""
JSON documents for solutions and equivalence reports.

A solutions document lists each solution as alternating state and move
text forms, ``[state, move, state, ..., state]``. Loading accepts that form
or a list of states only, restoring the moves, and validates every step
against the boat capacity. Documents are validated against the packaged
schemas on the way in and on the way out.
"""

import json
from dataclasses import dataclass
from pathlib import Path as FilePath
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from rivercross.category import EquivalenceReport, LawReport
from rivercross.graph import StateGraph
from rivercross.lift import (
    FiberLattice,
    LiftTrace,
    lift_permutations_in_rotation_subgroup,
)
from rivercross.model import (
    Flavor,
    InvalidMoveError,
    InvalidStateError,
    ParseError,
    capacity,
    parse_move,
    parse_state,
)
from rivercross.paths import (
    InvalidPathError,
    Path,
    path_from_states,
    validate_path,
)
from rivercross.schema import load_json_file, validate_document
from rivercross.solver import ShortestSolutions


@dataclass(frozen=True)
class SolutionsDocument:
    """Solutions read back from a document.

    Attributes:
        n: Instance size.
        b: Boat capacity; the document's, or capacity(n) when absent.
        flavor: HW or MC.
        solutions: Parsed and validated paths.
        length: Declared trip count, if any.
        count: Declared solution count, if any.
    """

    n: int
    b: int
    flavor: Flavor
    solutions: Tuple[Path, ...]
    length: Optional[int] = None
    count: Optional[int] = None


def solutions_document(
    result: Union[ShortestSolutions, Sequence[Path]],
    n: Optional[int] = None,
    b: Optional[int] = None,
    flavor: Optional[Flavor] = None,
) -> Dict[str, Any]:
    """Build a solutions document.

    Args:
        result: Optimal solutions, or any sequence of solutions.
        n: Instance size, required with a plain sequence.
        b: Boat capacity, required with a plain sequence.
        flavor: HW or MC, required with a plain sequence.

    Returns:
        Schema-valid document; ``length`` is present when every listed
        solution has the same number of trips.
    """
    if isinstance(result, ShortestSolutions):
        document: Dict[str, Any] = {
            "n": result.n,
            "b": result.b,
            "flavor": result.flavor.value,
            "length": result.length,
            "count": result.count,
            "solutions": [
                [str(item) for item in s.sequence()] for s in result.solutions
            ],
        }
    else:
        if n is None or b is None or flavor is None:
            raise ValueError("n, b and flavor are required for a path list")
        paths = list(result)
        document = {"n": n, "b": b, "flavor": flavor.value}
        lengths = {p.length for p in paths}
        if len(lengths) == 1:
            document["length"] = lengths.pop()
        document["count"] = len(paths)
        document["solutions"] = [
            [str(item) for item in p.sequence()] for p in paths
        ]
    validate_document(document, "solutions")
    return document


def _parse_path(tokens: List[str], flavor: Flavor, b: int) -> Path:
    alternating = any(t.lstrip().startswith("{") for t in tokens)
    states = []
    moves = []
    for i, token in enumerate(tokens):
        step = i // 2 if alternating else i
        try:
            if alternating and i % 2:
                moves.append(parse_move(token, flavor))
            else:
                states.append(parse_state(token, flavor))
        except (ParseError, InvalidStateError, InvalidMoveError) as e:
            raise InvalidPathError(f"Step {step}: {e}", step=step) from e
    if not alternating:
        return path_from_states(states, b)
    if len(moves) != len(states) - 1:
        raise InvalidPathError(
            "Alternating solution must start and end with a state",
            step=len(moves),
        )
    return validate_path(Path(tuple(states), tuple(moves)), b)


def parse_solutions(document: Dict[str, Any]) -> SolutionsDocument:
    """Validate and parse a solutions document.

    Raises:
        SchemaValidationError: If the document fails the schema.
        InvalidPathError: At the first broken step of the first broken
            solution; the message names the solution index.
    """
    validate_document(document, "solutions")
    n = int(document["n"])
    flavor = Flavor(document["flavor"])
    b = int(document.get("b", capacity(n)))
    solutions = []
    for index, tokens in enumerate(document["solutions"]):
        try:
            path = _parse_path(tokens, flavor, b)
        except InvalidPathError as e:
            raise InvalidPathError(f"Solution {index}: {e}", e.step) from e
        if path.source.n != n:
            raise InvalidPathError(
                f"Solution {index}: states have n={path.source.n}, "
                f"document has n={n}"
            )
        solutions.append(path)
    return SolutionsDocument(
        n,
        b,
        flavor,
        tuple(solutions),
        document.get("length"),
        document.get("count"),
    )


def load_solutions(path: Union[str, FilePath]) -> SolutionsDocument:
    """Load, validate and parse a solutions JSON file."""
    return parse_solutions(load_json_file(path))


def equivalence_document(
    report: EquivalenceReport, laws: Iterable[LawReport] = ()
) -> Dict[str, Any]:
    """Equivalence report document, with the law checks run alongside."""
    document = report.to_dict()
    law_list = [law.to_dict() for law in laws]
    if law_list:
        document["laws"] = law_list
    validate_document(document, "equivalence-report")
    return document


def dump_json(document: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, newline."""
    text = json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)
    return text + "\n"


def write_json(document: Any, path: Union[str, FilePath]) -> FilePath:
    """Write ``document`` as JSON to ``path``, creating parent directories."""
    target = FilePath(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8") as f:
        f.write(dump_json(document))
    return target


def state_graph_document(
    graph: StateGraph, states: Optional[Iterable[Any]] = None
) -> Dict[str, Any]:
    """States and transitions of a graph, or of the subgraph on ``states``.

    Each transition is listed once per direction as ``[source, move,
    target]``.
    """
    keep = set(graph.states if states is None else states)
    return {
        "n": graph.n,
        "b": graph.b,
        "flavor": graph.flavor.value,
        "states": [str(s) for s in sorted(keep)],
        "transitions": [
            [str(source), str(move), str(target)]
            for source, move, target in graph.edges()
            if source in keep and target in keep
        ],
    }


def fiber_document(lattice: FiberLattice) -> Dict[str, Any]:
    """Layers, count and edges of a fiber lattice."""
    edges = sorted(
        lattice.graph.edges(data=True),
        key=lambda e: (e[0][0], e[0][1].sort_key, e[1][1].sort_key),
    )
    return {
        "mc_path": [str(item) for item in lattice.mc_path.sequence()],
        "count": lattice.count,
        "layer_sizes": list(lattice.layer_sizes),
        "layers": [[str(s) for s in layer] for layer in lattice.layers],
        "edges": [
            [j, str(source), str(data["move"]), str(target)]
            for (j, source), (_, target), data in edges
        ],
    }


def lift_document(
    trace: LiftTrace, b: int, lattice: Optional[FiberLattice] = None
) -> Dict[str, Any]:
    """A lifted path with its relabelling trace and optional fiber."""
    path = trace.path
    document: Dict[str, Any] = {
        "n": path.source.n,
        "b": b,
        "flavor": "hw",
        "strategy": trace.strategy.value,
        "solution": [str(item) for item in path.sequence()],
        "permutations": [str(pi) for pi in trace.permutations],
        "cases": [str(label) for label in trace.cases],
        "rotation_subgroup": lift_permutations_in_rotation_subgroup(trace),
    }
    if lattice is not None:
        document["fiber"] = fiber_document(lattice)
    return document
