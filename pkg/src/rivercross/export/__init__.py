"""
Export and import of rivercross artefacts.

DOT renderings of state graphs, optimal-solution schemes and fiber
lattices, and JSON documents for solutions and equivalence reports.
"""

from rivercross.export.documents import (
    SolutionsDocument,
    dump_json,
    equivalence_document,
    fiber_document,
    lift_document,
    load_solutions,
    parse_solutions,
    solutions_document,
    state_graph_document,
    write_json,
)
from rivercross.export.dot import (
    dag_dot,
    fiber_dot,
    render,
    state_graph_dot,
    write_dot,
)

__all__ = [
    "SolutionsDocument",
    "dag_dot",
    "dump_json",
    "equivalence_document",
    "fiber_document",
    "fiber_dot",
    "lift_document",
    "load_solutions",
    "parse_solutions",
    "render",
    "solutions_document",
    "state_graph_document",
    "state_graph_dot",
    "write_dot",
    "write_json",
]
