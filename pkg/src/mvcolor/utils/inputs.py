"""Loading command-line inputs: graphs, colorings, vertex sets, partitions, formulas."""

import json
from pathlib import Path
from typing import Any, List

from pydantic import ValidationError as PydanticValidationError

from mvcolor.builders.spec import build
from mvcolor.core.edgelist import read_edge_list
from mvcolor.core.graph import Graph
from mvcolor.exceptions import InputError, ParseError
from mvcolor.hardness import parse_dimacs
from mvcolor.models.cnf import Cnf3
from mvcolor.models.coloring import Coloring
from mvcolor.models.ramsey import EdgePartition


def load_graph(source: str) -> Graph:
    """An existing file is read as an edge list; anything else is a family spec."""
    path = Path(source)
    if path.is_file():
        return read_edge_list(path)
    return build(source)


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise InputError(f"Cannot read {path}", details=str(e)) from None
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON", position=e.pos, details=e.msg) from None


def _ints(values: Any, what: str) -> List[int]:
    if not isinstance(values, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in values
    ):
        raise InputError(f"{what} must be a list of integers")
    return values


def load_coloring(path: str, g: Graph) -> Coloring:
    """Accepts ``{"classes": [[...], ...]}``, ``{"assignment": [...]}`` or a bare list.

    A bare list of lists is read as classes, a bare list of integers as an assignment.
    """
    data = _read_json(path)
    if isinstance(data, dict):
        if "classes" in data:
            data = data["classes"]
        elif "assignment" in data:
            data = data["assignment"]
        elif "coloring" in data:
            data = data["coloring"]
        else:
            raise InputError(f"{path} has neither 'classes' nor 'assignment'")
    if isinstance(data, list) and data and all(isinstance(c, list) for c in data):
        return Coloring.from_classes([_ints(c, "a class") for c in data], g.n)
    assignment = _ints(data, "an assignment")
    if len(assignment) != g.n:
        raise InputError(f"Assignment has {len(assignment)} entries for {g.n} vertices")
    try:
        return Coloring(assignment=assignment)
    except PydanticValidationError as e:
        raise InputError("Invalid coloring", details=e.errors()[0].get("msg")) from None


def load_vertex_set(path: str, g: Graph) -> List[int]:
    """A JSON list of vertices, or whitespace-separated integers."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read {path}", details=str(e)) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        try:
            data = [int(token) for token in text.split()]
        except ValueError:
            raise ParseError(f"{path} is neither JSON nor a list of integers") from None
    members = _ints(data, "a vertex set")
    bad = [v for v in members if not 0 <= v < g.n]
    if bad:
        raise InputError(f"Vertex {bad[0]} out of range for n={g.n}")
    if len(set(members)) != len(members):
        raise InputError("Vertex set lists a vertex twice")
    return sorted(members)


def load_partition(path: str) -> EdgePartition:
    try:
        return EdgePartition.model_validate(_read_json(path))
    except PydanticValidationError as e:
        raise InputError(f"{path} is not an edge partition", details=str(e)) from None


def load_cnf(path: str) -> Cnf3:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read {path}", details=str(e)) from None
    return parse_dimacs(text)
