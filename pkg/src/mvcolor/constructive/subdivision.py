"""IMV colorings of subdivided complete graphs."""

from typing import List

from mvcolor.builders.families import complete_graph
from mvcolor.builders.products import subdivision, subdivision_vertex
from mvcolor.constructive.base import finish
from mvcolor.core.graph import Graph
from mvcolor.exceptions import PreconditionError, ValidationError
from mvcolor.models.coloring import Coloring, ConstructedColoring
from mvcolor.models.ramsey import EdgePartition
from mvcolor.solvers.ramsey import verify_k4free_partition


def _classes_from_partition(host: Graph, p: EdgePartition) -> List[List[int]]:
    labels = p.labels()
    classes: List[List[int]] = [list(range(host.n))]
    for label in labels:
        classes.append([subdivision_vertex(host, u, v) for u, v in p.class_edges(label)])
    return classes


def subdiv_imv_from_partition(n: int, p: EdgePartition) -> ConstructedColoring:
    """Originals as one class plus one class of subdivision vertices per edge class."""
    if p.host != "complete" or p.sizes != [n]:
        raise PreconditionError(f"Partition is over {p.host_spec}, expected complete:{n}")
    k4 = verify_k4free_partition(p)
    if k4 is not None:
        label, quad = k4
        raise ValidationError(
            "Edge partition is not K4-free",
            details=f"class {label} contains a K4 on vertices {list(quad)}",
        )
    host = complete_graph(n)
    classes = _classes_from_partition(host, p)
    return finish(
        subdivision(host),
        Coloring.from_classes(classes, host.n + host.m),
        "subdiv-imv",
        "imv",
        len(classes),
    )

