"""MV colorings from 1-defective colorings of diameter-2 graphs."""

from mvcolor.constructive.base import finish
from mvcolor.core.geodesic import diameter
from mvcolor.core.graph import Graph
from mvcolor.exceptions import PreconditionError
from mvcolor.models.coloring import Coloring, ConstructedColoring
from mvcolor.solvers.chromatic import is_valid_coloring


def defective_to_mv(g: Graph, c: Coloring) -> ConstructedColoring:
    """At diameter 2 every (k,1)-coloring is already an MV coloring."""
    d = diameter(g)
    if d != 2:
        raise PreconditionError(f"defective_to_mv needs diameter 2, got {d}")
    if not is_valid_coloring(g, c, "defective1"):
        raise PreconditionError("Coloring is not 1-defective")
    return finish(g, c.normalized(), "defective-mv", "mv", c.k)
