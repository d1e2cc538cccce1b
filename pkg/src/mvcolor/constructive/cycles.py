"""IMV colorings of cycles."""

import math
from typing import List

from mvcolor.builders.families import cycle_graph
from mvcolor.constructive.base import finish
from mvcolor.exceptions import PreconditionError
from mvcolor.models.coloring import Coloring, ConstructedColoring


def cycle_classes(n: int) -> List[List[int]]:
    """Classes over v1..vn, 1-based as in the usual cycle notation."""
    if n == 3:
        return [[1], [2], [3]]
    if n == 4:
        return [[1, 3], [2, 4]]
    if n == 5:
        return [[1, 3], [2, 4], [5]]
    k, rest = divmod(n, 3)
    classes = [[i, i + k, i + 2 * k] for i in range(1, k + 1)]
    if rest == 1:
        classes.append([3 * k + 1])
    elif rest == 2:
        classes[k - 1] = [k, 2 * k, 3 * k + 1]
        classes.append([3 * k, 3 * k + 2])
    return classes


def cycle_imv(n: int) -> ConstructedColoring:
    """⌈n/3⌉ classes for n = 4 or n >= 6; three classes for n in {3, 5}."""
    if n < 3:
        raise PreconditionError(f"cycle_imv needs n >= 3, got {n}")
    classes = [[v - 1 for v in members] for members in cycle_classes(n)]
    claimed = 3 if n in (3, 5) else math.ceil(n / 3)
    return finish(cycle_graph(n), Coloring.from_classes(classes, n), "cycle-imv", "imv", claimed)
