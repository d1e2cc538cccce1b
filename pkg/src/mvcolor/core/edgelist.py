"""Edge-list text format and DOT export.

The edge-list format is a header line ``n m`` followed by ``m`` lines ``u v`` with
``0 <= u < v < n``. Everything after ``#`` on a line is ignored.
"""

import os
import tempfile
from pathlib import Path
from typing import Dict, Optional, Sequence, Union

from mvcolor.core.graph import Graph
from mvcolor.exceptions import ParseError

DOT_SCHEME = "set312"
DOT_SCHEME_SIZE = 12


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, lineno: int, expected: int):
    parts = line.split()
    if len(parts) != expected:
        raise ParseError(
            f"Expected {expected} integers, got {len(parts)}", details=f"line {lineno}: {line!r}"
        )
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError("Non-integer token", details=f"line {lineno}: {line!r}") from None


def parse_edge_list(text: str, name: str = "") -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("Empty edge list", suggestion="The first line must be 'n m'")
    lineno, header = lines[0]
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("Negative vertex or edge count", details=f"line {lineno}")
    if len(lines) - 1 != m:
        raise ParseError(f"Header announces {m} edges, found {len(lines) - 1}")

    seen = set()
    edges = []
    for lineno, line in lines[1:]:
        u, v = _ints(line, lineno, 2)
        if not 0 <= u < v < n:
            raise ParseError(f"Edge ({u}, {v}) violates 0 <= u < v < n", details=f"line {lineno}")
        if (u, v) in seen:
            raise ParseError(f"Duplicate edge ({u}, {v})", details=f"line {lineno}")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges, name=name)


def read_edge_list(path: Union[str, Path]) -> Graph:
    path = Path(path)
    return parse_edge_list(path.read_text(encoding="utf-8"), name=path.stem)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def to_dot(
    g: Graph,
    classes: Optional[Sequence[Sequence[int]]] = None,
    with_labels: bool = True,
) -> str:
    """Render ``g`` as a DOT graph; vertices get a ``color`` attribute from ``classes``.

    Class ``i`` maps to entry ``i % 12 + 1`` of the Brewer ``set312`` scheme.
    """
    color_of: Dict[int, int] = {}
    for index, members in enumerate(classes or []):
        for v in members:
            color_of[v] = index

    title = (g.name or "G").replace('"', "'")
    out = [f'graph "{title}" {{']
    if color_of:
        out.append(f"  node [colorscheme={DOT_SCHEME}];")
    for v in range(g.n):
        attrs = []
        if with_labels and g.labels is not None:
            attrs.append('label="{}"'.format(g.label(v).replace('"', "'")))
        if v in color_of:
            attrs.append(f"color={color_of[v] % DOT_SCHEME_SIZE + 1}")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        out.append(f"  {v}{suffix};")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def write_atomic(path: Union[str, Path], text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file in the same directory."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
