"""FamilySpec surface syntax.

Grammar::

    spec  := name '(' spec (',' spec)* ')' | atom
    atom  := name [':' int (',' int)*]

Atom parameters are read greedily: a comma followed by a digit continues the
parameter list, so ``strong(biclique:2,3,path:4)`` parses as expected.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from mvcolor.builders import families, products
from mvcolor.core.graph import Graph
from mvcolor.exceptions import ParseError

# atom name -> (allowed parameter counts, minimum value of each parameter)
ATOMS: Dict[str, Tuple[Tuple[int, ...], int]] = {
    "path": ((1,), 1),
    "cycle": ((1,), 3),
    "complete": ((1,), 1),
    "empty": ((1,), 1),
    "biclique": ((2,), 1),
    "star": ((1,), 1),
    "petersen": ((0,), 0),
    "tree": ((2,), 0),
    "hamming": ((), 1),
}

COMBINATORS: Dict[str, int] = {
    "cartesian": 2,
    "strong": 2,
    "lex": 2,
    "direct": 2,
    "corona": 2,
    "subdivision": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """Parse tree node: an atom with integer parameters or a combinator."""

    kind: str
    params: Tuple[int, ...] = ()
    children: Tuple["FamilySpec", ...] = field(default=())

    def __str__(self) -> str:
        if self.kind in COMBINATORS:
            return f"{self.kind}({','.join(str(c) for c in self.children)})"
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"

    def order(self) -> int:
        """Vertex count of the graph this spec builds (a lower bound under subdivision)."""
        k, p = self.kind, self.params
        if k in ("path", "complete", "empty", "cycle"):
            return p[0]
        if k == "biclique":
            return p[0] + p[1]
        if k == "star":
            return p[0] + 1
        if k == "petersen":
            return 10
        if k == "tree":
            return p[1]
        if k == "hamming":
            total = 1
            for d in p:
                total *= d
            return total
        if k == "subdivision":
            # edge count unknown until built; the subdivision builder checks again
            return self.children[0].order()
        left, right = (c.order() for c in self.children)
        if k == "corona":
            return left * (1 + right)
        return left * right


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(
            message,
            position=self.pos,
            details=f"at position {self.pos} in {self.text!r}",
        )

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise self.error(f"Expected '{char}'")
        self.pos += 1

    def name(self) -> str:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalpha() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if start == self.pos:
            raise self.error("Expected a family or combinator name")
        return self.text[start : self.pos].lower()

    def integer(self) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("Expected an integer")
        return int(self.text[start : self.pos])

    def digit_follows_comma(self) -> bool:
        if self.peek() != ",":
            return False
        look = self.pos + 1
        while look < len(self.text) and self.text[look].isspace():
            look += 1
        return look < len(self.text) and self.text[look].isdigit()

    def spec(self) -> FamilySpec:
        start = self.pos
        word = self.name()
        if word in COMBINATORS:
            self.expect("(")
            children = [self.spec()]
            while self.peek() == ",":
                self.pos += 1
                children.append(self.spec())
            self.expect(")")
            if len(children) != COMBINATORS[word]:
                self.pos = start
                raise self.error(
                    f"'{word}' takes {COMBINATORS[word]} argument(s), got {len(children)}"
                )
            return FamilySpec(word, (), tuple(children))
        if word not in ATOMS:
            self.pos = start
            raise self.error(f"Unknown family '{word}'")

        params: List[int] = []
        if self.peek() == ":":
            self.pos += 1
            params.append(self.integer())
            while self.digit_follows_comma():
                self.pos += 1
                params.append(self.integer())
        counts, minimum = ATOMS[word]
        if counts and len(params) not in counts:
            self.pos = start
            raise self.error(f"'{word}' takes {counts[0]} parameter(s), got {len(params)}")
        if word == "hamming" and not params:
            self.pos = start
            raise self.error("'hamming' needs at least one dimension")
        if word == "tree":
            # the seed may be any non-negative integer
            minimum, checked = 1, params[1:]
        else:
            checked = params
        for value in checked:
            if value < minimum:
                self.pos = start
                raise self.error(f"'{word}' parameters must be >= {minimum}, got {value}")
        return FamilySpec(word, tuple(params))

    def parse(self) -> FamilySpec:
        result = self.spec()
        if self.peek():
            raise self.error("Unexpected trailing input")
        return result


def parse_spec(text: str) -> FamilySpec:
    return _Parser(text).parse()


_ATOM_BUILDERS: Dict[str, Callable[..., Graph]] = {
    "path": families.path_graph,
    "cycle": families.cycle_graph,
    "complete": families.complete_graph,
    "empty": families.empty_graph,
    "biclique": families.biclique,
    "star": families.star,
    "petersen": families.petersen,
    "tree": families.random_tree,
}

_COMBINATOR_BUILDERS: Dict[str, Callable[..., Graph]] = {
    "cartesian": products.cartesian,
    "strong": products.strong,
    "lex": products.lex,
    "direct": products.direct,
    "corona": products.corona,
    "subdivision": products.subdivision,
}


def _build(spec: FamilySpec) -> Graph:
    if spec.kind == "hamming":
        return products.hamming(spec.params)
    if spec.kind in _ATOM_BUILDERS:
        return _ATOM_BUILDERS[spec.kind](*spec.params)
    children = [_build(c) for c in spec.children]
    g = _COMBINATOR_BUILDERS[spec.kind](*children)
    return Graph(
        g.n, g.edges(), labels=g.labels, name=str(spec), product=g.product, tags=g.tags
    )


def build(spec) -> Graph:
    """Build a graph from a FamilySpec or its text form."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    products.check_order(spec.order(), str(spec))
    return _build(spec)
