"""Directed hypergraph data model, text format, and proper-coloring check.

A directed hypergraph is a finite ordered vertex sequence plus a sequence of
hyperedges, each partitioned into a tail set and a head set.  All values here
are immutable after construction; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

# Color indices used by every algorithm and trace in this package.
BLUE, RED, GREEN, YELLOW = 0, 1, 2, 3
COLOR_NAMES = ("blue", "red", "green", "yellow")


class ParseError(ValueError):
    """Malformed hypergraph or coloring text."""


class ValidationError(ValueError):
    """A value violates a structural invariant of the data model."""


def _check_name(name: str) -> str:
    if not name or any(ch.isspace() for ch in name) or name in (">", "#"):
        raise ValidationError(f"invalid vertex name: {name!r}")
    return name


@dataclass(frozen=True)
class DirectedEdge:
    """One hyperedge: disjoint tail and head vertex sets, union non-empty."""

    tail: frozenset[str]
    head: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tail", frozenset(self.tail))
        object.__setattr__(self, "head", frozenset(self.head))
        if self.tail & self.head:
            overlap = ",".join(sorted(self.tail & self.head))
            raise ValidationError(f"head and tail overlap on {{{overlap}}}")
        if not (self.tail | self.head):
            raise ValidationError("edge has no vertices")

    @property
    def vertices(self) -> frozenset[str]:
        return self.tail | self.head

    def __len__(self) -> int:
        return len(self.tail) + len(self.head)


def edge(tails: Iterable[str], heads: Iterable[str]) -> DirectedEdge:
    """Convenience constructor accepting any iterables of vertex names."""
    return DirectedEdge(frozenset(tails), frozenset(heads))


@dataclass(frozen=True)
class DirectedHypergraph:
    """Ordered vertex sequence plus edge sequence.

    The vertex ordering is part of the value: the coloring algorithms are
    stated for an arbitrary but fixed ordering, and freezing it makes runs
    deterministic and reproducible.
    """

    vertices: tuple[str, ...]
    edges: tuple[DirectedEdge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        seen = set()
        for v in self.vertices:
            _check_name(v)
            if v in seen:
                raise ValidationError(f"duplicate vertex: {v}")
            seen.add(v)
        for idx, e in enumerate(self.edges):
            missing = e.vertices - seen
            if missing:
                names = ",".join(sorted(missing))
                raise ValidationError(f"edge {idx} uses undeclared vertices: {names}")

    @cached_property
    def positions(self) -> dict[str, int]:
        """Vertex name to position in the vertex sequence."""
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def n(self) -> int:
        return len(self.vertices)

    def with_vertex_order(self, order: Sequence[str]) -> "DirectedHypergraph":
        """Same edges under a permuted vertex sequence."""
        if sorted(order) != sorted(self.vertices):
            raise ValidationError("new order is not a permutation of the vertex set")
        return DirectedHypergraph(tuple(order), self.edges)


def is_two_to_one(hg: DirectedHypergraph) -> bool:
    """True iff every edge has exactly two tail vertices and one head vertex."""
    return all(len(e.tail) == 2 and len(e.head) == 1 for e in hg.edges)


@dataclass(frozen=True)
class Coloring:
    """Total assignment of color indices 0..k-1 to vertex names."""

    assignment: Mapping[str, int]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", dict(self.assignment))
        if self.k < 1:
            raise ValidationError("a coloring needs at least one color")
        for v, c in self.assignment.items():
            if not 0 <= c < self.k:
                raise ValidationError(f"color {c} of {v} outside 0..{self.k - 1}")

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))


def parse(text: str) -> DirectedHypergraph:
    """Parse the line-oriented .dhg format.

    Lines: ``v <name>`` declares a vertex, ``e <tails…> > <heads…>`` an edge
    (the leading ``e`` may be omitted in hand-written files).  ``#`` starts a
    comment, blank lines are skipped.  Vertex order is: explicitly declared
    vertices in declaration order, then edge-line vertices by first
    appearance, tails before heads within a line.
    """
    declared: list[str] = []
    from_edges: list[str] = []
    seen_edge_names: set[str] = set()
    edges: list[DirectedEdge] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "v":
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: vertex line needs exactly one name")
            name = _parse_name(tokens[1], lineno)
            if name in declared:
                raise ParseError(f"line {lineno}: duplicate declaration of {name}")
            declared.append(name)
        elif tokens[0] == "e" or ">" in tokens:
            body = tokens[1:] if tokens[0] == "e" else tokens
            if body.count(">") != 1:
                raise ParseError(f"line {lineno}: edge line needs exactly one '>'")
            cut = body.index(">")
            tails = [_parse_name(t, lineno) for t in body[:cut]]
            heads = [_parse_name(t, lineno) for t in body[cut + 1:]]
            if not tails and not heads:
                raise ParseError(f"line {lineno}: edge has no vertices")
            try:
                edges.append(DirectedEdge(frozenset(tails), frozenset(heads)))
            except ValidationError as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
            for name in tails + heads:
                if name not in seen_edge_names:
                    seen_edge_names.add(name)
                    from_edges.append(name)
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")

    order = declared + [v for v in from_edges if v not in declared]
    try:
        return DirectedHypergraph(tuple(order), tuple(edges))
    except ValidationError as exc:
        raise ParseError(str(exc)) from exc


def _parse_name(token: str, lineno: int) -> str:
    try:
        return _check_name(token)
    except ValidationError as exc:
        raise ParseError(f"line {lineno}: {exc}") from exc


def serialize(hg: DirectedHypergraph) -> str:
    """Canonical text form: all v lines, then all e lines, vertex-order sides.

    ``parse(serialize(hg))`` reproduces ``hg`` exactly, including vertex and
    edge order.  The empty hypergraph serializes to the empty string.
    """
    pos = hg.positions
    lines = [f"v {v}" for v in hg.vertices]
    for e in hg.edges:
        tails = " ".join(sorted(e.tail, key=pos.__getitem__))
        heads = " ".join(sorted(e.head, key=pos.__getitem__))
        lines.append(f"e{' ' if tails else ''}{tails} >{' ' if heads else ''}{heads}")
    return "".join(line + "\n" for line in lines)


def normalize(hg: DirectedHypergraph) -> DirectedHypergraph:
    """Drop every edge whose vertex set contains another edge's vertex set.

    Containment is on vertex sets, ignoring head/tail roles; among edges with
    identical vertex sets the first survives.  Any proper coloring of the
    result is a proper coloring of the input, because a dropped edge is a
    superset of a kept one and monochromaticity only depends on vertex sets.
    """
    kept: list[DirectedEdge] = []
    for i, e in enumerate(hg.edges):
        vs = e.vertices
        redundant = False
        for j, other in enumerate(hg.edges):
            if j == i:
                continue
            ovs = other.vertices
            if ovs < vs or (ovs == vs and j < i):
                redundant = True
                break
        if not redundant:
            kept.append(e)
    return DirectedHypergraph(hg.vertices, tuple(kept))


def is_proper(hg: DirectedHypergraph, coloring: Coloring) -> bool:
    """True iff no edge is monochromatic (roles play no part in properness)."""
    assignment = coloring.assignment
    for v in hg.vertices:
        if v not in assignment:
            raise ValidationError(f"vertex {v} has no color")
    for e in hg.edges:
        it = iter(e.vertices)
        first = assignment[next(it)]
        if all(assignment[v] == first for v in it):
            return False
    return True


def serialize_coloring(hg: DirectedHypergraph, coloring: Coloring) -> str:
    """One line per vertex, ``<name> <color index>``, in vertex order."""
    return "".join(f"{v} {coloring.assignment[v]}\n" for v in hg.vertices)


def parse_coloring(text: str, k: int | None = None) -> Coloring:
    """Read the coloring file format; k defaults to max index + 1."""
    assignment: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<name> <color>'")
        name = _parse_name(parts[0], lineno)
        try:
            color = int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad color index {parts[1]!r}") from exc
        if color < 0:
            raise ParseError(f"line {lineno}: negative color index")
        if name in assignment:
            raise ParseError(f"line {lineno}: {name} colored twice")
        assignment[name] = color
    if k is None:
        k = max(assignment.values(), default=0) + 1
    return Coloring(assignment, k)
