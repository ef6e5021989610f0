"""Pairwise edge-intersection analysis and two-edge pattern detection.

The seven named patterns are the two-edge 2->1 hypergraphs classified by how
the edges intersect and which roles the shared vertices play:

    H2  ab>c, ab>d   two common vertices, tails of both edges
    I1  ab>c, ad>c   two common, one tail of both and one head of both
    R3  ab>c, bc>d   two common, tails of one edge, head+tail of the other
    E   ab>c, dc>b   two common, each the head of one edge and tail of the other
    I0  ab>e, cd>e   one common vertex, head of both
    H1  ab>c, ad>e   one common, tail of both
    R4  ab>c, cd>e   one common, head of one and tail of the other

Because every pattern has exactly two edges, containment reduces to
classifying each edge pair; no general subhypergraph isomorphism is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DirectedEdge, DirectedHypergraph, is_two_to_one

PATTERN_IDS = ("H2", "I1", "R3", "E", "I0", "H1", "R4")

# Abstract (tails, head) templates over placeholder vertices.  Tests use these
# to drive an independent injective-map containment oracle.
PATTERN_EDGES: dict[str, tuple[tuple[tuple[str, str], str], tuple[tuple[str, str], str]]] = {
    "H2": ((("a", "b"), "c"), (("a", "b"), "d")),
    "I1": ((("a", "b"), "c"), (("a", "d"), "c")),
    "R3": ((("a", "b"), "c"), (("b", "c"), "d")),
    "E": ((("a", "b"), "c"), (("d", "c"), "b")),
    "I0": ((("a", "b"), "e"), (("c", "d"), "e")),
    "H1": ((("a", "b"), "c"), (("a", "d"), "e")),
    "R4": ((("a", "b"), "c"), (("c", "d"), "e")),
}

CONDITION_IDS = (
    "onehead-h1",
    "i0-free",
    "r4-free",
    "i0r4-free",
    "lovasz",
    "h2-two-intersect",
    "tails-only-2-intersect",
)


@dataclass(frozen=True)
class IntersectionProfile:
    """Shared vertices of the edge pair (i, j) with their role in each edge."""

    i: int
    j: int
    common: tuple[tuple[str, str, str], ...]  # (vertex, role in edge i, role in edge j)


@dataclass(frozen=True)
class PatternReport:
    """Outcome of a pattern or condition check; avoided iff no witnesses."""

    pattern: str
    avoided: bool
    witnesses: tuple[IntersectionProfile, ...]

    def __post_init__(self) -> None:
        if self.avoided != (not self.witnesses):
            raise ValueError("avoided flag inconsistent with witness list")


def classify_intersection(hg: DirectedHypergraph, i: int, j: int) -> IntersectionProfile:
    """Exact intersection of edges i < j, listed in vertex-sequence order."""
    if not 0 <= i < j < len(hg.edges):
        raise IndexError(f"edge pair ({i}, {j}) out of range")
    e1, e2 = hg.edges[i], hg.edges[j]
    pos = hg.positions
    common = sorted(e1.vertices & e2.vertices, key=pos.__getitem__)
    rows = tuple(
        (v, "tail" if v in e1.tail else "head", "tail" if v in e2.tail else "head")
        for v in common
    )
    return IntersectionProfile(i, j, rows)


def classify_pair(e1: DirectedEdge, e2: DirectedEdge) -> str | None:
    """Which of the seven patterns a pair of 2->1 edges realizes, if any.

    Pairs intersecting in zero or three vertices match no pattern (all seven
    need four or five distinct vertices).
    """
    common = e1.vertices & e2.vertices
    size = len(common)
    if size == 1:
        (v,) = common
        in_h1, in_h2 = v in e1.head, v in e2.head
        if in_h1 and in_h2:
            return "I0"
        if not in_h1 and not in_h2:
            return "H1"
        return "R4"
    if size == 2:
        tails1 = common <= e1.tail
        tails2 = common <= e2.tail
        if tails1 and tails2:
            return "H2"
        if tails1 or tails2:
            return "R3"
        # Each edge has its head among the two common vertices.
        h1, h2 = next(iter(e1.head)), next(iter(e2.head))
        return "I1" if h1 == h2 else "E"
    return None


def contains_pattern(hg: DirectedHypergraph, pattern: str) -> PatternReport:
    """Decide whether a 2->1 hypergraph contains the pattern as a subhypergraph.

    Witnesses list every matching edge pair, not just the first.
    """
    if pattern not in PATTERN_IDS:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERN_IDS}")
    if not is_two_to_one(hg):
        raise ValueError("pattern containment is defined for 2->1 hypergraphs only")
    witnesses = []
    m = len(hg.edges)
    for i in range(m):
        for j in range(i + 1, m):
            if classify_pair(hg.edges[i], hg.edges[j]) == pattern:
                witnesses.append(classify_intersection(hg, i, j))
    return PatternReport(pattern, not witnesses, tuple(witnesses))


def pair_satisfies(cond: str, e1: DirectedEdge, e2: DirectedEdge) -> bool:
    """Whether one edge pair meets an intersection condition.

    Each condition constrains only pairs with the relevant intersection size
    (one vertex, or two for the last two conditions); other pairs pass.
    """
    common = e1.vertices & e2.vertices
    size = len(common)
    if cond == "lovasz":
        return size != 1
    if cond in ("onehead-h1", "i0-free", "r4-free", "i0r4-free"):
        if size != 1:
            return True
        (v,) = common
        in_h1, in_h2 = v in e1.head, v in e2.head
        if cond == "onehead-h1":
            return in_h1 or in_h2
        if cond == "i0-free":
            return (v in e1.tail) or (v in e2.tail)
        if cond == "r4-free":
            return in_h1 == in_h2
        return (v in e1.tail) and (v in e2.tail)
    if cond in ("h2-two-intersect", "tails-only-2-intersect"):
        if size != 2:
            return True
        if cond == "h2-two-intersect":
            return any(v in e1.head or v in e2.head for v in common)
        return e1.tail == common and e2.tail == common
    raise ValueError(f"unknown condition {cond!r}; expected one of {CONDITION_IDS}")


def check_condition(hg: DirectedHypergraph, cond: str) -> PatternReport:
    """Check an intersection condition over all edge pairs of a general hypergraph.

    avoided is True iff every relevant pair satisfies the condition; witnesses
    enumerate the violating pairs.
    """
    if cond not in CONDITION_IDS:
        raise ValueError(f"unknown condition {cond!r}; expected one of {CONDITION_IDS}")
    witnesses = []
    m = len(hg.edges)
    for i in range(m):
        for j in range(i + 1, m):
            if not pair_satisfies(cond, hg.edges[i], hg.edges[j]):
                witnesses.append(classify_intersection(hg, i, j))
    return PatternReport(cond, not witnesses, tuple(witnesses))
