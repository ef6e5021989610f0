"""Edge-count bound for 3-uniform hypergraphs admitting a good coloring.

A good coloring colors the shadow graph (all vertex pairs covered by some
hyperedge) red/blue and orients the red edges so that every hyperedge looks
like an oriented apex: two red edges u->v, u->w and a blue edge vw.  Such a
coloring exists exactly when the hyperedges can be directed 2->1 avoiding the
R3 and E patterns, and it caps the edge count at f(n) where

    f(0) = 1,   f(n) = max over k in 1..n-1 of C(k,2) * (n - k) + f(n - k).

f(1) is taken to be 1: the max ranges over an empty set there, and a
3-uniform hypergraph on one vertex has no edges, so the value keeps the bound
valid and the recursion total.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import DirectedHypergraph
from .patterns import contains_pattern

RED_PAIR = "red"
BLUE_PAIR = "blue"


class RoleConflictError(ValueError):
    """Two hyperedges demand incompatible colors/orientations of a shadow edge."""


def f_bound(n: int) -> int:
    """Evaluate the edge-count recurrence by dynamic programming."""
    if n < 0:
        raise ValueError("n must be non-negative")
    table = [1, 1]
    for m in range(2, n + 1):
        table.append(max(k * (k - 1) // 2 * (m - k) + table[m - k] for k in range(1, m)))
    return table[n]


@dataclass(frozen=True)
class GoodColoring:
    """Red/blue shadow-edge coloring with an orientation for the red edges."""

    hypergraph: DirectedHypergraph
    colors: Mapping[frozenset[str], str]
    orientation: Mapping[frozenset[str], tuple[str, str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", dict(self.colors))
        object.__setattr__(self, "orientation", dict(self.orientation))


def verify_good_coloring(gc: GoodColoring) -> bool:
    """True iff every hyperedge realizes the apex shape under the coloring.

    Raises on structural problems: a non-3-uniform edge, an uncolored shadow
    edge, or a red shadow edge without orientation.
    """
    colors = gc.colors
    orient = gc.orientation
    for e in gc.hypergraph.edges:
        verts = sorted(e.vertices)
        if len(verts) != 3:
            raise ValueError("good colorings are defined for 3-uniform hypergraphs")
        for x, y in ((0, 1), (0, 2), (1, 2)):
            pair = frozenset((verts[x], verts[y]))
            if pair not in colors:
                raise ValueError(f"shadow edge {set(pair)} is uncolored")
            if colors[pair] == RED_PAIR and pair not in orient:
                raise ValueError(f"red shadow edge {set(pair)} has no orientation")
        if not any(_is_apex(colors, orient, apex, verts) for apex in verts):
            return False
    return True


def _is_apex(colors, orient, apex: str, verts: list[str]) -> bool:
    others = [v for v in verts if v != apex]
    for v in others:
        pair = frozenset((apex, v))
        if colors[pair] != RED_PAIR or orient[pair] != (apex, v):
            return False
    return colors[frozenset(others)] == BLUE_PAIR


def induce_good_coloring(hg: DirectedHypergraph) -> GoodColoring:
    """Read a good coloring off a 2->1 hypergraph avoiding R3 and E: each
    head-tail pair goes red oriented head to tail, each tail pair blue.

    A conflict on a shared shadow edge is impossible under the avoidance
    precondition and raises RoleConflictError if encountered anyway (for
    instance when two edges share a whole vertex set with different heads).
    """
    for pattern in ("R3", "E"):
        report = contains_pattern(hg, pattern)
        if not report.avoided:
            w = report.witnesses[0]
            raise ValueError(f"hypergraph contains {pattern} (edges {w.i},{w.j})")

    colors: dict[frozenset[str], str] = {}
    orientation: dict[frozenset[str], tuple[str, str]] = {}

    def put(pair: frozenset[str], color: str, arrow: tuple[str, str] | None) -> None:
        if pair in colors and (colors[pair] != color or orientation.get(pair) != arrow):
            raise RoleConflictError(
                f"shadow edge {set(pair)} already {colors[pair]}, conflicting assignment"
            )
        colors[pair] = color
        if arrow is not None:
            orientation[pair] = arrow

    for e in hg.edges:
        head = min(e.head)
        t1, t2 = sorted(e.tail)
        put(frozenset((head, t1)), RED_PAIR, (head, t1))
        put(frozenset((head, t2)), RED_PAIR, (head, t2))
        put(frozenset((t1, t2)), BLUE_PAIR, None)
    return GoodColoring(hg, colors, orientation)
