"""Exact proper k-colorability and chromatic number by exhaustive backtracking.

This is the ground-truth oracle the constructive algorithms are checked
against.  Vertices are assigned in sequence order with two symmetry breaks
that are sound because properness is invariant under permuting colors: the
first vertex is fixed to color 0, and a vertex may only use a color at most
one above the largest color used so far.  The first solution found is then
the lexicographically smallest proper assignment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Coloring, DirectedHypergraph

DEFAULT_MAX_K = 8


@dataclass(frozen=True)
class ChromaticResult:
    """Chromatic number up to a search bound; chi is None beyond max_k."""

    chi: int | None
    max_k: int
    witness: Coloring | None

    @property
    def exceeded(self) -> bool:
        return self.chi is None

    def __str__(self) -> str:
        return f">{self.max_k}" if self.chi is None else str(self.chi)


def find_proper_coloring(hg: DirectedHypergraph, k: int) -> Coloring | None:
    """First proper k-coloring in lexicographic order (vertex 1 fixed to 0), or None."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = hg.n
    if n == 0:
        return Coloring({}, k)
    pos = hg.positions
    # A single-vertex edge can never see two color classes.
    if any(len(e) == 1 for e in hg.edges):
        return None

    # Edges indexed by the position of their last-assigned vertex; an edge is
    # checked exactly once, when that vertex receives its color.
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in hg.edges:
        positions = tuple(sorted(pos[v] for v in e.vertices))
        closing[positions[-1]].append(positions)
    closing_t = [tuple(lst) for lst in closing]

    colors = [-1] * n

    def assign(p: int, max_used: int) -> bool:
        if p == n:
            return True
        limit = min(k - 1, max_used + 1)
        check = closing_t[p]
        for c in range(limit + 1):
            colors[p] = c
            ok = True
            for positions in check:
                first = colors[positions[0]]
                for q in positions[1:]:
                    if colors[q] != first:
                        break
                else:
                    ok = False
                    break
            if ok and assign(p + 1, max_used if c <= max_used else c):
                return True
        colors[p] = -1
        return False

    if not assign(0, -1):
        return None
    return Coloring({v: colors[pos[v]] for v in hg.vertices}, k)


def chromatic_number(hg: DirectedHypergraph, max_k: int = DEFAULT_MAX_K) -> ChromaticResult:
    """Smallest k <= max_k admitting a proper k-coloring, with a witness."""
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    for k in range(1, max_k + 1):
        witness = find_proper_coloring(hg, k)
        if witness is not None:
            return ChromaticResult(k, max_k, witness)
    return ChromaticResult(None, max_k, None)
