"""Constructions: the two 5-vertex example hypergraphs, the two
chromatic-lower-bound towers, and seeded random condition-constrained
instances for fuzzing.

All generators are deterministic functions of their parameters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .core import DirectedEdge, DirectedHypergraph
from .patterns import CONDITION_IDS

GENERATOR_KINDS = ("paper-i", "paper-r", "h2-tower", "perm-tower", "random")
H2_TOWER_MAX_LEVEL = 6
PERM_TOWER_MAX_LEVEL = 3
REJECTION_ATTEMPTS_PER_EDGE = 100


def _edge21(t1: str, t2: str, h: str) -> DirectedEdge:
    return DirectedEdge(frozenset((t1, t2)), frozenset((h,)))


def paper_i() -> DirectedHypergraph:
    """The 5-vertex hypergraph I: every 3-subset is an edge, heads arranged so
    that every one-vertex intersection is a tail somewhere (I0 avoided).
    Chromatic number 3 by pigeonhole: any 2-coloring leaves three vertices of
    one color, and those three form an edge."""
    v = ("v1", "v2", "v3", "v4", "v5")
    triples = [
        (1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 1), (1, 5, 2),
        (1, 3, 4), (2, 4, 5), (3, 5, 1), (1, 4, 2), (2, 5, 3),
    ]
    edges = tuple(_edge21(f"v{a}", f"v{b}", f"v{c}") for a, b, c in triples)
    return DirectedHypergraph(v, edges)


def paper_r() -> DirectedHypergraph:
    """The 5-vertex hypergraph R: every 3-subset is an edge, heads arranged so
    that no one-vertex intersection mixes a head role with a tail role (R4
    avoided).  Chromatic number 3."""
    v = ("v1", "v2", "v3", "v4", "v5")
    rows = [
        (2, 3, 1), (2, 4, 3), (3, 4, 5), (4, 5, 1), (1, 2, 5),
        (1, 4, 2), (3, 5, 2), (1, 3, 4), (2, 5, 4), (1, 5, 3),
    ]
    edges = tuple(_edge21(f"v{a}", f"v{b}", f"v{c}") for a, b, c in rows)
    return DirectedHypergraph(v, edges)


def _prefixed(hg: DirectedHypergraph, prefix: str) -> DirectedHypergraph:
    rename = {v: prefix + v for v in hg.vertices}
    edges = tuple(
        DirectedEdge(frozenset(rename[v] for v in e.tail), frozenset(rename[v] for v in e.head))
        for e in hg.edges
    )
    return DirectedHypergraph(tuple(rename[v] for v in hg.vertices), edges)


def gen_h2_tower(k: int, max_level: int = H2_TOWER_MAX_LEVEL) -> DirectedHypergraph:
    """Recursive construction avoiding H2 with chromatic number at least k.

    Level 2 is a single edge on three vertices.  Level k+1 joins two disjoint
    copies A, B of level k with a fresh apex x and all edges ab>x for a in A,
    b in B: with only k colors both copies realize every color, so some pair
    matches the apex and forms a monochromatic edge.
    """
    if k < 2:
        raise ValueError("tower level must be at least 2")
    if k > max_level:
        raise ValueError(f"tower level {k} exceeds the resource guard {max_level}")
    if k == 2:
        return DirectedHypergraph(("v1", "v2", "v3"), (_edge21("v1", "v2", "v3"),))
    below = gen_h2_tower(k - 1, max_level=max_level)
    a = _prefixed(below, "a_")
    b = _prefixed(below, "b_")
    apex = f"x_{k}"
    cross = tuple(_edge21(av, bv, apex) for av in a.vertices for bv in b.vertices)
    return DirectedHypergraph(a.vertices + b.vertices + (apex,), a.edges + b.edges + cross)


def gen_perm_tower(k: int, max_level: int = PERM_TOWER_MAX_LEVEL) -> DirectedHypergraph:
    """Recursive construction with chromatic number at least k in which any two
    edges sharing two vertices share them as both edges' tails (so I1, R3 and
    E are all avoided).

    Level k+1 joins two equal-size copies A, B of level k with one apex per
    permutation s of 1..n and edges a_i b_s(i) > x_s.  The apex count is n!,
    hence the tight default guard.
    """
    if k < 2:
        raise ValueError("tower level must be at least 2")
    if k > max_level:
        raise ValueError(f"tower level {k} exceeds the resource guard {max_level}")
    if k == 2:
        return DirectedHypergraph(("v1", "v2", "v3"), (_edge21("v1", "v2", "v3"),))
    below = gen_perm_tower(k - 1, max_level=max_level)
    a = _prefixed(below, "a_")
    b = _prefixed(below, "b_")
    n = len(a.vertices)
    sep = "" if n <= 9 else "-"
    apexes = []
    cross = []
    for sigma in permutations(range(1, n + 1)):
        apex = f"x_{k}_" + sep.join(str(i) for i in sigma)
        apexes.append(apex)
        for i in range(1, n + 1):
            cross.append(_edge21(a.vertices[i - 1], b.vertices[sigma[i - 1] - 1], apex))
    return DirectedHypergraph(
        a.vertices + b.vertices + tuple(apexes),
        a.edges + b.edges + tuple(cross),
    )


def _mask_pair_ok(cond: str, e1: tuple[int, int, int], e2: tuple[int, int, int]) -> bool:
    # Bitmask mirror of patterns.pair_satisfies for one-head edges:
    # e = (head index, tail mask, full mask).
    common = e1[2] & e2[2]
    size = bin(common).count("1")
    if cond == "lovasz":
        return size != 1
    if cond in ("onehead-h1", "i0-free", "r4-free", "i0r4-free"):
        if size != 1:
            return True
        in_h1 = common == 1 << e1[0]
        in_h2 = common == 1 << e2[0]
        if cond == "onehead-h1":
            return in_h1 or in_h2
        if cond == "i0-free":
            return not (in_h1 and in_h2)
        if cond == "r4-free":
            return in_h1 == in_h2
        return not in_h1 and not in_h2
    if size != 2:
        return True
    if cond == "h2-two-intersect":
        return bool(common & (1 << e1[0])) or bool(common & (1 << e2[0]))
    return e1[1] == common and e2[1] == common


def gen_random(
    n: int,
    m: int,
    cond: str = "none",
    seed: int = 0,
    tail_range: tuple[int, int] = (2, 2),
    max_attempts: int | None = None,
) -> DirectedHypergraph:
    """Seeded rejection sampling of a one-head hypergraph satisfying a condition.

    Draws a random edge (tail size from tail_range, default 2 giving a 2->1
    hypergraph), keeps it iff its vertex set is new and the condition still
    holds against every accepted edge.  May return fewer than m edges once the
    attempt budget (100 per requested edge by default) runs out; identical
    parameters give identical output.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    if m < 0:
        raise ValueError("edge budget must be non-negative")
    if cond != "none" and cond not in CONDITION_IDS:
        raise ValueError(f"unknown condition {cond!r}")
    lo, hi = tail_range
    hi = min(hi, n - 1)
    if not 1 <= lo <= hi:
        raise ValueError(f"unusable tail size range {tail_range} for n={n}")

    rng = random.Random(seed)
    budget = REJECTION_ATTEMPTS_PER_EDGE * m if max_attempts is None else max_attempts
    accepted: list[tuple[int, int, int]] = []
    used_sets: set[int] = set()

    attempts = 0
    while len(accepted) < m and attempts < budget:
        attempts += 1
        size = rng.randint(lo, hi)
        picks = rng.sample(range(n), size + 1)
        head = picks[-1]
        tail_mask = 0
        for t in picks[:-1]:
            tail_mask |= 1 << t
        full_mask = tail_mask | (1 << head)
        if full_mask in used_sets:
            continue
        candidate = (head, tail_mask, full_mask)
        if cond != "none" and not all(_mask_pair_ok(cond, candidate, e) for e in accepted):
            continue
        accepted.append(candidate)
        used_sets.add(full_mask)

    names = tuple(f"v{i + 1}" for i in range(n))
    edges = tuple(
        DirectedEdge(
            frozenset(names[i] for i in range(n) if tmask & (1 << i)),
            frozenset((names[head],)),
        )
        for head, tmask, _ in accepted
    )
    return DirectedHypergraph(names, edges)


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generator invocation; build() runs it."""

    kind: str
    k: int = 2
    n: int = 5
    m: int = 5
    cond: str = "none"
    seed: int = 0
    tail_range: tuple[int, int] = (2, 2)

    def build(self) -> DirectedHypergraph:
        if self.kind == "paper-i":
            return paper_i()
        if self.kind == "paper-r":
            return paper_r()
        if self.kind == "h2-tower":
            return gen_h2_tower(self.k)
        if self.kind == "perm-tower":
            return gen_perm_tower(self.k)
        if self.kind == "random":
            return gen_random(self.n, self.m, cond=self.cond, seed=self.seed,
                              tail_range=self.tail_range)
        raise ValueError(f"unknown generator kind {self.kind!r}; expected one of {GENERATOR_KINDS}")
