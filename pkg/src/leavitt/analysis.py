"""Graph-theoretic conditions and the graded ideal lattice.

The verdict producers return a ConditionVerdict holding the boolean and,
when the condition fails, a concrete counterexample that the caller can
re-check against the graph.

Hereditary and saturated sets use the definitional predicates:

  hereditary   v in H and an edge v -> w  implies  w in H
  saturated    v regular with every edge-range in H  implies  v in H

Flagged vertices are never regular, so saturation never forces them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .errors import TooLarge, UnsupportedFlaggedGraph
from .graphs import (
    Cycle,
    Graph,
    all_vertex_pairs,
    common_descendant,
    exits_of,
    simple_cycles,
)

__all__ = [
    "ConditionVerdict",
    "HSPair",
    "GradedIdealLattice",
    "condition_L",
    "condition_MT3",
    "is_acyclic",
    "is_row_finite",
    "hs_closure",
    "hereditary_saturated_sets",
    "graded_ideal_lattice",
    "csp_finite",
]


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of a graph condition check.

    counterexample is None when the condition holds; otherwise it is a
    cycle (for Condition L) or a vertex pair (for Condition MT3).
    """

    holds: bool
    counterexample: Union[None, Cycle, tuple[str, str]] = None

    def __bool__(self) -> bool:
        return self.holds


def condition_L(g: Graph) -> ConditionVerdict:
    """Every cycle has an exit.  A flagged vertex on a cycle supplies one."""
    for c in simple_cycles(g):
        if not exits_of(g, c):
            return ConditionVerdict(False, c)
    return ConditionVerdict(True)


def condition_MT3(g: Graph) -> ConditionVerdict:
    """Every pair of vertices has a common descendant."""
    for u, v in all_vertex_pairs(g):
        if common_descendant(g, u, v) is None:
            return ConditionVerdict(False, (u, v))
    return ConditionVerdict(True)


def is_acyclic(g: Graph) -> bool:
    return not simple_cycles(g)


def is_row_finite(g: Graph) -> bool:
    """True iff no vertex is flagged as an infinite emitter."""
    return not g.flagged


def hs_closure(g: Graph, seed: Iterable[str]) -> frozenset[str]:
    """Least hereditary and saturated set containing the seed."""
    cur = set(seed)
    for v in cur:
        g.require_vertex(v)
    regulars = g.regular_vertices()
    changed = True
    while changed:
        changed = False
        for v in tuple(cur):
            for e in g.out_edges(v):
                r = g.range(e)
                if r not in cur:
                    cur.add(r)
                    changed = True
        for v in regulars:
            if v not in cur and all(g.range(e) in cur for e in g.out_edges(v)):
                cur.add(v)
                changed = True
    return frozenset(cur)


def _is_hereditary(g: Graph, h: frozenset[str]) -> bool:
    return all(g.range(e) in h for e, s, _ in g.edges if s in h)


def _is_saturated(g: Graph, h: frozenset[str]) -> bool:
    return all(
        v in h
        for v in g.regular_vertices()
        if all(g.range(e) in h for e in g.out_edges(v))
    )


def hereditary_saturated_sets(g: Graph, max_vertices: int = 16) -> list[frozenset[str]]:
    """All hereditary saturated vertex sets, by cardinality then id order.

    Exhausts the powerset, so the vertex count is capped.
    """
    ids = g.vertex_ids
    if len(ids) > max_vertices:
        raise TooLarge(f"{len(ids)} vertices exceeds the bound {max_vertices}")
    out = []
    for k in range(len(ids) + 1):
        for combo in itertools.combinations(ids, k):
            h = frozenset(combo)
            if _is_hereditary(g, h) and _is_saturated(g, h):
                out.append(h)
    return out


@dataclass(frozen=True)
class HSPair:
    """A lattice element: a hereditary saturated set with its flag part.

    The flag part S is reserved for graphs with infinite emitters and is
    always empty here, since the lattice is only built for unflagged
    graphs.
    """

    H: frozenset[str]
    S: frozenset[str] = field(default_factory=frozenset)


@dataclass(frozen=True)
class GradedIdealLattice:
    """The lattice of hereditary saturated sets of an unflagged graph.

    meet and join are index tables into pairs: meet[i][j] is the index of
    the intersection, join[i][j] of the closure of the union.
    """

    pairs: tuple[HSPair, ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    maximal_proper: tuple[int, ...]

    @property
    def maximal_proper_count(self) -> int:
        return len(self.maximal_proper)


def graded_ideal_lattice(g: Graph, max_vertices: int = 16) -> GradedIdealLattice:
    """Build the full lattice with meet/join tables.

    Refuses graphs with flagged vertices: their lattice elements would
    need a nonempty flag part whose behavior is not defined here.
    """
    if g.flagged:
        raise UnsupportedFlaggedGraph(
            "graded ideal lattice is only supported without infinite emitters"
        )
    sets = hereditary_saturated_sets(g, max_vertices=max_vertices)
    index = {h: i for i, h in enumerate(sets)}
    n = len(sets)
    meet = tuple(
        tuple(index[hs_closure(g, sets[i] & sets[j])] for j in range(n))
        for i in range(n)
    )
    join = tuple(
        tuple(index[hs_closure(g, sets[i] | sets[j])] for j in range(n))
        for i in range(n)
    )
    top = frozenset(g.vertex_ids)
    proper = [i for i, h in enumerate(sets) if h != top]
    maximal = tuple(
        i
        for i in proper
        if not any(j != i and sets[i] < sets[j] for j in proper)
    )
    return GradedIdealLattice(
        pairs=tuple(HSPair(h) for h in sets),
        meet=meet,
        join=join,
        maximal_proper=maximal,
    )


def csp_finite(g: Graph) -> bool:
    """Countable separation for a finite presentation.

    The whole vertex set is finite, hence countable, and every vertex
    trivially reaches itself, so the property always holds.
    """
    return True
