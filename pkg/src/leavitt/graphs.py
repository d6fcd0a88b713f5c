"""Directed graphs with parallel edges and infinite-emitter flags.

A graph is a finite presentation: finitely many vertices and finitely many
materialized edges.  A vertex may additionally be flagged as an infinite
emitter, meaning the presented graph stands for one with infinitely many
edges leaving that vertex; the extra edges are never materialized, and all
path and reachability computations use materialized edges only.

Graphs are immutable values.  All analysis functions are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional

from .errors import (
    DuplicateId,
    NotACycle,
    ReservedCharacter,
    UnknownEndpoint,
    UnknownId,
    UnknownVertex,
)

__all__ = [
    "INFINITE_EXIT",
    "Graph",
    "Path",
    "Cycle",
    "build_graph",
    "graph_from_json",
    "graph_to_json",
    "reaches",
    "reachable_set",
    "common_descendant",
    "shortest_path",
    "enumerate_paths",
    "simple_cycles",
    "exits_of",
]

# Characters the element grammar owns; ids may not contain them.
RESERVED_CHARS = set(".*+-/")

# Synthetic marker reported by exits_of when a cycle passes through a
# flagged vertex: the unmaterialized edges provide an exit.
INFINITE_EXIT = "infinite-exit"


def _check_id(kind: str, ident: str) -> None:
    if not isinstance(ident, str) or not ident:
        raise ReservedCharacter(f"{kind} id must be a nonempty string, got {ident!r}")
    for ch in ident:
        if ch in RESERVED_CHARS or ch.isspace():
            raise ReservedCharacter(f"{kind} id {ident!r} contains reserved character {ch!r}")


@dataclass(frozen=True)
class Path:
    """A finite path: a base vertex and a sequence of composable edge ids.

    A path of length zero is a single vertex, represented by the base
    alone.  For nonempty paths the base is the source of the first edge.
    """

    base: str
    edges: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)


# A cycle is a closed nontrivial path whose edge sources are pairwise
# distinct; validity is checked where it matters (exits_of).
Cycle = Path


@dataclass(frozen=True)
class Graph:
    """Immutable directed graph.  Build through build_graph or graph_from_json.

    vertices: sorted tuple of (id, infinite_emitter) pairs.
    edges: sorted tuple of (id, source, range) triples.
    """

    vertices: tuple[tuple[str, bool], ...]
    edges: tuple[tuple[str, str, str], ...]

    # derived lookups; cached_property writes straight into __dict__,
    # which keeps the dataclass hashable and frozen

    @cached_property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertices)

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertex_ids)

    @cached_property
    def flagged(self) -> frozenset[str]:
        return frozenset(v for v, inf in self.vertices if inf)

    @cached_property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e for e, _, _ in self.edges)

    @cached_property
    def _edge_map(self) -> dict[str, tuple[str, str]]:
        return {e: (s, r) for e, s, r in self.edges}

    @cached_property
    def _out(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertex_ids}
        for e, s, _ in self.edges:
            out[s].append(e)
        return {v: tuple(sorted(es)) for v, es in out.items()}

    def has_vertex(self, v: str) -> bool:
        return v in self.vertex_set

    def has_edge(self, e: str) -> bool:
        return e in self._edge_map

    def has_id(self, ident: str) -> bool:
        return self.has_vertex(ident) or self.has_edge(ident)

    def require_vertex(self, v: str) -> None:
        if v not in self.vertex_set:
            raise UnknownVertex(f"no vertex {v!r}")

    def source(self, e: str) -> str:
        return self._edge_map[e][0]

    def range(self, e: str) -> str:
        return self._edge_map[e][1]

    def out_edges(self, v: str) -> tuple[str, ...]:
        self.require_vertex(v)
        return self._out[v]

    def is_flagged(self, v: str) -> bool:
        self.require_vertex(v)
        return v in self.flagged

    def is_sink(self, v: str) -> bool:
        """No materialized out-edges and not flagged: emits nothing at all."""
        return not self.out_edges(v) and not self.is_flagged(v)

    def is_regular(self, v: str) -> bool:
        """Unflagged with at least one out-edge: finitely and positively emitting."""
        return bool(self.out_edges(v)) and not self.is_flagged(v)

    def regular_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertex_ids if self.is_regular(v))

    # path helpers

    def path_range(self, p: Path) -> str:
        return self.range(p.edges[-1]) if p.edges else p.base

    def validate_path(self, p: Path) -> None:
        self.require_vertex(p.base)
        at = p.base
        for e in p.edges:
            if not self.has_edge(e):
                raise UnknownId(f"no edge {e!r}")
            if self.source(e) != at:
                raise ValueError(f"edge {e!r} does not continue the path at {at!r}")
            at = self.range(e)


def build_graph(vertices: Iterable, edges: Iterable) -> Graph:
    """Validate declarations and construct a Graph.

    vertices: iterable of ids or (id, infinite_emitter) pairs.
    edges: iterable of (id, source, range) triples.
    """
    vlist: list[tuple[str, bool]] = []
    seen: set[str] = set()
    for decl in vertices:
        if isinstance(decl, str):
            vid, flag = decl, False
        else:
            vid, flag = decl
        _check_id("vertex", vid)
        if vid in seen:
            raise DuplicateId(f"vertex id {vid!r} declared twice")
        seen.add(vid)
        vlist.append((vid, bool(flag)))
    vset = {v for v, _ in vlist}

    elist: list[tuple[str, str, str]] = []
    for eid, src, rng in edges:
        _check_id("edge", eid)
        if eid in seen:
            raise DuplicateId(f"id {eid!r} declared twice")
        seen.add(eid)
        if src not in vset:
            raise UnknownEndpoint(f"edge {eid!r} has unknown source {src!r}")
        if rng not in vset:
            raise UnknownEndpoint(f"edge {eid!r} has unknown range {rng!r}")
        elist.append((eid, src, rng))

    return Graph(tuple(sorted(vlist)), tuple(sorted(elist)))


def graph_from_json(obj: dict) -> Graph:
    """Build a graph from the JSON shape {"vertices": [...], "edges": [...]}.

    Vertex entries are {"id": ..., "infinite_emitter": bool} with the flag
    defaulting to false; edge entries are {"id", "source", "range"}.
    """
    if not isinstance(obj, dict):
        raise ValueError("graph document must be a JSON object")
    vjson = obj.get("vertices", [])
    ejson = obj.get("edges", [])
    vertices = [(v["id"], v.get("infinite_emitter", False)) for v in vjson]
    edges = [(e["id"], e["source"], e["range"]) for e in ejson]
    return build_graph(vertices, edges)


def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": [{"id": v, "infinite_emitter": f} for v, f in g.vertices],
        "edges": [{"id": e, "source": s, "range": r} for e, s, r in g.edges],
    }


@lru_cache(maxsize=None)
def reachable_set(g: Graph, u: str) -> frozenset[str]:
    """All vertices reachable from u along materialized edges, u included."""
    g.require_vertex(u)
    seen = {u}
    frontier = [u]
    while frontier:
        nxt = []
        for v in frontier:
            for e in g.out_edges(v):
                r = g.range(e)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def reaches(g: Graph, u: str, v: str) -> bool:
    """True iff there is a path (possibly of length zero) from u to v."""
    g.require_vertex(v)
    return v in reachable_set(g, u)


def common_descendant(g: Graph, u: str, v: str) -> Optional[str]:
    """A vertex reachable from both u and v, or None.

    Ties break to the lexicographically least candidate so the choice is
    reproducible.
    """
    joint = reachable_set(g, u) & reachable_set(g, v)
    return min(joint) if joint else None


def shortest_path(g: Graph, u: str, v: str) -> Optional[Path]:
    """A shortest path from u to v, or None.  Deterministic: BFS expands
    edges in sorted id order, so the result is the lexicographically least
    among the shortest."""
    g.require_vertex(u)
    g.require_vertex(v)
    if u == v:
        return Path(u)
    best: dict[str, Path] = {u: Path(u)}
    frontier = [u]
    while frontier:
        nxt = []
        for w in frontier:
            for e in g.out_edges(w):
                r = g.range(e)
                if r not in best:
                    best[r] = Path(u, best[w].edges + (e,))
                    if r == v:
                        return best[r]
                    nxt.append(r)
        frontier = nxt
    return None


def enumerate_paths(g: Graph, frm: str, max_len: int) -> list[Path]:
    """All paths leaving frm with length at most max_len.

    Deterministic order: by length, then lexicographically by edge ids.
    The length-zero path at frm is always first.
    """
    g.require_vertex(frm)
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    out: list[Path] = [Path(frm)]
    layer = [Path(frm)]
    for _ in range(max_len):
        nxt = []
        for p in layer:
            at = g.path_range(p)
            for e in g.out_edges(at):
                nxt.append(Path(frm, p.edges + (e,)))
        out.extend(nxt)
        layer = nxt
        if not layer:
            break
    return out


def simple_cycles(g: Graph) -> list[Cycle]:
    """All cycles, each reported once up to rotation.

    A cycle is a closed nontrivial path whose edge sources are pairwise
    distinct.  Each is based at its lexicographically least source vertex.
    Parallel edges give distinct cycles.  Output order is deterministic:
    by base vertex, then length, then edge ids.
    """
    found: list[Cycle] = []

    def walk(base: str, at: str, edges: tuple[str, ...], visited: frozenset[str]) -> None:
        for e in g.out_edges(at):
            r = g.range(e)
            if r == base:
                found.append(Path(base, edges + (e,)))
            elif r > base and r not in visited:
                walk(base, r, edges + (e,), visited | {r})

    for base in g.vertex_ids:
        walk(base, base, (), frozenset({base}))
    found.sort(key=lambda c: (c.base, len(c.edges), c.edges))
    return found


def _check_cycle(g: Graph, c: Cycle) -> None:
    try:
        g.validate_path(c)
    except UnknownVertex as exc:
        raise NotACycle(str(exc)) from exc
    if not c.edges:
        raise NotACycle("a cycle has at least one edge")
    if g.path_range(c) != c.base:
        raise NotACycle("path does not return to its base")
    sources = [g.source(e) for e in c.edges]
    if len(set(sources)) != len(sources):
        raise NotACycle("cycle revisits a source vertex")


def exits_of(g: Graph, c: Cycle) -> list[str]:
    """Edges leaving a cycle vertex that are not part of the cycle.

    If a vertex on the cycle is flagged as an infinite emitter, the
    unmaterialized edges count; the synthetic marker INFINITE_EXIT is
    appended to represent them.
    """
    _check_cycle(g, c)
    on_cycle = set(c.edges)
    sources = [g.source(e) for e in c.edges]
    exits = sorted(
        e for v in sources for e in g.out_edges(v) if e not in on_cycle
    )
    if any(g.is_flagged(v) for v in sources):
        exits.append(INFINITE_EXIT)
    return exits


def all_vertex_pairs(g: Graph) -> list[tuple[str, str]]:
    """Unordered vertex pairs (u <= v) in lexicographic order."""
    return list(itertools.combinations_with_replacement(g.vertex_ids, 2))
