"""Seeded random generators for graphs, paths, and elements.

Everything takes an explicit random.Random so experiments and tests can
replay exactly.  Path pools are enumerated once per (graph, length)
pair and cached.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .engine import AlgebraContext, Element, Monomial
from .graphs import Graph, Path, build_graph, enumerate_paths

__all__ = [
    "random_graph",
    "random_path",
    "random_monomial",
    "random_element",
    "random_raw_monomials",
    "random_homogeneous",
]


@lru_cache(maxsize=None)
def _paths_by_range(g: Graph, max_len: int) -> dict[str, tuple[Path, ...]]:
    out: dict[str, list[Path]] = {v: [] for v in g.vertex_ids}
    for v in g.vertex_ids:
        for p in enumerate_paths(g, v, max_len):
            out[g.path_range(p)].append(p)
    return {v: tuple(ps) for v, ps in out.items()}


@lru_cache(maxsize=None)
def _all_paths(g: Graph, max_len: int) -> tuple[Path, ...]:
    acc: list[Path] = []
    for v in g.vertex_ids:
        acc.extend(enumerate_paths(g, v, max_len))
    return tuple(acc)


def random_graph(
    rng: random.Random,
    max_vertices: int = 8,
    max_edges: int = 16,
    max_out_degree: int = 3,
    flag_probability: float = 0.15,
) -> Graph:
    """A small random graph; out-degree is capped to keep path counts sane."""
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(1, n + 1)]
    vertices = [(v, rng.random() < flag_probability) for v in names]
    budget = {v: max_out_degree for v in names}
    edges = []
    m = rng.randint(0, max_edges)
    for i in range(1, m + 1):
        srcs = [v for v in names if budget[v] > 0]
        if not srcs:
            break
        src = rng.choice(srcs)
        budget[src] -= 1
        edges.append((f"e{i}", src, rng.choice(names)))
    return build_graph(vertices, edges)


def random_path(g: Graph, rng: random.Random, max_len: int = 3) -> Path:
    """A uniformly chosen path of length at most max_len."""
    pool = _all_paths(g, max_len)
    return rng.choice(pool)


def random_monomial(
    ctx: AlgebraContext, rng: random.Random, max_len: int = 3
) -> Monomial:
    """A random coefficient-one monomial p q* with matching ranges."""
    g = ctx.graph
    by_range = _paths_by_range(g, max_len)
    p = random_path(g, rng, max_len)
    q = rng.choice(by_range[g.path_range(p)])
    return Monomial(ctx.field.one, p, q)


def _random_scalar(ctx: AlgebraContext, rng: random.Random):
    while True:
        k = ctx.field.of(rng.randint(-5, 5))
        if k:
            return k


def random_raw_monomials(
    ctx: AlgebraContext,
    rng: random.Random,
    max_terms: int = 5,
    max_len: int = 3,
) -> list[Monomial]:
    """An unreduced monomial list, as fed to the rewriting engine."""
    count = rng.randint(1, max_terms)
    return [
        random_monomial(ctx, rng, max_len)._replace(coeff=_random_scalar(ctx, rng))
        for _ in range(count)
    ]


def random_element(
    ctx: AlgebraContext,
    rng: random.Random,
    max_terms: int = 5,
    max_len: int = 3,
    ensure_nonzero: bool = False,
) -> Element:
    x = ctx.normal_form(random_raw_monomials(ctx, rng, max_terms, max_len))
    while ensure_nonzero and x.is_zero:
        x = ctx.normal_form(random_raw_monomials(ctx, rng, max_terms, max_len))
    return x


def random_homogeneous(
    ctx: AlgebraContext,
    rng: random.Random,
    degree: int = 0,
    max_terms: int = 4,
    max_len: int = 3,
) -> Element:
    """A random element all of whose monomials have the given degree."""
    g = ctx.graph
    by_range = _paths_by_range(g, max_len)
    raw: list[Monomial] = []
    for _ in range(rng.randint(1, max_terms)):
        for _attempt in range(64):
            p = random_path(g, rng, max_len)
            mates = [
                q
                for q in by_range[g.path_range(p)]
                if len(p.edges) - len(q.edges) == degree
            ]
            if mates:
                raw.append(Monomial(_random_scalar(ctx, rng), p, rng.choice(mates)))
                break
    return ctx.normal_form(raw)
