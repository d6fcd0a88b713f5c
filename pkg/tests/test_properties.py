"""Randomized structural properties over small arbitrary graphs."""

import random

from hypothesis import given, settings, strategies as st

from leavitt import (
    AlgebraContext,
    build_graph,
    common_descendant,
    condition_MT3,
    enumerate_paths,
    hs_closure,
    parse_element,
    reaches,
    simple_cycles,
)
from leavitt.sampling import random_element


@st.composite
def graphs(draw, max_vertices=5, max_edges=8, allow_flags=True):
    n = draw(st.integers(1, max_vertices))
    names = [f"v{i}" for i in range(1, n + 1)]
    if allow_flags:
        flags = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    else:
        flags = [False] * n
    m = draw(st.integers(0, max_edges))
    edges = []
    for i in range(m):
        src = draw(st.sampled_from(names))
        dst = draw(st.sampled_from(names))
        edges.append((f"e{i + 1}", src, dst))
    return build_graph(list(zip(names, flags)), edges)


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_reachability_is_a_preorder(g):
    for u in g.vertex_ids:
        assert reaches(g, u, u)
        for v in g.vertex_ids:
            for w in g.vertex_ids:
                if reaches(g, u, v) and reaches(g, v, w):
                    assert reaches(g, u, w)


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_common_descendant_is_common(g):
    for u in g.vertex_ids:
        for v in g.vertex_ids:
            d = common_descendant(g, u, v)
            if d is not None:
                assert reaches(g, u, d) and reaches(g, v, d)


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_mt3_matches_descendant_search(g):
    verdict = condition_MT3(g)
    brute = all(
        common_descendant(g, u, v) is not None
        for u in g.vertex_ids
        for v in g.vertex_ids
    )
    assert bool(verdict) == brute
    if not verdict:
        u, v = verdict.counterexample
        assert common_descendant(g, u, v) is None


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_cycles_close_with_distinct_sources(g):
    for c in simple_cycles(g):
        g.validate_path(c)
        assert g.path_range(c) == c.base
        sources = [c.base] + [g.range(e) for e in c.edges[:-1]]
        assert len(set(sources)) == len(sources)


@settings(max_examples=40, deadline=None)
@given(graphs(), st.data())
def test_hs_closure_is_least(g, data):
    seed = data.draw(
        st.sets(st.sampled_from(g.vertex_ids), max_size=len(g.vertex_ids))
    )
    H = hs_closure(g, seed)
    assert seed <= H
    # closed under descent
    for e in g.edge_ids:
        if g.source(e) in H:
            assert g.range(e) in H
    # closed under saturation
    for v in g.regular_vertices():
        if all(g.range(e) in H for e in g.out_edges(v)):
            assert v in H
    # least: any hereditary saturated superset of the seed contains it
    closed_again = hs_closure(g, H)
    assert closed_again == H


@settings(max_examples=30, deadline=None)
@given(graphs(max_vertices=4, max_edges=6))
def test_path_enumeration_layers(g):
    for v in g.vertex_ids:
        paths = enumerate_paths(g, v, 3)
        assert paths[0].edges == ()
        for p in paths:
            g.validate_path(p)
        assert len(set(paths)) == len(paths)


@settings(max_examples=25, deadline=None)
@given(graphs(max_vertices=4, max_edges=6, allow_flags=False), st.integers(0, 2**32))
def test_engine_laws_on_arbitrary_graphs(g, seed):
    ctx = AlgebraContext(g)
    rng = random.Random(seed)
    x = random_element(ctx, rng, max_terms=3, max_len=2)
    y = random_element(ctx, rng, max_terms=3, max_len=2)
    z = random_element(ctx, rng, max_terms=3, max_len=2)
    assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
    assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
    assert ctx.involution(ctx.mul(x, y)) == ctx.mul(ctx.involution(y), ctx.involution(x))
    assert ctx.involution(ctx.involution(x)) == x
    assert ctx.normal_form(x.monomials) == x


@settings(max_examples=25, deadline=None)
@given(graphs(max_vertices=4, max_edges=6, allow_flags=False), st.integers(0, 2**32))
def test_print_parse_round_trip_on_arbitrary_graphs(g, seed):
    ctx = AlgebraContext(g)
    x = random_element(ctx, random.Random(seed), max_terms=4, max_len=2)
    assert parse_element(ctx, str(x)) == x
