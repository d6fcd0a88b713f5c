#!/usr/bin/env python3
"""Guided tour of the constructive witness machinery.

Walks through the certificates the classifier is built on: primeness
witnesses for vertex pairs, the spine of idempotents along a vertex
enumeration, vertex witnesses and the idempotents they induce for an
arbitrary nonzero element, and the unitization certificate built from an
annihilating pair.  Every certificate is re-verified by ring arithmetic
before it is printed.
"""

import argparse
import random
import sys

from leavitt import (
    AlgebraContext,
    Cardinal,
    MT3Fails,
    OrdinalSpec,
    NoCommonDescendant,
    all_vertex_pairs,
    build_catalog_graph,
    build_spine,
    find_vertex_witness,
    finite_subsets_family,
    idempotent_from_witness,
    line,
    one_from_annihilating_pair,
    ordinal_complete_family,
    prime_witness,
    two_arrow,
)
from leavitt.sampling import random_element


def section(title):
    print()
    print(title)
    print("-" * len(title))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--bound", type=int, default=4)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)

    g = build_catalog_graph(finite_subsets_family(Cardinal.finite(2)))
    ctx = AlgebraContext(g)

    section("Primeness witnesses (subset graph on a 2-element ground set)")
    for u, w in all_vertex_pairs(g):
        x = prime_witness(ctx, u, w)
        # sanity: u x w == x != 0, which is what the certificate asserts
        assert ctx.equals(ctx.mul(ctx.mul(ctx.atom(u), x), ctx.atom(w)), x)
        print(f"  u={u!s:8} w={w!s:8} x = {ctx.format_element(x)}")

    section("Spine along a vertex enumeration (complete order graph on 4 stages)")
    gs = build_catalog_graph(ordinal_complete_family(OrdinalSpec(Cardinal.finite(4))))
    ctxs = AlgebraContext(gs)
    spine = build_spine(gs, list(gs.vertex_ids))
    es = spine.idempotents(ctxs)
    for v, p, e in zip(spine.vertices, spine.paths, es):
        path_text = ".".join(p.edges) if p.edges else p.base
        print(f"  vertex {v!s:3} path {path_text:24} e = {ctxs.format_element(e)}")
    # the descending chain property: later idempotents absorb earlier ones
    for i in range(len(es) - 1):
        assert ctxs.equals(ctxs.mul(es[i], es[i + 1]), es[i + 1])
    print("  chain verified: e_i e_{i+1} = e_{i+1} for consecutive entries")

    section("Vertex witness for a sampled nonzero element (5-vertex line)")
    gl = build_catalog_graph(line(5))
    ctxl = AlgebraContext(gl)
    a = random_element(ctxl, rng, ensure_nonzero=True)
    print(f"  a = {ctxl.format_element(a)}")
    x, y, v = find_vertex_witness(ctxl, a, args.bound)
    print(f"  x = {ctxl.format_element(x)}")
    print(f"  y = {ctxl.format_element(y)}")
    print(f"  x a y = {v}")
    e = idempotent_from_witness(ctxl, a, x, y, v)
    print(f"  induced idempotent e = a y x = {ctxl.format_element(e)}")
    assert ctxl.is_idempotent(e)

    section("Unit certificate from an annihilating pair (2-vertex line)")
    ga = build_catalog_graph(line(2))
    ctxa = AlgebraContext(ga)
    p, q = ctxa.atom("e1"), ctxa.atom("e1")  # e1 e1 = 0: the path leaves v2
    c1, c2 = one_from_annihilating_pair(ctxa, p, q)
    print(f"  x = y = {ctxa.format_element(p)}, x y = 0")
    print(f"  c1 = {c1}")
    print(f"  c2 = {c2}")
    print("  c1 (1 + x) + c2 (1 + y) = 1 in the unitization")

    section("Where the machinery stops (two arrows into separate sinks)")
    gt = build_catalog_graph(two_arrow())
    ctxt = AlgebraContext(gt)
    try:
        prime_witness(ctxt, "v1", "v2")
    except NoCommonDescendant as exc:
        print(f"  prime_witness(v1, v2): no common descendant ({exc})")
    try:
        build_spine(gt, list(gt.vertex_ids))
    except MT3Fails as exc:
        print(f"  build_spine over all vertices: {exc}")

    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
