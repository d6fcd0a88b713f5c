import random
from fractions import Fraction

import pytest

from leavitt import (
    AlgebraContext,
    ContextMismatch,
    Monomial,
    Path,
    PrimeField,
    UnknownId,
    build_graph,
)
from leavitt.sampling import random_element, random_raw_monomials


def test_vertex_relations(catalog_contexts):
    ctx = catalog_contexts["A_3"]
    v1, v2 = ctx.atom("v1"), ctx.atom("v2")
    assert ctx.mul(v1, v1) == v1
    assert ctx.mul(v1, v2).is_zero
    assert ctx.is_idempotent(v1)


def test_edge_relations(catalog_contexts):
    ctx = catalog_contexts["A_3"]
    e1 = ctx.atom("e1")
    ghost = ctx.atom("e1", ghost=True)
    v1, v2 = ctx.atom("v1"), ctx.atom("v2")
    assert ctx.mul(v1, e1) == e1  # s(e) e = e
    assert ctx.mul(e1, v2) == e1  # e r(e) = e
    assert ctx.mul(v2, ghost) == ghost  # r(e) e* = e*
    assert ctx.mul(ghost, v1) == ghost  # e* s(e) = e*
    assert ctx.mul(v2, e1).is_zero
    assert ctx.mul(e1, v1).is_zero


def test_ck1(catalog_contexts):
    ctx = catalog_contexts["TwoArrow"]
    e1, e2 = ctx.atom("e1"), ctx.atom("e2")
    g1 = ctx.atom("e1", ghost=True)
    assert ctx.mul(g1, e1) == ctx.atom("v1")  # e* e = r(e)
    assert ctx.mul(g1, e2).is_zero  # e* f = 0 for e != f


def test_ck2_single_edge(catalog_contexts):
    ctx = catalog_contexts["R_1"]
    x = ctx.atom("x")
    xs = ctx.atom("x", ghost=True)
    assert ctx.mul(x, xs) == ctx.atom("v")


def test_ck2_rose(catalog_contexts):
    ctx = catalog_contexts["R_2"]
    e1, e2 = ctx.atom("e1"), ctx.atom("e2")
    g1, g2 = ctx.atom("e1", ghost=True), ctx.atom("e2", ghost=True)
    total = ctx.add(ctx.mul(e1, g1), ctx.mul(e2, g2))
    assert total == ctx.atom("v")


def test_normal_form_rewrites_special_edge_pair():
    g = build_graph(["v"], [("e1", "v", "v"), ("e2", "v", "v")])
    ctx = AlgebraContext(g)  # special edge defaults to e1
    raw = [Monomial(Fraction(1), Path("v", ("e1",)), Path("v", ("e1",)))]
    x = ctx.normal_form(raw)
    expected = ctx.sub(ctx.atom("v"), ctx.mul(ctx.atom("e2"), ctx.atom("e2", ghost=True)))
    assert x == expected
    assert str(x) == "-e2.e2* + v"


def test_custom_special_edges():
    g = build_graph(["v"], [("e1", "v", "v"), ("e2", "v", "v")])
    ctx = AlgebraContext(g, special_edges={"v": "e2"})
    raw = [Monomial(Fraction(1), Path("v", ("e2",)), Path("v", ("e2",)))]
    x = ctx.normal_form(raw)
    assert str(x) == "-e1.e1* + v"
    with pytest.raises(ValueError):
        AlgebraContext(g, special_edges={"v": "zz"})
    with pytest.raises(ValueError):
        AlgebraContext(g, special_edges={})  # must cover every regular vertex


def test_cohn_mode_keeps_ck2_sites(catalog_contexts):
    g = catalog_contexts["R_1"].graph
    cohn = AlgebraContext(g, mode="cohn")
    x = cohn.atom("x")
    xs = cohn.atom("x", ghost=True)
    xx = cohn.mul(x, xs)
    assert not xx.is_zero
    assert xx != cohn.atom("v")
    assert str(xx) == "x.x*"


def test_normal_form_idempotent(catalog_contexts):
    rng = random.Random(7)
    for name in ("R_2", "A_3", "FS_2"):
        ctx = catalog_contexts[name]
        for _ in range(25):
            raw = random_raw_monomials(ctx, rng)
            x = ctx.normal_form(raw)
            assert ctx.normal_form(x.monomials) == x


def test_normal_form_order_independent(catalog_contexts):
    ctx = catalog_contexts["R_3"]
    for seed in range(20):
        raw = random_raw_monomials(ctx, random.Random(seed))
        a = ctx.normal_form(raw, rng=random.Random(seed + 1))
        b = ctx.normal_form(raw, rng=random.Random(seed + 2))
        c = ctx.normal_form(raw)
        assert a == b == c


def test_normal_form_invariants(catalog_contexts):
    rng = random.Random(11)
    for name in ("R_2", "R_3", "FS_3"):
        ctx = catalog_contexts[name]
        special = ctx.special_edges
        for _ in range(30):
            x = random_element(ctx, rng)
            seen = set()
            for m in x.monomials:
                assert m.coeff
                assert (m.p, m.q) not in seen
                seen.add((m.p, m.q))
                if m.p.edges and m.q.edges:
                    last_p, last_q = m.p.edges[-1], m.q.edges[-1]
                    if last_p == last_q:
                        src = ctx.graph.source(last_p)
                        assert last_p != special.get(src)


def test_ring_laws_sampled(catalog_contexts):
    rng = random.Random(23)
    for name in ("R_2", "A_3", "OC_3"):
        ctx = catalog_contexts[name]
        for _ in range(15):
            x = random_element(ctx, rng, max_terms=3)
            y = random_element(ctx, rng, max_terms=3)
            z = random_element(ctx, rng, max_terms=3)
            assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
            assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
            assert ctx.mul(ctx.add(x, y), z) == ctx.add(ctx.mul(x, z), ctx.mul(y, z))
            assert ctx.add(x, ctx.neg(x)).is_zero
            assert ctx.scale(0, x).is_zero


def test_identity_candidate(catalog_contexts):
    for name in ("A_3", "R_2", "FS_2"):
        ctx = catalog_contexts[name]
        one = ctx.identity_candidate()
        rng = random.Random(5)
        for _ in range(10):
            x = random_element(ctx, rng)
            assert ctx.mul(one, x) == x
            assert ctx.mul(x, one) == x


def test_involution(catalog_contexts):
    ctx = catalog_contexts["A_3"]
    e1 = ctx.atom("e1")
    assert ctx.involution(e1) == ctx.atom("e1", ghost=True)
    rng = random.Random(31)
    for _ in range(25):
        x = random_element(ctx, rng)
        y = random_element(ctx, rng)
        assert ctx.involution(ctx.mul(x, y)) == ctx.mul(ctx.involution(y), ctx.involution(x))
        assert ctx.involution(ctx.involution(x)) == x


def test_grading(catalog_contexts):
    ctx = catalog_contexts["A_3"]
    assert ctx.degree(ctx.atom("v2")) == 0
    assert ctx.degree(ctx.atom("e1")) == 1
    assert ctx.degree(ctx.atom("e1", ghost=True)) == -1
    mixed = ctx.add(ctx.atom("v1"), ctx.atom("e1"))
    assert ctx.degree(mixed) is None
    assert ctx.degree(ctx.zero()) is None
    assert ctx.component(mixed, 0) == ctx.atom("v1")
    assert ctx.component(mixed, 1) == ctx.atom("e1")
    assert ctx.component(mixed, 5).is_zero


def test_components_sum_back(catalog_contexts):
    ctx = catalog_contexts["R_2"]
    rng = random.Random(47)
    for _ in range(20):
        x = random_element(ctx, rng)
        degs = {len(m.p.edges) - len(m.q.edges) for m in x.monomials}
        total = ctx.zero()
        for n in degs:
            total = ctx.add(total, ctx.component(x, n))
        assert total == x


def test_corner(catalog_contexts):
    ctx = catalog_contexts["A_3"]
    x = ctx.add(ctx.atom("v1"), ctx.atom("e1"))
    assert ctx.corner(x, "v1") == ctx.atom("v1")
    assert ctx.corner(ctx.atom("e1"), "v1").is_zero  # e1 = v1 e1 v2


def test_unitized_arithmetic(catalog_contexts):
    ctx = catalog_contexts["R_1"]
    one = ctx.unitized_one()
    x = ctx.atom("x")
    a = ctx.unitized(Fraction(2), x)
    assert ctx.unitized_equals(ctx.unitized_mul(one, a), a)
    assert ctx.unitized_equals(ctx.unitized_mul(a, one), a)
    b = ctx.unitized_mul(a, a)
    # (2, x)^2 = (4, 4x + x^2)
    xx = ctx.mul(x, x)
    expected = ctx.unitized(Fraction(4), ctx.add(ctx.scale(4, x), xx))
    assert ctx.unitized_equals(b, expected)
    assert str(ctx.unitized_from(x)) == "(0, x)"


def test_context_mismatch(catalog_contexts):
    a3 = catalog_contexts["A_3"]
    r1 = catalog_contexts["R_1"]
    with pytest.raises(ContextMismatch):
        a3.mul(a3.atom("v1"), r1.atom("v"))


def test_atom_errors(catalog_contexts):
    ctx = catalog_contexts["A_3"]
    with pytest.raises(UnknownId):
        ctx.atom("zz")
    with pytest.raises(ValueError):
        ctx.atom("v1", ghost=True)


def test_operators_delegate(catalog_contexts):
    ctx = catalog_contexts["A_3"]
    e1, v1 = ctx.atom("e1"), ctx.atom("v1")
    assert e1 + v1 == ctx.add(e1, v1)
    assert e1 - e1 == ctx.zero()
    assert v1 * e1 == e1
    assert -e1 == ctx.neg(e1)
    assert 3 * e1 == ctx.scale(3, e1)
    assert (3 * e1).monomials[0].coeff == Fraction(3)


def test_support_vertices(catalog_contexts):
    ctx = catalog_contexts["A_3"]
    x = ctx.add(ctx.atom("e1"), ctx.atom("v3"))
    assert x.support_vertices() == frozenset({"v1", "v2", "v3"})


def test_prime_field_context(catalog, f5):
    ctx = AlgebraContext(catalog["R_2"], field=f5)
    e1 = ctx.atom("e1")
    five = ctx.scale(5, e1)
    assert five.is_zero  # characteristic collapses 5 to 0
    assert ctx.scale(2, ctx.scale(3, e1)) == e1


def test_print_canonical_forms(catalog_contexts):
    ctx = catalog_contexts["A_3"]
    x = ctx.add(ctx.atom("v1"), ctx.scale(2, ctx.atom("e1")))
    assert str(x) == "2*e1 + v1"
    y = ctx.sub(ctx.atom("v1"), ctx.atom("e1"))
    assert str(y) == "-e1 + v1"
    assert str(ctx.zero()) == "0"
    assert str(ctx.scale(Fraction(1, 2), ctx.atom("e1"))) == "1/2*e1"
    ghost = ctx.mul(ctx.atom("e1"), ctx.atom("e2"))
    assert str(ghost) == "e1.e2"
    assert str(ctx.involution(ghost)) == "e2*.e1*"


def test_print_descending_length_order():
    g = build_graph(
        ["v1", "v2", "v3"],
        [("e1", "v1", "v3"), ("e2", "v2", "v3")],
    )
    ctx = AlgebraContext(g)
    m = ctx.normal_form([ctx.monomial(2, Path("v1", ("e1",)), Path("v2", ("e2",)))])
    x = ctx.add(m, ctx.atom("v3"))
    assert str(x) == "2*e1.e2* + v3"


def test_zero_print_avoids_vertex_named_zero(catalog_contexts):
    ctx = catalog_contexts["OC_3"]  # vertices are named 0, 1, 2
    assert str(ctx.zero()) == "0*0"
    assert str(ctx.atom("0")) == "0"
