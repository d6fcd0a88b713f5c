import itertools

import pytest

from leavitt import (
    TooLarge,
    UnknownVertex,
    UnsupportedFlaggedGraph,
    build_graph,
    condition_L,
    condition_MT3,
    csp_finite,
    graded_ideal_lattice,
    hereditary_saturated_sets,
    hs_closure,
    is_acyclic,
    is_row_finite,
    reachable_set,
)


def test_condition_L(catalog):
    v = condition_L(catalog["R_1"])
    assert not v
    assert v.counterexample.edges == ("x",)
    assert condition_L(catalog["R_2"])  # each loop exits the other
    for name in ("A_2", "A_5", "FS_3", "OC_4"):
        assert condition_L(catalog[name])  # acyclic, vacuously


def test_condition_L_flag_supplies_exit():
    bare = build_graph(["u"], [("f", "u", "u")])
    assert not condition_L(bare)
    flagged = build_graph([("u", True)], [("f", "u", "u")])
    assert condition_L(flagged)


def test_condition_MT3(catalog):
    for name in ("R_1", "R_2", "R_3", "A_2", "A_3", "A_5", "FS_2", "FS_3", "OC_3", "OC_4"):
        assert condition_MT3(catalog[name])
    v = condition_MT3(catalog["TwoArrow"])
    assert not v
    assert v.counterexample == ("v1", "v2")


def test_acyclic_and_row_finite(catalog):
    assert not is_acyclic(catalog["R_1"])
    assert is_acyclic(catalog["A_5"])
    assert all(is_row_finite(g) for g in catalog.values())
    assert not is_row_finite(build_graph([("u", True)], []))


def test_csp_finite_is_constant_true(catalog):
    assert all(csp_finite(g) for g in catalog.values())


def test_hs_closure(catalog):
    a3 = catalog["A_3"]
    # {v2} descends to v3; saturation then forces v1, whose only edge
    # lands in the set
    assert hs_closure(a3, {"v2"}) == {"v1", "v2", "v3"}
    assert hs_closure(a3, set()) == set()
    assert hs_closure(catalog["R_1"], {"v"}) == {"v"}
    with pytest.raises(UnknownVertex):
        hs_closure(a3, {"zz"})


def test_hs_closure_never_forces_flagged_vertices():
    g = build_graph([("v1", True), "v2", "v3"], [("e1", "v1", "v2"), ("e2", "v2", "v3")])
    assert hs_closure(g, {"v2"}) == {"v2", "v3"}


def _is_hereditary_oracle(g, H):
    return all(g.range(e) in H for e in g.edge_ids if g.source(e) in H)


def _is_saturated_oracle(g, H):
    for v in g.regular_vertices():
        if v not in H and all(g.range(e) in H for e in g.out_edges(v)):
            return False
    return True


def _hs_oracle(g):
    out = []
    for k in range(len(g.vertex_ids) + 1):
        for combo in itertools.combinations(g.vertex_ids, k):
            H = frozenset(combo)
            if _is_hereditary_oracle(g, H) and _is_saturated_oracle(g, H):
                out.append(H)
    return out


def test_hereditary_saturated_sets_frozen_values(catalog):
    assert hereditary_saturated_sets(catalog["A_2"]) == [
        frozenset(),
        frozenset({"v1", "v2"}),
    ]
    assert hereditary_saturated_sets(catalog["TwoArrow"]) == [
        frozenset(),
        frozenset({"v1"}),
        frozenset({"v2"}),
        frozenset({"u", "v1", "v2"}),
    ]
    assert hereditary_saturated_sets(catalog["R_1"]) == [
        frozenset(),
        frozenset({"v"}),
    ]


def test_hereditary_saturated_sets_match_oracle(catalog):
    for g in catalog.values():
        assert hereditary_saturated_sets(g) == _hs_oracle(g)


def test_hereditary_saturated_too_large():
    names = [f"w{i:02d}" for i in range(17)]
    with pytest.raises(TooLarge):
        hereditary_saturated_sets(build_graph(names, []))


def test_closure_members_are_closed(catalog):
    for g in catalog.values():
        for v in g.vertex_ids:
            H = hs_closure(g, {v})
            assert _is_hereditary_oracle(g, H) and _is_saturated_oracle(g, H)
            assert reachable_set(g, v) <= H


def test_lattice_counts(catalog):
    lat = graded_ideal_lattice(catalog["R_1"])
    assert len(lat.pairs) == 2
    assert lat.maximal_proper_count == 1
    assert lat.pairs[lat.maximal_proper[0]].H == frozenset()

    assert graded_ideal_lattice(catalog["OC_3"]).maximal_proper_count == 1
    assert graded_ideal_lattice(catalog["FS_2"]).maximal_proper_count == 1

    two = graded_ideal_lattice(catalog["TwoArrow"])
    assert len(two.pairs) == 4
    assert two.maximal_proper_count == 2  # {v1} and {v2}


def test_lattice_tables(catalog):
    lat = graded_ideal_lattice(catalog["TwoArrow"])
    sets = [p.H for p in lat.pairs]
    i1, i2 = sets.index(frozenset({"v1"})), sets.index(frozenset({"v2"}))
    assert sets[lat.meet[i1][i2]] == frozenset()
    assert sets[lat.join[i1][i2]] == frozenset({"u", "v1", "v2"})


def test_lattice_closed_under_meet_join(catalog):
    for name in ("A_3", "R_2", "OC_4", "FS_3"):
        lat = graded_ideal_lattice(catalog[name])
        n = len(lat.pairs)
        for i in range(n):
            for j in range(n):
                assert 0 <= lat.meet[i][j] < n
                assert 0 <= lat.join[i][j] < n
        for pair in lat.pairs:
            assert pair.S == frozenset()


def test_lattice_refuses_flags():
    g = build_graph([("v", True)], [])
    with pytest.raises(UnsupportedFlaggedGraph):
        graded_ideal_lattice(g)
