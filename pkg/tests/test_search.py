"""Enumeration: published per-family counts, canonical forms, oracle agreement."""

from fractions import Fraction as F

import pytest

from sphfano.core import check_reflexive
from sphfano.geometry import RationalPolytope, convex_hull, transform_polytope
from sphfano.registry import build, symmetry_group
from sphfano.search import (
    BoundTooTight,
    EnumConfig,
    NotReflexive,
    brute_force_oracle,
    canonical_form,
    enumerate_polytopes,
    enumerate_rank1,
    enumerate_rank2,
)

H = F(1, 2)


def classes(fid, params, cfg=None):
    return enumerate_polytopes(fid, params, cfg=cfg)


def vertex_sets(cps):
    return [cp.polytope.vertices for cp in cps]


# -- quoted per-family counts ---------------------------------------------------


def test_rank1_counts():
    assert vertex_sets(classes("SL2sq.diagSL2", {})) == [((F(-1),), (H,))]
    assert vertex_sets(classes("SL2sq.NdiagSL2", {})) == [((F(-1),), (F(1),))]
    assert len(classes("SL2xGm.horo", {"n": 1, "a1": 1})) == 2
    assert len(classes("SL2sq.horo1", {"a1": 1, "a2": -1})) == 3
    assert len(classes("Sp4.horo.short", {"a1": 1})) == 2
    assert vertex_sets(classes("Sp4.Nsym", {})) == [((F(-1),), (F(2, 3),))]
    assert classes("SL3.Nhorosym", {}) == []


@pytest.mark.parametrize(
    "fid,params,count",
    [
        ("toric", {"n": 2}, 5),
        ("SL2xGm.T", {"a1": 0}, 3),
        ("SL2xGm.T", {"a1": 1}, 8),
        ("SL2xGm.T", {"a1": 2}, 3),
        ("SL2xGm.N.product", {}, 3),
        ("SL2xGm.N.diag", {}, 6),
        ("SL2xGm.horo", {"n": 2, "a1": 0}, 5),
        ("SL2xGm.horo", {"n": 2, "a1": 1}, 16),
        ("SL2sqxGm.diagSL2", {}, 7),
        ("SL2sqxGm.NdiagSL2", {}, 3),
        ("SL2sq.GL2", {}, 8),
        ("SL2sq.diagB", {}, 3),
        ("SL2sq.NdiagB", {}, 2),
        ("SL2sq.TxT", {}, 2),
        ("SL2sq.NTxT", {}, 2),
        ("SL2sq.NTxNT", {}, 2),
        ("SL2sq.diagNT", {}, 2),
        ("SL2sq.PI-T", {"a1": 0, "a2": 0}, 3),
        ("SL2sq.PI-T", {"a1": 1, "a2": 0}, 8),
        ("SL2sq.PI-T", {"a1": 2, "a2": 0}, 3),
        ("SL2sq.PI-T", {"a1": 0, "a2": 1}, 8),
        ("SL2sq.PI-T", {"a1": 1, "a2": 1}, 7),
        ("SL2sq.PI-T", {"a1": 2, "a2": 1}, 2),
        ("SL2sq.PI-N.product", {"a2": 0}, 3),
        ("SL2sq.PI-N.product", {"a2": 1}, 8),
        ("SL2sq.PI-N.diag", {"a2": 0}, 6),
        ("SL2sq.PI-N.diag", {"a2": 1}, 11),
        ("SL2sq.horo2", {"a1": 0, "a2": 0, "b2": 0}, 5),
        ("SL2sq.horo2", {"a1": 1, "a2": 0, "b2": 0}, 16),
        ("SL2sq.horo2", {"a1": 1, "a2": 0, "b2": 1}, 39),
        ("SL2sq.horo2", {"a1": 1, "a2": 1, "b2": 2}, 3),
        ("SL2sq.horo2", {"a1": 1, "a2": 1, "b2": 3}, 0),
        ("SL2sq.horo2", {"a1": 1, "a2": 2, "b2": 3}, 1),
        ("SL3.horo2", {"a1": 0}, 5),
        ("SL3.horo2", {"a1": 1}, 26),
        ("SL3.horo2", {"a1": 2}, 9),
    ],
)
def test_rank2_counts(fid, params, count):
    assert len(classes(fid, params)) == count


def test_type_t_products_count_14():
    total = sum(len(classes("SL2sq.PI-T", {"a1": a, "a2": 0})) for a in (0, 1, 2))
    assert total == 14


def test_pi_n_products_count_9():
    total = len(classes("SL2sq.PI-N.product", {"a2": 0})) + len(
        classes("SL2sq.PI-N.diag", {"a2": 0})
    )
    assert total == 9


def test_horo2_products_count_21():
    total = len(classes("SL2sq.horo2", {"a1": 0, "a2": 0, "b2": 0})) + len(
        classes("SL2sq.horo2", {"a1": 1, "a2": 0, "b2": 0})
    )
    assert total == 21


# -- canonical forms -------------------------------------------------------------


def test_canonical_full_unimodular_square():
    data = build("toric", {"n": 2})
    group = symmetry_group("toric", {"n": 2})
    P = convex_hull([(1, 0), (0, 1), (-1, 0), (0, -1)], 2)
    M = ((2, 1), (1, 1))
    cp1 = canonical_form(data, P, group=group)
    cp2 = canonical_form(data, transform_polytope(M, P), group=group)
    assert cp1.polytope == cp2.polytope
    assert cp1.stabilizer_size >= 1


def test_canonical_shear_and_mirror_identify_published_pairs():
    fid, params = "SL2xGm.horo", {"n": 2, "a1": 1}
    data = build(fid, params)
    group = symmetry_group(fid, params)

    def canon(verts):
        return canonical_form(data, convex_hull(verts, 2), group=group).polytope

    # a mirror pair: the two drawings are one embedding
    a = canon([(H, 0), (0, 1), (-1, 2), (0, -1)])
    b = canon([(H, 0), (0, -1), (-1, -2), (0, 1)])
    assert a == b
    # shear identification of the last walk result with the first
    c = canon([(H, 0), (0, 1), (-1, -2), (0, -1)])
    assert a == c


def test_canonical_rejects_non_reflexive():
    data = build("toric", {"n": 2})
    group = symmetry_group("toric", {"n": 2})
    P = convex_hull([(2, 0), (0, 1), (-1, -1)], 2)
    with pytest.raises(NotReflexive):
        canonical_form(data, P, group=group)


def test_canonical_finite_group_mirror():
    # the diagonal-Borel triple: 4-2-19 and its mirror are one class
    fid = "SL2sq.diagB"
    data = build(fid, {})
    group = symmetry_group(fid, {})
    a = canonical_form(data, convex_hull([(0, -1), (1, 0), (0, 1), (-1, 1)], 2), group=group)
    b = canonical_form(data, convex_hull([(0, 1), (1, 0), (0, -1), (-1, -1)], 2), group=group)
    assert a.polytope == b.polytope


# -- oracle agreement -------------------------------------------------------------


@pytest.mark.parametrize(
    "fid,params,cfg",
    [
        ("SL2sq.TxT", {}, EnumConfig(3, 6)),
        ("SL2sq.diagB", {}, EnumConfig(3, 6)),
        ("SL2xGm.T", {"a1": 1}, EnumConfig(3, 7)),
        ("SL2sq.GL2", {}, EnumConfig(3, 7)),
        ("toric", {"n": 2}, EnumConfig(2, 7)),
        ("SL2sq.diagNT", {}, EnumConfig(3, 6)),
    ],
)
def test_oracle_agreement(fid, params, cfg):
    data = build(fid, params)
    group = symmetry_group(fid, params)
    walk = enumerate_rank2(data, cfg, group=group)
    oracle = brute_force_oracle(data, cfg, group=group)
    assert vertex_sets(walk) == vertex_sets(oracle)


# -- box stability, symmetry soundness, determinism --------------------------------


@pytest.mark.parametrize(
    "fid,params",
    [
        ("SL2xGm.T", {"a1": 1}),
        ("SL2xGm.N.diag", {}),
        ("SL2sq.diagB", {}),
        ("SL2sq.PI-N.diag", {"a2": 1}),
        ("SL2sq.TxT", {}),
    ],
)
def test_box_doubling_stability(fid, params):
    a = classes(fid, params, cfg=EnumConfig(5, 8))
    b = classes(fid, params, cfg=EnumConfig(10, 8))
    assert vertex_sets(a) == vertex_sets(b)


def test_symmetry_soundness():
    for fid, params in (
        ("SL2sq.diagB", {}),
        ("SL2sq.GL2", {}),
        ("SL2xGm.T", {"a1": 1}),
        ("SL2sq.horo1", {"a1": 1, "a2": -1}),
    ):
        data = build(fid, params)
        group = symmetry_group(fid, params)
        for cp in classes(fid, params):
            for M in group.matrices:
                moved = transform_polytope(M, cp.polytope)
                assert check_reflexive(data, moved).ok
                again = canonical_form(data, moved, group=group, check=False)
                assert again.polytope == cp.polytope


def test_determinism():
    a = classes("SL2sq.horo2", {"a1": 1, "a2": 0, "b2": 1})
    b = classes("SL2sq.horo2", {"a1": 1, "a2": 0, "b2": 1})
    assert vertex_sets(a) == vertex_sets(b)


def test_bound_too_tight_detection():
    # data whose unique polytopes stretch past a tiny box: the certificate
    # must fire rather than silently truncate
    data = build("SL3.horo2", {"a1": 1})
    group = symmetry_group("SL3.horo2", {"a1": 1})
    with pytest.raises(BoundTooTight):
        enumerate_rank2(data, EnumConfig(3, 6), group=group)


def test_rank1_enumeration_is_exhaustive_over_candidates():
    # negative integers below -1 can never be endpoints
    data = build("SL2sq.diagSL2", {})
    group = symmetry_group("SL2sq.diagSL2", {})
    seg = RationalPolytope(1, ((F(-2),), (H,)))
    assert not check_reflexive(data, seg).ok
    assert len(enumerate_rank1(data, group=group)) == 1
