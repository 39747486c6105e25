"""Cabling: polynomial transform, region transform, consistency."""

import pytest

from hfgenus.bounds import bound_min_region
from hfgenus.cable import (CableSpec, T_transform, cable_alexander,
                           cable_consistency_check, parse_cable_spec,
                           region_via_T)
from hfgenus.errors import UsageError
from hfgenus.hfunction import HTable
from hfgenus.laurent import LaurentPoly
from hfgenus.linkcat import catalog, sublink, validate_descriptor
from hfgenus.region import UpwardClosedRegion, region_from_h


def P(nvars, *terms):
    return LaurentPoly.from_terms(nvars, terms)


TREFOIL = P(1, (1, (1,)), (-1, (0,)), (1, (-1,)))
# classical torus-knot polynomials, frozen by hand from the alternating form
T25 = P(1, (1, (2,)), (-1, (1,)), (1, (0,)), (-1, (-1,)), (1, (-2,)))
T27 = P(1, (1, (3,)), (-1, (2,)), (1, (1,)), (-1, (0,)), (1, (-1,)),
        (-1, (-2,)), (1, (-3,)))


def test_cable_spec_validation():
    with pytest.raises(ValueError):
        CableSpec(((2, 4),))
    with pytest.raises(ValueError):
        CableSpec(((0, 1),))
    spec = CableSpec(((2, 7), (1, 1)))
    assert spec.restrict((0,)).pairs == ((2, 7),)
    assert spec.genus_shift(0) == 3 and spec.genus_shift(1) == 0


def test_parse_cable_spec():
    assert parse_cable_spec("2:7,1:1").pairs == ((2, 7), (1, 1))
    with pytest.raises(UsageError):
        parse_cable_spec("2-7")
    with pytest.raises(UsageError):
        parse_cable_spec("2:4")


def test_unknot_cable_is_trefoil():
    d = cable_alexander(catalog("unknot"), CableSpec(((2, 3),)))
    assert d.delta((0,)) == TREFOIL
    assert d.components[0].g4 == 1
    assert region_from_h(HTable(d)).generators == ((1,),)


def test_unknot_cables_give_torus_knot_polynomials():
    assert cable_alexander(catalog("unknot"), CableSpec(((2, 5),))).delta((0,)) == T25
    assert cable_alexander(catalog("unknot"), CableSpec(((2, 7),))).delta((0,)) == T27


def test_one_strand_cable_is_identity():
    d = cable_alexander(catalog("unknot"), CableSpec(((1, 7),)))
    assert d.delta((0,)) == LaurentPoly.one(1)
    wh = catalog("whitehead")
    idc = cable_alexander(wh, CableSpec(((1, 1), (1, 1))))
    for B in [(0,), (1,), (0, 1)]:
        assert idc.delta(B) == wh.delta(B)
    assert [c.g4 for c in idc.components] == [c.g4 for c in wh.components]


def test_cabled_descriptors_validate():
    for pairs in [((2, 7), (1, 1)), ((3, 10), (1, 1))]:
        d = cable_alexander(catalog("whitehead"), CableSpec(pairs))
        assert validate_descriptor(d) == []


def test_cable_commutes_with_sublink():
    wh = catalog("whitehead")
    spec = CableSpec(((2, 7), (3, 11)))
    cabled = cable_alexander(wh, spec)
    for B in [(0,), (1,), (0, 1)]:
        direct = sublink(cabled, B)
        via = cable_alexander(sublink(wh, B), spec.restrict(B))
        for C in [tuple(range(len(B)))]:
            assert direct.delta(C) == via.delta(C), (B, C)


def test_cable_g4_update():
    tref = catalog("trefoil_rh")
    d = cable_alexander(tref, CableSpec(((2, 3),)))
    assert d.components[0].g4 == 2 * 1 + 1 == 3
    d = cable_alexander(tref, CableSpec(((3, 7),)))
    assert d.components[0].g4 == 3 * 1 + 6 == 9


def test_cable_g4_matches_region_bound_for_lspace_cables():
    # unknot and trefoil cables with q above the L-space threshold
    for base, pairs in [("unknot", (2, 3)), ("unknot", (2, 5)), ("unknot", (3, 7)),
                        ("trefoil_rh", (2, 3)), ("trefoil_rh", (2, 5)),
                        ("trefoil_rh", (3, 7))]:
        d = cable_alexander(catalog(base), CableSpec((pairs,)))
        assert bound_min_region(HTable(d)) == d.components[0].g4, (base, pairs)


def test_T_transform():
    ident = CableSpec(((1, 1), (1, 5)))
    assert T_transform(ident, (4, -2)) == (4, -2)
    spec = CableSpec(((2, 7), (3, 5)))
    assert T_transform(spec, (0, 0)) == (3, 4)
    assert T_transform(CableSpec(((2, 3),)), (0,)) == (1,)


def test_T_transform_strictly_monotone():
    spec = CableSpec(((2, 7), (3, 5)))
    pts = [(0, 0), (1, 0), (0, 1), (2, 3), (-1, 4)]
    for a in pts:
        for b in pts:
            if all(x <= y for x, y in zip(a, b)) and a != b:
                ta, tb = T_transform(spec, a), T_transform(spec, b)
                assert all(x <= y for x, y in zip(ta, tb)) and ta != tb


def test_region_via_T_whitehead_formula():
    wh_region = UpwardClosedRegion(2, ((0, 1), (1, 0)))
    for p, q in [(2, 7), (3, 10), (2, 9)]:
        spec = CableSpec(((p, q), (1, 1)))
        shift = (p - 1) * (q - 1) // 2
        got = region_via_T(wh_region, spec)
        assert got.generators == tuple(sorted([(p + shift, 0), (shift, 1)]))
    ident = CableSpec(((1, 1), (1, 1)))
    assert region_via_T(wh_region, ident).generators == wh_region.generators


def test_consistency_unknot_and_whitehead():
    rep = cable_consistency_check(catalog("unknot"), CableSpec(((2, 3),)))
    assert rep["equal"] and rep["direct_generators"] == ((1,),)
    for pairs in [((2, 7), (1, 1)), ((3, 10), (1, 1))]:
        rep = cable_consistency_check(catalog("whitehead"), CableSpec(pairs))
        assert rep["equal"], pairs
        assert rep["warnings"] == []


def test_consistency_small_coprime_specs():
    # blanket check on small specs with q/p >= 3
    for key in ["unknot", "trefoil_rh", "whitehead"]:
        d = catalog(key)
        for p in (1, 2):
            for q in (1, 3, 7):
                if p == 2 and (q % 2 == 0 or q < 3 * p):
                    continue
                spec = CableSpec(((p, q),) * d.n)
                rep = cable_consistency_check(d, spec)
                assert rep["equal"], (key, p, q)


def test_two_bridge_cable_staircase():
    # large ratios: both pipelines agree and give the stair with runs p1, p2
    rep = cable_consistency_check(catalog("two_bridge", 2),
                                  CableSpec(((2, 9), (3, 13))))
    assert rep["equal"]
    gens = rep["direct_generators"]
    assert gens == ((4, 18), (6, 15), (8, 12))
    runs = sorted((b[0] - a[0], a[1] - b[1])
                  for a, b in zip(gens, gens[1:]))
    assert runs == [(2, 3), (2, 3)]


def test_two_bridge_cable_below_threshold_is_rejected():
    # the q/p < 3 pair from the worked examples: the cabled data fails
    # H-validity for both signs, so the direct route reports a rejection
    rep = cable_consistency_check(catalog("two_bridge", 2),
                                  CableSpec(((2, 5), (3, 7))))
    assert rep["direct_generators"] is None
    assert "valid H-function" in rep["direct_error"]
    assert rep["warnings"]  # largeness warnings flagged the ratios
    # the transformed route still yields the stair pattern
    assert rep["transformed_generators"] == ((2, 12), (4, 9), (6, 6))


def test_cable_spec_mismatch():
    with pytest.raises(ValueError):
        cable_alexander(catalog("whitehead"), CableSpec(((2, 3),)))


def test_one_strand_cables_on_links():
    wh = catalog("whitehead")
    d = cable_alexander(wh, CableSpec(((1, 3), (1, 5))))
    for B in [(0,), (1,), (0, 1)]:
        assert d.delta(B) == wh.delta(B)
