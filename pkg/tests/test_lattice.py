"""Subgroup lattices, abelian families, Thompson subgroups, nilpotency class."""

import pytest

import fusionsys as fs
from fusionsys import AmbientMismatch, LatticeTooLarge, NotAPGroup
from fusionsys.lattice import p_group_prime

from conftest import catalog_group, cyc

P_GROUP_NAMES = (
    "C3", "C9", "C27", "E9", "E27", "ES27+", "ES27-", "C3wrC3",
    "C5", "C25", "E25", "E125",
)


def test_lattice_counts():
    assert len(fs.enumerate_subgroups(catalog_group("C3"))) == 2
    assert len(fs.enumerate_subgroups(catalog_group("E9"))) == 6
    lat = fs.enumerate_subgroups(catalog_group("ES27+"))
    assert len(lat) == 19
    nines = [H for H in lat if H.order == 9]
    assert len(nines) == 4
    assert all(fs.is_normal(H, lat.P) for H in nines)


def test_lattice_contains_ends_and_obeys_lagrange():
    for name in ("E9", "ES27-", "C27"):
        P = catalog_group(name)
        lat = fs.enumerate_subgroups(P)
        orders = [H.order for H in lat]
        assert 1 in orders and P.order in orders
        assert all(P.order % o == 0 for o in orders)


def test_lattice_closed_under_conjugation():
    P = catalog_group("ES27+")
    lat = fs.enumerate_subgroups(P)
    keys = {H.group._eset for H in lat}
    for H in lat:
        for g in P.generators:
            assert frozenset(x.conjugate(g) for x in H.elements) in keys


def test_lattice_rejects_non_p_groups(s4):
    with pytest.raises(NotAPGroup):
        fs.enumerate_subgroups(s4)


def test_lattice_bound():
    with pytest.raises(LatticeTooLarge):
        fs.enumerate_subgroups(catalog_group("E27"), max_order=9)
    # explicit larger bound is accepted
    assert len(fs.enumerate_subgroups(catalog_group("E27"), max_order=27)) > 1


def test_maximal_subgroup_count_formula():
    # index-p subgroups number (p^d - 1)/(p - 1), d the rank of P modulo
    # the intersection of its maximal subgroups
    for name in P_GROUP_NAMES:
        P = catalog_group(name)
        if P.order == 1:
            continue
        p = p_group_prime(P)
        lat = fs.enumerate_subgroups(P)
        maximals = [H for H in lat if H.order == P.order // p]
        phi = frozenset(P.elements)
        for H in maximals:
            phi = phi & H.group._eset
        index = P.order // len(phi)
        d = 0
        while p**d < index:
            d += 1
        assert p**d == index
        assert len(maximals) == (p**d - 1) // (p - 1), name


def test_conjugacy_classes_partition():
    for name in ("ES27+", "C3wrC3", "E25"):
        lat = fs.enumerate_subgroups(catalog_group(name))
        classes = lat.conjugacy_classes()
        assert sum(len(c) for c in classes) == len(lat)
        if lat.P.is_abelian():
            assert len(classes) == len(lat)


def test_build_family_kinds():
    E9 = catalog_group("E9")
    fam = fs.build_family(E9, "max-abelian")
    assert len(fam) == 1 and fam.members[0].order == 9
    ES = catalog_group("ES27+")
    fam = fs.build_family(ES, "max-abelian")
    assert len(fam) == 4
    assert all(H.order == 9 for H in fam)
    allfam = fs.build_family(ES, "all-abelian")
    assert len(allfam) == 18
    elem = fs.build_family(catalog_group("ES27-"), "max-elementary-abelian")
    assert len(elem) == 1 and elem.members[0].order == 9
    empty = fs.build_family(ES, "custom", members=[])
    assert len(empty) == 0
    with pytest.raises(ValueError):
        fs.build_family(ES, "bogus")


def test_family_rejects_nonabelian_member():
    ES = catalog_group("ES27+")
    with pytest.raises(ValueError):
        fs.build_family(ES, "custom", members=[fs.whole_subgroup(ES)])
    with pytest.raises(AmbientMismatch):
        fs.build_family(
            ES, "custom", members=[fs.subgroup_generated(catalog_group("C3"), [])]
        )


def test_family_dedup_by_element_set():
    E9 = catalog_group("E9")
    a = fs.subgroup_generated(E9, [cyc(6, (1, 2, 3))])
    b = fs.subgroup_generated(E9, [cyc(6, (1, 3, 2))])
    fam = fs.build_family(E9, "custom", members=[a, b])
    assert len(fam) == 1


def test_family_meet_empty_is_trivial():
    ES = catalog_group("ES27+")
    fam = fs.build_family(ES, "custom", members=[])
    assert fs.family_meet(fam).order == 1
    assert fs.family_join(fam).order == 1


def test_family_join_meet_extraspecial(es27p):
    fam = fs.build_family(es27p, "max-abelian")
    assert fs.family_join(fam).order == 27
    I = fs.family_meet(fam)
    assert I.order == 3
    assert I == fs.center(es27p)


def test_family_restrict(es27p):
    fam = fs.build_family(es27p, "max-abelian")
    assert fs.family_restrict(fam, fs.whole_subgroup(es27p)).members == fam.members
    one_max = fam.members[0]
    restricted = fs.family_restrict(fam, one_max)
    assert restricted.members == (one_max,)
    with pytest.raises(AmbientMismatch):
        fs.family_restrict(fam, fs.whole_subgroup(catalog_group("E125")))


def test_restrict_is_monotone(es27p):
    fam = fs.build_family(es27p, "all-abelian")
    lat = fs.enumerate_subgroups(es27p)
    subs = list(lat)
    for Q1 in subs:
        for Q2 in subs:
            if Q1.group._eset <= Q2.group._eset:
                m1 = set(fs.family_restrict(fam, Q1).members)
                m2 = set(fs.family_restrict(fam, Q2).members)
                assert m1 <= m2


def test_meet_centralized_by_join():
    # the intersection of the family lies in the center of its join
    for name in P_GROUP_NAMES:
        P = catalog_group(name)
        fam = fs.build_family(P, "max-abelian")
        I, J = fs.family_meet(fam), fs.family_join(fam)
        assert fs.commutator_subgroup(I, J).order == 1, name


def test_zj_equals_family_meet():
    for name in P_GROUP_NAMES:
        P = catalog_group(name)
        assert fs.thompson_ZJ(P) == fs.family_meet(
            fs.build_family(P, "max-abelian")
        ), name


def test_thompson_subgroups():
    E9 = catalog_group("E9")
    assert fs.thompson_J(E9).order == 9
    assert fs.thompson_ZJ(E9).order == 9
    ES = catalog_group("ES27+")
    assert fs.thompson_J(ES).order == 27
    assert fs.thompson_ZJ(ES).order == 3
    W = catalog_group("C3wrC3")
    base = fs.subgroup_generated(
        W, [cyc(9, (1, 2, 3)), cyc(9, (4, 5, 6)), cyc(9, (7, 8, 9))]
    )
    assert fs.thompson_J(W) == base
    assert fs.thompson_ZJ(W) == base


def test_nilpotency_class():
    W = catalog_group("C3wrC3")
    assert fs.nilpotency_class(fs.trivial_subgroup(W)) == 0
    assert fs.nilpotency_class(fs.subgroup_generated(W, [cyc(9, (1, 2, 3))])) == 1
    assert fs.nilpotency_class(fs.whole_subgroup(catalog_group("ES27+"))) == 2
    assert fs.nilpotency_class(fs.whole_subgroup(W)) == 3
    with pytest.raises(ValueError):
        fs.nilpotency_class(fs.whole_subgroup(catalog_group("S4")))


def test_normal_class_le2_list():
    W = catalog_group("C3wrC3")
    blist = fs.normal_class_le2_subgroups(W)
    assert all(B.order < W.order for B in blist)  # P itself has class 3
    assert any(B.order == 1 for B in blist)
    base = fs.thompson_J(W)
    assert base in blist
    ES = catalog_group("ES27+")
    blist_es = fs.normal_class_le2_subgroups(ES)
    assert any(B.order == ES.order for B in blist_es)  # class 2, included
