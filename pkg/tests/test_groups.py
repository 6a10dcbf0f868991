"""Group construction and the subgroup operators, each against a blunt oracle."""

import math
import random

import pytest

import fusionsys as fs
from fusionsys import (
    AmbientMismatch,
    DegreeMismatch,
    DoesNotNormalize,
    NotInAmbient,
    Permutation,
    SizeLimitExceeded,
)
from fusionsys.groups import automorphisms, minimal_generators

from conftest import catalog_group, cyc


def test_build_group_empty_generating_set():
    G = fs.build_group([], degree=3)
    assert G.order == 1
    assert G.identity in G


def test_build_group_s3_s4():
    assert fs.build_group([cyc(3, (1, 2, 3)), cyc(3, (1, 2))]).order == 6
    assert fs.build_group([cyc(4, (1, 2, 3, 4)), cyc(4, (1, 2))]).order == 24


def test_build_group_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        fs.build_group([cyc(3, (1, 2)), cyc(4, (1, 2))])
    with pytest.raises(DegreeMismatch):
        fs.build_group([])


def test_build_group_size_limit():
    with pytest.raises(SizeLimitExceeded):
        fs.build_group([cyc(4, (1, 2, 3, 4)), cyc(4, (1, 2))], limit=10)


def test_group_equality_by_element_set():
    a = fs.build_group([cyc(3, (1, 2, 3))])
    b = fs.build_group([cyc(3, (1, 3, 2))])
    assert a == b and hash(a) == hash(b)


def test_subgroup_generated(s4):
    assert fs.subgroup_generated(s4, []).order == 1
    assert fs.subgroup_generated(s4, [cyc(4, (1, 2, 3))]).order == 3
    v4 = fs.subgroup_generated(s4, [cyc(4, (1, 2), (3, 4)), cyc(4, (1, 3), (2, 4))])
    assert v4.order == 4
    assert v4.group.is_abelian()


def test_subgroup_generated_not_in_ambient(a4):
    with pytest.raises(NotInAmbient):
        fs.subgroup_generated(a4, [cyc(4, (1, 2))])


def test_conjugate_subgroup(s4):
    H = fs.subgroup_generated(s4, [cyc(4, (1, 2, 3))])
    assert fs.conjugate_subgroup(H, s4.identity) == H
    assert fs.conjugate_subgroup(H, cyc(4, (3, 4))) == fs.subgroup_generated(
        s4, [cyc(4, (1, 2, 4))]
    )
    for g in H.elements:
        assert fs.conjugate_subgroup(H, g) == H
    assert fs.conjugate_subgroup(H, cyc(4, (3, 4))).order == H.order
    with pytest.raises(NotInAmbient):
        fs.conjugate_subgroup(fs.subgroup_generated(catalog_group("A4"), [cyc(4, (1, 2, 3))]), cyc(4, (1, 2)))


def _normalizer_oracle(G, H):
    hset = frozenset(H.elements)
    return frozenset(g for g in G.elements if frozenset(h.conjugate(g) for h in hset) == hset)


def _centralizer_oracle(G, H):
    return frozenset(g for g in G.elements if all(h.conjugate(g) == h for h in H.elements))


def test_normalizer_s4_c3(s4):
    C3 = fs.subgroup_generated(s4, [cyc(4, (1, 2, 3))])
    N = fs.normalizer(s4, C3)
    # oracle: the conjugates of C3 are the 4 Sylow 3-subgroups, so |N| = 24/4
    conjugates = {fs.conjugate_subgroup(C3, g) for g in s4.elements}
    assert len(conjugates) == 4
    assert N.order == s4.order // len(conjugates) == 6
    assert frozenset(N.elements) == _normalizer_oracle(s4, C3)
    assert all(h in N for h in C3.elements)  # H <= N_G(H)


def test_normalizer_whole_group(s4):
    assert fs.normalizer(s4, fs.whole_subgroup(s4)) == fs.whole_subgroup(s4)


def test_normalizer_requires_containment(s4, a4):
    with pytest.raises(NotInAmbient):
        fs.normalizer(a4, fs.subgroup_generated(s4, [cyc(4, (1, 2))]))


def test_centralizer_and_center(s4):
    C3 = fs.subgroup_generated(s4, [cyc(4, (1, 2, 3))])
    C = fs.centralizer(s4, C3)
    N = fs.normalizer(s4, C3)
    assert frozenset(C.elements) == _centralizer_oracle(s4, C3)
    assert C.order == 3
    assert fs.is_normal(fs.Subgroup(N.group, C.group), N.group)  # C_G(H) normal in N_G(H)
    assert fs.center(s4).order == 1
    # Z(G) = C_G(G)
    assert fs.center(s4) == fs.centralizer(s4, fs.whole_subgroup(s4))


def test_derived_subgroup(s4):
    abelian = fs.subgroup_generated(s4, [cyc(4, (1, 2, 3))])
    assert fs.derived_subgroup(abelian).order == 1
    D = fs.derived_subgroup(fs.whole_subgroup(s4))
    assert D.order == 12
    # oracle: A4 is the even permutations

    def is_even(p):
        return sum(len(c) - 1 for c in p.cycles()) % 2 == 0

    assert all(is_even(x) for x in D.elements)


def test_commutator_with_element(s4):
    A = fs.subgroup_generated(s4, [cyc(4, (1, 2, 3))])
    central = A.elements[1]
    assert fs.commutator_with_element(A, central).order == 1
    assert fs.commutator_with_element(A, cyc(4, (1, 2))).order > 1
    with pytest.raises(NotInAmbient):
        fs.commutator_with_element(fs.subgroup_generated(catalog_group("A4"), [cyc(4, (1, 2, 3))]), cyc(4, (1, 2)))


def test_meet_join(s4):
    H = fs.subgroup_generated(s4, [cyc(4, (1, 2))])
    K = fs.subgroup_generated(s4, [cyc(4, (1, 2, 3))])
    assert fs.meet(H, H) == H
    assert fs.meet(H, K).order == 1
    assert fs.join(H, K).order == 6
    other = fs.subgroup_generated(catalog_group("A4"), [cyc(4, (1, 2, 3))])
    with pytest.raises(AmbientMismatch):
        fs.meet(H, other)
    with pytest.raises(AmbientMismatch):
        fs.join(H, other)


def test_sylow_subgroup(s4):
    S3 = fs.sylow_subgroup(s4, 3)
    assert S3.order == 3
    S2 = fs.sylow_subgroup(s4, 2)
    assert S2.order == 8
    # D8 signature: nonabelian with exactly two elements of order 4
    assert not S2.group.is_abelian()
    assert sum(1 for x in S2.elements if x.order() == 4) == 2
    C6 = catalog_group("C6")
    assert fs.sylow_subgroup(C6, 5).order == 1
    with pytest.raises(ValueError):
        fs.sylow_subgroup(s4, 4)


def test_sylow_conjugates_share_order():
    for name in ("S4", "A4", "SL23", "F21", "S5"):
        G = catalog_group(name)
        for p in (2, 3, 5, 7):
            S = fs.sylow_subgroup(G, p)
            assert S.order == fs.p_part(G.order, p)
            for g in G.generators:
                assert fs.conjugate_subgroup(S, g).order == S.order


def test_p_core(s4):
    O2 = fs.p_core(s4, 2)
    assert O2.order == 4
    assert frozenset(O2.elements) == frozenset(
        [s4.identity, cyc(4, (1, 2), (3, 4)), cyc(4, (1, 3), (2, 4)), cyc(4, (1, 4), (2, 3))]
    )
    assert fs.p_core(s4, 3).order == 1
    P = catalog_group("ES27+")
    assert fs.p_core(P, 3).order == P.order


def test_p_core_oracle():
    # O_p(G) = the elements of a Sylow p-subgroup whose whole conjugacy
    # class stays inside it
    for name in ("S4", "A4", "SL23", "D18", "F21"):
        G = catalog_group(name)
        for p in (2, 3, 7):
            S = fs.sylow_subgroup(G, p)
            sset = frozenset(S.elements)
            oracle = frozenset(
                x for x in S.elements
                if all(x.conjugate(g) in sset for g in G.elements)
            )
            assert frozenset(fs.p_core(G, p).elements) == oracle
            assert fs.is_normal(fs.p_core(G, p), G)


def test_induced_action(s4):
    Q = fs.subgroup_generated(s4, [cyc(4, (1, 2, 3))])
    N = fs.normalizer(s4, Q)
    act = fs.induced_action(N, Q)
    assert act.image.order == 2
    assert len(act.kernel._eset) == 3
    assert act.image.order * len(act.kernel._eset) == N.order
    # kernel is the centralizer
    assert act.kernel._eset == frozenset(fs.centralizer(s4, Q).elements)
    # homomorphism on all pairs
    for g in N.group.elements:
        for h in N.group.elements:
            assert act.project(g) * act.project(h) == act.project(g * h)
    with pytest.raises(DoesNotNormalize):
        fs.induced_action(fs.whole_subgroup(s4), Q)


def test_induced_action_trivial_cases(s4):
    Q = fs.subgroup_generated(s4, [cyc(4, (1, 2, 3))])
    C = fs.centralizer(s4, Q)
    assert fs.induced_action(C, Q).image.order == 1
    refl = fs.subgroup_generated(s4, [cyc(4, (1, 2))])
    assert fs.induced_action(refl, refl).image.order == 1  # Q = Z(N)


def test_p_prime_generated(s4, sl23):
    P = catalog_group("ES27+")
    assert fs.p_prime_generated(P, 3).order == 1
    assert fs.p_prime_generated(s4, 3).order == 24
    Q8 = fs.p_prime_generated(sl23, 3)
    assert Q8.order == 8
    # quaternion signature: a unique involution, all other non-identity
    # elements of order 4
    assert sum(1 for x in Q8.elements if x.order() == 2) == 1
    assert sum(1 for x in Q8.elements if x.order() == 4) == 6
    assert fs.is_normal(Q8, sl23)


def test_closure_properties_random_sample():
    rng = random.Random(20260810)
    for name in ("S4", "SL23", "F21", "ES27+", "D12"):
        G = catalog_group(name)
        assert math.factorial(G.degree) % G.order == 0
        for _ in range(30):
            x, y = rng.choice(G.elements), rng.choice(G.elements)
            assert x * y in G
            assert x.inverse() in G


def test_automorphism_counts():
    assert sum(1 for _ in automorphisms(catalog_group("C3"))) == 2
    assert sum(1 for _ in automorphisms(catalog_group("D4"))) == 6


def test_is_characteristic(s4):
    A4sub = fs.derived_subgroup(fs.whole_subgroup(s4))
    assert fs.is_characteristic(A4sub, s4)
    V4 = catalog_group("D4")
    single = fs.subgroup_generated(V4, [cyc(4, (1, 2))])
    assert not fs.is_characteristic(single, V4)
    assert fs.is_characteristic(fs.trivial_subgroup(s4), s4)
    assert fs.is_characteristic(fs.whole_subgroup(s4), s4)


def test_minimal_generators_are_small():
    W = catalog_group("C3wrC3")
    gens = minimal_generators(W)
    assert len(gens) == 2
    assert fs.build_group(gens).order == W.order


def test_subgroup_validation(s4, a4):
    with pytest.raises(NotInAmbient):
        fs.Subgroup(a4, fs.subgroup_generated(s4, [cyc(4, (1, 2))]).group)
