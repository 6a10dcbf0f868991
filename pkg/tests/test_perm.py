"""Permutation arithmetic."""

import itertools

import pytest

from fusionsys import DegreeMismatch, InvalidCycle, Permutation, commutator

from conftest import cyc


def test_identity():
    e = Permutation.identity(4)
    assert e.images == (1, 2, 3, 4)
    assert e.is_identity()
    assert e.order() == 1
    assert e.cycle_string() == "()"


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    with pytest.raises(ValueError):
        Permutation((0, 1, 2))


def test_from_cycles_validation():
    with pytest.raises(InvalidCycle):
        Permutation.from_cycles(4, [[1, 2, 5]])
    with pytest.raises(InvalidCycle):
        Permutation.from_cycles(4, [[1, 2], [2, 3]])
    with pytest.raises(InvalidCycle):
        Permutation.from_cycles(4, [[1, 1]])


def test_product_applies_left_factor_first():
    p = cyc(3, (1, 2))
    q = cyc(3, (2, 3))
    # i=1: p sends 1->2, then q sends 2->3
    assert (p * q)(1) == 3
    assert (q * p)(1) == 2


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        cyc(3, (1, 2)) * cyc(4, (1, 2))


def test_inverse_and_pow():
    p = cyc(5, (1, 2, 3, 4, 5))
    assert p * p.inverse() == Permutation.identity(5)
    assert p**5 == Permutation.identity(5)
    assert p**-1 == p.inverse()
    assert p**7 == p * p


def test_conjugate_relabels_points():
    p = cyc(4, (1, 2, 3))
    g = cyc(4, (3, 4))
    assert p.conjugate(g) == cyc(4, (1, 2, 4))
    assert p.conjugate(Permutation.identity(4)) == p
    # definitional equality
    assert p.conjugate(g) == g.inverse() * p * g


def test_order_and_cycles():
    p = cyc(5, (1, 2, 3), (4, 5))
    assert p.order() == 6
    assert p.cycles() == ((1, 2, 3), (4, 5))
    assert p.cycle_string() == "(1 2 3)(4 5)"
    assert p.cycle_string(sep=" ") == "(1 2 3) (4 5)"


def test_associativity_exhaustive_on_s3():
    elems = [Permutation(images) for images in itertools.permutations((1, 2, 3))]
    for a in elems:
        for b in elems:
            for c in elems:
                assert (a * b) * c == a * (b * c)


def test_commutator_identity():
    a = cyc(4, (1, 2, 3))
    b = cyc(4, (1, 2))
    assert commutator(a, b) == a.inverse() * (a.conjugate(b))
    assert commutator(a, a).is_identity()


def test_sorting_is_by_image_tuple():
    elems = sorted(Permutation(images) for images in itertools.permutations((1, 2, 3)))
    assert elems[0].is_identity()
    assert [p.images for p in elems] == sorted(p.images for p in elems)
