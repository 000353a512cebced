from fractions import Fraction

import pytest

from downup.errors import InvalidParameter, RootMismatch, UnverifiedMap
from downup.morphisms import (apply_hom, check_hom, lemma_map, make_map, pull_back, quantum_plane_map,
                              quantum_weyl_map, relations, verify)
from downup.ncalg import AlgebraElement, downup, qplane, qweyl
from downup.scalars import Cyclotomic, RationalFunction

q = RationalFunction.q()
z4 = Cyclotomic.zeta(4)


@pytest.mark.parametrize("alpha, beta, r, s", [
    (3, -2, 2, 1), (q + 1, -q, q, 1), (0, -1, z4, -z4), (5, -6, 3, 2),
])
def test_quantum_plane_map(alpha, beta, r, s):
    hc = check_hom(quantum_plane_map(alpha, beta, r, s))
    assert hc.ok and hc.certificate is None


@pytest.mark.parametrize("alpha, beta, r, s", [
    (5, -6, 2, 3), (5, -6, 3, 2), (q + 2, -2 * q, q, 2), (2 * z4, 1, z4, z4),
])
def test_quantum_weyl_map(alpha, beta, r, s):
    assert check_hom(quantum_weyl_map(alpha, beta, r, s)).ok


def test_weyl_scalar_sign():
    # d -> a/(1 - s): for roots (2, 3) this is -a/2
    m = quantum_weyl_map(5, -6, 2, 3)
    assert str(m.image("d")) == "-1/2*a"


def test_opposite_sign_is_rejected_with_certificate():
    src, tgt = downup(5, -6, 1), qweyl(2)
    a, b = AlgebraElement.gen(tgt, "a"), AlgebraElement.gen(tgt, "b")
    wrong = make_map(src, tgt, "t = 1/(s-1)", d=a * Fraction(1, 2), u=b)
    hc = check_hom(wrong)
    assert not hc.ok
    # the residue is (1 - s) t a with t = 1/2, s = 3
    assert hc.certificate == a * -1
    with pytest.raises(UnverifiedMap):
        verify(wrong)


def test_coroot_one_rejected():
    with pytest.raises(InvalidParameter):
        quantum_weyl_map(3, -2, 2, 1)
    with pytest.raises(InvalidParameter):
        lemma_map("c", 3, -2, 2, 1)


def test_root_mismatch():
    with pytest.raises(RootMismatch):
        quantum_plane_map(3, -2, 2, 3)


def test_relations_are_raw():
    names = [n for n, _ in relations(downup(1, 2, 3))]
    assert names == ["R1", "R2"]


def test_apply_and_pull_back():
    m = verify(quantum_weyl_map(5, -6, 2, 3))
    C = m.target
    y = AlgebraElement.gen(C, "a") * AlgebraElement.gen(C, "b") - 4
    x = pull_back(m, y)
    assert x.pres == m.source
    assert apply_hom(m, x) == y


def test_unverified_map_cannot_be_applied():
    m = quantum_plane_map(3, -2, 2, 1)
    with pytest.raises(UnverifiedMap):
        apply_hom(m, AlgebraElement.gen(m.source, "d"))
