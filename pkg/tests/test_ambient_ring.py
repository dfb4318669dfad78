"""The six dimensional lattice of restricted classes on the fourfold."""

from fractions import Fraction

import pytest

from gmquantum.ambient import AmbientRing, BASIS_DEGREES, BASIS_NAMES, DIM, unit


EXPECTED_GRAM = (
    (0, 0, 0, 0, 0, 2),
    (0, 0, 0, 0, 2, 0),
    (0, 0, 4, 2, 0, 0),
    (0, 0, 2, 2, 0, 0),
    (0, 2, 0, 0, 0, 0),
    (2, 0, 0, 0, 0, 0),
)

EXPECTED_CUP = {
    ("s1", "s1"): "s2 + s11",
    ("s1", "s2"): "3*s3",
    ("s1", "s11"): "2*s3",
    ("s1", "s3"): "s31",
    ("s1", "s31"): "0",
    ("s2", "s2"): "2*s31",
    ("s2", "s11"): "s31",
    ("s11", "s11"): "s31",
    ("s2", "s3"): "0",
    ("s3", "s3"): "0",
}


@pytest.fixture(scope="module")
def amb():
    return AmbientRing()


def test_basis_layout():
    assert BASIS_NAMES == ("s0", "s1", "s2", "s11", "s3", "s31")
    assert BASIS_DEGREES == (0, 1, 2, 2, 3, 4)
    assert DIM == 6


def test_gram_matrix(amb):
    gram = amb.gram()
    for i in range(DIM):
        for j in range(DIM):
            assert gram.rows[i][j] == EXPECTED_GRAM[i][j], (i, j)


def test_fourfold_has_degree_ten(amb):
    h = amb.basis_vector("s1")
    h2 = amb.cup(h, h)
    assert amb.pairing(h2, h2) == 10


def test_cup_products_match_frozen(amb):
    for (a, b), want in EXPECTED_CUP.items():
        got = amb.format(amb.cup(amb.basis_vector(a), amb.basis_vector(b)))
        assert got == want, (a, b, got)


def test_cup_is_commutative_and_unital(amb):
    for a in BASIS_NAMES:
        va = amb.basis_vector(a)
        assert amb.cup(amb.basis_vector("s0"), va) == va
        for b in BASIS_NAMES:
            vb = amb.basis_vector(b)
            assert amb.cup(va, vb) == amb.cup(vb, va)


def test_cup_respects_grading(amb):
    for i, a in enumerate(BASIS_NAMES):
        for j, b in enumerate(BASIS_NAMES):
            prod = amb.cup(amb.basis_vector(a), amb.basis_vector(b))
            want = BASIS_DEGREES[i] + BASIS_DEGREES[j]
            deg = amb.degree_of(prod)
            assert deg is None or deg == want


def test_dual_basis_is_dual(amb):
    duals = amb.dual_basis()
    for i in range(DIM):
        for j in range(DIM):
            want = Fraction(1) if i == j else Fraction(0)
            assert amb.pairing(unit(i), duals[j]) == want


def test_point_class_is_half_s31(amb):
    pt = amb.point_class()
    assert amb.integrate(pt) == 1
    assert pt == (0, 0, 0, 0, 0, Fraction(1, 2))


def test_poincare_pairing_respects_degrees(amb):
    # complementary degrees pair, everything else integrates to zero
    for i in range(DIM):
        for j in range(DIM):
            if BASIS_DEGREES[i] + BASIS_DEGREES[j] != 4:
                assert amb.pairing(unit(i), unit(j)) == 0


def test_degree_of_rejects_mixed(amb):
    with pytest.raises(ValueError):
        amb.degree_of((1, 1, 0, 0, 0, 0))
