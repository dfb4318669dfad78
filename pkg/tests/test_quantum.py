"""Quantum product table, spectral data, kernel, and presentation."""

from fractions import Fraction

import pytest

from gmquantum.ambient import BASIS_NAMES, DIM, AmbientRing
from gmquantum.gwcounts import CountSet
from gmquantum.poly import VarContext
from gmquantum.quantum import (
    QuantumRing, associativity_failures, classical_limit_failures,
    degree_two_closed_form, frobenius_failures, grading_failures,
    kernel_basis, perturbed_ring, presentation_report, quantum_context,
    solve_three_point_invariants, spectral_report, standard_ring,
    star_h_matrix,
)

# the full table, frozen as rendered strings; every later claim about
# the product is anchored here
FULL_TABLE = {
    ("s0", "s0"): "s0",
    ("s0", "s1"): "s1",
    ("s0", "s2"): "s2",
    ("s0", "s11"): "s11",
    ("s0", "s3"): "s3",
    ("s0", "s31"): "s31",
    ("s1", "s1"): "6*q*s0 + s2 + s11",
    ("s1", "s2"): "10*q*s1 + 3*s3",
    ("s1", "s11"): "6*q*s1 + 2*s3",
    ("s1", "s3"): "24*q^2*s0 + 4*q*s2 + 2*q*s11 + s31",
    ("s1", "s31"): "24*q^2*s1 + 6*q*s3",
    ("s2", "s2"): "80*q^2*s0 + 8*q*s2 + 12*q*s11 + 2*s31",
    ("s2", "s11"): "52*q^2*s0 + 8*q*s2 + 4*q*s11 + s31",
    ("s2", "s3"): "60*q^2*s1 + 10*q*s3",
    ("s2", "s31"): "176*q^3*s0 + 28*q^2*s2 + 24*q^2*s11",
    ("s11", "s11"): "32*q^2*s0 + 6*q*s2 + s31",
    ("s11", "s3"): "40*q^2*s1 + 6*q*s3",
    ("s11", "s31"): "112*q^3*s0 + 20*q^2*s2 + 12*q^2*s11",
    ("s3", "s3"): "120*q^3*s0 + 20*q^2*s2 + 20*q^2*s11",
    ("s3", "s31"): "120*q^3*s1 + 24*q^2*s3",
    ("s31", "s31"): "368*q^4*s0 + 64*q^3*s2 + 48*q^3*s11",
}

H_MATRIX = (
    ("0", "6*q", "0", "0", "24*q^2", "0"),
    ("1", "0", "10*q", "6*q", "0", "24*q^2"),
    ("0", "1", "0", "0", "4*q", "0"),
    ("0", "1", "0", "0", "2*q", "0"),
    ("0", "0", "3", "2", "0", "6*q"),
    ("0", "0", "0", "0", "1", "0"),
)


@pytest.fixture(scope="module")
def ring():
    return standard_ring()


def test_full_product_table(ring):
    assert len(ring.table) == 21
    for (i, j), vec in ring.table.items():
        key = (BASIS_NAMES[i], BASIS_NAMES[j])
        assert ring.format(vec) == FULL_TABLE[key], key


def test_star_h_matrix_frozen():
    counts = CountSet.from_geometry().with_j2(32)
    mat = star_h_matrix(counts, AmbientRing(), quantum_context())
    rendered = tuple(tuple(str(e) for e in row) for row in mat.rows)
    assert rendered == H_MATRIX


def test_unit_and_commutativity(ring):
    one = ring.basis_element("s0")
    for name in BASIS_NAMES:
        x = ring.basis_element(name)
        assert ring.star(one, x) == x
    for a in BASIS_NAMES:
        for b in BASIS_NAMES:
            assert ring.star(ring.basis_element(a), ring.basis_element(b)) \
                == ring.star(ring.basis_element(b), ring.basis_element(a))


def test_structural_scanners_empty(ring):
    assert grading_failures(ring) == []
    assert associativity_failures(ring) == []
    assert frobenius_failures(ring) == []
    assert classical_limit_failures(ring) == []


def test_solver_recovers_both_unknowns():
    counts = CountSet.from_geometry()
    rep = solve_three_point_invariants(counts, counts.J12)
    assert rep.j11 == Fraction(24)
    assert rep.j2 == Fraction(32)
    assert rep.equations == 23
    assert rep.rank == 2
    assert rep.residuals_checked == 21


def test_solver_tracks_its_inputs():
    # the solved values are a function of the two point counts, not
    # constants: shifting an input shifts the output
    counts = CountSet.from_geometry()
    shifted = CountSet(counts.I11, counts.I12, counts.I13 + 1,
                       counts.I2, counts.J11, counts.J12)
    rep = solve_three_point_invariants(shifted, shifted.J12)
    assert (rep.j11, rep.j2) == (Fraction(32), Fraction(189, 5))
    rep2 = solve_three_point_invariants(counts, counts.J12 + 1)
    assert (rep2.j11, rep2.j2) == (Fraction(23), Fraction(33))


def test_degree_two_closed_form_agrees():
    counts = CountSet.from_geometry()
    assert degree_two_closed_form(counts, Fraction(24)) == Fraction(32)
    rep = solve_three_point_invariants(counts, counts.J12)
    assert degree_two_closed_form(counts, rep.j11) == rep.j2


def test_spectral_report(ring):
    rep = spectral_report(ring)
    assert str(rep["char_poly"]) == "-16*q^2*X^2 - 44*q*X^4 + X^6"
    assert rep["only_even_powers"] is True
    assert rep["quadratic_in_Xsq"] == "T^2 + (-44) T + (-16)"
    assert rep["squarefree_profile"] == {1: 4, 2: 1}
    assert rep["kernel_dimension"] == 2
    assert rep["rank"] == 4
    assert rep["roots_at_q1"] == "22 +- 10 sqrt(5)"
    assert rep["roots_verified"] is True
    assert rep["discriminant_at_q1"] == Fraction(2000)
    assert rep["constant_term_at_q1"] == Fraction(-16)


def test_kernel_basis_exact(ring):
    rep = kernel_basis(ring)
    assert rep["dimension"] == 2
    assert rep["independent"] and rep["killed"] and rep["spans_nullspace"]
    alpha = [str(e) for e in rep["alpha"]]
    beta = [str(e) for e in rep["beta"]]
    # alpha = 2 s2 - 3 s11 - 2q s0, beta = s31 - 2q s2 - 4q^2 s0
    assert alpha == ["-2*q", "0", "2", "-3", "0", "0"]
    assert beta == ["-4*q^2", "0", "-2*q", "0", "0", "1"]
    for vec in (rep["alpha"], rep["beta"]):
        image = ring.star_h(list(vec))
        assert all(e.is_zero() for e in image)


def test_presentation_report(ring):
    rep = presentation_report(ring)
    assert rep["relations_vanish"] == {"R1": True, "R2": True, "R3": True}
    assert rep["monomial_basis_ok"] is True
    assert rep["quotient_rank"] == 6
    assert rep["word_map_bijective"] is True
    assert rep["word_map_multiplicative"] is True
    assert rep["minimal_polynomial_ok"] is True
    assert rep["standard_monomials"] == [
        (0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (1, 0)]
    assert rep["necessity"] == {
        "without R1": 10, "without R2": "infinite", "without R3": 6}


def test_r3_is_a_consequence_of_r1_r2():
    # R3 = (5 s11 + 2 h^2 + 6 q) R1 - 5 h R2 in the free graded ring
    ctx = VarContext(("q", "s11", "h"), (2, 2, 1))
    qv, sv, hv = ctx.var("q"), ctx.var("s11"), ctx.var("h")
    r1 = 5 * hv * sv - 2 * hv ** 3 + 14 * qv * hv
    r2 = (5 * sv ** 2 + 20 * qv * sv - hv ** 4 + 12 * qv * hv ** 2
          + 20 * qv ** 2)
    r3 = hv ** 5 - 44 * qv * hv ** 3 - 16 * qv ** 2 * hv
    combo = (5 * sv + 2 * hv ** 2 + 6 * qv) * r1 - 5 * hv * r2
    assert r3 - combo == ctx.zero()


def test_perturbed_ring_breaks_only_associativity(ring):
    bad = perturbed_ring(ring)
    assert associativity_failures(bad) != []
    assert classical_limit_failures(bad) == []


def test_random_identity_sampling(ring):
    import random
    from gmquantum.certificates import random_identity_failures
    rng = random.Random(7)
    assert random_identity_failures(ring, rng, 10) == []
