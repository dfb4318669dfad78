"""Integration on bundle towers against independent oracles.

The tower engine is the workhorse behind every curve count, so it is
checked three ways: against Schubert calculus over a point base, against
closed form Chern identities from formal roots, and against hand
computed intersection numbers on the small bases used by the counts.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gmquantum.poly import VarContext
from gmquantum.schubert import Grassmannian2
from gmquantum.towers import (
    BaseSub, Dual, G24Base, ProjBase, Sym2, TautSub, Tower, Trivial,
    Wedge2, bundle_sum, chern_of, line_bundle, segre_of,
    symmetric_in_elementaries, twist,
)


def theta_tower():
    return Tower(ProjBase([("h", 1)]),
                 [("proj", bundle_sum(Trivial(2), line_bundle({"h": -2})),
                   "l")])


def gamma_tower():
    return Tower(ProjBase([("h", 1)]),
                 [("proj", bundle_sum(line_bundle({"h": 1}), Trivial(3)),
                   "H")])


# ---------------------------------------------------------------------------
# Grassmann bundle over a point against Schubert calculus
# ---------------------------------------------------------------------------


def test_point_base_grass_bundle_matches_schubert_everywhere():
    tower = Tower(ProjBase([]),
                  [("grass2", Trivial(4), ("H", "A", "Hp", "Ap"))])
    g = Grassmannian2(4)
    H, A = tower.var("H"), tower.var("A")
    for i in range(5):
        for j in range(3):
            if i + 2 * j > 4:
                continue
            got = tower.integrate(H ** i * A ** j)
            cls = g.power(g.sigma(1), i)
            for _ in range(j):
                cls = g.multiply(g.sigma(1, 1), cls)
            assert got == g.integrate(cls), (i, j)


def test_point_base_quotient_variables():
    tower = Tower(ProjBase([]),
                  [("grass2", Trivial(4), ("H", "A", "Hp", "Ap"))])
    # the quotient side carries the dual classes
    assert tower.integrate(tower.var("Hp") ** 4) == 2
    assert tower.integrate(tower.var("Ap") ** 2) == 1
    assert tower.integrate(tower.var("H") ** 2 * tower.var("Ap")) == 1
    rep = tower.presentation_report()
    assert rep == {"quotient_rank": 6, "top_degree_rank": 1,
                   "point_integral": Fraction(1)}


# ---------------------------------------------------------------------------
# the bases used by the curve counts
# ---------------------------------------------------------------------------


def test_gamma_tower_integrals():
    gamma = gamma_tower()
    h, H = gamma.var("h"), gamma.var("H")
    assert gamma.dim == 4
    assert gamma.integrate(h * H ** 3) == 1
    assert gamma.integrate(H ** 4) == -1
    assert gamma.presentation_report() == {
        "quotient_rank": 8, "top_degree_rank": 1,
        "point_integral": Fraction(1)}


def test_theta_tower_integrals():
    theta = theta_tower()
    h, l = theta.var("h"), theta.var("l")
    assert theta.integrate(h * l ** 2) == 1
    assert theta.integrate(l ** 3) == 2


def test_g24_base_del_pezzo_degree():
    tower = Tower(G24Base())
    a1 = tower.var("a1")
    assert tower.integrate(a1 ** 4) == 2
    assert tower.presentation_report() == {
        "quotient_rank": 6, "top_degree_rank": 1,
        "point_integral": Fraction(1)}


def test_product_base_lines_through_point():
    tower = Tower(ProjBase([("h", 1), ("H", 2)]))
    h, H = tower.var("h"), tower.var("H")
    assert tower.integrate(2 * (h + H) ** 3) == 6


# ---------------------------------------------------------------------------
# sheaf expressions against hand expansions
# ---------------------------------------------------------------------------


def test_gamma_sheaf_classes():
    gamma = gamma_tower()
    h, H = gamma.var("h"), gamma.var("H")
    u2 = bundle_sum(line_bundle({"h": -1}), TautSub(0))
    rank, c = chern_of(u2, gamma)
    assert rank == 2
    assert c[1] == -(h + H)
    s = segre_of(u2, gamma, 2)
    assert s[2] == gamma.normal_form(H ** 2 + h * H)
    integrand = 2 * c[1] ** 2 * (s[2] + c[1] ** 2)
    assert gamma.integrate(integrand) == 10


def test_theta_sheaf_classes():
    theta = theta_tower()
    h, l = theta.var("h"), theta.var("l")
    l2 = bundle_sum(Trivial(1), line_bundle({"h": -1}))
    rank, c = chern_of(Sym2(Dual(l2)), theta)
    assert rank == 3
    assert c[1] == 3 * h


def test_g24_restriction_integrand():
    tower = Tower(G24Base())
    a1, a2 = tower.var("a1"), tower.var("a2")
    rank, c = chern_of(BaseSub(), tower)
    s = segre_of(BaseSub(), tower, 2)
    integrand = s[2] + c[1] ** 2
    assert tower.normal_form(integrand) == \
        tower.normal_form(2 * a1 ** 2 - a2)
    assert tower.integrate(integrand * a1 ** 2) == 3


def test_sigma_tower_j12_classes():
    sigma = Tower(ProjBase([("h", 1)]),
                  [("grass2", bundle_sum(line_bundle({"h": 1}), Trivial(3)),
                    ("H", "al", "Hp", "alp"))])
    h, H, al = sigma.var("h"), sigma.var("H"), sigma.var("al")
    assert sigma.dim == 5
    assert sigma.integrate(al ** 2 * h) == 1
    assert sigma.integrate(al ** 2 * H) == -1
    assert sigma.integrate(al * h * H ** 2) == 1
    pl = Dual(twist(TautSub(0), {"h": -1}))
    rank, c = chern_of(pl, sigma)
    assert rank == 2
    assert c[2] == sigma.normal_form(al + h * H)
    rank3, c3 = chern_of(Sym2(pl), sigma)
    assert rank3 == 3
    assert c3[3] == sigma.normal_form(4 * h * H ** 2 + 8 * al * h
                                      + 4 * al * H)
    assert sigma.integrate(c[2] * c3[3]) == 12


# ---------------------------------------------------------------------------
# splitting principle oracle: Sym2 and Wedge2 from formal roots
# ---------------------------------------------------------------------------


line_coeffs = st.tuples(st.integers(-2, 2), st.integers(-2, 2))


@settings(max_examples=25, deadline=None)
@given(st.lists(line_coeffs, min_size=2, max_size=3))
def test_sym2_wedge2_match_formal_roots(pairs):
    theta = theta_tower()
    h, l = theta.var("h"), theta.var("l")
    roots = [a * h + b * l for a, b in pairs]
    bundle = bundle_sum(*[line_bundle({"h": a, "l": b}) for a, b in pairs])
    r = len(pairs)

    rank_s, c_sym = chern_of(Sym2(bundle), theta)
    assert rank_s == r * (r + 1) // 2
    oracle = theta.ctx.one()
    for i in range(r):
        for j in range(i, r):
            oracle = oracle * (1 + roots[i] + roots[j])
    for k in range(len(c_sym)):
        assert c_sym[k] == theta.normal_form(oracle.graded_part(k)), k

    rank_w, c_wedge = chern_of(Wedge2(bundle), theta)
    assert rank_w == r * (r - 1) // 2
    oracle = theta.ctx.one()
    for i in range(r):
        for j in range(i + 1, r):
            oracle = oracle * (1 + roots[i] + roots[j])
    for k in range(len(c_wedge)):
        assert c_wedge[k] == theta.normal_form(oracle.graded_part(k)), k


def test_sym2_closed_form_rank2():
    # c3(Sym2 of a rank 2 bundle) = 4 c1 c2
    sigma = Tower(ProjBase([("h", 1)]),
                  [("grass2", bundle_sum(line_bundle({"h": 1}), Trivial(3)),
                    ("H", "al", "Hp", "alp"))])
    pl = Dual(twist(TautSub(0), {"h": -1}))
    _, c = chern_of(pl, sigma)
    _, c3 = chern_of(Sym2(pl), sigma)
    assert c3[3] == sigma.normal_form(4 * c[1] * c[2])


def test_wedge2_determinant_lines():
    gamma = gamma_tower()
    u2 = bundle_sum(line_bundle({"h": -1}), TautSub(0))
    rank, cw = chern_of(Wedge2(u2), gamma)
    _, cu = chern_of(u2, gamma)
    assert rank == 1 and cw[1] == cu[1]
    theta = theta_tower()
    e3 = bundle_sum(Trivial(1), line_bundle({"h": -1}),
                    line_bundle({"h": -2}))
    rank, cw3 = chern_of(Wedge2(e3), theta)
    assert rank == 3
    assert cw3[1] == theta.normal_form(-6 * theta.var("h"))
    rank_s, _ = chern_of(Sym2(e3), theta)
    assert rank_s == 6


def test_symmetric_in_elementaries():
    ctx = VarContext(("x1", "x2"), (1, 1))
    x1, x2 = ctx.var("x1"), ctx.var("x2")
    p = (x1 + x2) ** 2 - 4 * x1 * x2
    q = symmetric_in_elementaries(p, 2)
    e_ctx = q.ctx
    e1, e2 = e_ctx.var("e1"), e_ctx.var("e2")
    assert q == e1 ** 2 - 4 * e2
    with pytest.raises(ValueError):
        symmetric_in_elementaries(x1, 2)


# ---------------------------------------------------------------------------
# error contracts and tracing
# ---------------------------------------------------------------------------


def test_twist_rank_cap():
    gamma = gamma_tower()
    with pytest.raises(ValueError):
        chern_of(twist(Trivial(4), {"h": 1}), gamma)


def test_grass2_stage_needs_rank_four():
    with pytest.raises(ValueError):
        Tower(ProjBase([("h", 1)]),
              [("grass2", Trivial(5), ("a", "b", "c", "d"))])


def test_integrate_records_stage_trace():
    sigma = Tower(ProjBase([("h", 1)]),
                  [("grass2", bundle_sum(line_bundle({"h": 1}), Trivial(3)),
                    ("H", "al", "Hp", "alp"))])
    trace = []
    val = sigma.integrate(sigma.var("al") ** 2 * sigma.var("h"), trace=trace)
    assert val == 1
    assert len(trace) == 2
    assert all(isinstance(line, str) and line for line in trace)
