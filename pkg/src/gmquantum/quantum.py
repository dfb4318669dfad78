"""Small quantum cohomology of the degree 10 fourfold on its even lattice.

Elements are vectors over Q[q] (deg q = 2) in the basis (s0, s1, s2, s11,
s3, s31).  The product is determined by the classical cup product, the
two point counts I11, I12, I13, I2, and the three point counts J11, J12, J2
attached to sigma_11:

* multiplication by h = s1 comes from the divisor axiom,
      h * b = h cup b + sum_d d q^d <b, e_k>_d dual(e_k),
* s11 * s11 = s31 + q (J11 dual(s2) + J12 dual(s11)) + J2 q^2,
* every other product follows by associativity chains through the h
  column: s2 = h*h - s11 - I11 q, 2 s3 = h*s11 - I13 q s1, and
  s31 = h*s3 - (I12-I13) q s2 - (2 I13-I12) q s11 - 2 I2 q^2.

The chains only ever divide by the integers 2 and 3, so the whole table
is affine in any symbolic unknowns fed in for J11 and J2; that is what
`solve_three_point_invariants` exploits to pin both from associativity.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .ambient import AmbientRing, BASIS_DEGREES, BASIS_NAMES, DIM
from .groebner import PolyIdeal
from .linalg import (
    Matrix, RatFunc, char_poly, matmul, matvec, nullspace_field,
    poly_to_ratfunc, rank_checked, rank_field, solve_field,
    squarefree_profile, univariate_over_ratfunc,
)
from .poly import MultiPoly, VarContext
from .gwcounts import CountSet

QVec = Tuple[MultiPoly, ...]


def quantum_context(extra: Sequence[str] = ()) -> VarContext:
    """Q[q] with deg q = 2, extended by degree 0 unknowns if asked."""
    return VarContext(("q",) + tuple(extra), (2,) + (0,) * len(extra))


def _lift(vec: Sequence[Fraction], ctx: VarContext) -> QVec:
    return tuple(ctx.scalar(Fraction(v)) for v in vec)


def _vadd(x: QVec, y: QVec) -> QVec:
    return tuple(a + b for a, b in zip(x, y))


def _vsub(x: QVec, y: QVec) -> QVec:
    return tuple(a - b for a, b in zip(x, y))


def _vscale(c, x: QVec) -> QVec:
    return tuple(a * c for a in x)


def _vzero(ctx: VarContext) -> QVec:
    return tuple(ctx.zero() for _ in range(DIM))


def _is_zero_vec(x: QVec) -> bool:
    return all(c.is_zero() for c in x)


def two_point_table(counts: CountSet) -> Dict[Tuple[str, str, int], Fraction]:
    """All nonzero <a, b>_d on basis classes, for d = 1, 2.

    The normalization <sigma, dual> used for the counts halves the raw
    pairings, hence the factors of two.
    """
    data = {
        ("s1", "s31", 1): 2 * counts.I11,
        ("s2", "s3", 1): 2 * counts.I12,
        ("s11", "s3", 1): 2 * counts.I13,
        ("s3", "s31", 2): 2 * counts.I2,
    }
    for (a, b, d), v in list(data.items()):
        data[(b, a, d)] = v
    return data


def star_h_matrix(counts: CountSet, amb: AmbientRing,
                  ctx: VarContext) -> Matrix:
    """The matrix of h * (-) on the basis; column j is h * e_j."""
    twopt = two_point_table(counts)
    duals = amb.dual_basis()
    q = ctx.var("q")
    h = amb.basis_vector("s1")
    cols = []
    for j, bname in enumerate(BASIS_NAMES):
        col = list(_lift(amb.cup(h, amb.basis_vector(bname)), ctx))
        for d in (1, 2):
            qd = q ** d * d
            for k, ename in enumerate(BASIS_NAMES):
                val = twopt.get((bname, ename, d))
                if val is None:
                    continue
                term = _vscale(qd * val, _lift(duals[k], ctx))
                col = [a + b for a, b in zip(col, term)]
        cols.append(col)
    return Matrix([[cols[j][i] for j in range(DIM)] for i in range(DIM)])


def sigma11_square(j11, j12, j2, amb: AmbientRing, ctx: VarContext) -> QVec:
    """s11 * s11 from the three point counts."""
    duals = amb.dual_basis()
    q = ctx.var("q")
    out = list(_lift(amb.cup(amb.basis_vector("s11"), amb.basis_vector("s11")),
                     ctx))
    for val, name in ((j11, "s2"), (j12, "s11")):
        term = _vscale(q * val, _lift(duals[BASIS_NAMES.index(name)], ctx))
        out = [a + b for a, b in zip(out, term)]
    # d = 2 insertion is the point class, dual(s31) = s0 / 2, and the
    # count against 2 pt doubles: net coefficient j2 on s0
    out[0] = out[0] + q * q * j2
    return tuple(out)


class QuantumRing:
    """The even quantum lattice with its full multiplication table."""

    def __init__(self, counts: CountSet, j11, j12, j2,
                 ctx: Optional[VarContext] = None):
        self.counts = counts
        self.amb = AmbientRing()
        self.ctx = ctx if ctx is not None else quantum_context()
        self.h_matrix = star_h_matrix(counts, self.amb, self.ctx)
        j11 = self._coerce(j11)
        j12 = self._coerce(j12)
        j2 = self._coerce(j2)
        self.three_point = (j11, j12, j2)
        self.table = self._build_table(j11, j12, j2)

    def _coerce(self, v) -> MultiPoly:
        if isinstance(v, MultiPoly):
            if v.ctx != self.ctx:
                return v.substitute({}, self.ctx)
            return v
        return self.ctx.scalar(Fraction(v))

    # -- elements ---------------------------------------------------------

    def zero(self) -> QVec:
        return _vzero(self.ctx)

    def scalar(self, v) -> MultiPoly:
        return self._coerce(v)

    def basis_element(self, name: str) -> QVec:
        i = BASIS_NAMES.index(name)
        return tuple(self.ctx.one() if k == i else self.ctx.zero()
                     for k in range(DIM))

    def element(self, coeffs: Dict[str, object]) -> QVec:
        out = list(self.zero())
        for name, c in coeffs.items():
            out[BASIS_NAMES.index(name)] = self._coerce(c)
        return tuple(out)

    # -- products ---------------------------------------------------------

    def star_h(self, x: QVec) -> QVec:
        return tuple(matvec(self.h_matrix, list(x)))

    def _build_table(self, j11, j12, j2) -> Dict[Tuple[int, int], QVec]:
        c = self.counts
        ctx = self.ctx
        q = ctx.var("q")
        idx = {n: i for i, n in enumerate(BASIS_NAMES)}
        t: Dict[Tuple[int, int], QVec] = {}

        def put(a, b, vec):
            i, j = idx[a], idx[b]
            t[(min(i, j), max(i, j))] = tuple(vec)

        def get(a, b):
            i, j = idx[a], idx[b]
            return t[(min(i, j), max(i, j))]

        def col(name):
            j = idx[name]
            return tuple(self.h_matrix.rows[i][j] for i in range(DIM))

        for j, name in enumerate(BASIS_NAMES):
            put("s0", name, self.basis_element(name))
            put("s1", name, col(name))
        put("s11", "s11", sigma11_square(j11, j12, j2, self.amb, ctx))
        # (h*h) * s11 = s2*s11 + s11*s11 + I11 q s11
        put("s2", "s11", _vsub(_vsub(self.star_h(get("s1", "s11")),
                                     get("s11", "s11")),
                               _vscale(q * c.I11, self.basis_element("s11"))))
        put("s2", "s2", _vsub(_vsub(self.star_h(get("s1", "s2")),
                                    get("s2", "s11")),
                              _vscale(q * c.I11, self.basis_element("s2"))))
        # h*s11 = 2 s3 + I13 q s1, so 2 s3*x = h*(s11*x) - I13 q s1*x
        for name in ("s2", "s11"):
            via = _vsub(self.star_h(get("s11", name)),
                        _vscale(q * c.I13, get("s1", name)))
            put("s3", name, _vscale(Fraction(1, 2), via))
        # h*s2 = 3 s3 + I12 q s1, so 3 s3*s3 = h*(s2*s3) - I12 q s1*s3
        via = _vsub(self.star_h(get("s2", "s3")),
                    _vscale(q * c.I12, get("s1", "s3")))
        put("s3", "s3", _vscale(Fraction(1, 3), via))
        # s31 = h*s3 - (I12-I13) q s2 - (2 I13-I12) q s11 - 2 I2 q^2
        for name in ("s2", "s11", "s3", "s31"):
            if name == "s31":
                s3x = get("s3", "s31")
            else:
                s3x = get("s3", name)
            vec = self.star_h(s3x)
            vec = _vsub(vec, _vscale(q * (c.I12 - c.I13), get("s2", name)))
            vec = _vsub(vec, _vscale(q * (2 * c.I13 - c.I12), get("s11", name)))
            vec = _vsub(vec, _vscale(q * q * (2 * c.I2),
                                     self.basis_element(name)))
            put("s31", name, vec)
        return t

    def star(self, x: QVec, y: QVec) -> QVec:
        out = list(self.zero())
        for i in range(DIM):
            if x[i].is_zero():
                continue
            for j in range(DIM):
                if y[j].is_zero():
                    continue
                entry = self.table[(min(i, j), max(i, j))]
                coeff = x[i] * y[j]
                for k in range(DIM):
                    out[k] = out[k] + coeff * entry[k]
        return tuple(out)

    def power(self, x: QVec, n: int) -> QVec:
        out = self.basis_element("s0")
        for _ in range(n):
            out = self.star(out, x)
        return out

    def pairing(self, x: QVec, y: QVec) -> MultiPoly:
        gram = self.amb.gram()
        out = self.ctx.zero()
        for i in range(DIM):
            if x[i].is_zero():
                continue
            for j in range(DIM):
                g = gram.rows[i][j]
                if not g or y[j].is_zero():
                    continue
                out = out + x[i] * y[j] * g
        return out

    def format(self, x: QVec) -> str:
        parts = []
        for name, c in zip(BASIS_NAMES, x):
            if c.is_zero():
                continue
            cs = str(c)
            if cs == "1":
                parts.append(name)
            elif any(op in cs for op in (" + ", " - ")):
                parts.append("(%s)*%s" % (cs, name))
            else:
                parts.append("%s*%s" % (cs, name))
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# table level checks
# ---------------------------------------------------------------------------


def grading_failures(ring: QuantumRing) -> List[str]:
    """Entries whose components are not homogeneous of the right degree."""
    bad = []
    for (i, j), vec in sorted(ring.table.items()):
        want = BASIS_DEGREES[i] + BASIS_DEGREES[j]
        for k in range(DIM):
            comp = vec[k]
            if comp.is_zero():
                continue
            if not comp.is_homogeneous(want - BASIS_DEGREES[k]):
                bad.append("%s*%s component %s" %
                           (BASIS_NAMES[i], BASIS_NAMES[j], BASIS_NAMES[k]))
    return bad


def associativity_failures(ring: QuantumRing) -> List[Tuple[str, str, str]]:
    """All unordered basis triples where (a*b)*c differs from a*(b*c)."""
    bad = []
    for i in range(DIM):
        for j in range(i, DIM):
            for k in range(j, DIM):
                a = ring.basis_element(BASIS_NAMES[i])
                b = ring.basis_element(BASIS_NAMES[j])
                c = ring.basis_element(BASIS_NAMES[k])
                lhs = ring.star(ring.star(a, b), c)
                rhs = ring.star(a, ring.star(b, c))
                if not _is_zero_vec(_vsub(lhs, rhs)):
                    bad.append((BASIS_NAMES[i], BASIS_NAMES[j],
                                BASIS_NAMES[k]))
    return bad


def frobenius_failures(ring: QuantumRing) -> List[Tuple[str, str, str]]:
    """Triples where <a*b, c> differs from <a, b*c>."""
    bad = []
    for i in range(DIM):
        for j in range(DIM):
            for k in range(DIM):
                a = ring.basis_element(BASIS_NAMES[i])
                b = ring.basis_element(BASIS_NAMES[j])
                c = ring.basis_element(BASIS_NAMES[k])
                lhs = ring.pairing(ring.star(a, b), c)
                rhs = ring.pairing(a, ring.star(b, c))
                if not (lhs - rhs).is_zero():
                    bad.append((BASIS_NAMES[i], BASIS_NAMES[j],
                                BASIS_NAMES[k]))
    return bad


def classical_limit_failures(ring: QuantumRing) -> List[str]:
    """Products whose q = 0 specialization differs from the cup product."""
    bad = []
    for (i, j), vec in sorted(ring.table.items()):
        cup = ring.amb.cup(ring.amb.basis_vector(BASIS_NAMES[i]),
                           ring.amb.basis_vector(BASIS_NAMES[j]))
        for k in range(DIM):
            if vec[k].coefficient_of("q", 0) != ring.ctx.scalar(cup[k]):
                bad.append("%s*%s component %s" %
                           (BASIS_NAMES[i], BASIS_NAMES[j], BASIS_NAMES[k]))
                break
    return bad


def perturbed_ring(ring: QuantumRing) -> QuantumRing:
    """Same data with s11*s11 shifted by q^2 s0; must break associativity."""
    clone = QuantumRing(ring.counts, *ring.three_point, ctx=ring.ctx)
    i = BASIS_NAMES.index("s11")
    entry = list(clone.table[(i, i)])
    entry[0] = entry[0] + clone.ctx.var("q") ** 2
    clone.table[(i, i)] = tuple(entry)
    return clone


# ---------------------------------------------------------------------------
# solving for the three point invariants
# ---------------------------------------------------------------------------


@dataclass
class SolveReport:
    j11: Fraction
    j2: Fraction
    equations: int
    rank: int
    residuals_checked: int


def _route_residuals(ring: QuantumRing) -> List[MultiPoly]:
    """Cross checks of the two chains defining s3 * x.

    Each product s3 * x can be reached through the s11 chain (as stored)
    or through the s2 chain 3 s3*x = h*(s2*x) - I12 q s1*x; the difference
    must vanish and is affine in any symbolic unknowns.
    """
    c = ring.counts
    q = ring.ctx.var("q")
    out = []
    for name in ("s2", "s11", "s3", "s31"):
        x = ring.basis_element(name)
        s3x = ring.star(ring.basis_element("s3"), x)
        via = _vsub(ring.star_h(ring.star(ring.basis_element("s2"), x)),
                    _vscale(q * c.I12, ring.star(ring.basis_element("s1"), x)))
        diff = _vsub(_vscale(Fraction(3), s3x), via)
        out.extend(diff)
    return out


def _affine_split(p: MultiPoly, unknowns: Sequence[str]):
    """Coefficient rows of an affine polynomial, or None if not affine.

    Returns {q_exponent: (constant, coeff_u1, coeff_u2, ...)}.
    """
    ctx = p.ctx
    pos = [ctx.index[u] for u in unknowns]
    qpos = ctx.index["q"]
    rows: Dict[int, List[Fraction]] = {}
    for exp, coeff in p.terms.items():
        udeg = sum(exp[i] for i in pos)
        if udeg > 1:
            return None
        row = rows.setdefault(exp[qpos], [Fraction(0)] * (1 + len(pos)))
        if udeg == 0:
            row[0] += coeff
        else:
            which = next(n for n, i in enumerate(pos) if exp[i])
            row[1 + which] += coeff
    return rows


def solve_three_point_invariants(counts: CountSet, j12,
                                 verify: bool = True) -> SolveReport:
    """Determine J11 and J2 from associativity, given the geometric J12.

    Builds the table with symbolic unknowns in place of J11 and J2,
    collects the affine route residuals plus Frobenius residuals, solves
    the resulting exact linear system, and (optionally) substitutes the
    solution back into every associativity triple.
    """
    unknowns = ("uJ11", "uJ2")
    ctx = quantum_context(unknowns)
    ring = QuantumRing(counts, ctx.var("uJ11"), j12, ctx.var("uJ2"), ctx=ctx)
    residuals = list(_route_residuals(ring))
    for i in range(DIM):
        for j in range(i, DIM):
            for k in range(j, DIM):
                a = ring.basis_element(BASIS_NAMES[i])
                b = ring.basis_element(BASIS_NAMES[j])
                c = ring.basis_element(BASIS_NAMES[k])
                residuals.append(ring.pairing(ring.star(a, b), c) -
                                 ring.pairing(a, ring.star(b, c)))
    rows = []
    rhs = []
    for r in residuals:
        if r.is_zero():
            continue
        split = _affine_split(r, unknowns)
        if split is None:
            continue
        for _, row in sorted(split.items()):
            rows.append([row[1], row[2]])
            rhs.append(-row[0])
    if not rows:
        raise ValueError("no usable equations for the three point unknowns")
    a = Matrix(rows)
    rank = rank_field(a.map(Fraction))
    if rank < 2:
        raise ValueError("associativity does not pin both unknowns")
    sol = None
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            sub = Matrix([rows[i], rows[j]])
            if rank_field(sub) == 2:
                sol = solve_field(sub, [rhs[i], rhs[j]])
                break
        if sol is not None:
            break
    if sol is None:
        raise ValueError("associativity equations are degenerate")
    j11, j2 = sol
    # every equation must agree, not just the two used
    for row, b in zip(rows, rhs):
        if row[0] * j11 + row[1] * j2 != b:
            raise ValueError("inconsistent associativity system")
    checked = 0
    if verify:
        final = QuantumRing(counts, j11, j12, j2)
        bad = associativity_failures(final)
        if bad:
            raise ValueError("solved table still fails associativity: %r" % bad)
        checked = len(list(final.table))
    return SolveReport(j11=j11, j2=j2, equations=len(rows), rank=rank,
                       residuals_checked=checked)


def degree_two_closed_form(counts: CountSet, j11) -> Fraction:
    """J2 as a closed expression in the two point counts and J11."""
    i11, i12, i13, i2 = counts.I11, counts.I12, counts.I13, counts.I2
    return (i11 * (2 * i13 - i12)
            + Fraction(1, 5) * (2 * i12 - 3 * i13)
            * (2 * i12 + 9 * i13 - Fraction(5, 2) * j11)
            + Fraction(6, 5) * i2)


def standard_ring() -> QuantumRing:
    """The ring with every invariant computed from geometry."""
    counts = CountSet.from_geometry()
    report = solve_three_point_invariants(counts, counts.J12)
    if report.j11 != counts.J11:
        raise ValueError("associativity J11 disagrees with the derived value")
    return QuantumRing(counts, counts.J11, counts.J12, report.j2)


# ---------------------------------------------------------------------------
# spectral data of the h action
# ---------------------------------------------------------------------------


def _surd_is_root(b, c, r0, r1, d) -> bool:
    """Whether r0 + r1 sqrt(d) solves x^2 + b x + c = 0 over Q."""
    rat = r0 * r0 + d * r1 * r1 + b * r0 + c
    irr = 2 * r0 * r1 + b * r1
    return rat == 0 and irr == 0


def spectral_report(ring: QuantumRing) -> Dict[str, object]:
    """Characteristic polynomial of h * (-) and its eigenvalue structure."""
    mh = ring.h_matrix
    cp = char_poly(mh, var="X", var_degree=1)
    xctx = cp.ctx
    # cp = X^2 (X^4 + a q X^2 + b q^2): extract the even quadratic in T = X^2
    coeffs = {}
    for k in range(7):
        c = cp.coefficient_of("X", k)
        if not c.is_zero():
            coeffs[k] = c
    even = sorted(coeffs) == [2, 4, 6]
    a_poly = coeffs.get(4)
    b_poly = coeffs.get(2)
    qv = Fraction(1)
    a_val = sum(c for c in (a_poly.terms.values() if a_poly else [])) if a_poly else Fraction(0)
    b_val = sum(c for c in (b_poly.terms.values() if b_poly else [])) if b_poly else Fraction(0)
    # at q = 1 the quadratic is T^2 + a T + b
    disc = a_val * a_val - 4 * b_val
    rk = rank_checked(mh, random.Random(20260822))
    profile = squarefree_profile(
        univariate_over_ratfunc(cp, "X", "q"))
    report = {
        "char_poly": str(cp),
        "only_even_powers": even,
        "quadratic_in_Xsq": "T^2 + (%s) T + (%s)" % (a_val, b_val),
        "discriminant_at_q1": disc,
        "constant_term_at_q1": b_val,
        "rank": rk,
        "kernel_dimension": DIM - rk,
        "squarefree_profile": profile,
    }
    # eigenvalues at q = 1: 0 twice plus the four square roots of the
    # two roots of T^2 + a T + b; exact check for a surd pair r0 +- r1 sqrt(d)
    r0 = -a_val / 2
    d_num = disc
    # write disc = r1^2 * d with d squarefree-ish small; scan small d
    found = None
    if d_num > 0:
        for d in range(2, 200):
            r = _rational_sqrt(d_num / d)
            if r is not None:
                found = (d, r / 2)
                break
    if found:
        d, r1 = found
        ok = (_surd_is_root(a_val, b_val, r0, r1, d)
              and _surd_is_root(a_val, b_val, r0, -r1, d))
        report["roots_at_q1"] = "%s +- %s sqrt(%d)" % (r0, r1, d)
        report["roots_verified"] = ok
    return report


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


# ---------------------------------------------------------------------------
# kernel of the h action
# ---------------------------------------------------------------------------


def kernel_basis(ring: QuantumRing) -> Dict[str, object]:
    """The closed form kernel vectors of h * (-) and their span checks."""
    ctx = ring.ctx
    q = ctx.var("q")
    alpha = ring.element({"s2": 2, "s11": -3})
    alpha = tuple(a - b for a, b in
                  zip(alpha, _vscale(2 * q, ring.basis_element("s0"))))
    beta = ring.element({"s31": 1})
    beta = _vsub(beta, _vscale(2 * q, ring.basis_element("s2")))
    beta = _vsub(beta, _vscale(4 * q * q, ring.basis_element("s0")))
    killed = (_is_zero_vec(ring.star_h(alpha))
              and _is_zero_vec(ring.star_h(beta)))
    # independence and span agreement with the generic nullspace
    rmat = Matrix([[poly_to_ratfunc(c, "q") for c in alpha],
                   [poly_to_ratfunc(c, "q") for c in beta]])
    independent = rank_field(rmat) == 2
    mh_rat = Matrix([[poly_to_ratfunc(ring.h_matrix.rows[i][j], "q")
                      for j in range(DIM)] for i in range(DIM)])
    null = nullspace_field(mh_rat, RatFunc.one())
    spans = len(null) == 2
    for vec in null:
        stacked = Matrix(list(rmat.rows) + [list(vec)])
        if rank_field(stacked) != 2:
            spans = False
    return {
        "alpha": alpha,
        "beta": beta,
        "killed": killed,
        "independent": independent,
        "dimension": len(null),
        "spans_nullspace": spans,
    }


# ---------------------------------------------------------------------------
# ring presentation
# ---------------------------------------------------------------------------


def _relation_values(ring: QuantumRing) -> Dict[str, QVec]:
    """The three presentation relations evaluated through the star product."""
    q = ring.ctx.var("q")
    one = ring.basis_element("s0")
    h = ring.basis_element("s1")
    s11 = ring.basis_element("s11")
    h2 = ring.star(h, h)
    h3 = ring.star(h2, h)
    h4 = ring.star(h3, h)
    h5 = ring.star(h4, h)
    r1 = _vadd(_vsub(_vscale(Fraction(5), ring.star(h, s11)),
                     _vscale(Fraction(2), h3)),
               _vscale(14 * q, h))
    r2 = _vadd(_vsub(_vadd(_vscale(Fraction(5), ring.star(s11, s11)),
                           _vscale(20 * q, s11)),
                     h4),
               _vadd(_vscale(12 * q, h2), _vscale(20 * q * q, one)))
    r3 = _vsub(_vsub(h5, _vscale(44 * q, h3)), _vscale(16 * q * q, h))
    return {"R1": r1, "R2": r2, "R3": r3}


def _presentation_ideal():
    """(R1, R2, R3) inside Q(q)[s11, h] with deg s11 = 2, deg h = 1."""
    one = RatFunc.one()
    q = RatFunc.variable()
    ctx = VarContext(("s11", "h"), (2, 1), coeff_one=one)
    s11 = ctx.var("s11")
    h = ctx.var("h")
    r1 = 5 * h * s11 - 2 * h ** 3 + h * (q * 14)
    r2 = (5 * s11 ** 2 + s11 * (q * 20) - h ** 4 + h ** 2 * (q * 12)
          + ctx.one() * (q * q * 20))
    r3 = h ** 5 - h ** 3 * (q * 44) - h * (q * q * 16)
    return ctx, [r1, r2, r3]


def presentation_report(ring: QuantumRing) -> Dict[str, object]:
    """Relations hold, the quotient has rank 6, and the word map is a ring map."""
    rels = _relation_values(ring)
    vanish = {name: _is_zero_vec(vec) for name, vec in rels.items()}
    ctx, gens = _presentation_ideal()
    ideal = PolyIdeal(gens)
    sm = ideal.standard_monomials()
    expected = {(0, 0), (0, 1), (0, 2), (1, 0), (0, 3), (0, 4)}
    monomial_basis_ok = set(sm) == expected
    # word map: (i, j) exponent of (s11, h) goes to s11^i * h^j under star
    images: Dict[Tuple[int, int], QVec] = {}
    for exp in sm:
        i, j = exp
        vec = ring.basis_element("s0")
        for _ in range(i):
            vec = ring.star(vec, ring.basis_element("s11"))
        for _ in range(j):
            vec = ring.star(vec, ring.basis_element("s1"))
        images[exp] = vec

    def to_rat(vec: QVec):
        return [poly_to_ratfunc(c, "q") for c in vec]

    image_matrix = Matrix([to_rat(images[e]) for e in sm])
    bijective = rank_field(image_matrix) == DIM

    def image_of_nf(p) -> List[RatFunc]:
        out = [RatFunc.zero() for _ in range(DIM)]
        for exp, coeff in p.terms.items():
            vec = to_rat(images[exp])
            for k in range(DIM):
                out[k] = out[k] + coeff * vec[k]
        return out

    ring_map = True
    for gen_name in ("s11", "s1"):
        gvar = ctx.var("s11" if gen_name == "s11" else "h")
        gvec = ring.basis_element(gen_name)
        for exp in sm:
            prod_poly = ideal.reduce(gvar * ctx.monomial(exp, ctx.coeff_one))
            lhs = image_of_nf(prod_poly)
            rhs = to_rat(ring.star(gvec, images[exp]))
            if lhs != rhs:
                ring_map = False
    # minimal polynomial: M^5 = 44 q M^3 + 16 q^2 M
    mh = ring.h_matrix
    m2 = matmul(mh, mh)
    m3 = matmul(m2, mh)
    m5 = matmul(m3, m2)
    q = ring.ctx.var("q")
    resid = [[m5.rows[i][j] - q * 44 * m3.rows[i][j]
              - q * q * 16 * mh.rows[i][j]
              for j in range(DIM)] for i in range(DIM)]
    minimal_ok = all(c.is_zero() for row in resid for c in row)
    # no proper subset of the relations presents a rank 6 quotient
    necessity = {}
    for drop, keep in (("R3", (0, 1)), ("R2", (0, 2)), ("R1", (1, 2))):
        sub = PolyIdeal([gens[i] for i in keep])
        try:
            dim = sub.quotient_dimension()
        except ValueError:
            dim = None
        necessity["without " + drop] = "infinite" if dim is None else dim
    return {
        "relations_vanish": vanish,
        "standard_monomials": sorted(sm),
        "monomial_basis_ok": monomial_basis_ok,
        "quotient_rank": len(sm),
        "word_map_bijective": bijective,
        "word_map_multiplicative": ring_map,
        "minimal_polynomial_ok": minimal_ok,
        "necessity": necessity,
    }
