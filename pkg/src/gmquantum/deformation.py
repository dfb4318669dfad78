"""First order deformation of the quantum product along the extra direction.

The deformed Euler operator acts on the six ambient classes by the matrix

    K = 2 * (h-matrix) + t * D,

where column b of D reweights each q^d layer of s2 * e_b by a factor of
2d - 1 (so the classical layer d = 0 enters with sign -1).  Everything
lives over the truncated ring Q[q, t]/(t^2) with deg q = 2, deg t = -1,
which keeps every entry homogeneous of degree deg(col) - deg(row) + 1.

On the 22 primitive middle classes the operator is, by the model axioms
encoded in HodgeModel, the scalar -4qt; the full operator on all 28 even
classes is therefore block diagonal.  `atom_statistics` certifies the
Jordan structure of the eigenvalue -4qt of multiplicity 24: its
generalized eigenspace E, the rank of the restriction (one, a single
size-two block, living over the ambient block), and the overlap of E
with the tagged slots of the model.  `irrationality_criterion` checks
the spectral condition on the undeformed operator: every eigenvalue
multiplicity on the ambient block is at most two while the model keeps a
nonzero (3, 1) slot.

Ranks away from t = 0 are taken over the fraction field Q(q, t) of the
recorded order-0/order-1 data; nothing is claimed beyond first order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .ambient import BASIS_DEGREES, BASIS_NAMES, DIM
from .linalg import (
    Matrix, RatFunc, block_diag, char_poly, mat_add, matmul, matvec,
    nullspace_field, poly_to_ratfunc, rank_checked, ratfunc_matrix,
    scalar_matrix, solve_field, squarefree_profile, up_div_exact, up_gcd,
    up_mul, yun_squarefree,
)
from .poly import MultiPoly, VarContext
from .quantum import QuantumRing, associativity_failures

AMBIENT = "ambient-6"
FULL = "full-28"
PRIMITIVE_DIM = 22
FULL_DIM = DIM + PRIMITIVE_DIM

RANK_SEED = 20260822


def truncated_context() -> VarContext:
    """Q[q, t]/(t^2) with deg q = 2 and deg t = -1."""
    return VarContext(("q", "t"), (2, -1), nilpotent={"t": 2})


@dataclass(frozen=True, eq=False)
class TruncatedOperator:
    """Matrix over Q[q, t]/(t^2) together with its basis tag."""

    matrix: Matrix
    basis: str
    ctx: VarContext

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.matrix[i, j]

    def at_t_zero(self) -> Matrix:
        return self.matrix.map(lambda e: e.coefficient_of("t", 0))


def _degrees(basis: str) -> Tuple[int, ...]:
    if basis == AMBIENT:
        return BASIS_DEGREES
    # primitive slots all sit in the middle cohomology
    return BASIS_DEGREES + (2,) * PRIMITIVE_DIM


def homogeneity_failures(op: TruncatedOperator) -> List[Tuple[int, int]]:
    """Entries not homogeneous of degree deg(col) - deg(row) + 1."""
    degs = _degrees(op.basis)
    bad = []
    for i in range(op.dim):
        for j in range(op.dim):
            e = op.matrix[i, j]
            if not e.is_zero() and not e.is_homogeneous(degs[j] - degs[i] + 1):
                bad.append((i, j))
    return bad


def specialization_failures(op: TruncatedOperator,
                            ring: QuantumRing) -> List[Tuple[int, int]]:
    """Ambient entries whose t = 0 part differs from twice the h-matrix."""
    if op.basis != AMBIENT:
        raise ValueError("specialization check expects the ambient operator")
    bad = []
    for i in range(DIM):
        for j in range(DIM):
            want = _embed(ring.h_matrix[i, j] * 2, op.ctx)
            if op.matrix[i, j].coefficient_of("t", 0) != want:
                bad.append((i, j))
    return bad


def _embed(p: MultiPoly, tctx: VarContext) -> MultiPoly:
    return p.substitute({}, tctx)


def build_deformed_matrix(ring: QuantumRing) -> TruncatedOperator:
    """Ambient matrix of the deformed Euler operator 2h - t s2.

    The q^d t coefficient of the action on e_b is 2d - 1 times the q^d
    layer of s2 * e_b; the t-free part is twice the h-matrix.
    """
    if ring.ctx.names != ("q",):
        raise ValueError("the deformation takes a ring over Q[q] alone")
    if associativity_failures(ring):
        raise ValueError("the product table must be associative")
    tctx = truncated_context()
    s2 = ring.basis_element("s2")
    rows = [[tctx.zero()] * DIM for _ in range(DIM)]
    for j, name in enumerate(BASIS_NAMES):
        prod = ring.star(s2, ring.basis_element(name))
        for i in range(DIM):
            entry = _embed(ring.h_matrix[i, j] * 2, tctx)
            correction = {}
            for exp, coeff in prod[i].terms.items():
                d = exp[0]
                correction[(d, 1)] = Fraction(2 * d - 1) * coeff
            rows[i][j] = entry + MultiPoly(tctx, correction)
    return TruncatedOperator(Matrix(rows), AMBIENT, tctx)


# ---------------------------------------------------------------------------
# the Jordan pair on the ambient block
# ---------------------------------------------------------------------------


def eigenvalue(tctx: VarContext) -> MultiPoly:
    """-4qt, the repeated eigenvalue of the deformed operator."""
    return tctx.var("q") * tctx.var("t") * Fraction(-4)


def jordan_pair(tctx: VarContext) -> Tuple[List[MultiPoly], List[MultiPoly]]:
    """The vectors alpha and beta(t) spanning the size-two block.

    alpha = 2 s2 - 3 s11 - 2q s0 and beta(t) is the kernel vector
    s31 - 2q s2 - 4q^2 s0 corrected at order t by -16q^2 t s1 - 4qt s3.
    """
    q = tctx.var("q")
    t = tctx.var("t")
    zero = tctx.zero()
    alpha = [q * (-2), zero, tctx.scalar(2), tctx.scalar(-3), zero, zero]
    beta = [q * q * (-4), q * q * t * (-16), q * (-2), zero,
            q * t * (-4), tctx.one()]
    return alpha, beta


@dataclass(frozen=True, eq=False)
class JordanPairReport:
    ok: bool
    residual_alpha: Tuple[MultiPoly, ...]
    residual_beta: Tuple[MultiPoly, ...]
    alpha_classical_kernel: bool

    def __bool__(self) -> bool:
        return self.ok


def verify_jordan_pair(op: TruncatedOperator) -> JordanPairReport:
    """Check K alpha = -4qt alpha - t beta(t) and K beta = -4qt beta mod t^2."""
    if op.basis != AMBIENT:
        raise ValueError("the Jordan pair lives on the ambient operator")
    tctx = op.ctx
    t = tctx.var("t")
    lam = eigenvalue(tctx)
    alpha, beta = jordan_pair(tctx)
    ka = matvec(op.matrix, alpha)
    kb = matvec(op.matrix, beta)
    res_a = tuple(x - (lam * a - t * b) for x, a, b in zip(ka, alpha, beta))
    res_b = tuple(x - lam * b for x, b in zip(kb, beta))
    classical = all(x.coefficient_of("t", 0).is_zero() for x in ka)
    ok = all(r.is_zero() for r in res_a) and all(r.is_zero() for r in res_b)
    return JordanPairReport(ok, res_a, res_b, classical)


# ---------------------------------------------------------------------------
# the 28 dimensional model
# ---------------------------------------------------------------------------


ALLOWED_TAGS = ((3, 1), (2, 2), (1, 3))


@dataclass(frozen=True)
class HodgeModel:
    """Tags for the 22 primitive middle slots next to the 6 ambient ones."""

    primitive_tags: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if len(self.primitive_tags) != PRIMITIVE_DIM:
            raise ValueError("expected %d primitive slots" % PRIMITIVE_DIM)
        for tag in self.primitive_tags:
            if tag not in ALLOWED_TAGS:
                raise ValueError("unknown slot tag %r" % (tag,))

    @classmethod
    def standard(cls) -> "HodgeModel":
        tags = ((3, 1),) + ((2, 2),) * 20 + ((1, 3),)
        return cls(tags)

    def h31(self) -> int:
        return sum(1 for tag in self.primitive_tags if tag == (3, 1))

    def rows_with_tag(self, tag) -> Tuple[int, ...]:
        """Row indices of the tagged slots inside the 28 dimensional basis."""
        return tuple(DIM + i for i, x in enumerate(self.primitive_tags)
                     if x == tag)

    def matches_diamond(self) -> bool:
        counts = {tag: 0 for tag in ALLOWED_TAGS}
        for tag in self.primitive_tags:
            counts[tag] += 1
        return counts == {(3, 1): 1, (2, 2): 20, (1, 3): 1}

    def without_h31(self) -> "HodgeModel":
        """Control model with the (3, 1) slot retagged; breaks the criterion."""
        tags = tuple((2, 2) if tag == (3, 1) else tag
                     for tag in self.primitive_tags)
        return HodgeModel(tags)


def assemble_full_operator(op: TruncatedOperator,
                           model: HodgeModel) -> TruncatedOperator:
    """Block diagonal operator on all 28 classes.

    The primitive block is the scalar -4qt (a model axiom; at t = 0 the
    hyperplane annihilates every primitive class, and the first order
    term is the stated scalar).  No ambient/primitive mixing occurs.
    """
    if op.basis != AMBIENT:
        raise ValueError("expected the ambient operator")
    lam = eigenvalue(op.ctx)
    prim = scalar_matrix(PRIMITIVE_DIM, lam)
    full = block_diag([op.matrix, prim])
    return TruncatedOperator(full, FULL, op.ctx)


# ---------------------------------------------------------------------------
# Jordan statistics of the repeated eigenvalue
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AtomStatistics:
    """Computed invariants of the multiplicity 24 eigenvalue -4qt."""

    lambda0: MultiPoly
    nu: int
    nu_prime: int
    gamma: int
    rho: int
    details: Dict[str, object]


def _up_lcm(a: List[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    b = list(b)
    g = up_gcd(a, b)
    return up_mul(up_div_exact(a, g), b)


def _column_to_polys(order0: Sequence[RatFunc], order1: Sequence[RatFunc],
                     plain: VarContext) -> List[MultiPoly]:
    """One basis column cleared of denominators, as plain Q[q, t] vectors."""
    den = [Fraction(1)]
    for r in list(order0) + list(order1):
        den = _up_lcm(den, r.den)
    out = []
    for r0, r1 in zip(order0, order1):
        terms = {}
        if r0:
            for k, c in enumerate(up_mul(list(r0.num),
                                         up_div_exact(den, list(r0.den)))):
                if c:
                    terms[(k, 0)] = Fraction(c)
        if r1:
            for k, c in enumerate(up_mul(list(r1.num),
                                         up_div_exact(den, list(r1.den)))):
                if c:
                    terms[(k, 1)] = Fraction(c)
        out.append(MultiPoly(plain, terms))
    return out


def _columns_matrix(cols: Sequence[Sequence[MultiPoly]]) -> Matrix:
    return Matrix([[cols[j][i] for j in range(len(cols))]
                   for i in range(len(cols[0]))])


def _drop_rows(m: Matrix, rows: Sequence[int]) -> Matrix:
    keep = [i for i in range(m.nrows) if i not in set(rows)]
    return Matrix([m.rows[i] for i in keep])


def atom_statistics(op: TruncatedOperator, model: HodgeModel) -> AtomStatistics:
    """Certify the Jordan data of the eigenvalue -4qt on the full operator.

    The generalized eigenspace E is found at order zero over Q(q) and
    lifted to first order by linear solving; dimensions and ranks away
    from t = 0 are taken over Q(q, t) on the lifted representatives.
    """
    if op.basis != FULL:
        raise ValueError("expected the full 28 dimensional operator")
    tctx = op.ctx
    plain = tctx.without_truncation()
    lam = eigenvalue(tctx)
    n = op.dim
    shifted = Matrix([[op.matrix[i, j] - (lam if i == j else tctx.zero())
                       for j in range(n)] for i in range(n)])

    # multiplicity through the shifted characteristic of the ambient block:
    # Y^0 and Y^1 coefficients vanish identically, Y^2 survives at t = 0,
    # so the ambient block carries the eigenvalue exactly twice and the
    # scalar primitive block adds twenty two
    amb = Matrix([[shifted[i, j] for j in range(DIM)] for i in range(DIM)])
    hpoly = char_poly(amb, var="Y")
    h0 = hpoly.coefficient_of("Y", 0)
    h1 = hpoly.coefficient_of("Y", 1)
    h2 = hpoly.coefficient_of("Y", 2)
    if not (h0.is_zero() and h1.is_zero()):
        raise ValueError("eigenvalue multiplicity is not 24")
    if h2.coefficient_of("t", 0).is_zero():
        raise ValueError("eigenvalue multiplicity is not 24")
    multiplicity = 2 + PRIMITIVE_DIM

    # the four moving eigenvalue branches stay simple at t = 0
    cof0 = [hpoly.coefficient_of("Y", k).coefficient_of("t", 0)
            for k in range(2, 7)]
    cof_rf = [poly_to_ratfunc(c, "q") if not c.is_zero() else RatFunc.zero()
              for c in cof0]
    cofactor_profile = squarefree_profile(cof_rf)

    # order zero eigenspace over Q(q), then the first order lift:
    # (N0 + tN1)^2 kills e + tf iff N0^2 e = 0 and
    # N0^2 f = -(N0 N1 + N1 N0) e
    n0 = shifted.map(lambda e: e.coefficient_of("t", 0))
    n1 = shifted.map(lambda e: e.coefficient_of("t", 1))
    sq_rf = ratfunc_matrix(matmul(n0, n0), "q")
    cross_rf = ratfunc_matrix(mat_add(matmul(n0, n1), matmul(n1, n0)), "q")
    order0 = nullspace_field(sq_rf, RatFunc.one())
    columns = []
    for e in order0:
        rhs = [-x for x in matvec(cross_rf, e)]
        f = solve_field(sq_rf, rhs)
        if f is None:
            raise ValueError("first order lift of the eigenspace is obstructed")
        columns.append(_column_to_polys(e, f, plain))

    # exact check: (K - lambda)^2 annihilates every lifted column mod t^2
    squares_vanish = True
    images = []
    for col in columns:
        v = [c.substitute({}, tctx) for c in col]
        w = matvec(shifted, v)
        if any(not c.is_zero() for c in matvec(shifted, w)):
            squares_vanish = False
        images.append([c.substitute({}, plain) for c in w])
    if not squares_vanish:
        raise ValueError("lifted basis escapes the generalized eigenspace")

    rng = random.Random(RANK_SEED)
    basis = _columns_matrix(columns)
    e_dim = rank_checked(basis, rng)
    if e_dim != multiplicity:
        raise ValueError("eigenvalue multiplicity is not 24")

    image_mat = _columns_matrix(images)
    gamma = rank_checked(image_mat, rng)

    # image structure: contained in the ambient slots, on the beta line
    # (t beta(t) agrees with t times the t = 0 part of beta modulo t^2)
    image_in_ambient = all(image_mat[i, j].is_zero()
                           for i in range(DIM, n)
                           for j in range(image_mat.ncols))
    _, beta = jordan_pair(tctx)
    beta_plain = [b.coefficient_of("t", 0).substitute({}, plain) for b in beta]
    beta_full = beta_plain + [plain.zero()] * PRIMITIVE_DIM
    on_beta_line = True
    for j in range(image_mat.ncols):
        col = [image_mat[i, j] for i in range(n)]
        if all(c.is_zero() for c in col):
            continue
        span = Matrix([[col[i], beta_full[i]] for i in range(n)])
        if rank_checked(span, rng) != 1:
            on_beta_line = False

    # kernel of the restriction: the primitive slots and the beta line
    beta_trunc = [b for b in beta] + [tctx.zero()] * PRIMITIVE_DIM
    beta_killed = all(c.is_zero() for c in matvec(shifted, beta_trunc))
    alpha, _ = jordan_pair(tctx)
    alpha_trunc = [a for a in alpha] + [tctx.zero()] * PRIMITIVE_DIM
    alpha_moves = any(not c.is_zero() for c in matvec(shifted, alpha_trunc))
    primitive_killed = sum(
        1 for j in range(len(columns))
        if all(columns[j][i].is_zero() for i in range(DIM))
        and all(image_mat[i, j].is_zero() for i in range(n)))

    # overlaps of E with the coordinate subspaces of the model
    rho = e_dim - rank_checked(_drop_rows(basis, range(DIM)), rng)
    h2_rows = model.rows_with_tag((3, 1))
    if h2_rows:
        nu = e_dim - rank_checked(_drop_rows(basis, h2_rows), rng)
    else:
        nu = 0
    # odd cohomology is absent, so the second overlap is empty
    nu_prime = 0

    details = {
        "multiplicity": multiplicity,
        "e_dimension": e_dim,
        "kernel_in_e_dimension": e_dim - gamma,
        "size_two_blocks": gamma,
        "image_in_ambient": image_in_ambient,
        "image_on_beta_line": on_beta_line,
        "beta_in_kernel": beta_killed,
        "alpha_has_nonzero_image": alpha_moves,
        "primitive_columns_killed": primitive_killed,
        "ambient_kernel_dim_t0": DIM - rank_checked(
            Matrix([[n0[i, j].substitute({}, plain) for j in range(DIM)]
                    for i in range(DIM)]), rng),
        "ambient_char_low_coeffs_vanish": True,
        "cofactor_squarefree_profile_t0": cofactor_profile,
    }
    return AtomStatistics(lam, nu, nu_prime, gamma, rho, details)


# ---------------------------------------------------------------------------
# the spectral criterion on the undeformed operator
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CriterionReport:
    satisfied: bool
    max_multiplicity: int
    zero_multiplicity: int
    simple_nonzero: int
    h31: int
    profile: Dict[int, int]
    notes: Tuple[str, ...]


def _char_coeffs(m: Matrix) -> List[RatFunc]:
    cp = char_poly(m, var="X")
    if "q" in cp.ctx.index:
        coeffs = []
        for k in range(cp.max_power("X") + 1):
            ck = cp.coefficient_of("X", k)
            coeffs.append(poly_to_ratfunc(ck, "q") if not ck.is_zero()
                          else RatFunc.zero())
        return coeffs
    return [RatFunc.from_fraction(cp.coefficient_of("X", k).scalar_value())
            for k in range(cp.max_power("X") + 1)]


def irrationality_criterion(m: Matrix, model: HodgeModel) -> CriterionReport:
    """Spectral test on the ambient block of twice the hyperplane action.

    Satisfied when no eigenvalue multiplicity on the six Hodge classes
    exceeds two and the model keeps a nonzero (3, 1) slot.  For the
    verified operator the spectrum is four simple nonzero branches plus
    a two dimensional kernel.
    """
    coeffs = _char_coeffs(m)
    factors = yun_squarefree(coeffs)
    profile = {mult: len(fac) - 1 for mult, fac in factors}
    max_mult = max(profile) if profile else 0
    zero_mult = next((k for k, c in enumerate(coeffs) if c), len(coeffs) - 1)
    simple_nonzero = 0
    for mult, fac in factors:
        if mult == 1:
            deg = len(fac) - 1
            simple_nonzero = deg - (1 if not fac[0] else 0)
    h31 = model.h31()
    notes = ["eigenvalue multiplicity profile %r" % (profile,),
             "zero eigenvalue multiplicity %d" % zero_mult,
             "%d simple nonzero eigenvalues" % simple_nonzero]
    satisfied = True
    if max_mult > 2:
        satisfied = False
        notes.append("an eigenvalue has multiplicity %d > 2" % max_mult)
    if h31 == 0:
        satisfied = False
        notes.append("the model has no (3, 1) slot")
    if satisfied:
        notes.append("multiplicities at most two with a (3, 1) class present")
    return CriterionReport(satisfied, max_mult, zero_mult, simple_nonzero,
                           h31, profile, tuple(notes))
