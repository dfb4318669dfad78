"""Exact linear algebra over rationals, rational functions, and polynomial rings.

Three layers share this module:

* dense univariate polynomial helpers over an arbitrary field of
  characteristic zero (lists of coefficients, low degree first), including
  Euclidean gcd and Yun's squarefree decomposition;
* `RatFunc`, the field of univariate rational functions over the rationals,
  normalized so the denominator is monic and coprime to the numerator;
* matrix routines split by what they assume of the entries: Gaussian
  elimination needs a field, Bareiss elimination needs an integral domain
  with exact division, and the subset cofactor expansion works over any
  commutative ring, truncated rings included.

Characteristic polynomials are returned as `MultiPoly` in the entry
context extended by the chosen variable, so homogeneity of the result can
be checked against the grading.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import MultiPoly, VarContext

# ---------------------------------------------------------------------------
# dense univariate helpers (generic field coefficients)
# ---------------------------------------------------------------------------


def up_trim(p: List) -> List:
    while p and not p[-1]:
        p.pop()
    return p


def up_deg(p: Sequence) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def up_add(a: Sequence, b: Sequence) -> List:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        if x is None:
            out.append(y)
        elif y is None:
            out.append(x)
        else:
            out.append(x + y)
    return up_trim(out)


def up_neg(a: Sequence) -> List:
    return [-x for x in a]


def up_sub(a: Sequence, b: Sequence) -> List:
    return up_add(a, up_neg(b))


def up_mul(a: Sequence, b: Sequence) -> List:
    if not a or not b:
        return []
    zero = a[0] - a[0]
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return up_trim(out)


def up_scale(a: Sequence, c) -> List:
    return up_trim([x * c for x in a])


def up_divmod(a: Sequence, b: Sequence) -> Tuple[List, List]:
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    r = list(a)
    up_trim(r)
    if len(r) < len(b):
        return [], r
    lc = b[-1]
    zero = lc - lc
    q = [zero] * (len(r) - len(b) + 1)
    while r and len(r) >= len(b):
        c = r[-1] / lc
        k = len(r) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            r[k + i] = r[k + i] - c * y
        up_trim(r)
    return up_trim(q), r


def up_div_exact(a: Sequence, b: Sequence) -> List:
    q, r = up_divmod(a, b)
    if r:
        raise ValueError("univariate division is not exact")
    return q


def up_monic(a: Sequence) -> List:
    if not a:
        return []
    lc = a[-1]
    return [x / lc for x in a]


def up_gcd(a: Sequence, b: Sequence) -> List:
    """Monic gcd by the Euclidean algorithm."""
    x = up_trim(list(a))
    y = up_trim(list(b))
    while y:
        _, r = up_divmod(x, y)
        x, y = y, r
    return up_monic(x)


def up_deriv(a: Sequence) -> List:
    return up_trim([a[i] * i for i in range(1, len(a))])


def up_eval(a: Sequence, x):
    total = None
    for c in reversed(a):
        total = c if total is None else total * x + c
    return total


def yun_squarefree(f: Sequence) -> List[Tuple[int, List]]:
    """Squarefree decomposition f = prod a_i^i (up to a constant), char 0.

    Returns [(multiplicity, monic factor)] with factors of degree >= 1,
    coprime in pairs, sorted by multiplicity.
    """
    f = up_trim(list(f))
    if up_deg(f) < 1:
        return []
    fp = up_deriv(f)
    d = up_gcd(f, fp)
    if up_deg(d) == 0:
        return [(1, up_monic(f))]
    out = []
    b = up_div_exact(f, d)
    c = up_div_exact(fp, d)
    w = up_sub(c, up_deriv(b))
    i = 1
    while up_deg(b) > 0:
        a = up_gcd(b, w)
        if up_deg(a) > 0:
            out.append((i, a))
        b = up_div_exact(b, a)
        c = up_div_exact(w, a) if w else []
        w = up_sub(c, up_deriv(b))
        i += 1
    out.sort(key=lambda t: t[0])
    return out


def squarefree_profile(f: Sequence) -> Dict[int, int]:
    """Map multiplicity -> total degree of the factor with that multiplicity."""
    return {mult: up_deg(fac) for mult, fac in yun_squarefree(f)}


# ---------------------------------------------------------------------------
# univariate rational functions over the rationals
# ---------------------------------------------------------------------------


class RatFunc:
    """Element of Q(x) for a single unnamed variable.

    Stored as coprime numerator and monic denominator, coefficients exact
    rationals, low degree first.  Printing uses the placeholder name 'q'
    because that is the only parameter this package takes fractions in.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = [Fraction(1)]
        n = up_trim([Fraction(c) for c in num])
        d = up_trim([Fraction(c) for c in den])
        if not d:
            raise ZeroDivisionError("rational function with zero denominator")
        if not n:
            self.num = ()
            self.den = (Fraction(1),)
            return
        g = up_gcd(n, d)
        if up_deg(g) > 0:
            n = up_div_exact(n, g)
            d = up_div_exact(d, g)
        lc = d[-1]
        n = [c / lc for c in n]
        d = [c / lc for c in d]
        self.num = tuple(n)
        self.den = tuple(d)

    @classmethod
    def from_fraction(cls, value) -> "RatFunc":
        return cls([Fraction(value)])

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls([])

    @classmethod
    def one(cls) -> "RatFunc":
        return cls([Fraction(1)])

    @classmethod
    def variable(cls) -> "RatFunc":
        return cls([Fraction(0), Fraction(1)])

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_fraction(other)
        return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = up_add(up_mul(list(self.num), list(o.den)),
                   up_mul(list(o.num), list(self.den)))
        return RatFunc(n, up_mul(list(self.den), list(o.den)))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(up_neg(list(self.num)), list(self.den))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(up_mul(list(self.num), list(o.num)),
                       up_mul(list(self.den), list(o.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(up_mul(list(self.num), list(o.den)),
                       up_mul(list(self.den), list(o.num)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc.one() / (self ** (-n))
        out = RatFunc.one()
        for _ in range(n):
            out = out * self
        return out

    def is_polynomial(self) -> bool:
        return up_deg(list(self.den)) == 0

    def constant_value(self) -> Fraction:
        if not self.num:
            return Fraction(0)
        if not self.is_polynomial() or up_deg(list(self.num)) > 0:
            raise ValueError("rational function is not constant: %s" % self)
        return self.num[0]

    def evaluate(self, x: Fraction) -> Fraction:
        d = up_eval(list(self.den), Fraction(x))
        if not d:
            raise ZeroDivisionError("pole at evaluation point")
        n = up_eval(list(self.num), Fraction(x)) if self.num else Fraction(0)
        return n / d

    def format(self, name: str = "q") -> str:
        def side(coeffs):
            parts = []
            for i, c in enumerate(coeffs):
                if not c:
                    continue
                if i == 0:
                    parts.append(str(c))
                elif i == 1:
                    parts.append("%s*%s" % (c, name) if c != 1 else name)
                else:
                    parts.append("%s*%s^%d" % (c, name, i) if c != 1 else "%s^%d" % (name, i))
            return " + ".join(parts).replace("+ -", "- ") if parts else "0"

        if not self.num:
            return "0"
        if self.is_polynomial():
            return side(self.num)
        return "(%s)/(%s)" % (side(self.num), side(self.den))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "RatFunc(%s)" % self


def poly_to_ratfunc(p: MultiPoly, name: str) -> RatFunc:
    """A polynomial involving only `name` becomes an element of Q(name)."""
    i = p.ctx.index[name]
    coeffs = [Fraction(0)] * (p.max_power(name) + 1)
    for exp, c in p.terms.items():
        if any(e for j, e in enumerate(exp) if j != i):
            raise ValueError("polynomial involves variables besides %r" % name)
        if not isinstance(c, Fraction):
            raise ValueError("coefficients must be rationals")
        coeffs[exp[i]] += c
    return RatFunc(coeffs)


def univariate_coeff_map(p: MultiPoly, main: str) -> Dict[int, MultiPoly]:
    """Coefficients of powers of `main`, as polynomials with `main` zeroed."""
    return {k: p.coefficient_of(main, k) for k in range(p.max_power(main) + 1)
            if not p.coefficient_of(main, k).is_zero()}


def univariate_over_ratfunc(p: MultiPoly, main: str, param: str) -> List[RatFunc]:
    """Dense coefficient list of p in `main`, coefficients in Q(param).

    p may involve only `main` and `param`.
    """
    out = []
    for k in range(p.max_power(main) + 1):
        ck = p.coefficient_of(main, k)
        out.append(poly_to_ratfunc(ck, param) if not ck.is_zero() else RatFunc.zero())
    return up_trim(out)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Rectangular dense matrix, entries of any consistent arithmetic type."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def copy_rows(self) -> List[List]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)])

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in row] for row in self.rows])

    def col(self, j: int) -> List:
        return [self.rows[i][j] for i in range(self.nrows)]

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.nrows, self.ncols)


def identity_matrix(n: int, one) -> Matrix:
    zero = one - one
    return Matrix([[one if i == j else zero for j in range(n)] for i in range(n)])


def scalar_matrix(n: int, value) -> Matrix:
    zero = value - value
    return Matrix([[value if i == j else zero for j in range(n)] for i in range(n)])


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise ValueError("inner dimensions differ")
    out = []
    for i in range(a.nrows):
        row = []
        for j in range(b.ncols):
            acc = None
            for k in range(a.ncols):
                term = a.rows[i][k] * b.rows[k][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return Matrix(out)


def matvec(a: Matrix, v: Sequence) -> List:
    if a.ncols != len(v):
        raise ValueError("dimension mismatch")
    out = []
    for i in range(a.nrows):
        acc = None
        for k in range(a.ncols):
            term = a.rows[i][k] * v[k]
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValueError("shape mismatch")
    return Matrix([[a.rows[i][j] + b.rows[i][j] for j in range(a.ncols)]
                   for i in range(a.nrows)])


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValueError("shape mismatch")
    return Matrix([[a.rows[i][j] - b.rows[i][j] for j in range(a.ncols)]
                   for i in range(a.nrows)])


def mat_scale(a: Matrix, c) -> Matrix:
    return Matrix([[x * c for x in row] for row in a.rows])


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    if not blocks:
        raise ValueError("no blocks")
    sample = blocks[0].rows[0][0]
    zero = sample - sample
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    rows = [[zero] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[r0 + i][c0 + j] = b.rows[i][j]
        r0 += b.nrows
        c0 += b.ncols
    return Matrix(rows)


def stack_rows(vectors: Sequence[Sequence]) -> Matrix:
    return Matrix([list(v) for v in vectors])


# -- field elimination ------------------------------------------------------


def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form over a field; returns (rref, pivot columns)."""
    rows = m.copy_rows()
    nr, nc = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(nc):
        pivot_row = None
        for i in range(r, nr):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return Matrix(rows), pivots


def rank_field(m: Matrix) -> int:
    return len(rref(m)[1])


def solve_field(a: Matrix, b: Sequence) -> Optional[List]:
    """One solution of a x = b over a field, or None if inconsistent.

    Free variables are set to zero.
    """
    if len(b) != a.nrows:
        raise ValueError("dimension mismatch")
    aug = Matrix([row + [bv] for row, bv in zip(a.copy_rows(), b)])
    red, pivots = rref(aug)
    if a.ncols in pivots:
        return None
    sample = a.rows[0][0]
    zero = sample - sample
    x = [zero] * a.ncols
    for i, c in enumerate(pivots):
        x[c] = red.rows[i][a.ncols]
    return x


def nullspace_field(m: Matrix, one) -> List[List]:
    """Basis of the right kernel over a field."""
    red, pivots = rref(m)
    zero = one - one
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * m.ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -red.rows[i][fc]
        basis.append(v)
    return basis


def inverse_field(m: Matrix, one) -> Matrix:
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    zero = one - one
    aug = Matrix([m.rows[i] + [one if j == i else zero for j in range(n)]
                  for i in range(n)])
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix([red.rows[i][n:] for i in range(n)])


# -- domain elimination (fraction free) -------------------------------------


def poly_exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact quotient a / b in a polynomial ring; raises if not divisible."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ctx = a.ctx
    if ctx.nilpotent:
        raise ValueError("exact division needs an untruncated ring")
    q = ctx.zero()
    r = a
    bexp, bc = b.leading()
    while not r.is_zero():
        rexp, rc = r.leading()
        if any(x < y for x, y in zip(rexp, bexp)):
            raise ValueError("polynomial division is not exact")
        mono = ctx.monomial(tuple(x - y for x, y in zip(rexp, bexp)), rc / bc)
        q = q + mono
        r = r - mono * b
    return q


def _exact_div(a, b):
    if isinstance(a, MultiPoly):
        if isinstance(b, MultiPoly):
            return poly_exact_div(a, b)
        return a * (Fraction(1) / b)
    return a / b


def det_bareiss(m: Matrix):
    """Determinant by fraction-free elimination; entries in an integral domain."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    a = m.copy_rows()
    sample = a[0][0]
    zero = sample - sample
    sign = 1
    prev = None
    for k in range(n - 1):
        pivot_row = None
        for i in range(k, n):
            if a[i][k]:
                pivot_row = i
                break
        if pivot_row is None:
            return zero
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else _exact_div(num, prev)
            a[i][k] = zero
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def rank_bareiss(m: Matrix) -> int:
    """Rank over the fraction field, by fraction-free elimination.

    Row and column swaps are both allowed, so any nonzero entry of the
    trailing block can serve as the pivot.
    """
    a = m.copy_rows()
    nr, nc = m.nrows, m.ncols
    sample = a[0][0]
    zero = sample - sample
    rank = 0
    prev = None
    for k in range(min(nr, nc)):
        pr = pc = None
        for i in range(k, nr):
            for j in range(k, nc):
                if a[i][j]:
                    pr, pc = i, j
                    break
            if pr is not None:
                break
        if pr is None:
            break
        if pr != k:
            a[k], a[pr] = a[pr], a[k]
        if pc != k:
            for row in a:
                row[k], row[pc] = row[pc], row[k]
        for i in range(k + 1, nr):
            for j in range(k + 1, nc):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else _exact_div(num, prev)
            a[i][k] = zero
        prev = a[k][k]
        rank += 1
    return rank


def rank_checked(m: Matrix, rng, samples: int = 3) -> int:
    """Symbolic rank with a random rational evaluation cross check.

    Entries must be MultiPoly over rational coefficients (or plain
    rationals).  Every evaluated rank must be <= the symbolic rank; the
    symbolic value is returned.
    """
    ctx = None
    for row in m.rows:
        for x in row:
            if isinstance(x, MultiPoly):
                ctx = x.ctx
                break
        if ctx:
            break
    if ctx is None:
        return rank_field(m.map(Fraction))
    symbolic = rank_bareiss(m)
    for _ in range(samples):
        values = {name: Fraction(rng.randint(1, 400), rng.randint(1, 40))
                  for name in ctx.names}
        num = m.map(lambda x: x.evaluate(values) if isinstance(x, MultiPoly)
                    else Fraction(x))
        ev = rank_field(num)
        if ev > symbolic:
            raise AssertionError("evaluated rank %d exceeds symbolic rank %d"
                                 % (ev, symbolic))
    return symbolic


# -- characteristic polynomials ---------------------------------------------


def _det_cofactor(rows: List[List[MultiPoly]], ctx: VarContext) -> MultiPoly:
    """Subset dynamic program over columns; any commutative ring."""
    n = len(rows)
    f = [None] * (1 << n)
    f[0] = ctx.one()
    for mask in range(1, 1 << n):
        r = bin(mask).count("1") - 1
        acc = ctx.zero()
        pos = 0
        for j in range(n):
            if not mask & (1 << j):
                continue
            sub = f[mask ^ (1 << j)]
            term = rows[r][j] * sub
            if (r + pos) % 2:
                acc = acc - term
            else:
                acc = acc + term
            pos += 1
        f[mask] = acc
    return f[(1 << n) - 1]


def char_poly(m: Matrix, var: str = "X", var_degree: int = 1,
              method: Optional[str] = None) -> MultiPoly:
    """det(var * I - m) as a MultiPoly in the entry context extended by var.

    `method` is 'cofactor' (any commutative ring, n <= 12) or 'bareiss'
    (integral domain entries, n <= 28); by default small matrices and
    truncated rings take the cofactor route, larger ones Bareiss.
    """
    if m.nrows != m.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    base = None
    for row in m.rows:
        for x in row:
            if isinstance(x, MultiPoly):
                base = x.ctx
                break
        if base:
            break
    if base is None:
        ext = VarContext((var,), (var_degree,))
    else:
        if var in base.index:
            raise ValueError("variable %r already used by the entries" % var)
        ext = base.extended((var,), (var_degree,))
    x = ext.var(var)

    def lift(entry):
        if isinstance(entry, MultiPoly):
            return entry.substitute({}, ext)
        return ext.scalar(entry)

    rows = [[(x - lift(m.rows[i][j])) if i == j else -lift(m.rows[i][j])
             for j in range(n)] for i in range(n)]
    if method is None:
        method = "cofactor" if (n <= 12 or ext.nilpotent) else "bareiss"
    if method == "cofactor":
        if n > 12:
            raise ValueError("cofactor expansion limited to 12 rows")
        return _det_cofactor(rows, ext)
    if method == "bareiss":
        if ext.nilpotent:
            raise ValueError("Bareiss elimination needs an integral domain")
        if n > 28:
            raise ValueError("Bareiss characteristic polynomial limited to 28 rows")
        return det_bareiss(Matrix(rows))
    raise ValueError("unknown method %r" % method)


def ratfunc_matrix(m: Matrix, name: str) -> Matrix:
    """Entries (polynomials in `name` alone) converted to Q(name)."""
    def conv(x):
        if isinstance(x, MultiPoly):
            return poly_to_ratfunc(x, name)
        return RatFunc.from_fraction(x)
    return m.map(conv)
