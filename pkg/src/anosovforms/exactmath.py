"""Exact rational arithmetic: polynomials, matrices, certified root counting.

Everything here works over Q with `fractions.Fraction` (always in lowest
terms, positive denominator) and never touches floating point.  The root
counting routines decide unit-circle and unit-disk membership exactly:

* real roots in an interval      -> Sturm sequences
* roots of modulus exactly one   -> gcd with the reciprocal polynomial plus
                                    the substitution Y = X + 1/X and a Sturm
                                    count of Y in (-2, 2)
* roots inside the unit disk     -> Schur-Cohn reduction with the
                                    self-inversive shortcut; the singular
                                    cases the reduction cannot see fall
                                    back to the argument principle, with
                                    the winding number computed exactly as
                                    a Cauchy index over a rational circle
                                    parameterization
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EndpointIsRoot, NonSquare, RootOnCircle, ZeroPolynomial

Rational = Fraction


def rat(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_to_str(x: Fraction) -> str:
    """Serialize as 'p/q', or 'p' when the denominator is one."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Univariate polynomial over Q, coefficients stored ascending.

    The zero polynomial has degree -1 and an empty coefficient tuple.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> Fraction:
        return self[0]

    # -- constructors

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial((0, 1))

    @staticmethod
    def from_roots(roots: Iterable) -> "Polynomial":
        p = Polynomial.one()
        for r in roots:
            p = p * Polynomial((-rat(r), 1))
        return p

    # -- ring operations

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(rat(other) * c for c in self.coeffs)
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        r = Polynomial.one()
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        den = _as_poly(other)
        if den.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(den.coeffs) + 1, 1)
        rem = list(self.coeffs)
        dd, dl = den.degree, den.leading
        while len(rem) - 1 >= dd:
            if rem[-1] == 0:
                rem.pop()
                continue
            shift = len(rem) - 1 - dd
            c = rem[-1] / dl
            q[shift] += c
            for i, dc in enumerate(den.coeffs):
                rem[shift + i] -= c * dc
            rem.pop()
        return Polynomial(q), Polynomial(rem)

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(rat_to_str(c))
            else:
                mono = "X" if i == 1 else f"X^{i}"
                terms.append(mono if c == 1 else f"{rat_to_str(c)}*{mono}")
        return "Polynomial(" + " + ".join(terms) + ")"

    # -- calculus and evaluation

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def eval(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, iv: "Interval") -> "Interval":
        acc = Interval.point(0)
        for c in reversed(self.coeffs):
            acc = acc.mul(iv).add(Interval.point(c))
        return acc

    def compose(self, other: "Polynomial") -> "Polynomial":
        acc = Polynomial.zero()
        for c in reversed(self.coeffs):
            acc = acc * other + Polynomial((c,))
        return acc

    def compose_mod(self, other: "Polynomial", modulus: "Polynomial") -> "Polynomial":
        acc = Polynomial.zero()
        for c in reversed(self.coeffs):
            acc = (acc * other + Polynomial((c,))) % modulus
        return acc

    # -- normal forms

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading
        return self if lead == 1 else Polynomial(c / lead for c in self.coeffs)

    def reciprocal(self) -> "Polynomial":
        """X^deg * p(1/X): the coefficient list reversed."""
        if self.is_zero:
            raise ZeroPolynomial("reciprocal of the zero polynomial")
        return Polynomial(reversed(self.coeffs))

    def squarefree_part(self) -> "Polynomial":
        if self.degree <= 0:
            return self.monic()
        return (self // poly_gcd(self, self.derivative())).monic()

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def shift_down(self, k: int) -> "Polynomial":
        """Divide by X^k; the dropped coefficients must vanish."""
        assert all(c == 0 for c in self.coeffs[:k])
        return Polynomial(self.coeffs[k:])


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial((x,))
    raise TypeError(f"cannot coerce {x!r} to Polynomial")


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd over Q; the zero polynomial when both inputs vanish."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return (g, s, t) with s*p + t*q = g = monic gcd(p, q)."""
    r0, r1 = p, q
    s0, s1 = Polynomial.one(), Polynomial.zero()
    t0, t1 = Polynomial.zero(), Polynomial.one()
    while not r1.is_zero:
        qu, re = divmod(r0, r1)
        r0, r1 = r1, re
        s0, s1 = s1, s0 - qu * s1
        t0, t1 = t1, t0 - qu * t1
    if r0.is_zero:
        return r0, s0, t0
    lead = r0.leading
    inv = 1 / lead
    return r0.monic(), s0 * inv, t0 * inv


# ---------------------------------------------------------------------------
# intervals with rational endpoints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", rat(self.lo))
        object.__setattr__(self, "hi", rat(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x) -> "Interval":
        x = rat(x)
        return Interval(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= rat(x) <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def disjoint(self, other: "Interval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def add(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def neg(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def sub(self, other: "Interval") -> "Interval":
        return self.add(other.neg())

    def mul(self, other: "Interval") -> "Interval":
        prods = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return Interval(min(prods), max(prods))

    def abs(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return self.neg()
        return Interval(Fraction(0), max(-self.lo, self.hi))

    def strictly_greater(self, x) -> bool:
        return self.lo > rat(x)

    def strictly_less(self, x) -> bool:
        return self.hi < rat(x)


# ---------------------------------------------------------------------------
# rational matrices
# ---------------------------------------------------------------------------


class RationalMatrix:
    """Dense matrix over Q.  Immutable; rows of equal length."""

    __slots__ = ("entries",)

    def __init__(self, rows: Iterable[Iterable]):
        ent = tuple(tuple(rat(x) for x in row) for row in rows)
        if ent and any(len(r) != len(ent[0]) for r in ent):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, *a):
        raise AttributeError("RationalMatrix is immutable")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries[ij[0]][ij[1]]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "RationalMatrix":
        return RationalMatrix([[Fraction(0)] * c for _ in range(r)])

    @staticmethod
    def diagonal(diag: Sequence) -> "RationalMatrix":
        n = len(diag)
        return RationalMatrix(
            [[rat(diag[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return RationalMatrix([[c * x for x in row] for row in self.entries])
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError("dimension mismatch in matrix product")
            ot = other.transpose().entries
            return RationalMatrix(
                [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.entries]
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __neg__(self) -> "RationalMatrix":
        return self * Fraction(-1)

    def __pow__(self, e: int) -> "RationalMatrix":
        if not self.is_square:
            raise NonSquare("matrix power needs a square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        r = RationalMatrix.identity(self.rows)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(rat_to_str(x) for x in row) for row in self.entries)
        return f"RationalMatrix[{body}]"

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.entries)) if self.entries else [])

    def apply(self, vec: Sequence) -> list:
        """Matrix times column vector; entries may be any ring elements
        that support multiplication by Fraction (field elements included)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.entries:
            acc = None
            for a, v in zip(row, vec):
                term = v * a
                acc = term if acc is None else acc + term
            out.append(acc)
        return out

    def trace(self) -> Fraction:
        if not self.is_square:
            raise NonSquare("trace needs a square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def det(self) -> Fraction:
        if not self.is_square:
            raise NonSquare("determinant needs a square matrix")
        m = [list(row) for row in self.entries]
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d
            d *= m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] * inv
                if f:
                    for k in range(c, n):
                        m[r][k] -= f * m[c][k]
        return d

    def inverse(self) -> "RationalMatrix":
        if not self.is_square:
            raise NonSquare("inverse needs a square matrix")
        n = self.rows
        m = [list(row) + [Fraction(i == j) for j in range(n)]
             for i, row in enumerate(self.entries)]
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[c], m[piv] = m[piv], m[c]
            inv = 1 / m[c][c]
            m[c] = [x * inv for x in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return RationalMatrix([row[n:] for row in m])

    def rref(self) -> tuple["RationalMatrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = [list(row) for row in self.entries]
        nrows, ncols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return RationalMatrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def charpoly(self) -> Polynomial:
        return charpoly(self)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self.entries[i][j] for j in col_idx] for i in row_idx])


# ---------------------------------------------------------------------------
# characteristic polynomial via exact Hessenberg reduction
# ---------------------------------------------------------------------------


def charpoly(m: RationalMatrix) -> Polynomial:
    """det(X*I - m), monic, computed by exact Hessenberg reduction.

    The similarity transform keeps everything in Q; the Hessenberg
    recurrence then yields the characteristic polynomial in O(n^3).
    """
    if not m.is_square:
        raise NonSquare(f"charpoly of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Polynomial.one()
    h = [list(row) for row in m.entries]

    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[j + 1], h[piv] = h[piv], h[j + 1]
            for row in h:
                row[j + 1], row[piv] = row[piv], row[j + 1]
        base = h[j + 1][j]
        for i in range(j + 2, n):
            if h[i][j] == 0:
                continue
            f = h[i][j] / base
            for k in range(n):
                h[i][k] -= f * h[j + 1][k]
            for r in range(n):
                h[r][j + 1] += f * h[r][i]

    # p_k = (X - h[k-1][k-1]) p_{k-1} - sum_m h[m-1][k-1] (prod subdiag) p_{m-1}
    ps = [Polynomial.one()]
    x = Polynomial.x()
    for k in range(1, n + 1):
        p = (x - Polynomial((h[k - 1][k - 1],))) * ps[k - 1]
        prod = Fraction(1)
        for mm in range(k - 1, 0, -1):
            prod *= h[mm][mm - 1]
            if h[mm - 1][k - 1] != 0 and prod != 0:
                p = p - (h[mm - 1][k - 1] * prod) * ps[mm - 1]
            if prod == 0:
                break
        ps.append(p)
    return ps[n]


def nullspace(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Canonical basis of the right kernel over Q.

    Basis vectors come from the reduced row echelon form: one vector per
    free column, with entry 1 at the free column.  Comparing kernels is
    therefore a bit-exact comparison of these lists.
    """
    r, pivots = m.rref()
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r.entries[i][f]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# certified root counting
# ---------------------------------------------------------------------------


def _sturm_chain(p: Polynomial) -> list[Polynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_changes(vals: Iterable[Fraction]) -> int:
    signs = [v > 0 for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: Polynomial, interval: tuple) -> int:
    """Number of distinct real roots of p in the open interval (a, b).

    p should be squarefree (divide by gcd(p, p') first); with repeated
    factors the count is still of distinct roots.  Raises EndpointIsRoot
    when p vanishes at an endpoint.
    """
    a, b = rat(interval[0]), rat(interval[1])
    if a > b:
        raise ValueError("empty interval")
    if p.is_zero:
        raise ZeroPolynomial("sturm_count of the zero polynomial")
    if p.eval(a) == 0 or p.eval(b) == 0:
        raise EndpointIsRoot(f"polynomial vanishes at an endpoint of ({a}, {b})")
    chain = _sturm_chain(p)
    va = _sign_changes(q.eval(a) for q in chain)
    vb = _sign_changes(q.eval(b) for q in chain)
    return va - vb


def _sturm_count_unbounded(p: Polynomial) -> int:
    """Distinct real roots on the whole line (signs taken at +-infinity)."""
    chain = _sturm_chain(p)
    at_pos = _sign_changes(q.leading for q in chain if not q.is_zero)
    at_neg = _sign_changes(
        q.leading * (-1) ** q.degree for q in chain if not q.is_zero
    )
    return at_neg - at_pos


def _strip_zero_roots(p: Polynomial) -> tuple[int, Polynomial]:
    k = 0
    while k <= p.degree and p[k] == 0:
        k += 1
    return k, p.shift_down(k)


def _chebyshev_contract(g: Polynomial) -> Polynomial:
    """For palindromic g of degree 2d, the h with g(X) = X^d h(X + 1/X)."""
    d2 = g.degree
    assert d2 % 2 == 0
    d = d2 // 2
    assert all(g[i] == g[d2 - i] for i in range(d + 1)), "not palindromic"
    # P_j(Y) = X^j + X^-j: P_0 = 2, P_1 = Y, P_{j+1} = Y P_j - P_{j-1}
    h = Polynomial((g[d],))
    pj_prev, pj = Polynomial((2,)), Polynomial.x()
    for j in range(1, d + 1):
        h = h + g[d + j] * pj
        pj_prev, pj = pj, Polynomial.x() * pj - pj_prev
    return h


def count_roots_on_unit_circle(p: Polynomial) -> int:
    """Distinct complex roots of p with modulus exactly 1.

    Tests X = 1 and X = -1 directly; the remaining candidates are roots of
    gcd(p, reciprocal(p)), whose self-inversive part contracts under
    Y = X + 1/X to a real polynomial whose roots in (-2, 2) correspond to
    conjugate pairs on the circle.
    """
    if p.is_zero:
        raise ZeroPolynomial("count_roots_on_unit_circle of the zero polynomial")
    q = p.squarefree_part()
    _, q = _strip_zero_roots(q)
    count = 0
    for r in (Fraction(1), Fraction(-1)):
        if q.eval(r) == 0:
            count += 1
            q = q // Polynomial((-r, 1))
    if q.degree <= 0:
        return count
    g = poly_gcd(q, q.reciprocal())
    if g.degree <= 0:
        return count
    h = _chebyshev_contract(g).squarefree_part()
    count += 2 * sturm_count(h, (Fraction(-2), Fraction(2)))
    return count


class _SchurDegenerate(Exception):
    pass


def _schur_inside(f: Polynomial) -> int:
    """Roots of f inside the unit disk, with multiplicity.

    Preconditions maintained by the caller: f(0) != 0 and f has no roots of
    modulus 1.  Each regular Schur step preserves the latter because
    |Tf| >= ||a0| - |an|| * |f| on the circle.
    """
    n = f.degree
    if n <= 0:
        return 0
    a0, an = f.constant, f.leading
    delta = a0 * a0 - an * an
    tf = a0 * f - an * f.reciprocal()
    if delta == 0:
        if tf.is_zero:
            # f is self-inversive: roots pair up as (mu, 1/mu), half inside
            return n // 2
        raise _SchurDegenerate
    if delta > 0:
        return _schur_inside(tf)
    return n - _schur_inside(tf)


def _cauchy_index(a: Polynomial, b: Polynomial) -> int:
    """Cauchy index of b/a over the whole real line via the signed
    remainder chain: jumps from -inf to +inf count +1."""
    chain = [a, b]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    at_pos = _sign_changes(q.leading for q in chain if not q.is_zero)
    at_neg = _sign_changes(
        q.leading * (-1) ** q.degree for q in chain if not q.is_zero
    )
    return at_neg - at_pos


def _winding_inside(f: Polynomial) -> int:
    """Roots inside the unit disk with multiplicity, by the argument
    principle: parameterize the circle as z(t) = ((1-t^2) + 2it)/(1+t^2),
    write (1+t^2)^n f(z(t)) = A(t) + i B(t) with real polynomials, and
    read the winding number off the Cauchy index of B/A.

    Has no degenerate cases: A and B share no real root when f has no root
    of modulus one, which the caller guarantees.
    """
    n = f.degree
    if n <= 0:
        return 0
    one_minus = Polynomial((1, 0, -1))
    two_t = Polynomial((0, 2))
    one_plus = Polynomial((1, 0, 1))
    pows_plus = [Polynomial.one()]
    for _ in range(n):
        pows_plus.append(pows_plus[-1] * one_plus)
    re_acc, im_acc = Polynomial.zero(), Polynomial.zero()
    re_pow, im_pow = Polynomial.one(), Polynomial.zero()
    for k, a in enumerate(f.coeffs):
        if a != 0:
            re_acc = re_acc + a * re_pow * pows_plus[n - k]
            im_acc = im_acc + a * im_pow * pows_plus[n - k]
        re_pow, im_pow = (
            re_pow * one_minus - im_pow * two_t,
            re_pow * two_t + im_pow * one_minus,
        )
    index = _cauchy_index(re_acc, im_acc)
    assert index % 2 == 0, "odd winding index over a closed curve"
    return -index // 2


def count_roots_inside_unit_disk(p: Polynomial) -> int:
    """Complex roots with modulus < 1, counted with multiplicity.

    Requires that no root lies on the unit circle (checked; RootOnCircle
    otherwise).  The Schur-Cohn reduction decides the regular and
    self-inversive cases; its singular case (|a0| = |an| with a nonzero
    transform, unavoidable for integer-like inputs) is decided by the exact
    argument-principle winding count instead.
    """
    if p.is_zero:
        raise ZeroPolynomial("count_roots_inside_unit_disk of the zero polynomial")
    if count_roots_on_unit_circle(p) != 0:
        raise RootOnCircle("polynomial has a root of modulus one")
    k, f = _strip_zero_roots(p)
    try:
        return k + _schur_inside(f)
    except _SchurDegenerate:
        return k + _winding_inside(f)


def count_real_roots(p: Polynomial) -> int:
    """Distinct real roots of p over the whole real line."""
    if p.is_zero:
        raise ZeroPolynomial("count_real_roots of the zero polynomial")
    return _sturm_count_unbounded(p.squarefree_part())
