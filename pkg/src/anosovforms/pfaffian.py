"""Pfaffian forms of 2-step algebras, the type-(4,2) classification,
Pell-equation automorphisms of binary quadratic forms, Scheuneman duality.

The Pfaffian is the combinatorial sum over perfect matchings, normalized so
the standard symplectic block matrix has Pfaffian +1.  The Pfaffian form of
a 2-step algebra with adapted basis is Pf of the generic skew pencil
sum_i Y_i J_{Z_i}, a homogeneous polynomial in the center coordinates; in
type (4,2) its discriminant modulo rational squares classifies the algebra
completely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import _fieldlinalg as fl
from .errors import (
    BadDiscriminant,
    BasisNotAdapted,
    DegeneratePfaffian,
    DoesNotPreserveW,
    JNotInjective,
    NotTwoStep,
    OddDimension,
    SolutionMismatch,
)
from .exactmath import Polynomial, RationalMatrix, rat, rat_to_str
from .liealg import LieAlgebra, LinearMap, is_automorphism, lower_central_series


# ---------------------------------------------------------------------------
# small multivariate polynomials (exponent-tuple dict)
# ---------------------------------------------------------------------------


class MultiPoly:
    """Polynomial in k variables over Q, as {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        object.__setattr__(self, "nvars", nvars)
        clean = {}
        for e, c in (terms or {}).items():
            c = rat(c)
            if c != 0:
                clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def constant(nvars: int, c) -> "MultiPoly":
        return MultiPoly(nvars, {(0,) * nvars: rat(c)})

    @staticmethod
    def variable(nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return MultiPoly(nvars, {tuple(e): Fraction(1)})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars,
                             {e: c * rat(other) for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.terms == other.terms \
            and self.nvars == other.nvars

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def substitute(self, values) -> Fraction:
        acc = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, p in zip(values, e):
                t *= rat(x) ** p
            acc += t
        return acc

    def compose_linear(self, matrix) -> "MultiPoly":
        """Substitute variables by the linear forms given by matrix columns:
        new variable vector v goes to matrix * v."""
        lin = []
        for i in range(self.nvars):
            row = MultiPoly(self.nvars)
            for j in range(self.nvars):
                c = rat(matrix[i][j])
                if c:
                    row = row + MultiPoly.variable(self.nvars, j) * c
            lin.append(row)
        out = MultiPoly(self.nvars)
        for e, c in self.terms.items():
            term = MultiPoly.constant(self.nvars, c)
            for i, p in enumerate(e):
                for _ in range(p):
                    term = term * lin[i]
            out = out + term
        return out

    def __repr__(self):
        if self.is_zero:
            return "MultiPoly(0)"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"Y{i+1}^{p}" if p > 1 else f"Y{i+1}"
                            for i, p in enumerate(e) if p)
            bits.append(f"{rat_to_str(c)}" + (f"*{mono}" if mono else ""))
        return "MultiPoly(" + " + ".join(bits) + ")"


# ---------------------------------------------------------------------------
# binary quadratic forms and Pell automorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryQuadraticForm:
    """h(X, Y) = a X^2 + b XY + c Y^2 over Q."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "b", rat(self.b))
        object.__setattr__(self, "c", rat(self.c))

    @property
    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c

    def evaluate(self, x, y) -> Fraction:
        x, y = rat(x), rat(y)
        return self.a * x * x + self.b * x * y + self.c * y * y

    def is_integer(self) -> bool:
        return all(v.denominator == 1 for v in (self.a, self.b, self.c))


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int


def solve_pell(d: int) -> PellSolution:
    """Fundamental solution of x^2 - d y^2 = 4 with smallest y >= 1,
    by ascending search."""
    if d <= 0 or math.isqrt(d) ** 2 == d:
        raise BadDiscriminant("need a positive nonsquare discriminant")
    y = 1
    while True:
        t = 4 + d * y * y
        s = math.isqrt(t)
        if s * s == t:
            return PellSolution(s, y)
        y += 1


def pell_automorphism(h: BinaryQuadraticForm, sol: PellSolution) -> RationalMatrix:
    """U(x, y) = [[(x - y b)/2, -c y], [a y, (x + y b)/2]], certified to
    have determinant one and to preserve h as a polynomial identity."""
    if not h.is_integer():
        raise BadDiscriminant("Pell automorphisms need integer coefficients")
    d = h.discriminant
    if sol.x * sol.x - d * sol.y * sol.y != 4:
        raise SolutionMismatch(
            f"({sol.x},{sol.y}) does not solve x^2 - {d} y^2 = 4"
        )
    x, y = Fraction(sol.x), Fraction(sol.y)
    u = RationalMatrix([
        [(x - y * h.b) / 2, -h.c * y],
        [h.a * y, (x + y * h.b) / 2],
    ])
    if u.det() != 1:
        raise SolutionMismatch("automorphism determinant is not one")
    if not form_preserved_by(h, u):
        raise SolutionMismatch("matrix does not preserve the form")
    if u.charpoly() != Polynomial([1, -sol.x, 1]):
        raise SolutionMismatch("characteristic polynomial is not X^2 - xX + 1")
    return u


def form_preserved_by(h: BinaryQuadraticForm, u: RationalMatrix) -> bool:
    """h(U v) = h(v) as a polynomial identity in the two coordinates."""
    p, q, r, s = u[0, 0], u[0, 1], u[1, 0], u[1, 1]
    # coefficients of h(p X + q Y, r X + s Y)
    a2 = h.a * p * p + h.b * p * r + h.c * r * r
    b2 = 2 * h.a * p * q + h.b * (p * s + q * r) + 2 * h.c * r * s
    c2 = h.a * q * q + h.b * q * s + h.c * s * s
    return (a2, b2, c2) == (h.a, h.b, h.c)


# ---------------------------------------------------------------------------
# J maps and Pfaffians
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkewMap:
    """Skew-symmetric matrix over the base field of its algebra."""

    matrix: tuple[tuple[object, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        for i in range(n):
            if len(self.matrix[i]) != n:
                raise ValueError("skew map must be square")
            for j in range(n):
                if not self.matrix[i][j] == -self.matrix[j][i]:
                    raise ValueError("matrix is not skew-symmetric")

    @property
    def size(self) -> int:
        return len(self.matrix)


def adapted_split(a: LieAlgebra) -> tuple[int, int]:
    """(n1, k) for a 2-step algebra whose basis is adapted: the first n1
    vectors span a complement of the center part gamma_2, the rest span
    gamma_2.  Abelian algebras count as the degenerate case k = 0.
    Raises NotTwoStep/BasisNotAdapted otherwise."""
    series, type_tuple, nclass = lower_central_series(a)
    if nclass > 2:
        raise NotTwoStep(f"nilpotency class is {nclass}")
    if nclass < 2:
        return a.dim, 0
    n1, k = type_tuple
    gamma2 = series[1]
    expected = [tuple(a.basis_vector(n1 + t)) for t in range(k)]
    if sorted(gamma2) != sorted(expected):
        raise BasisNotAdapted("gamma_2 is not spanned by the trailing basis vectors")
    for (i, j, t, _c) in a.brackets:
        if j >= n1 and not (i >= n1):
            raise BasisNotAdapted("bracket involves a center vector")
        if i >= n1:
            raise BasisNotAdapted("bracket involves a center vector")
        if t < n1:
            raise BasisNotAdapted("bracket lands outside the center part")
    return n1, k


def j_map(a: LieAlgebra, z: list) -> SkewMap:
    """J_Z with <J_Z X, Y> = <[X, Y], Z> in the adapted basis coordinates;
    the zero map when the algebra is abelian."""
    n1, k = adapted_split(a)
    if len(z) != k:
        raise ValueError("center coordinates must have length k")
    zero = a.zero_vector()[0]
    rows = [[zero for _ in range(n1)] for _ in range(n1)]
    for (i, j, t, c) in a.brackets:
        pairing = c * z[t - n1]
        rows[i][j] = rows[i][j] + pairing
        rows[j][i] = rows[j][i] - pairing
    return SkewMap(tuple(tuple(r) for r in rows))


def _matchings(indices: tuple[int, ...]):
    if not indices:
        yield ()
        return
    first, rest = indices[0], indices[1:]
    for idx, second in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for sub in _matchings(remaining):
            yield ((first, second),) + sub


def _matching_sign(pairs) -> int:
    perm = [x for pair in pairs for x in pair]
    sign = 1
    seen = [False] * len(perm)
    pos = {v: i for i, v in enumerate(sorted(perm))}
    arr = [pos[v] for v in perm]
    for start in range(len(arr)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = arr[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def pfaffian(s: SkewMap):
    """Combinatorial Pfaffian: sum over perfect matchings with signs.
    diag([[0,1],[-1,0]], ...) has Pfaffian +1."""
    n = s.size
    if n % 2 != 0:
        raise OddDimension("Pfaffian needs an even-size skew matrix")
    if n == 0:
        return Fraction(1)
    acc = None
    for pairs in _matchings(tuple(range(n))):
        term = None
        for (i, j) in pairs:
            e = s.matrix[i][j]
            term = e if term is None else term * e
        if _matching_sign(pairs) < 0:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def pfaffian_form(a: LieAlgebra) -> MultiPoly:
    """h(Y_1..Y_k) = Pf(sum_i Y_i J_{Z_i}), expanded exactly.  Homogeneous
    of degree n1/2 in the k center coordinates."""
    n1, k = adapted_split(a)
    if n1 % 2 != 0:
        raise OddDimension("Pfaffian form needs an even degree-1 block")
    zero = MultiPoly(k)
    rows = [[zero for _ in range(n1)] for _ in range(n1)]
    for (i, j, t, c) in a.brackets:
        term = MultiPoly.variable(k, t - n1) * c
        rows[i][j] = rows[i][j] + term
        rows[j][i] = rows[j][i] - term
    return pfaffian(SkewMap(tuple(tuple(r) for r in rows)))


def binary_form_of(a: LieAlgebra) -> BinaryQuadraticForm:
    """The Pfaffian form specialized to type (4,2)."""
    n1, k = adapted_split(a)
    if (n1, k) != (4, 2):
        raise NotTwoStep(f"binary Pfaffian form needs type (4,2), got ({n1},{k})")
    h = pfaffian_form(a)
    return BinaryQuadraticForm(
        h.coefficient((2, 0)), h.coefficient((1, 1)), h.coefficient((0, 2))
    )


def squarefree_part_of_rational(x: Fraction) -> int:
    """The unique squarefree integer s with x / s a nonzero rational square
    (sign preserved)."""
    x = rat(x)
    if x == 0:
        raise ValueError("zero has no squarefree part")
    n = abs(x.numerator * x.denominator)
    s = 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
        if n % d == 0:
            s *= d
            n //= d
        d += 1
    s *= n
    return s if x > 0 else -s


def classify_type42(a: LieAlgebra) -> tuple[int, bool]:
    """The squarefree integer s with a isomorphic to the standard algebra
    of parameter s, plus whether s is compatible with being Anosov (s > 1).
    Two type-(4,2) algebras are isomorphic exactly when their Pfaffian form
    discriminants agree up to a rational square."""
    h = binary_form_of(a)
    delta = h.discriminant
    if delta == 0:
        raise DegeneratePfaffian("Pfaffian form has zero discriminant")
    s = squarefree_part_of_rational(delta)
    return s, s > 1


def nk_algebra(k: int) -> LieAlgebra:
    """The standard type-(4,2) algebra of parameter k:
    [X1,X3] = Z1, [X1,X4] = Z2, [X2,X3] = k Z2, [X2,X4] = Z1."""
    return LieAlgebra("Q", 6, (
        (0, 2, 4, Fraction(1)),
        (0, 3, 5, Fraction(1)),
        (1, 2, 5, Fraction(k)),
        (1, 3, 4, Fraction(1)),
    ))


def hk_algebra(k: int) -> LieAlgebra:
    """The type-(4,4) dual of nk_algebra(k): [X1,X2] = Z1, [X1,X3] = Z2,
    [X1,X4] = k Z3, [X2,X3] = -Z3, [X2,X4] = -Z2, [X3,X4] = Z4."""
    return LieAlgebra("Q", 8, (
        (0, 1, 4, Fraction(1)),
        (0, 2, 5, Fraction(1)),
        (0, 3, 6, Fraction(k)),
        (1, 2, 6, Fraction(-1)),
        (1, 3, 5, Fraction(-1)),
        (2, 3, 7, Fraction(1)),
    ))


# ---------------------------------------------------------------------------
# Scheuneman duality
# ---------------------------------------------------------------------------


def _skew_basis_index(n1: int) -> list[tuple[int, int]]:
    return list(combinations(range(n1), 2))


def _skew_to_coords(mat, pairs) -> list:
    return [mat[i][j] for (i, j) in pairs]


def _coords_to_skew(v, pairs, n1):
    rows = [[Fraction(0)] * n1 for _ in range(n1)]
    for x, (i, j) in zip(v, pairs):
        rows[i][j] = x
        rows[j][i] = -x
    return rows


def w_space_coords(a: LieAlgebra) -> tuple[list[list[Fraction]], list[tuple[int, int]], int, int]:
    """Coordinates of W = span{J_Z} inside the skew matrices, in the basis
    E_ij (i < j).  Raises JNotInjective when J kills part of the center."""
    n1, k = adapted_split(a)
    pairs = _skew_basis_index(n1)
    coords = []
    for t in range(k):
        z = [Fraction(1) if s == t else Fraction(0) for s in range(k)]
        jz = j_map(a, z)
        coords.append(_skew_to_coords([list(r) for r in jz.matrix], pairs))
    if fl.rank(coords) != k:
        raise JNotInjective("center maps to a degenerate family of skew matrices")
    return coords, pairs, n1, k


def scheuneman_dual(a: LieAlgebra) -> LieAlgebra:
    """The 2-step algebra on V + W~ where W~ is the orthogonal complement
    of W = J(center) inside the skew matrices under B(Z1, Z2) =
    trace(Z1^T Z2), with bracket defined by B([X,Y], Z) = <Z(X), Y> for
    Z ranging over W~.

    The center basis is canonicalized: new basis vectors are introduced in
    the order brackets appear (lexicographic pairs), rescaled so each
    coefficient vector is a primitive integer vector with positive leading
    entry.  This reproduces the standard presentation of the duals of the
    classified type-(4,2) algebras exactly.
    """
    coords, pairs, n1, k = w_space_coords(a)
    # B(E_ij, E_kl) = 2 delta, so orthogonality under B inside the skew
    # matrices is the standard dot product on the E_ij coordinates
    from .exactmath import RationalMatrix as RM, nullspace

    if k == 0:
        # nothing to complement: the dual is the free 2-step algebra
        nskew = len(pairs)
        comp = [tuple(Fraction(i == j) for j in range(nskew))
                for i in range(nskew)]
    else:
        comp = nullspace(RM(coords))
    kd = len(comp)
    wt_basis = [_coords_to_skew(v, pairs, n1) for v in comp]
    gram = [[_skew_b(x, y) for y in wt_basis] for x in wt_basis]
    raw_brackets: dict[tuple[int, int], list[Fraction]] = {}
    for i in range(n1):
        for j in range(i + 1, n1):
            if kd == 0:
                continue
            rhs = [z[j][i] for z in wt_basis]
            sol = fl.solve(gram, [rhs])
            vec = [sol[t][0] for t in range(kd)]
            if any(x != 0 for x in vec):
                raw_brackets[(i, j)] = vec

    # canonical center basis: new directions in lexicographic bracket
    # order, then a primitive-integer rescale with positive first entry
    greedy: list[list[Fraction]] = []
    coords_out: dict[tuple[int, int], list[Fraction]] = {}
    for key in sorted(raw_brackets):
        vec = raw_brackets[key]
        co = _express_in(greedy, vec)
        if co is None:
            greedy.append(vec)
            co = [Fraction(0)] * len(greedy)
            co[-1] = Fraction(1)
        coords_out[key] = co
    width = len(greedy)
    for key, co in coords_out.items():
        coords_out[key] = co + [Fraction(0)] * (width - len(co))
    scale = []
    for t in range(width):
        col = [coords_out[key][t] for key in sorted(coords_out)]
        nz = [x for x in col if x != 0]
        lcm = 1
        for x in nz:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        g = 0
        for x in nz:
            g = math.gcd(g, abs((x * lcm).numerator))
        factor = Fraction(lcm, g)
        if nz[0] * factor < 0:
            factor = -factor
        scale.append(factor)
    entries = []
    for (i, j), co in sorted(coords_out.items()):
        for t in range(width):
            c = co[t] * scale[t]
            if c != 0:
                entries.append((i, j, n1 + t, c))
    # kd - width unused complement directions remain as abelian slots
    return LieAlgebra("Q", n1 + kd, tuple(entries))


def _skew_b(x, y) -> Fraction:
    """B(Z1, Z2) = trace(Z1^T Z2)."""
    n = len(x)
    return sum(x[i][j] * y[i][j] for i in range(n) for j in range(n))


def _express_in(basis: list[list[Fraction]], vec: list[Fraction]) -> list[Fraction] | None:
    """Coordinates of vec in the given (independent) list, or None."""
    if not basis:
        return None
    rows = [list(b) for b in basis]
    m = len(rows)
    n = len(vec)
    aug = [[rows[t][s] for t in range(m)] + [vec[s]] for s in range(n)]
    rr, piv = fl.rref(aug)
    coeffs = [Fraction(0)] * m
    for r, p in enumerate(piv):
        if p == m:
            return None  # inconsistent: vec not in span
        coeffs[p] = rr[r][m]
    # verify
    for s in range(n):
        acc = sum((coeffs[t] * rows[t][s] for t in range(m)), Fraction(0))
        if acc != vec[s]:
            return None
    return coeffs


def dual_automorphism(alpha: RationalMatrix, a: LieAlgebra,
                      dual: LieAlgebra) -> tuple[RationalMatrix, RationalMatrix]:
    """Extend alpha on the degree-1 block to automorphisms of a and of its
    dual (alpha^T on the dual side), by bracket equivariance.

    Requires alpha^T Z alpha in W for every Z in W (checked; raises
    DoesNotPreserveW).
    """
    ext_a = extend_degree_one(a, alpha)
    ext_dual = extend_degree_one(dual, alpha.transpose())
    return ext_a, ext_dual


def extend_degree_one(a: LieAlgebra, alpha: RationalMatrix) -> RationalMatrix:
    """Block automorphism of a 2-step algebra from its degree-1 action: the
    center block is solved from alpha^T J_Z alpha = J_{alpha^T Z}."""
    coords, pairs, n1, k = w_space_coords(a)
    if alpha.rows != n1:
        raise ValueError("degree-1 block has the wrong size")
    at = alpha.transpose()
    center_cols = []
    for t in range(k):
        z = [Fraction(1) if s == t else Fraction(0) for s in range(k)]
        jz = j_map(a, z)
        m = at * RationalMatrix([list(r) for r in jz.matrix]) * alpha
        target = _skew_to_coords(m.entries, pairs)
        co = _express_in(coords, target)
        if co is None:
            raise DoesNotPreserveW("alpha^T J_Z alpha leaves the image of J")
        center_cols.append(co)
    # center_cols[t] = coordinates of alpha^T(Z_t); the center block of the
    # extended automorphism is the transpose of that matrix
    n = a.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            rows[i][j] = alpha[i, j]
    for i in range(k):
        for j in range(k):
            rows[n1 + i][n1 + j] = center_cols[i][j]
    out = RationalMatrix(rows)
    if not is_automorphism(a, LinearMap(a, out.entries)):
        raise DoesNotPreserveW("extension is not an automorphism")
    return out


def wedge_square(alpha: RationalMatrix) -> RationalMatrix:
    """Second exterior power on the basis e_i ^ e_j, pairs ordered
    lexicographically."""
    n = alpha.rows
    pairs = _skew_basis_index(n)
    rows = []
    for (i, j) in pairs:
        row = []
        for (k, l) in pairs:
            row.append(alpha[i, k] * alpha[j, l] - alpha[i, l] * alpha[j, k])
        rows.append(row)
    return RationalMatrix(rows)


def center_block(a: LieAlgebra, m: RationalMatrix) -> RationalMatrix:
    """Restriction of an automorphism to the center part of the adapted
    basis (the induced map on gamma_2)."""
    n1, k = adapted_split(a)
    idx = list(range(n1, n1 + k))
    return m.submatrix(idx, idx)
