"""Finite-dimensional Lie algebras over Q or a verified number field,
presented by sparse structure constants.

Brackets are stored for i < j only; antisymmetry is implicit.  Subspaces
(lower central series terms, spans) are always kept as canonical reduced
echelon bases so equality of subspaces is bit-exact list comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from . import _fieldlinalg as fl
from .errors import FieldMismatch, JacobiViolation, NotNilpotent
from .exactmath import RationalMatrix, rat
from .numfield import FieldElement, GaloisDatum

FieldRef = Union[str, GaloisDatum]  # "Q" or a verified datum


def _field_key(f: FieldRef):
    return "Q" if isinstance(f, str) else f.fingerprint()


def _zero(f: FieldRef):
    return Fraction(0) if isinstance(f, str) else f.zero()


def _one(f: FieldRef):
    return Fraction(1) if isinstance(f, str) else f.one()


def _coerce_scalar(f: FieldRef, c):
    if isinstance(f, str):
        return rat(c)
    if isinstance(c, FieldElement):
        return c
    return f.element((rat(c),))


@dataclass(frozen=True)
class LieAlgebra:
    """Structure-constant presentation: brackets is a tuple of entries
    (i, j, k, c) with i < j meaning [b_i, b_j] contains c * b_k."""

    field: FieldRef
    dim: int
    brackets: tuple[tuple[int, int, int, object], ...]
    basis_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        norm: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j, k, c) in self.brackets:
            if not (0 <= i < j < self.dim and 0 <= k < self.dim):
                raise ValueError(f"bad bracket indices ({i},{j},{k})")
            c = _coerce_scalar(self.field, c)
            row = norm.setdefault((i, j), {})
            row[k] = row.get(k, _zero(self.field)) + c
        flat = []
        for (i, j) in sorted(norm):
            for k in sorted(norm[(i, j)]):
                c = norm[(i, j)][k]
                if not c == 0:
                    flat.append((i, j, k, c))
        object.__setattr__(self, "brackets", tuple(flat))

    # -- access

    def bracket_map(self) -> Mapping[tuple[int, int], dict[int, object]]:
        cached = getattr(self, "_bmap", None)
        if cached is None:
            cached = {}
            for (i, j, k, c) in self.brackets:
                cached.setdefault((i, j), {})[k] = c
            object.__setattr__(self, "_bmap", cached)
        return cached

    def zero_vector(self) -> list:
        return [_zero(self.field) for _ in range(self.dim)]

    def basis_vector(self, i: int) -> list:
        v = self.zero_vector()
        v[i] = _one(self.field)
        return v

    def bracket_basis(self, i: int, j: int) -> list:
        """[b_i, b_j] as a coordinate vector."""
        out = self.zero_vector()
        if i == j:
            return out
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for k, c in self.bracket_map().get((i, j), {}).items():
            out[k] = out[k] + sign * c
        return out

    def bracket(self, x: Sequence, y: Sequence) -> list:
        """Bilinear extension of the structure constants; the vectors may
        have entries in the base field or any extension of it."""
        out = [None] * self.dim
        for (i, j, k, c) in self.brackets:
            t = (x[i] * y[j] - x[j] * y[i]) * c
            out[k] = t if out[k] is None else out[k] + t
        zero_like = None
        for xi in list(x) + list(y):
            zero_like = xi - xi
            break
        return [zero_like if v is None else v for v in out]

    def with_labels(self, labels: Sequence[str]) -> "LieAlgebra":
        return LieAlgebra(self.field, self.dim, self.brackets, tuple(labels))


@dataclass(frozen=True)
class LinearMap:
    """Square matrix acting on an algebra by columns: the image of b_j is
    sum_i matrix[i][j] b_i."""

    algebra: LieAlgebra
    matrix: tuple[tuple[object, ...], ...]

    def __post_init__(self):
        n = self.algebra.dim
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("matrix shape must match the algebra dimension")
        object.__setattr__(
            self, "matrix",
            tuple(tuple(_coerce_scalar(self.algebra.field, x) for x in row)
                  for row in self.matrix),
        )

    def column(self, j: int) -> list:
        return [self.matrix[i][j] for i in range(len(self.matrix))]

    def apply(self, v: Sequence) -> list:
        return fl.mat_vec([list(r) for r in self.matrix], list(v))

    def as_rational_matrix(self) -> RationalMatrix:
        if not isinstance(self.algebra.field, str):
            raise FieldMismatch("matrix is not over Q")
        return RationalMatrix([list(r) for r in self.matrix])


@dataclass(frozen=True)
class Grading:
    """Partition of the basis in order: the first dims[0] vectors span the
    degree-1 piece, the next dims[1] the degree-2 piece, and so on."""

    subspace_dims: tuple[int, ...]

    def degree_of(self, index: int) -> int:
        acc = 0
        for deg, n in enumerate(self.subspace_dims, start=1):
            acc += n
            if index < acc:
                return deg
        raise IndexError(index)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def check_jacobi(a: LieAlgebra) -> bool:
    """Verify sum over cyclic permutations of [[b_i, b_j], b_k] = 0 for all
    i < j < k, exactly."""
    n = a.dim
    for i in range(n):
        for j in range(i + 1, n):
            bij = a.bracket_basis(i, j)
            for k in range(j + 1, n):
                ek = a.basis_vector(k)
                t1 = a.bracket(bij, ek)
                t2 = a.bracket(a.bracket_basis(j, k), a.basis_vector(i))
                t3 = a.bracket(a.bracket_basis(k, i), a.basis_vector(j))
                if any(not (x + y + z) == 0 for x, y, z in zip(t1, t2, t3)):
                    return False
    return True


def require_jacobi(a: LieAlgebra) -> LieAlgebra:
    if not check_jacobi(a):
        raise JacobiViolation("structure constants violate the Jacobi identity")
    return a


def lower_central_series(a: LieAlgebra) -> tuple[list[list[tuple]], tuple[int, ...], int]:
    """Canonical bases of gamma_1 > gamma_2 > ..., the type tuple, and the
    nilpotency class.  Raises NotNilpotent when the series stabilizes at a
    nonzero subspace."""
    current = [tuple(a.basis_vector(i)) for i in range(a.dim)]
    series = [current]
    while True:
        prev = series[-1]
        gens = []
        for i in range(a.dim):
            ei = a.basis_vector(i)
            for v in prev:
                gens.append(a.bracket(ei, list(v)))
        nxt = fl.span_rref(gens) if gens else []
        if len(nxt) == len(prev):
            raise NotNilpotent("lower central series stabilizes at a nonzero subspace")
        series.append(nxt)
        if not nxt:
            series.pop()
            break
    dims = [len(b) for b in series]
    dims.append(0)
    type_tuple = tuple(dims[i] - dims[i + 1] for i in range(len(series)))
    return series, type_tuple, len(series)


def algebra_type(a: LieAlgebra) -> tuple[int, ...]:
    return lower_central_series(a)[1]


def nilpotency_class(a: LieAlgebra) -> int:
    return lower_central_series(a)[2]


def is_automorphism(a: LieAlgebra, f: LinearMap) -> bool:
    """f invertible and f[x, y] = [f x, f y] on all basis pairs."""
    mat = [list(r) for r in f.matrix]
    if fl.det(mat) == 0:
        return False
    cols = [f.column(j) for j in range(a.dim)]
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            lhs = f.apply(a.bracket_basis(i, j))
            rhs = a.bracket(cols[i], cols[j])
            if any(not x == y for x, y in zip(lhs, rhs)):
                return False
    return True


def direct_sum(algebras: Sequence[LieAlgebra]) -> LieAlgebra:
    if not algebras:
        raise ValueError("empty direct sum")
    key = _field_key(algebras[0].field)
    if any(_field_key(x.field) != key for x in algebras):
        raise FieldMismatch("direct sum needs a common base field")
    brackets = []
    offset = 0
    for alg in algebras:
        for (i, j, k, c) in alg.brackets:
            brackets.append((i + offset, j + offset, k + offset, c))
        offset += alg.dim
    return LieAlgebra(algebras[0].field, offset, tuple(brackets))


def check_grading(a: LieAlgebra, g: Grading) -> bool:
    """[n_i, n_j] inside n_{i+j}; pieces beyond the last are zero."""
    if sum(g.subspace_dims) != a.dim:
        raise ValueError("grading dimensions must sum to the algebra dimension")
    ncomponents = len(g.subspace_dims)
    for (i, j, k, c) in a.brackets:
        di, dj, dk = g.degree_of(i), g.degree_of(j), g.degree_of(k)
        if di + dj > ncomponents or dk != di + dj:
            return False
    return True


def heisenberg() -> LieAlgebra:
    """The 3-dimensional Heisenberg algebra [b1, b2] = b3 over Q."""
    return LieAlgebra("Q", 3, ((0, 1, 2, Fraction(1)),))


def abelian(n: int, field: FieldRef = "Q") -> LieAlgebra:
    return LieAlgebra(field, n, ())


def map_preserves_series(a: LieAlgebra, f: LinearMap) -> bool:
    """Every automorphism preserves each gamma_i; exposed for tests."""
    series, _, _ = lower_central_series(a)
    for basis in series:
        rr = fl.span_rref([list(v) for v in basis])
        for v in basis:
            if not fl.in_span(rr, f.apply(list(v))):
                return False
    return True
