"""Number fields as verified Galois data.

A GaloisDatum packages a monic integer minimal polynomial together with
explicit automorphism polynomials, a composition table and certified real
root enclosures.  Nothing is ever *discovered* here: the datum is a claim,
and verify_galois_datum proves every part of it by exact arithmetic
(irreducibility by bounded factor search, the automorphism property by
polynomial composition, the group structure from the table).  Downstream
code only accepts verified data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    AutomorphismFailsMinPoly,
    BadEnclosure,
    BadParameters,
    DatumMismatch,
    EnclosuresOverlap,
    IrreducibilityBudgetExceeded,
    NotIrreducible,
    PrecisionUnreachable,
    TableNotAGroup,
    WrongAutomorphismCount,
)
from .exactmath import Interval, Polynomial, RationalMatrix, poly_xgcd, rat

DEFAULT_FACTOR_BUDGET = 2_000_000
DEFAULT_REFINE_STEPS = 4096


@dataclass(frozen=True)
class GaloisDatum:
    """A degree-d number field with an explicit, machine-verifiable
    Galois group action.

    automorphisms[i] is the polynomial q_i with sigma_i(theta) = q_i(theta);
    table[i][j] is the index of sigma_i o sigma_j.  root_enclosures lists
    disjoint rational intervals for the real roots in descending order; the
    distinguished embedding sends theta to the root in enclosure
    distinguished_index (default: the largest root).
    """

    min_poly: Polynomial
    automorphisms: tuple[Polynomial, ...]
    identity_index: int
    table: tuple[tuple[int, ...], ...]
    root_enclosures: tuple[Interval, ...] | None = None
    totally_real: bool = True
    root_moduli: tuple[Interval, ...] | None = None
    assume_irreducible: bool = False
    distinguished_index: int = 0
    verified: bool = field(default=False, compare=False)
    # automorphism index -> root index under the distinguished embedding
    root_map: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    def fingerprint(self) -> tuple:
        fp = getattr(self, "_fp", None)
        if fp is None:
            fp = (self.min_poly.coeffs, tuple(a.coeffs for a in self.automorphisms))
            object.__setattr__(self, "_fp", fp)
        return fp

    def _theta_power_rows(self) -> list[tuple[Fraction, ...]]:
        """theta^(d+k) in the power basis for k = 0..d-2 (cached)."""
        rows = getattr(self, "_powrows", None)
        if rows is None:
            d = self.degree
            cur = [-c for c in self.min_poly.coeffs[:-1]]
            rows = [tuple(cur)]
            for _ in range(max(d - 2, 0)):
                top = cur[-1]
                cur = [Fraction(0)] + cur[:-1]
                if top:
                    cur = [a + top * b for a, b in zip(cur, rows[0])]
                rows.append(tuple(cur))
            object.__setattr__(self, "_powrows", rows)
        return rows

    def reduce_coeffs(self, cs: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Reduce a coefficient vector of length <= 2d-1 mod min_poly."""
        d = self.degree
        out = list(cs[:d]) + [Fraction(0)] * max(0, d - len(cs))
        rows = self._theta_power_rows()
        for k in range(d, len(cs)):
            c = cs[k]
            if c:
                row = rows[k - d]
                out = [a + c * b for a, b in zip(out, row)]
        return tuple(out)

    # -- elements ---------------------------------------------------------

    def element(self, coeffs: Iterable) -> "FieldElement":
        cs = [rat(c) for c in coeffs]
        if len(cs) > self.degree:
            raise ValueError("too many coordinates for this field")
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def zero(self) -> "FieldElement":
        return self.element(())

    def one(self) -> "FieldElement":
        return self.element((1,))

    def generator(self) -> "FieldElement":
        if self.degree == 1:
            # theta is the rational root of the linear minimal polynomial
            return self.element((-self.min_poly[0],))
        return self.element((0, 1))

    def from_polynomial(self, p: Polynomial) -> "FieldElement":
        return self.element((p % self.min_poly).coeffs)

    def inverse_index(self, i: int) -> int:
        row = self.table[i]
        return row.index(self.identity_index)

    def compose_indices(self, i: int, j: int) -> int:
        return self.table[i][j]


@dataclass(frozen=True)
class FieldElement:
    """Element of a GaloisDatum's field in the power basis 1, theta, ...,
    theta^(d-1)."""

    datum: GaloisDatum
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.datum.degree:
            raise ValueError("coordinate count must equal the field degree")

    # -- coercion and structure

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.datum is not self.datum and \
                    other.datum.fingerprint() != self.datum.fingerprint():
                raise DatumMismatch("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.datum.element((other,))
        return None

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    # -- arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.datum, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.datum, tuple(-a for a in self.coeffs))

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
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return FieldElement(self.datum, tuple(c * a for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.datum.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    conv[i + j] += a * b
        return FieldElement(self.datum, self.datum.reduce_coeffs(conv))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        g, s, _ = poly_xgcd(self.as_polynomial(), self.datum.min_poly)
        if g.degree != 0:
            raise NotIrreducible("minimal polynomial is reducible")
        return self.datum.from_polynomial(s * (1 / g.constant))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / rat(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        r = self.datum.one()
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.datum.element((other,))
        return (
            isinstance(other, FieldElement)
            and self.datum.fingerprint() == other.datum.fingerprint()
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        from .exactmath import rat_to_str

        return "FieldElement(" + ", ".join(rat_to_str(c) for c in self.coeffs) + ")"

    # -- linear algebra over Q

    def multiplication_matrix(self) -> RationalMatrix:
        d = self.datum.degree
        col = list(self.coeffs)
        cols = [col]
        for _ in range(d - 1):
            col = list(self.datum.reduce_coeffs([Fraction(0)] + col))
            cols.append(col)
        return RationalMatrix([[cols[j][i] for j in range(d)] for i in range(d)])

    def trace(self) -> Fraction:
        return self.multiplication_matrix().trace()

    def norm(self) -> Fraction:
        return self.multiplication_matrix().det()


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def _l2_norm_bound(p: Polynomial) -> int:
    s = 0
    for c in p.coeffs:
        s += c.numerator * c.numerator
    return math.isqrt(s) + 1


def _check_irreducible(p: Polynomial, budget: int) -> bool:
    """Prove irreducibility over Q by exhausting monic integer factors of
    degree <= deg/2 with Mignotte-bounded coefficients.

    Returns True when proven irreducible, False when the enumeration would
    exceed the budget (caller must then rely on assume_irreducible).
    Raises NotIrreducible when a factor is found.
    """
    d = p.degree
    if d <= 0:
        raise NotIrreducible("constant polynomial")
    if d == 1:
        return True
    if not p.is_integer or p.leading != 1:
        raise BadParameters("minimal polynomial must be monic with integer coefficients")
    m = _l2_norm_bound(p)
    for k in range(1, d // 2 + 1):
        bounds = [math.comb(k, j) * m for j in range(k)]
        total = 1
        for b in bounds:
            total *= 2 * b + 1
            if total > budget:
                return False
        def rec(j: int, coeffs: list[int]):
            if j == k:
                g = Polynomial(coeffs + [1])
                if (p % g).is_zero:
                    raise NotIrreducible(f"factor found: {g!r}")
                return
            for c in range(-bounds[j], bounds[j] + 1):
                rec(j + 1, coeffs + [c])
        rec(0, [])
    return True


def refine_enclosure(p: Polynomial, iv: Interval, width: Fraction,
                     max_steps: int = DEFAULT_REFINE_STEPS) -> Interval:
    """Shrink a sign-change enclosure of a root of p below the given width
    by exact bisection."""
    lo, hi = iv.lo, iv.hi
    flo = p.eval(lo)
    fhi = p.eval(hi)
    if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
        raise BadEnclosure(f"no sign change of p on [{lo}, {hi}]")
    steps = 0
    while hi - lo > width:
        if steps >= max_steps:
            raise PrecisionUnreachable("bisection budget exhausted")
        mid = (lo + hi) / 2
        fm = p.eval(mid)
        if fm == 0:
            # rational root: only possible when p has a linear factor
            return Interval(mid, mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        steps += 1
    return Interval(lo, hi)


def verify_galois_datum(candidate: GaloisDatum,
                        factor_budget: int = DEFAULT_FACTOR_BUDGET) -> GaloisDatum:
    """Run every invariant check and return the datum marked verified.

    Checks: irreducibility (or the assume_irreducible escape hatch), that
    every automorphism polynomial q satisfies min_poly(q(theta)) = 0, that
    the composition table is the multiplication table of a group of order
    equal to the degree, and that the root enclosures are genuine, disjoint
    and descending.  Also pins down which root each automorphism sends the
    distinguished root to (the root_map).
    """
    p = candidate.min_poly
    d = p.degree
    if d < 1:
        raise BadParameters("minimal polynomial must have degree >= 1")
    if not p.is_integer or p.leading != 1:
        raise BadParameters("minimal polynomial must be monic with integer coefficients")

    proved = _check_irreducible(p, factor_budget)
    if not proved and not candidate.assume_irreducible:
        raise IrreducibilityBudgetExceeded(
            "irreducibility not proven within budget; set assume_irreducible"
        )

    n_aut = len(candidate.automorphisms)
    if n_aut != d:
        raise WrongAutomorphismCount(f"{n_aut} automorphisms for degree {d}")

    for i, q in enumerate(candidate.automorphisms):
        if q.degree >= d and d > 1:
            raise BadParameters(f"automorphism {i} not reduced mod min_poly")
        if not p.compose_mod(q, p).is_zero:
            raise AutomorphismFailsMinPoly(f"automorphism {i} fails the minimal polynomial")

    if len(set(q.coeffs for q in candidate.automorphisms)) != d:
        raise WrongAutomorphismCount("duplicate automorphism polynomials")

    ident = candidate.identity_index
    if not (0 <= ident < d):
        raise TableNotAGroup("identity index out of range")
    expected_id = Polynomial.x() if d > 1 else candidate.automorphisms[ident]
    if d > 1 and candidate.automorphisms[ident] != expected_id:
        raise TableNotAGroup("identity automorphism is not X")

    if len(candidate.table) != d or any(len(row) != d for row in candidate.table):
        raise TableNotAGroup("table has wrong shape")
    for i in range(d):
        for j in range(d):
            # sigma_i o sigma_j has polynomial q_j(q_i(X)) mod p
            comp = candidate.automorphisms[j].compose_mod(candidate.automorphisms[i], p)
            k = candidate.table[i][j]
            if not (0 <= k < d) or candidate.automorphisms[k] != comp:
                raise TableNotAGroup(f"table entry ({i},{j}) does not match composition")
    for i in range(d):
        if sorted(candidate.table[i]) != list(range(d)):
            raise TableNotAGroup(f"row {i} is not a permutation")
        if sorted(row[i] for row in candidate.table) != list(range(d)):
            raise TableNotAGroup(f"column {i} is not a permutation")
        if candidate.table[ident][i] != i or candidate.table[i][ident] != i:
            raise TableNotAGroup("identity row/column is not the identity")

    root_map: tuple[int, ...] | None = None
    if candidate.totally_real:
        encl = candidate.root_enclosures
        if encl is None or len(encl) != d:
            raise BadEnclosure("need one root enclosure per root")
        for iv in encl:
            flo, fhi = p.eval(iv.lo), p.eval(iv.hi)
            if d == 1:
                if iv.lo != iv.hi or p.eval(iv.lo) != 0:
                    raise BadEnclosure("degree-1 enclosure must be the exact root")
                continue
            if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
                raise BadEnclosure(f"no sign change on [{iv.lo}, {iv.hi}]")
        for a, b in zip(encl, encl[1:]):
            if not b.hi < a.lo:
                raise EnclosuresOverlap("enclosures must be disjoint and descending")
        if not (0 <= candidate.distinguished_index < d):
            raise BadParameters("distinguished root index out of range")
        root_map = _compute_root_map(candidate)
    else:
        if candidate.root_moduli is None or len(candidate.root_moduli) != d:
            raise BadEnclosure("non-real datum needs per-conjugate modulus enclosures")
        prod = Interval.point(1)
        for iv in candidate.root_moduli:
            if iv.lo < 0:
                raise BadEnclosure("modulus enclosures must be nonnegative")
            prod = prod.mul(iv)
        # |norm(theta)| = |constant term| for a monic irreducible polynomial
        if not prod.contains(abs(p.constant)):
            raise BadEnclosure("modulus enclosures inconsistent with the norm")

    out = replace(
        candidate,
        assume_irreducible=candidate.assume_irreducible and not proved,
    )
    object.__setattr__(out, "verified", True)
    object.__setattr__(out, "root_map", root_map)
    return out


def _compute_root_map(datum: GaloisDatum) -> tuple[int, ...]:
    """For each automorphism i, the index of the root that sigma_i(theta)
    embeds to under the distinguished embedding."""
    p = datum.min_poly
    d = p.degree
    encl = list(datum.root_enclosures)
    if d == 1:
        return (0,)
    sep = min(a.lo - b.hi for a, b in zip(encl, encl[1:]))
    target_width = sep / 4
    base = encl[datum.distinguished_index]
    out = []
    for i, q in enumerate(datum.automorphisms):
        width = target_width
        found = None
        for _ in range(24):
            ref = refine_enclosure(p, base, width)
            img = q.eval_interval(ref)
            hits = [j for j, iv in enumerate(encl) if not img.disjoint(iv)]
            if len(hits) == 1:
                found = hits[0]
                break
            width = width / 16
        if found is None:
            raise PrecisionUnreachable(f"cannot separate image of automorphism {i}")
        out.append(found)
    if sorted(out) != list(range(d)):
        raise TableNotAGroup("automorphisms do not permute the root enclosures")
    return tuple(out)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def _is_squarefree_int(n: int) -> bool:
    if n <= 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def _sqrt_enclosure(n: int, width: Fraction) -> Interval:
    """Certified rational enclosure of sqrt(n) by bisection on X^2 - n."""
    p = Polynomial((-n, 0, 1))
    hi = 1
    while hi * hi < n:
        hi += 1
    if hi * hi == n:
        return Interval.point(hi)
    return refine_enclosure(p, Interval(Fraction(hi - 1), Fraction(hi)), width)


def biquadratic_datum(k: int, l: int) -> GaloisDatum:
    """The verified degree-4 datum for Q(sqrt(k), sqrt(l)).

    Primitive element theta = sqrt(k) + sqrt(l) with minimal polynomial
    X^4 - 2(k+l)X^2 + (k-l)^2; the four automorphisms flip the signs of the
    two square roots, giving the Klein four-group.
    """
    if not (_is_squarefree_int(k) and _is_squarefree_int(l)) or k <= 1 or l <= 1 or k == l:
        raise BadParameters("need distinct squarefree integers k, l > 1")
    p = Polynomial(((k - l) ** 2, 0, -2 * (k + l), 0, 1))
    den = Fraction(2 * (k - l))
    # solve (theta, theta^3) = M (sqrt k, sqrt l) for the square roots
    sqrt_k = Polynomial((0, Fraction(3 * k + l) / den, 0, Fraction(-1) / den))
    sqrt_l = Polynomial((0, Fraction(-(k + 3 * l)) / den, 0, Fraction(1) / den))
    ident = Polynomial.x()
    tau = (sqrt_k - sqrt_l) % p          # fixes sqrt(k), flips sqrt(l)
    sigma = (sqrt_l - sqrt_k) % p        # flips sqrt(k), fixes sqrt(l)
    sigma_tau = -ident
    auts = (ident, sigma, tau, sigma_tau)

    width = Fraction(1, 64)
    while True:
        rk = _sqrt_enclosure(k, width)
        rl = _sqrt_enclosure(l, width)
        ivs = [
            rk.add(rl),
            (rk.sub(rl)) if k > l else (rl.sub(rk)),
            (rl.sub(rk)) if k > l else (rk.sub(rl)),
            rk.add(rl).neg(),
        ]
        if all(b.hi < a.lo for a, b in zip(ivs, ivs[1:])):
            break
        width = width / 16

    table = _table_from_polys(auts, p)
    datum = GaloisDatum(
        min_poly=p,
        automorphisms=auts,
        identity_index=0,
        table=table,
        root_enclosures=tuple(ivs),
    )
    return verify_galois_datum(datum)


def _table_from_polys(auts: Sequence[Polynomial], p: Polynomial) -> tuple[tuple[int, ...], ...]:
    d = len(auts)
    idx = {q.coeffs: i for i, q in enumerate(auts)}
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            comp = auts[j].compose_mod(auts[i], p)
            if comp.coeffs not in idx:
                raise TableNotAGroup("automorphisms not closed under composition")
            row.append(idx[comp.coeffs])
        table.append(tuple(row))
    return tuple(table)


def biquadratic_sqrts(datum: GaloisDatum, k: int, l: int) -> tuple[FieldElement, FieldElement]:
    """The elements sqrt(k), sqrt(l) inside a biquadratic_datum(k, l),
    certified by squaring."""
    den = Fraction(2 * (k - l))
    sk = datum.element((0, Fraction(3 * k + l) / den, 0, Fraction(-1) / den))
    sl = datum.element((0, Fraction(-(k + 3 * l)) / den, 0, Fraction(1) / den))
    if not (sk * sk == k and sl * sl == l):
        raise BadParameters("datum is not the biquadratic field of (k, l)")
    return sk, sl


def datum_from_automorphism_polys(min_poly: Polynomial,
                                  auts: Sequence[Polynomial],
                                  root_enclosures: Sequence[Interval],
                                  identity_index: int = 0,
                                  distinguished_index: int = 0) -> GaloisDatum:
    """Assemble and verify a datum when only the automorphism polynomials
    are known; the composition table is derived then certified."""
    for i, q in enumerate(auts):
        if not min_poly.compose_mod(q, min_poly).is_zero:
            raise AutomorphismFailsMinPoly(
                f"automorphism {i} fails the minimal polynomial"
            )
    table = _table_from_polys(list(auts), min_poly)
    return verify_galois_datum(GaloisDatum(
        min_poly=min_poly,
        automorphisms=tuple(auts),
        identity_index=identity_index,
        table=table,
        root_enclosures=tuple(root_enclosures),
        distinguished_index=distinguished_index,
    ))


# ---------------------------------------------------------------------------
# the Galois action on elements
# ---------------------------------------------------------------------------


def _require_verified(datum: GaloisDatum):
    if not datum.verified:
        raise BadParameters("operation requires a verified GaloisDatum")


def apply_automorphism(datum: GaloisDatum, index: int, x: FieldElement) -> FieldElement:
    """sigma_index(x), by evaluating x's polynomial at sigma(theta)."""
    _require_verified(datum)
    if x.datum.fingerprint() != datum.fingerprint():
        raise DatumMismatch("element does not belong to this datum")
    q = datum.automorphisms[index]
    return datum.from_polynomial(x.as_polynomial().compose_mod(q, datum.min_poly))


def minimal_polynomial(x: FieldElement) -> Polynomial:
    """Monic minimal polynomial of x over Q: the squarefree part of the
    characteristic polynomial of multiplication by x (which is that minimal
    polynomial raised to the power d/deg)."""
    _require_verified(x.datum)
    return x.multiplication_matrix().charpoly().squarefree_part()


def is_algebraic_unit(x: FieldElement) -> bool:
    """True iff the minimal polynomial has integer coefficients with
    constant term +-1."""
    mp = minimal_polynomial(x)
    return mp.is_integer and abs(mp.constant) == 1


def conjugate_modulus_interval(x: FieldElement, conjugate_index: int,
                               precision: Fraction,
                               max_steps: int = DEFAULT_REFINE_STEPS) -> Interval:
    """Certified enclosure of |sigma_i(x)| with width <= precision.

    Totally real case: sigma_i(x) is x evaluated at the root the i-th
    automorphism maps the distinguished root to; the enclosure refines by
    bisection until the interval image is narrow enough.
    """
    datum = x.datum
    _require_verified(datum)
    precision = rat(precision)
    if precision <= 0:
        raise BadParameters("precision must be positive")
    if x.is_rational:
        return Interval.point(abs(x.rational_value()))
    if not datum.totally_real:
        iv = datum.root_moduli[conjugate_index]
        if iv.width <= precision:
            return iv
        raise PrecisionUnreachable(
            "complex modulus enclosures are fixture data and cannot be refined"
        )
    root_idx = datum.root_map[conjugate_index]
    base = datum.root_enclosures[root_idx]
    p = datum.min_poly
    width = base.width
    for _ in range(max_steps):
        out = x.as_polynomial().eval_interval(base).abs()
        if out.width <= precision:
            return out
        width = width / 16
        base = refine_enclosure(p, base, width, max_steps=max_steps)
    raise PrecisionUnreachable("refinement budget exhausted")


def compare_abs_to_one(x: FieldElement, conjugate_index: int,
                       max_steps: int = 64) -> int:
    """Exact sign of |sigma_i(x)| - 1: -1, 0 or +1.

    The zero case is decided algebraically (a real field element has
    modulus one exactly when it is +-1), so interval refinement always
    terminates on the remaining cases.
    """
    datum = x.datum
    _require_verified(datum)
    sx = apply_automorphism(datum, conjugate_index, x)
    if sx.is_rational:
        v = abs(sx.rational_value())
        return (v > 1) - (v < 1)
    precision = Fraction(1, 4)
    for _ in range(max_steps):
        iv = conjugate_modulus_interval(x, conjugate_index, precision)
        if iv.strictly_greater(1):
            return 1
        if iv.strictly_less(1):
            return -1
        if iv.lo == iv.hi == 1:
            # exact fixture point (a root of unity in a complex datum)
            return 0
        precision = precision / 16
    raise PrecisionUnreachable("modulus comparison budget exhausted")
