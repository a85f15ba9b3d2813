"""Search and certification of unit Pisot numbers and constrained units.

A multiplicative constraint prod_i |sigma_i(lambda)|^{c_i} < 1 is decided
exactly: the product is formed as a single field element and its modulus is
compared to 1 by interval refinement (the tie |mu| = 1 is decided
algebraically first, since a real field element has modulus one only when
it equals +-1).  No logarithms, no floating point.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .errors import BadParameters, PrecisionUnreachable, Undecidable
from .numfield import (
    FieldElement,
    GaloisDatum,
    apply_automorphism,
    compare_abs_to_one,
    is_algebraic_unit,
)


def _env_budget(default: int) -> int:
    raw = os.environ.get("ANOSOV_SEARCH_BUDGET")
    if raw:
        try:
            return max(int(raw), 1)
        except ValueError:
            pass
    return default


@dataclass(frozen=True)
class ConeConstraint:
    """Integer linear functional on the log-embedding vector, checked
    multiplicatively: coeffs c with rel '<1' means
    prod_i |sigma_i(lambda)|^{c_i} < 1."""

    coeffs: tuple[int, ...]
    rel: str = "<1"

    def __post_init__(self):
        if self.rel not in ("<1", ">1"):
            raise BadParameters(f"relation must be '<1' or '>1', got {self.rel!r}")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise BadParameters("constraint coefficients must be integers")

    def holds_for(self, lam: FieldElement) -> bool:
        datum = lam.datum
        if len(self.coeffs) != datum.degree:
            raise BadParameters("constraint length must equal the field degree")
        mu = datum.one()
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mu = mu * (apply_automorphism(datum, i, lam) ** c)
        sign = compare_abs_to_one(mu, datum.identity_index)
        return sign < 0 if self.rel == "<1" else sign > 0


def pisot_cone(datum: GaloisDatum) -> list[ConeConstraint]:
    """The constraints defining unit Pisot numbers: own embedding > 1 and
    every other conjugate of modulus < 1."""
    d = datum.degree
    out = []
    for i in range(d):
        coeffs = tuple(1 if j == i else 0 for j in range(d))
        out.append(ConeConstraint(coeffs, ">1" if i == datum.identity_index else "<1"))
    return out


def is_unit_pisot(lam: FieldElement, max_steps: int = 64) -> bool:
    """lambda > 1 under the distinguished embedding and |sigma(lambda)| < 1
    for every other automorphism, with lambda an algebraic unit."""
    datum = lam.datum
    if not datum.verified:
        raise BadParameters("is_unit_pisot requires a verified datum")
    if not is_algebraic_unit(lam):
        return False
    if lam.is_rational:
        return False
    for i in range(datum.degree):
        want = 1 if i == datum.identity_index else -1
        try:
            if compare_abs_to_one(lam, i, max_steps=max_steps) != want:
                return False
        except PrecisionUnreachable as e:  # pragma: no cover
            raise Undecidable(str(e)) from e
    if embeds_negative(lam):
        return False
    return True


def embeds_negative(lam: FieldElement) -> bool:
    """True when the distinguished embedding of lam is negative (a Pisot
    number must itself be a real number > 1, not merely of modulus > 1)."""
    datum = lam.datum
    if lam.is_rational:
        return lam.rational_value() < 0
    if not datum.totally_real:
        return False
    root_idx = datum.root_map[datum.identity_index]
    base = datum.root_enclosures[root_idx]
    from .numfield import refine_enclosure

    width = base.width
    for _ in range(64):
        iv = lam.as_polynomial().eval_interval(base)
        if iv.strictly_less(0):
            return True
        if iv.strictly_greater(0):
            return False
        width = width / 16
        base = refine_enclosure(datum.min_poly, base, width)
    raise Undecidable("sign of embedding undecided")


def search_units(datum: GaloisDatum, height_bound: int, power_bound: int = 1,
                 constraints: list[ConeConstraint] | None = None,
                 product_rounds: int = 1,
                 candidate_budget: int | None = None) -> list[FieldElement]:
    """Enumerate integer coefficient vectors in [-H, H]^d, keep the
    algebraic units, close under powers up to power_bound and pairwise
    products (product_rounds rounds), then filter by the constraints.

    Complete only in the sense of the enumeration box: units of the ring of
    integers outside Z[theta] are found only if some power or product lands
    in the box closure.  Results are sorted by trace then coordinates, so
    identical calls return identical lists.
    """
    if not datum.verified:
        raise BadParameters("search_units requires a verified datum")
    if height_bound < 0:
        raise BadParameters("height bound must be >= 0")
    budget = candidate_budget if candidate_budget is not None else _env_budget(200_000)
    constraints = constraints or []
    d = datum.degree
    units: list[FieldElement] = []
    for vec in product(range(-height_bound, height_bound + 1), repeat=d):
        if all(v == 0 for v in vec):
            continue
        x = datum.element(vec)
        if abs(x.norm()) == 1:
            units.append(x)
    seen = {u.coeffs: u for u in units}
    for u in units:
        acc = u
        for _ in range(2, power_bound + 1):
            acc = acc * u
            seen.setdefault(acc.coeffs, acc)
    for _ in range(product_rounds):
        current = list(seen.values())
        if len(current) * (len(current) - 1) // 2 > budget:
            break
        for a, b in combinations_with_replacement(current, 2):
            ab = a * b
            seen.setdefault(ab.coeffs, ab)
    one = datum.one()
    out = []
    for u in seen.values():
        if u == one or u == -one:
            continue
        if all(c.holds_for(u) for c in constraints):
            out.append(u)
    out.sort(key=lambda u: (u.trace(), u.coeffs))
    return out


def search_unit_pisot(datum: GaloisDatum, height_bound: int, power_bound: int = 1,
                      extra_constraints: list[ConeConstraint] | None = None,
                      product_rounds: int = 1) -> list[FieldElement]:
    """Unit Pisot numbers reachable by search_units under the Pisot cone.

    Cone constraints only see moduli, so the raw search also returns
    negative elements of modulus > 1; this wrapper keeps exactly the
    elements accepted by is_unit_pisot.
    """
    cons = pisot_cone(datum) + list(extra_constraints or [])
    hits = search_units(datum, height_bound, power_bound, cons,
                        product_rounds=product_rounds)
    return [u for u in hits if is_unit_pisot(u)]


def check_full_rank_condition(lam: FieldElement, exponent_bound: int) -> bool:
    """Brute-force check that prod_j sigma_j(lambda)^{d_j} = +-1 forces all
    exponents equal, over |d_j| <= exponent_bound.

    Short-circuits to True for unit Pisot numbers, which always satisfy the
    condition.
    """
    datum = lam.datum
    if not is_algebraic_unit(lam):
        raise BadParameters("full rank condition is about algebraic units")
    if datum.degree == 1:
        return True
    if is_unit_pisot(lam):
        return True
    return brute_force_full_rank(lam, exponent_bound)


def brute_force_full_rank(lam: FieldElement, exponent_bound: int) -> bool:
    """The exhaustive check without the Pisot shortcut (used as an oracle)."""
    datum = lam.datum
    d = datum.degree
    b = exponent_bound
    conj = [apply_automorphism(datum, i, lam) for i in range(d)]
    powers = []
    for c in conj:
        row = {0: datum.one()}
        for e in range(1, b + 1):
            row[e] = row[e - 1] * c
        inv = c.inverse()
        for e in range(1, b + 1):
            row[-e] = row[-(e - 1)] * inv
        powers.append(row)
    one = datum.one()
    for exps in product(range(-b, b + 1), repeat=d):
        if all(e == exps[0] for e in exps):
            continue
        acc = powers[0][exps[0]]
        for i in range(1, d):
            acc = acc * powers[i][exps[i]]
        if acc == one or acc == -one:
            return False
    return True
