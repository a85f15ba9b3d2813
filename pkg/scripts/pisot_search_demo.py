#!/usr/bin/env python3
"""Search the bundled fields for unit Pisot numbers, with and without the
extra cone constraints used by the minimal-signature construction, and
print certified modulus enclosures for what turns up."""

from fractions import Fraction

from anosovforms.catalog import cyclic_cubic_datum, quartic_z4_datum, sqrt2_datum
from anosovforms.exactmath import rat_to_str
from anosovforms.numfield import conjugate_modulus_interval, minimal_polynomial
from anosovforms.pisot import ConeConstraint, search_unit_pisot


def describe(datum, name, height, extra=None, limit=4):
    label = f"{name}, height {height}"
    if extra:
        label += " + extra constraints"
    print(f"== {label} ==")
    found = search_unit_pisot(datum, height, extra_constraints=extra or [])
    if not found:
        print("   (none found)")
        return
    for u in found[:limit]:
        mp = minimal_polynomial(u)
        moduli = []
        for i in range(datum.degree):
            iv = conjugate_modulus_interval(u, i, Fraction(1, 10 ** 6))
            moduli.append(f"{float(iv.midpoint):.4f}")
        print(f"   coords ({', '.join(rat_to_str(c) for c in u.coeffs)})"
              f"  minpoly {[rat_to_str(c) for c in mp.coeffs]}"
              f"  |conjugates| ~ {moduli}")
    if len(found) > limit:
        print(f"   ... and {len(found) - limit} more")


def main() -> None:
    describe(sqrt2_datum(), "Q(sqrt2)", 2)
    describe(cyclic_cubic_datum(), "cyclic cubic", 2)
    quartic = quartic_z4_datum()
    describe(quartic, "cyclic quartic", 1)
    # the constraint needed for the minimal-signature construction at n = 2
    extra = [ConeConstraint((1, 0, 2, 0), "<1")]
    describe(quartic, "cyclic quartic", 2, extra=extra)


if __name__ == "__main__":
    main()
