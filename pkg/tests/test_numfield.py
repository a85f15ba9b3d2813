from fractions import Fraction as F

import pytest

from anosovforms.errors import (
    AutomorphismFailsMinPoly,
    BadParameters,
    DatumMismatch,
    EnclosuresOverlap,
    NotIrreducible,
    TableNotAGroup,
    WrongAutomorphismCount,
)
from anosovforms.exactmath import Interval, Polynomial
from anosovforms.numfield import (
    GaloisDatum,
    apply_automorphism,
    biquadratic_datum,
    biquadratic_sqrts,
    compare_abs_to_one,
    conjugate_modulus_interval,
    datum_from_automorphism_polys,
    is_algebraic_unit,
    minimal_polynomial,
    refine_enclosure,
    verify_galois_datum,
)

P = Polynomial


class TestVerification:
    def test_sqrt2_verifies(self, sqrt2):
        assert sqrt2.verified
        assert sqrt2.degree == 2
        assert sqrt2.root_map == (0, 1)

    def test_bad_automorphism(self):
        with pytest.raises(AutomorphismFailsMinPoly):
            datum_from_automorphism_polys(
                P([-2, 0, 1]),
                [P.x(), P([1, 1])],  # theta -> 1 + theta is not an automorphism
                [Interval(F(5, 4), F(3, 2)), Interval(F(-3, 2), F(-5, 4))],
            )

    def test_wrong_count(self):
        with pytest.raises(WrongAutomorphismCount):
            verify_galois_datum(GaloisDatum(
                min_poly=P([-2, 0, 1]),
                automorphisms=(P.x(),),
                identity_index=0,
                table=((0,),),
                root_enclosures=(Interval(F(5, 4), F(3, 2)),),
            ))

    def test_reducible(self):
        with pytest.raises(NotIrreducible):
            datum_from_automorphism_polys(
                P([-1, 0, 1]),  # X^2 - 1 factors
                [P.x(), P([0, -1])],
                [Interval(F(1), F(1)), Interval(F(-1), F(-1))],
            )

    def test_broken_table(self, sqrt2):
        bad = GaloisDatum(
            min_poly=sqrt2.min_poly,
            automorphisms=sqrt2.automorphisms,
            identity_index=0,
            table=((0, 1), (1, 1)),
            root_enclosures=sqrt2.root_enclosures,
        )
        with pytest.raises(TableNotAGroup):
            verify_galois_datum(bad)

    def test_overlapping_enclosures(self, sqrt2):
        bad = GaloisDatum(
            min_poly=sqrt2.min_poly,
            automorphisms=sqrt2.automorphisms,
            identity_index=0,
            table=sqrt2.table,
            root_enclosures=(Interval(F(-2), F(2)), Interval(F(-3, 2), F(-1))),
        )
        with pytest.raises((EnclosuresOverlap, Exception)):
            verify_galois_datum(bad)

    def test_quartic_fixture_is_cyclic(self, quartic):
        assert quartic.verified
        t = quartic.table
        # row of the generator acts as +1 shift: sigma^a . sigma^b = sigma^(a+b)
        assert t[1][1] == 2 and t[1][2] == 3 and t[1][3] == 0
        assert quartic.root_map == (0, 1, 2, 3)

    def test_irreducibility_budget(self, quartic):
        from dataclasses import replace

        from anosovforms.errors import IrreducibilityBudgetExceeded

        bare = replace(quartic, assume_irreducible=False)
        with pytest.raises(IrreducibilityBudgetExceeded):
            verify_galois_datum(bare, factor_budget=1)
        flagged = replace(quartic, assume_irreducible=True)
        out = verify_galois_datum(flagged, factor_budget=1)
        assert out.verified and out.assume_irreducible
        # with enough budget the proof clears the flag
        proven = verify_galois_datum(flagged)
        assert proven.verified and not proven.assume_irreducible


class TestBiquadratic:
    def test_5_2(self, biquad52):
        assert biquad52.min_poly == P([9, 0, -14, 0, 1])
        assert biquad52.verified

    def test_2_3(self):
        d = biquadratic_datum(2, 3)
        assert d.min_poly == P([1, 0, -10, 0, 1])

    def test_rejects_non_squarefree(self):
        with pytest.raises(BadParameters):
            biquadratic_datum(4, 2)
        with pytest.raises(BadParameters):
            biquadratic_datum(5, 5)

    def test_klein_four(self, biquad52):
        t = biquad52.table
        for i in range(4):
            assert t[i][i] == 0  # every element squares to the identity

    def test_sqrt_elements(self, biquad52):
        sk, sl = biquadratic_sqrts(biquad52, 5, 2)
        assert sk * sk == 5 and sl * sl == 2
        tau = next(i for i in range(4)
                   if i != 0 and apply_automorphism(biquad52, i, sk) == sk)
        assert apply_automorphism(biquad52, tau, sl) == -sl


class TestElements:
    def test_identity_action(self, sqrt2):
        x = sqrt2.element([3, 7])
        assert apply_automorphism(sqrt2, 0, x) == x

    def test_conjugation(self, sqrt2):
        x = sqrt2.element([1, 1])
        assert apply_automorphism(sqrt2, 1, x) == sqrt2.element([1, -1])

    def test_arithmetic(self, sqrt2):
        s = sqrt2.element([0, 1])
        assert s * s == 2
        assert (1 + s) * (1 - s) == -1
        assert (1 + s).inverse() == s - 1
        assert (s / s) == 1

    def test_datum_mismatch(self, sqrt2, quartic):
        with pytest.raises(DatumMismatch):
            sqrt2.element([1, 1]) + quartic.element([1])

    def test_minimal_polynomial(self, sqrt2, quartic):
        assert minimal_polynomial(sqrt2.one()) == P([-1, 1])
        assert minimal_polynomial(sqrt2.element([1, 1])) == P([-1, -2, 1])
        assert minimal_polynomial(quartic.generator()) == P([1, 1, -4, -4, 1])

    def test_units(self, sqrt2, quartic):
        assert is_algebraic_unit(sqrt2.element([1, 1]))
        assert not is_algebraic_unit(sqrt2.element([2]))
        assert not is_algebraic_unit(sqrt2.element([0, 1]))  # sqrt2: norm -2
        assert is_algebraic_unit(quartic.generator())

    def test_power_arithmetic(self, quartic):
        th = quartic.generator()
        assert th ** 4 == 4 * th ** 3 + 4 * th ** 2 - th - 1
        assert th ** -1 == th.inverse()


class TestEnclosures:
    def test_rational_point(self, sqrt2):
        iv = conjugate_modulus_interval(sqrt2.element([2]), 1, F(1, 10 ** 6))
        assert iv == Interval(F(2), F(2))

    def test_conjugate_of_unit(self, sqrt2):
        x = sqrt2.element([1, 1])
        iv = conjugate_modulus_interval(x, 1, F(1, 1000))
        assert iv.width <= F(1, 1000)
        # contains sqrt(2) - 1 ~ 0.41421
        assert iv.lo < F(41422, 100000) < iv.hi or iv.contains(F(414213, 10 ** 6))

    def test_quartic_largest(self, quartic):
        th = quartic.generator()
        iv = conjugate_modulus_interval(th, 0, F(1, 100))
        assert iv.strictly_greater(1)

    def test_compare_abs(self, sqrt2):
        x = sqrt2.element([1, 1])
        assert compare_abs_to_one(x, 0) == 1
        assert compare_abs_to_one(x, 1) == -1
        assert compare_abs_to_one(sqrt2.element([-1]), 0) == 0

    def test_refine(self):
        p = P([-2, 0, 1])
        iv = refine_enclosure(p, Interval(F(1), F(2)), F(1, 10 ** 9))
        assert iv.width <= F(1, 10 ** 9)
        assert iv.lo ** 2 < 2 < iv.hi ** 2


class TestInvariants:
    def test_table_polynomial_consistency(self, quartic):
        rng_elems = [
            quartic.element([1, 2, 0, -1]),
            quartic.element([F(1, 2), 0, 3, F(-2, 3)]),
        ]
        for x in rng_elems:
            for i in range(4):
                for j in range(4):
                    lhs = apply_automorphism(
                        quartic, i, apply_automorphism(quartic, j, x)
                    )
                    rhs = apply_automorphism(quartic, quartic.table[i][j], x)
                    assert lhs == rhs

    def test_unit_norm_product_encloses_one(self, quartic):
        th = quartic.generator()
        prod = Interval(F(1), F(1))
        for i in range(4):
            prod = prod.mul(conjugate_modulus_interval(th, i, F(1, 10 ** 4)))
        assert prod.contains(F(1))

    def test_minpoly_invariant_under_automorphisms(self, quartic):
        x = quartic.element([1, -1, 2, 0])
        mp = minimal_polynomial(x)
        for i in range(4):
            assert minimal_polynomial(apply_automorphism(quartic, i, x)) == mp

    def test_enclosures_contain_one_sign_change(self, quartic):
        p = quartic.min_poly
        for iv in quartic.root_enclosures:
            assert (p.eval(iv.lo) > 0) != (p.eval(iv.hi) > 0)
        for a, b in zip(quartic.root_enclosures, quartic.root_enclosures[1:]):
            assert b.hi < a.lo


class TestDegreeOne:
    def test_rational_datum(self):
        d = datum_from_automorphism_polys(
            P([1, 1]), [P([-1])], [Interval(F(-1), F(-1))]
        )
        assert d.degree == 1
        x = d.element([-1])
        assert minimal_polynomial(x) == P([1, 1])
        assert is_algebraic_unit(x)
