import random
from fractions import Fraction as F

import pytest

from anosovforms.anosov import certify
from anosovforms.errors import (
    BadDiscriminant,
    DegeneratePfaffian,
    DoesNotPreserveW,
    NotTwoStep,
    OddDimension,
    SolutionMismatch,
)
from anosovforms.exactmath import Polynomial, RationalMatrix
from anosovforms.liealg import LieAlgebra, abelian, heisenberg
from anosovforms.pfaffian import (
    BinaryQuadraticForm,
    PellSolution,
    SkewMap,
    adapted_split,
    binary_form_of,
    center_block,
    classify_type42,
    dual_automorphism,
    extend_degree_one,
    form_preserved_by,
    hk_algebra,
    j_map,
    nk_algebra,
    pell_automorphism,
    pfaffian,
    pfaffian_form,
    scheuneman_dual,
    solve_pell,
    squarefree_part_of_rational,
    wedge_square,
)
from anosovforms.recipes import recipe_count


def random_skew(rng, n):
    rows = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = F(rng.randint(-5, 5), rng.randint(1, 3))
            rows[i][j] = v
            rows[j][i] = -v
    return SkewMap(tuple(tuple(r) for r in rows))


class TestJMap:
    def test_nk_z1(self):
        jz = j_map(nk_algebra(5), [F(1), F(0)])
        m = jz.matrix
        assert m[0][2] == 1 and m[1][3] == 1
        assert m[0][1] == 0 and m[0][3] == 0 and m[1][2] == 0 and m[2][3] == 0

    def test_nk_z2(self):
        jz = j_map(nk_algebra(5), [F(0), F(1)])
        m = jz.matrix
        assert m[0][3] == 1 and m[1][2] == 5

    def test_abelian_zero_map(self):
        jz = j_map(abelian(4), [])
        assert all(x == 0 for row in jz.matrix for x in row)
        with pytest.raises(ValueError):
            j_map(abelian(4), [F(1)])  # abelian center part is empty

    def test_three_step_rejected(self):
        f4 = LieAlgebra("Q", 4, ((0, 1, 2, F(1)), (0, 2, 3, F(1))))
        with pytest.raises(NotTwoStep):
            j_map(f4, [F(1), F(1)])

    def test_heisenberg_adapted(self):
        jz = j_map(heisenberg(), [F(1)])
        assert jz.matrix[0][1] == 1


class TestPfaffian:
    def test_2x2(self):
        s = SkewMap(((F(0), F(7)), (F(-7), F(0))))
        assert pfaffian(s) == 7

    def test_standard_block(self):
        rows = [[F(0)] * 4 for _ in range(4)]
        rows[0][1], rows[1][0] = F(1), F(-1)
        rows[2][3], rows[3][2] = F(1), F(-1)
        assert pfaffian(SkewMap(tuple(tuple(r) for r in rows))) == 1

    def test_4x4_formula(self):
        rng = random.Random(2)
        for _ in range(30):
            s = random_skew(rng, 4)
            m = s.matrix
            expect = m[0][1] * m[2][3] - m[0][2] * m[1][3] + m[0][3] * m[1][2]
            assert pfaffian(s) == expect

    def test_square_is_det(self):
        rng = random.Random(3)
        for n in (4, 6):
            for _ in range(10):
                s = random_skew(rng, n)
                assert pfaffian(s) ** 2 == RationalMatrix(s.matrix).det()

    def test_congruence_scaling(self):
        rng = random.Random(4)
        for _ in range(10):
            s = random_skew(rng, 4)
            a = RationalMatrix(
                [[F(rng.randint(-3, 3)) for _ in range(4)] for _ in range(4)]
            )
            ats_a = a.transpose() * RationalMatrix(s.matrix) * a
            skew = SkewMap(ats_a.entries)
            assert pfaffian(skew) == a.det() * pfaffian(s)

    def test_odd_dimension(self):
        with pytest.raises(OddDimension):
            pfaffian(SkewMap(((F(0),),)))


class TestPfaffianForm:
    def test_nk_form(self):
        for k in (2, 5, 7):
            h = pfaffian_form(nk_algebra(k))
            assert h.coefficient((2, 0)) == -1
            assert h.coefficient((0, 2)) == k
            assert h.coefficient((1, 1)) == 0

    def test_nk_discriminant(self):
        for k in range(1, 11):
            bf = binary_form_of(nk_algebra(k))
            assert squarefree_part_of_rational(bf.discriminant) == \
                squarefree_part_of_rational(F(4 * k))

    def test_heisenberg_padded_rejected(self):
        padded = LieAlgebra("Q", 4, ((0, 1, 3, F(1)),))
        with pytest.raises((NotTwoStep, Exception)):
            binary_form_of(padded)  # type (2,1)-ish, not (4,2)


class TestClassify:
    def test_nk(self):
        assert classify_type42(nk_algebra(5)) == (5, True)
        assert classify_type42(nk_algebra(1)) == (1, False)
        assert classify_type42(nk_algebra(12)) == (3, True)

    def test_invariant_under_adapted_change_of_basis(self):
        rng = random.Random(9)
        a = nk_algebra(5)
        for _ in range(5):
            # block change of basis: degree-1 block T, center block S
            while True:
                t = RationalMatrix([[F(rng.randint(-2, 2)) for _ in range(4)]
                                    for _ in range(4)])
                if t.det() != 0:
                    break
            while True:
                s = RationalMatrix([[F(rng.randint(-2, 2)) for _ in range(2)]
                                    for _ in range(2)])
                if s.det() != 0:
                    break
            # transform structure constants: new basis vectors are columns
            cols_t = [[t[i, j] for i in range(4)] for j in range(4)]
            sinv = s.inverse()
            new_brackets = []
            for p in range(4):
                for q in range(p + 1, 4):
                    w = a.bracket(cols_t[p] + [F(0)] * 2, cols_t[q] + [F(0)] * 2)
                    z = [w[4], w[5]]
                    zz = [sinv[0, 0] * z[0] + sinv[0, 1] * z[1],
                          sinv[1, 0] * z[0] + sinv[1, 1] * z[1]]
                    # [b_p', b_q'] = sum_r zz[r] c_r' requires expressing in
                    # the new center basis: z = S zz
                    for r, c in enumerate(zz):
                        if c != 0:
                            new_brackets.append((p, q, 4 + r, c))
            changed = LieAlgebra("Q", 6, tuple(new_brackets))
            assert classify_type42(changed)[0] == 5

    def test_degenerate(self):
        degen = LieAlgebra("Q", 6, ((0, 1, 4, F(1)),))
        with pytest.raises((DegeneratePfaffian, Exception)):
            classify_type42(degen)


class TestPell:
    def test_examples(self):
        assert solve_pell(5) == PellSolution(3, 1)
        assert solve_pell(20) == PellSolution(18, 4)

    def test_square_rejected(self):
        with pytest.raises(BadDiscriminant):
            solve_pell(4)
        with pytest.raises(BadDiscriminant):
            solve_pell(-3)

    def test_brute_force_agreement(self):
        import math

        def brute(d, ymax=10 ** 4):
            for y in range(1, ymax):
                t = 4 + d * y * y
                r = int(math.isqrt(t))
                if r * r == t:
                    return (r, y)
            return None

        for d in (5, 8, 12, 13, 20, 21, 24):
            sol = solve_pell(d)
            assert (sol.x, sol.y) == brute(d)

    def test_u_matrix(self):
        h = BinaryQuadraticForm(1, 1, -1)
        u = pell_automorphism(h, PellSolution(3, 1))
        assert u == RationalMatrix([[1, 1], [1, 2]])
        assert u.charpoly() == Polynomial([1, -3, 1])

    def test_u_identity(self):
        h = BinaryQuadraticForm(1, 0, -5)
        u = pell_automorphism(h, PellSolution(2, 0))
        assert u == RationalMatrix.identity(2)

    def test_solution_mismatch(self):
        h = BinaryQuadraticForm(1, 0, -5)
        with pytest.raises(SolutionMismatch):
            pell_automorphism(h, PellSolution(3, 1))

    def test_all_small_solutions_preserve_form(self):
        import math

        for d in (5, 8, 12, 13, 20):
            h = BinaryQuadraticForm(1, 0, F(-d, 4)) if d % 4 == 0 else \
                BinaryQuadraticForm(1, d % 2, F((d % 2) ** 2 - d, 4))
            assert h.discriminant == d
            assert h.is_integer()
            for y in range(1, 51):
                t = 4 + d * y * y
                r = int(math.isqrt(t))
                if r * r != t:
                    continue
                u = pell_automorphism(h, PellSolution(r, y))
                assert form_preserved_by(h, u)
                assert u.det() == 1


class TestScheuneman:
    def test_nk_dual_is_hk(self):
        for k in (2, 3, 5):
            assert scheuneman_dual(nk_algebra(k)).brackets == hk_algebra(k).brackets

    def test_double_dual(self):
        for k in (2, 3, 5):
            assert scheuneman_dual(scheuneman_dual(nk_algebra(k))).brackets == \
                nk_algebra(k).brackets

    def test_free_two_step_dual_is_abelian(self):
        free3 = LieAlgebra("Q", 6, ((0, 1, 3, F(1)), (0, 2, 4, F(1)),
                                    (1, 2, 5, F(1))))
        d = scheuneman_dual(free3)
        assert d.dim == 3 and d.brackets == ()

    def test_abelian_dual_is_free_two_step(self):
        free3 = LieAlgebra("Q", 6, ((0, 1, 3, F(1)), (0, 2, 4, F(1)),
                                    (1, 2, 5, F(1))))
        d = scheuneman_dual(abelian(3))
        assert d.dim == 6 and d.brackets == free3.brackets
        assert scheuneman_dual(d).brackets == ()

    def test_hk_type(self):
        assert adapted_split(hk_algebra(5)) == (4, 4)


class TestDualAutomorphism:
    def test_identity(self):
        a = nk_algebra(5)
        d = scheuneman_dual(a)
        ma, md = dual_automorphism(RationalMatrix.identity(4), a, d)
        assert ma == RationalMatrix.identity(6)
        assert md == RationalMatrix.identity(8)

    def test_scaling_extends(self):
        a = nk_algebra(5)
        d = scheuneman_dual(a)
        ma, md = dual_automorphism(RationalMatrix.identity(4) * F(2), a, d)
        cert = certify(a, ma)
        assert not cert.integer_like  # scaling is an automorphism, not Anosov

    def test_count_output_dualizes_to_35(self):
        out = recipe_count(5, 2)
        alpha = out.matrix.submatrix(range(4), range(4))
        a = out.algebra
        d = scheuneman_dual(a)
        ma, md = dual_automorphism(alpha, a, d)
        assert ma == out.matrix
        cert = certify(d, md)
        assert cert.integer_like and cert.hyperbolic
        assert cert.signature == (3, 5)
        assert cert.algebra_type == (4, 4)

    def test_combined_eigenvalues(self):
        out = recipe_count(5, 2)
        alpha = out.matrix.submatrix(range(4), range(4))
        a = out.algebra
        d = scheuneman_dual(a)
        ma, md = dual_automorphism(alpha, a, d)
        ca = center_block(a, ma).charpoly()
        cd = center_block(d, md).charpoly()
        assert ca * cd == wedge_square(alpha).charpoly()

    def test_does_not_preserve(self):
        a = nk_algebra(5)
        bad = RationalMatrix([[1, 1, 0, 0], [0, 1, 0, 0],
                              [0, 0, 1, 0], [0, 0, 1, 1]])
        with pytest.raises(DoesNotPreserveW):
            extend_degree_one(a, bad)


def test_squarefree_part():
    assert squarefree_part_of_rational(F(4 * 5)) == 5
    assert squarefree_part_of_rational(F(5, 4)) == 5
    assert squarefree_part_of_rational(F(-18)) == -2
    assert squarefree_part_of_rational(F(1)) == 1
