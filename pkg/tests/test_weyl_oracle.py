import random
from fractions import Fraction

import pytest

from baslab.errors import DomainError, RankMismatchError
from baslab.hpoly import HPoly
from baslab.weyl_oracle import (
    WeylOp,
    fourier,
    fourier_all,
    graded_basis,
    invariant_element,
    m_of_c,
    match_euler,
    oracle_verify,
    substitute_euler,
)


def gen(name, j=0, n=1):
    return WeylOp.generator(n, name, j)


class TestNormalOrdering:
    def test_canonical_commutation(self):
        x, dx = gen("x"), gen("dx")
        assert dx * x == x * dx + WeylOp.one(1)

    def test_coordinates_commute(self):
        x, y = gen("x"), gen("y")
        assert x * y == y * x

    def test_leibniz_iterated(self):
        x, dx = gen("x"), gen("dx")
        # dx x^2 = x^2 dx + 2x
        assert dx * (x * x) == x * x * dx + x.scale(2)

    def test_cross_factor_commutation(self):
        x1 = gen("x", 0, 2)
        dx2 = gen("dx", 1, 2)
        assert x1 * dx2 == dx2 * x1

    def test_factor_count_mismatch(self):
        with pytest.raises(RankMismatchError):
            gen("x", 0, 1) * gen("x", 0, 2)

    def test_grading_additive_under_mul(self):
        rng = random.Random(4)
        for _ in range(25):
            n = rng.choice([1, 2])
            e1 = tuple(rng.randint(0, 2) for _ in range(4 * n))
            e2 = tuple(rng.randint(0, 2) for _ in range(4 * n))
            a = WeylOp(n, {e1: Fraction(1)})
            b = WeylOp(n, {e2: Fraction(1)})
            expected = tuple(
                x + y for x, y in zip(WeylOp.term_weight(e1, n), WeylOp.term_weight(e2, n))
            )
            prod = a * b
            if not prod.is_zero():
                assert prod.is_homogeneous_of_weight(expected)


class TestFourier:
    def test_euler_image(self):
        e = WeylOp.euler(1, 0)
        assert fourier(e, 0) == e.scale(-1) - WeylOp.one(1).scale(2)

    def test_preserves_relation(self):
        # images of (x, dx) are (dy, -y); their commutator must stay 1
        fx = fourier(gen("x"), 0)
        fdx = fourier(gen("dx"), 0)
        assert fdx * fx - fx * fdx == WeylOp.one(1)

    def test_involution_on_generators(self):
        for name in ("x", "y", "dx", "dy"):
            g = gen(name)
            assert fourier(fourier(g, 0), 0) == g

    def test_double_fourier_is_identity_on_random_ops(self):
        rng = random.Random(7)
        for _ in range(20):
            terms = {tuple(rng.randint(0, 2) for _ in range(4)): Fraction(rng.randint(-3, 3))}
            a = WeylOp(1, terms)
            assert fourier(fourier(a, 0), 0) == a

    def test_automorphism_property(self):
        rng = random.Random(13)
        for _ in range(30):
            n = rng.choice([1, 2])
            j = rng.randrange(n)
            a = WeylOp(n, {tuple(rng.randint(0, 2) for _ in range(4 * n)): Fraction(rng.randint(-2, 3))})
            b = WeylOp(n, {tuple(rng.randint(0, 2) for _ in range(4 * n)): Fraction(rng.randint(-2, 3))})
            assert fourier(a * b, j) == fourier(a, j) * fourier(b, j)

    def test_weight_negation(self):
        a = WeylOp(2, {(2, 1, 0, 0, 0, 0, 1, 0): Fraction(1)})
        (w,) = a.weights()
        (fw,) = fourier(a, 0).weights()
        assert fw == (-w[0], w[1])
        (fw2,) = fourier_all(a).weights()
        assert fw2 == (-w[0], -w[1])

    def test_fixes_cross_operators(self):
        # x d/dy and y d/dx generate the symmetry the transform must respect
        e_cross = gen("x") * gen("dy")
        f_cross = gen("y") * gen("dx")
        assert fourier(e_cross, 0) == e_cross
        assert fourier(f_cross, 0) == f_cross


class TestGradedPieces:
    def test_basis_small(self):
        b1 = graded_basis((1,))
        assert [pv.terms[0][0] for pv in b1] == [(0, 1), (1, 0)]  # y then x
        assert len(graded_basis((2,))) == 3
        assert len(graded_basis((1, 1))) == 4

    def test_dimension_formula(self):
        assert len(graded_basis((3, 2, 1))) == 4 * 3 * 2

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            graded_basis((-1,))


class TestInvariantTensor:
    def test_lambda_one_is_alternating(self):
        inv = invariant_element((1,))
        # basis order: y = (0,1) index 0, x = (1,0) index 1
        entries = dict(inv.entries)
        assert entries[(1, 0)] == 1  # x (x) y
        assert entries[(0, 1)] == -1  # y (x) x
        assert len(entries) == 2

    def test_lambda_zero(self):
        inv = invariant_element((0,))
        assert dict(inv.entries) == {(0, 0): Fraction(1)}

    def test_block_tensor_structure(self):
        # (1,0): the nontrivial factor behaves like the n=1 answer, the
        # trivial factor contributes the identity pairing
        inv = invariant_element((1, 0))
        entries = dict(inv.entries)
        basis = inv.basis
        by_exps = {(basis[i], basis[k]): c for (i, k), c in entries.items()}
        assert by_exps[((1, 0, 0, 0), (0, 1, 0, 0))] == 1
        assert by_exps[((0, 1, 0, 0), (1, 0, 0, 0))] == -1
        assert len(by_exps) == 2

    def test_hand_solved_lambda_two(self):
        # unique invariant in the square of the 3-dim piece:
        # x^2 (x) y^2 - 2 xy (x) xy + y^2 (x) x^2 (binomial signs)
        inv = invariant_element((2,))
        basis = inv.basis
        by_exps = {(basis[i], basis[k]): c for (i, k), c in inv.entries}
        assert by_exps[((2, 0), (0, 2))] == 1
        assert by_exps[((1, 1), (1, 1))] == -2
        assert by_exps[((0, 2), (2, 0))] == 1


class TestMultiplicationMap:
    def test_lambda_one_gives_minus_euler(self):
        assert m_of_c((1,)) == WeylOp.euler(1, 0).scale(-1)

    def test_lambda_zero_gives_one(self):
        assert m_of_c((0,)) == WeylOp.one(1)

    def test_product_of_eulers_up_to_sign(self):
        m = m_of_c((1, 1))
        e1e2 = WeylOp.euler(2, 0) * WeylOp.euler(2, 1)
        assert m == e1e2 or m == e1e2.scale(-1)

    def test_weight_zero(self):
        for lam in [(1,), (2,), (2, 1)]:
            assert m_of_c(lam).is_homogeneous_of_weight((0,) * len(lam))

    def test_commutes_with_symmetry_generators(self):
        for lam in [(1,), (2,), (1, 1)]:
            n = len(lam)
            m = m_of_c(lam)
            for j in range(n):
                e_cross = WeylOp.generator(n, "x", j) * WeylOp.generator(n, "dy", j)
                f_cross = WeylOp.generator(n, "y", j) * WeylOp.generator(n, "dx", j)
                assert m.commutator(e_cross).is_zero()
                assert m.commutator(f_cross).is_zero()


class TestMatchEuler:
    def test_minus_euler(self):
        ok, c = match_euler(WeylOp.euler(1, 0).scale(-1), HPoly.variable(1, 0))
        assert ok and c == -1

    def test_constants(self):
        ok, c = match_euler(WeylOp.one(1), HPoly.const(1, 1))
        assert ok and c == 1

    def test_falling_factorial_normal_order(self):
        # E(E-1) expands to x^2 dx^2 + 2xy dx dy + y^2 dy^2
        e = WeylOp.euler(1, 0)
        lhs = e * (e - WeylOp.one(1))
        expected = WeylOp(1, {
            (2, 0, 2, 0): Fraction(1),
            (1, 1, 1, 1): Fraction(2),
            (0, 2, 0, 2): Fraction(1),
        })
        assert lhs == expected
        h = HPoly.variable(1, 0)
        ok, c = match_euler(lhs, h * (h - 1))
        assert ok and c == 1

    def test_mismatch(self):
        ok, c = match_euler(WeylOp.euler(1, 0), HPoly.variable(1, 0) ** 2)
        assert not ok and c == 0

    def test_substitute_euler_rank_check(self):
        with pytest.raises(RankMismatchError):
            substitute_euler(HPoly.variable(2, 0), 1)


class TestOracle:
    @pytest.mark.parametrize("n,scalar", [(0, 1), (1, -1), (2, 1), (3, -1)])
    def test_single_factor(self, n, scalar):
        rep = oracle_verify((n,))
        assert rep["pass"]
        assert rep["scalar"] == str(scalar)
        assert rep["dim_invariant_space"] == 1

    def test_lambda_three_formula_text(self):
        rep = oracle_verify((3,))
        assert rep["formula"] == "h1^3 - 3*h1^2 + 2*h1"  # h(h-1)(h-2)

    def test_two_factors(self):
        rep = oracle_verify((2, 1))
        assert rep["pass"]

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            oracle_verify((-1,))
