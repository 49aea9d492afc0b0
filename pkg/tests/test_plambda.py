import random
from fractions import Fraction

import pytest

from baslab.errors import DomainError
from baslab.hpoly import HPoly, divides, twist
from baslab.plambda import (
    build_p_lambda,
    degree_check,
    divisibility_check,
    evaluate_twisted,
    find_witness,
    find_witness_for,
)
from baslab.rootsys import Weight, build_root_system


def W(*coords):
    return Weight(tuple(Fraction(c) for c in coords))


def embed_a1(p: HPoly, rank, slot):
    """Embed a rank-1 polynomial into the chosen variable of a bigger ring."""
    terms = {}
    for (e,), c in p.terms.items():
        key = [0] * rank
        key[slot] = e
        terms[tuple(key)] = c
    return HPoly(rank, terms)


class TestBuild:
    def test_a1_fundamental(self):
        rs = build_root_system("A1")
        p = build_p_lambda(rs, W(1))
        assert p.expanded == HPoly.variable(1, 0)
        assert len(p.factors) == 1

    def test_a1_twice_fundamental(self):
        rs = build_root_system("A1")
        p = build_p_lambda(rs, W(2))
        h = HPoly.variable(1, 0)
        assert p.expanded == h * (h - 1)

    def test_zero_weight_empty_product(self):
        for spec in ("A1", "A2", "B2"):
            rs = build_root_system(spec)
            p = build_p_lambda(rs, W(*([0] * rs.rank)))
            assert p.expanded == HPoly.const(rs.rank, 1)
            assert p.degree == 0

    def test_a2_rho_degree_four(self):
        # pairings of rho with the three positive coroots are 1, 1, 2
        rs = build_root_system("A2")
        p = build_p_lambda(rs, rs.rho)
        assert p.degree == 4
        assert p.expanded.total_degree() == 4

    def test_rejects_non_dominant(self):
        rs = build_root_system("A1")
        with pytest.raises(DomainError):
            build_p_lambda(rs, W(-1))
        with pytest.raises(DomainError):
            build_p_lambda(rs, W(Fraction(1, 2)))


class TestStructuralChecks:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 5])
    def test_a1_degree(self, n):
        rs = build_root_system("A1")
        p = build_p_lambda(rs, W(n))
        assert degree_check(p)
        assert p.expanded.total_degree() == max(n, 0) if n else p.degree == 0

    def test_product_degree_adds(self):
        rs = build_root_system("A1xA1")
        p = build_p_lambda(rs, W(2, 3))
        assert p.degree == 5 and degree_check(p)

    def test_a1_divisibility(self):
        rs = build_root_system("A1")
        assert divisibility_check(build_p_lambda(rs, W(2)))

    def test_zero_weight_divisibility_vacuous(self):
        rs = build_root_system("A2")
        assert divisibility_check(build_p_lambda(rs, W(0, 0)))

    def test_a2_omega1_exact_divisor_set(self):
        # P = h1 * (h1 + h2 + 1); the forms from coroots pairing >= 1 divide,
        # and the forms attached to the remaining coroot do not
        rs = build_root_system("A2")
        p = build_p_lambda(rs, W(1, 0))
        h1, h2 = HPoly.variable(2, 0), HPoly.variable(2, 1)
        assert p.expanded == h1 * (h1 + h2 + 1)
        assert divisibility_check(p)
        assert not divides(h2, p.expanded)[0]
        assert not divides(h1 + h2, p.expanded)[0]

    def test_product_factorization(self):
        a1 = build_root_system("A1")
        prod = build_root_system("A1xA1")
        for lam in [(2, 1), (3, 2), (0, 2)]:
            big = build_p_lambda(prod, W(*lam)).expanded
            left = embed_a1(build_p_lambda(a1, W(lam[0])).expanded, 2, 0)
            right = embed_a1(build_p_lambda(a1, W(lam[1])).expanded, 2, 1)
            assert big == left * right


class TestWitness:
    def test_a1_at_zero(self):
        rs = build_root_system("A1")
        res = find_witness(rs, W(1), W(0))
        assert res.witness.word_str() == "s1"
        assert res.value == -2

    def test_antidominant_shift_gives_identity(self):
        rs = build_root_system("A1")
        res = find_witness(rs, W(1), W(-3))  # x + rho = -2w antidominant
        assert res.witness.is_identity()
        assert res.value != 0

    def test_a1_on_vanishing_locus(self):
        rs = build_root_system("A1")
        # P(w) = 1 * 0 at x = w for lambda = 2w
        p = build_p_lambda(rs, W(2))
        assert p.expanded.evaluate(W(1)) == 0
        res = find_witness(rs, W(2), W(1))
        assert res.witness.word_str() == "s1"
        assert res.value == 12  # (-h-2)(-h-3) at h = 1

    def test_factored_evaluation_matches_expansion(self):
        rng = random.Random(17)
        for spec in ("A1", "A2"):
            rs = build_root_system(spec)
            p = build_p_lambda(rs, rs.rho)
            for w in rs.enumerate_weyl():
                tw = twist(rs, w, p.expanded)
                for _ in range(5):
                    x = W(*[Fraction(rng.randint(-5, 5), rng.randint(1, 2))
                            for _ in range(rs.rank)])
                    assert evaluate_twisted(p, w, x) == tw.evaluate(x)

    def test_witness_certified_on_walls(self):
        rng = random.Random(23)
        for spec in ("A2", "B2", "G2"):
            rs = build_root_system(spec)
            p = build_p_lambda(rs, rs.rho)
            for k in range(30):
                coords = [Fraction(rng.randint(-5, 5), rng.choice([1, 2, 3]))
                          for _ in range(rs.rank)]
                if k % 3 == 1:
                    coords[rng.randrange(rs.rank)] = Fraction(0)
                if k % 3 == 2:
                    coords[rng.randrange(rs.rank)] = Fraction(rng.randint(0, 2))
                res = find_witness_for(p, W(*coords))
                assert res.value != 0
                assert evaluate_twisted(p, res.witness, W(*coords)) == res.value

    def test_nonvanishing_interior(self):
        rng = random.Random(29)
        for spec in ("A1", "A2", "B2"):
            rs = build_root_system(spec)
            p = build_p_lambda(rs, rs.rho)
            for _ in range(20):
                # x + rho strictly antidominant
                x = W(*[Fraction(-rng.randint(2, 8), 1) for _ in range(rs.rank)])
                assert p.expanded.evaluate(x) != 0
                assert find_witness_for(p, x).witness.is_identity()

    def test_twist_preserves_degree_over_group(self):
        for spec in ("A1", "A2", "B2", "A1xA1"):
            rs = build_root_system(spec)
            p = build_p_lambda(rs, rs.rho)
            for w in rs.enumerate_weyl():
                assert twist(rs, w, p.expanded).total_degree() == p.degree
