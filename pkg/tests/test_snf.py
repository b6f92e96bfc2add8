"""Smith normal form, invariant factors, and the two charpoly routes."""

import random
from itertools import combinations

import pytest

from helpers import poly_det_cofactor, random_symmetric01
from lightsout import gfmat, snf
from lightsout.game import path_graph, petersen_graph, star_graph, switching_matrix
from lightsout.gfmat import PrimeFieldMatrix
from lightsout.gfpoly import Poly, poly_gcd, prod


def P(text, p=2):
    return Poly.parse(text, p)


def companion(f: Poly) -> PrimeFieldMatrix:
    """Companion matrix of a monic polynomial (charpoly equals f)."""
    n = f.degree
    p = f.p
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = (-f.coeffs[i]) % p
    return PrimeFieldMatrix(rows, p)


class TestCharMatrix:
    def test_zero_matrix(self):
        M = snf.char_matrix(PrimeFieldMatrix.zeros(2, 2, 2))
        assert M[0, 0] == P("x") and M[1, 1] == P("x")
        assert M[0, 1].is_zero and M[1, 0].is_zero

    def test_identity_1x1(self):
        M = snf.char_matrix(PrimeFieldMatrix.identity(1, 2))
        assert M[0, 0] == P("x + 1")

    def test_path2_negation_wraps(self):
        M = snf.char_matrix(PrimeFieldMatrix([[0, 1], [1, 0]], 2))
        assert M[0, 0] == P("x") and M[0, 1] == P("1")
        M3 = snf.char_matrix(PrimeFieldMatrix([[0, 1], [1, 0]], 3))
        assert M3[0, 1] == Poly.constant(2, 3)

    def test_requires_square(self):
        with pytest.raises(ValueError):
            snf.char_matrix(PrimeFieldMatrix.zeros(2, 3, 2))


class TestSmithNormalForm:
    def test_companion_matrix_is_nonderogatory(self):
        f = P("x^3 + x + 1")
        s = snf.invariant_factors(companion(f))
        assert s.invariant_factors == (Poly.one(2), Poly.one(2), f)

    def test_zero_2x2(self):
        s = snf.invariant_factors(PrimeFieldMatrix.zeros(2, 2, 2))
        assert s.invariant_factors == (P("x"), P("x"))

    def test_petersen_pinned(self):
        s = snf.invariant_factors(switching_matrix(petersen_graph()))
        assert len(s) == 10
        assert s.invariant_factors[:5] == (Poly.one(2),) * 5
        assert s.nontrivial() == (
            P("x + 1"),
            P("x^2 + x"),
            P("x^2 + x"),
            P("x^2 + x"),
            P("x^3 + x"),
        )
        assert sum(f.degree for f in s.nontrivial()) == 10

    def test_star5_pinned(self):
        s = snf.invariant_factors(switching_matrix(star_graph(5)))
        assert s.invariant_factors == (
            Poly.one(2),
            Poly.one(2),
            P("x"),
            P("x"),
            P("x^3"),
        )

    def test_path2_by_hand(self):
        s = snf.invariant_factors(PrimeFieldMatrix([[0, 1], [1, 0]], 2))
        assert s.invariant_factors == (Poly.one(2), P("x^2 + 1"))

    def test_identity_2x2(self):
        s = snf.invariant_factors(PrimeFieldMatrix.identity(2, 2))
        assert s.invariant_factors == (P("x + 1"), P("x + 1"))

    def test_unimodular_1x1(self):
        s = snf.smith_normal_form(snf.PolyMatrix([[Poly.one(2)]], 2))
        assert s.invariant_factors == (Poly.one(2),)

    def test_singular_matrix_rejected(self):
        x = P("x")
        with pytest.raises(ValueError, match="zero determinant"):
            snf.smith_normal_form(snf.PolyMatrix([[x, x], [x, x]], 2))

    def test_divisibility_chain_and_degree_sum(self):
        rng = random.Random(61)
        for p in (2, 3, 5):
            for _ in range(25):
                n = rng.randint(1, 7)
                A = PrimeFieldMatrix(random_symmetric01(n, rng), p)
                s = snf.invariant_factors(A)
                assert len(s) == n
                assert sum(f.degree for f in s.invariant_factors) == n
                assert all(f.is_monic for f in s.invariant_factors)
                for a, b in zip(s.invariant_factors, s.invariant_factors[1:]):
                    assert (b % a).is_zero

    def test_determinantal_divisors(self):
        # s_1 ... s_k equals the monic gcd of all k x k minors of xI - A,
        # with minors computed by plain cofactor expansion.
        rng = random.Random(67)
        for p in (2, 3):
            for _ in range(8):
                n = rng.randint(1, 4)
                A = PrimeFieldMatrix(
                    [[rng.randrange(p) for _ in range(n)] for _ in range(n)], p
                )
                cm = snf.char_matrix(A).to_lists()
                s = snf.invariant_factors(A)
                for k in range(1, n + 1):
                    g = Poly.zero(p)
                    for rows_sel in combinations(range(n), k):
                        for cols_sel in combinations(range(n), k):
                            sub = [[cm[i][j] for j in cols_sel] for i in rows_sel]
                            g = poly_gcd(g, poly_det_cofactor(sub, p))
                    assert g == prod(s.invariant_factors[:k], p).monic()

    def test_paths_are_nonderogatory(self):
        for m in range(1, 9):
            s = snf.invariant_factors(switching_matrix(path_graph(m)))
            assert len(s.nontrivial()) == 1

    def test_factor_count_divisible_by_x_equals_nullity(self):
        rng = random.Random(71)
        x = P("x")
        for _ in range(40):
            n = rng.randint(1, 7)
            A = PrimeFieldMatrix(random_symmetric01(n, rng), 2)
            s = snf.invariant_factors(A)
            divisible = sum(1 for f in s.invariant_factors if (f % x).is_zero)
            assert divisible == gfmat.rank_nullity(A).nullity


class TestCharpolyRoutes:
    def test_path2_over_integers(self):
        assert snf.charpoly_oracle([[0, 1], [1, 0]], 2) == P("x^2 + 1")
        assert snf.charpoly_oracle([[0, 1], [1, 0]], 5) == Poly((4, 0, 1), 5)

    def test_path3_hand_cofactor(self):
        # det(xI - A) = x^3 - 2x over the integers, so x^3 mod 2, x^3 + x mod 3.
        A = path_graph(3).adjacency_rows()
        assert snf.charpoly_oracle(A, 2) == P("x^3")
        assert snf.charpoly_oracle(A, 3) == Poly((0, 1, 0, 1), 3)

    def test_petersen_matches_snf_product(self):
        A = switching_matrix(petersen_graph())
        s = snf.invariant_factors(A)
        assert snf.charpoly_from_snf(s) == snf.charpoly_oracle(A, 2)
        assert snf.charpoly_from_snf(s) == P("x^10 + x^8 + x^6 + x^4")

    def test_charpoly_from_snf_examples(self):
        assert snf.charpoly_from_snf(
            snf.SnfResult((Poly.one(2), P("x^2 + 1")))
        ) == P("x^2 + 1")
        assert snf.charpoly_from_snf(snf.SnfResult((P("x"), P("x")))) == P("x^2")

    def test_known_closed_forms(self):
        # complete graph K_n: det(xI - A) = (x - (n-1)) (x + 1)^(n-1)
        for n in (2, 3, 4, 5):
            rows = [[0 if i == j else 1 for j in range(n)] for i in range(n)]
            for p in (2, 3, 5):
                expect = Poly((-(n - 1), 1), p) * Poly((1, 1), p) ** (n - 1)
                assert snf.charpoly_oracle(rows, p) == expect

    def test_oracle_requires_square(self):
        with pytest.raises(ValueError):
            snf.charpoly_oracle([[0, 1]], 2)

    def test_routes_agree_on_randoms(self):
        rng = random.Random(73)
        for _ in range(60):
            n = rng.randint(1, 8)
            rows = random_symmetric01(n, rng)
            for p in (2, 3, 5):
                A = PrimeFieldMatrix(rows, p)
                assert snf.charpoly_from_snf(
                    snf.invariant_factors(A)
                ) == snf.charpoly_oracle(rows, p)


class TestFactorData:
    def test_star5(self):
        s = snf.invariant_factors(switching_matrix(star_graph(5)))
        fd = snf.factor_data(s)
        assert fd.exponents == {P("x"): (1, 1, 3)}

    def test_path2(self):
        s = snf.invariant_factors(PrimeFieldMatrix([[0, 1], [1, 0]], 2))
        assert snf.factor_data(s).exponents == {P("x + 1"): (2,)}

    def test_all_units_empty_map(self):
        s = snf.smith_normal_form(snf.PolyMatrix([[Poly.one(2)]], 2))
        assert snf.factor_data(s).exponents == {}

    def test_exponents_nondecreasing_and_recompose(self):
        rng = random.Random(79)
        for p in (2, 3):
            for _ in range(20):
                n = rng.randint(1, 7)
                A = PrimeFieldMatrix(random_symmetric01(n, rng), p)
                s = snf.invariant_factors(A)
                fd = snf.factor_data(s)
                for exps in fd.exponents.values():
                    assert list(exps) == sorted(exps)
                recomposed = prod(
                    (q ** sum(es) for q, es in fd.exponents.items()), p
                )
                assert recomposed == snf.charpoly_from_snf(s)
