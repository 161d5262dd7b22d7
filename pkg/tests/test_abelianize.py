import random

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as smith_normal_form_sympy
from hypothesis import given, strategies as st

from hildenlift.abelianize import (AbelianInvariants, Presentation, abelian_invariants, determinant,
                                   invariant_factors, matmul, min_generators_lower_bound,
                                   rs_cycle_presentation, smith_normal_form)

from oracles import invariant_factors_by_minors


def is_snf(S):
    rows, cols = len(S), len(S[0]) if S else 0
    diag = []
    for i in range(rows):
        for j in range(cols):
            if i != j and S[i][j]:
                return False
    for i in range(min(rows, cols)):
        diag.append(S[i][i])
    if any(d < 0 for d in diag):
        return False
    nz = [d for d in diag if d]
    if diag[: len(nz)] != nz:
        return False
    return all(b % a == 0 for a, b in zip(nz, nz[1:]))


def check_decomposition(M):
    S, U, V = smith_normal_form(M)
    assert S == matmul(matmul(U, M), V)
    assert abs(determinant(U)) == 1
    assert abs(determinant(V)) == 1
    assert is_snf(S)
    return S


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c), min_size=r, max_size=r)))


class TestSmithNormalForm:
    def test_diag_2_3(self):
        S, _, _ = smith_normal_form([[2, 0], [0, 3]])
        assert S == [[1, 0], [0, 6]]

    def test_zero(self):
        S, U, V = smith_normal_form([[0, 0], [0, 0]])
        assert S == [[0, 0], [0, 0]]
        assert U == V == [[1, 0], [0, 1]]

    def test_diag_2_2(self):
        assert smith_normal_form([[2, 0], [0, 2]])[0] == [[2, 0], [0, 2]]

    def test_negative_pivot(self):
        assert smith_normal_form([[-4]])[0] == [[4]]

    def test_rectangular(self):
        S = check_decomposition([[4, 2]])
        assert S == [[2, 0]]
        S = check_decomposition([[4], [6], [10]])
        assert S == [[2], [0], [0]]

    def test_needs_divisibility_fix(self):
        # diagonal but 2 does not divide 3 and 4 does not divide 6
        S = check_decomposition([[4, 0, 0], [0, 6, 0], [0, 0, 10]])
        assert [S[i][i] for i in range(3)] == [2, 2, 60]

    @given(matrices)
    def test_decomposition_property(self, M):
        check_decomposition(M)

    @given(matrices)
    def test_against_sympy(self, M):
        S = smith_normal_form(M)[0]
        ours = [S[i][i] for i in range(min(len(M), len(M[0])))]
        ref = smith_normal_form_sympy(sympy.Matrix(M), domain=sympy.ZZ)
        theirs = [abs(int(ref[i, i])) for i in range(min(len(M), len(M[0])))]
        assert ours == theirs

    def test_minors_oracle(self):
        rng = random.Random(7)
        for _ in range(40):
            r, c = rng.randint(1, 4), rng.randint(1, 4)
            M = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
            assert invariant_factors(M) == invariant_factors_by_minors(M)

    def test_determinant_matches_sympy(self):
        rng = random.Random(3)
        for k in range(1, 7):
            M = [[rng.randint(-5, 5) for _ in range(k)] for _ in range(k)]
            assert determinant(M) == int(sympy.Matrix(M).det())


class TestAbelianInvariants:
    def test_free_cyclic(self):
        assert abelian_invariants(Presentation(("a",))) == AbelianInvariants(1)

    def test_z2(self):
        assert abelian_invariants(Presentation(("a",), ((1, 1),))) == AbelianInvariants(0, (2,))

    def test_two_powers(self):
        p = Presentation(("a", "b"), ((1,) * 4, (1, 1)))
        assert abelian_invariants(p) == AbelianInvariants(1, (2,))

    def test_commutator_relator(self):
        p = Presentation(("a", "b"), ((1, 2, -1, -2),))
        assert abelian_invariants(p) == AbelianInvariants(2)

    def test_rs_cycle(self):
        inv = abelian_invariants(rs_cycle_presentation(3))
        assert inv == AbelianInvariants(6)

    def test_bad_relator(self):
        with pytest.raises(ValueError):
            Presentation(("a",), ((2,),))

    def test_invariants_validation(self):
        with pytest.raises(ValueError):
            AbelianInvariants(0, (2, 3))
        with pytest.raises(ValueError):
            AbelianInvariants(0, (1,))

    def test_str(self):
        assert str(AbelianInvariants(1, (2, 2))) == "Z + Z/2 + Z/2"
        assert str(AbelianInvariants(0)) == "0"


class TestTietzeInvariance:
    @staticmethod
    def random_presentation(rng):
        k = rng.randint(1, 4)
        rels = []
        for _ in range(rng.randint(1, 4)):
            rels.append(tuple(rng.choice([1, -1]) * rng.randint(1, k) for _ in range(rng.randint(1, 8))))
        return Presentation(tuple(f"g{i}" for i in range(1, k + 1)), tuple(rels))

    def test_moves(self):
        rng = random.Random(11)
        for _ in range(100):
            p = self.random_presentation(rng)
            base = abelian_invariants(p)
            rels = list(p.relators)
            i = rng.randrange(len(rels))
            k = len(p.generators)
            g = tuple(rng.choice([1, -1]) * rng.randint(1, k) for _ in range(rng.randint(1, 3)))
            g_inv = tuple(-a for a in reversed(g))
            moved = [
                rels[:i] + [g + rels[i] + g_inv] + rels[i + 1:],  # conjugation
                rels[:i] + [tuple(-a for a in reversed(rels[i]))] + rels[i + 1:],  # inversion
                rels + [rels[i] + rels[rng.randrange(len(rels))]],  # product of relators added
                [rels[i] + rels[(i + 1) % len(rels)] if j == i else r for j, r in enumerate(rels)]
                if len(rels) > 1 else rels,  # replace by product with another relator
            ]
            for new in moved:
                assert abelian_invariants(Presentation(p.generators, tuple(new))) == base


class TestLowerBound:
    def test_z_z2_z2(self):
        assert min_generators_lower_bound(AbelianInvariants(1, (2, 2))) == 3

    def test_z(self):
        assert min_generators_lower_bound(AbelianInvariants(1)) == 1

    def test_trivial(self):
        assert min_generators_lower_bound(AbelianInvariants(0)) == 0
