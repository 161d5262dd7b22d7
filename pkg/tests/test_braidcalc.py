import pytest
from hypothesis import given

from hildenlift.braidcalc import (BraidWord, NamedElement, fulltwist_word, gamma, named_word,
                                  perm_of, syntactic_cancel)
from hildenlift.freegroup import FreeAut, FreeWord, common_conjugator, compose, out_equal, puncture_perm
from hildenlift.perm import Perm

from conftest import braid_words, random_braid


def transposition_product(b: BraidWord) -> Perm:
    """Oracle: multiply transposition Perms directly, rightmost acting first."""
    p = Perm.identity(b.m)
    for a in b.letters:
        p = p * Perm.transposition(b.m, abs(a), abs(a) + 1)
    return p


class TestPermOf:
    def test_sigma1(self):
        assert perm_of(BraidWord(4, (1,))) == Perm.from_cycles(4, (1, 2))

    def test_s1(self):
        assert perm_of(named_word(NamedElement("s", 1, 1))) == Perm.from_cycles(4, (1, 3), (2, 4))

    def test_r(self):
        assert perm_of(named_word(NamedElement("R", 1))) == Perm.from_cycles(4, (1, 2), (3, 4))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_catalog_permutations(self, n):
        m = 2 * n + 2
        for i in range(1, n + 1):
            expected = Perm.from_cycles(m, (2 * i - 1, 2 * i + 1), (2 * i, 2 * i + 2))
            assert perm_of(named_word(NamedElement("s", n, i))) == expected
            assert perm_of(named_word(NamedElement("r", n, i))) == expected
        for j in range(1, n + 2):
            assert perm_of(named_word(NamedElement("t", n, j))).is_identity()
        r = Perm.from_cycles(m, *[(2 * i - 1, 2 * i) for i in range(1, n + 2)])
        assert perm_of(named_word(NamedElement("R", n))) == r

    @given(braid_words(6))
    def test_matches_oracle(self, b):
        assert perm_of(b) == transposition_product(b)

    @given(braid_words(5), braid_words(5))
    def test_homomorphism(self, b1, b2):
        assert perm_of(b1 * b2) == perm_of(b1) * perm_of(b2)


class TestNamedWord:
    def test_s1(self):
        assert named_word(NamedElement("s", 1, 1)) == BraidWord(4, (2, 3, 1, 2))

    def test_r1(self):
        assert named_word(NamedElement("r", 1, 1)) == BraidWord(4, (-2, -3, 1, 2))

    @pytest.mark.parametrize("n", [1, 3])
    def test_t1(self, n):
        assert named_word(NamedElement("t", n, 1)).letters == (1, 1)

    def test_s_product_order(self):
        n = 3
        expected = (named_word(NamedElement("s", n, 3)) * named_word(NamedElement("s", n, 2))
                    * named_word(NamedElement("s", n, 1)))
        assert named_word(NamedElement("S", n)) == expected

    def test_fulltwist_length(self):
        assert len(fulltwist_word(4)) == 12

    @pytest.mark.parametrize("tag,i", [("s", 0), ("s", 3), ("r", 3), ("t", 4), ("sigma", 6)])
    def test_range_errors(self, tag, i):
        with pytest.raises(ValueError):
            NamedElement(tag, 2, i)


class TestSyntacticCancel:
    def test_pair(self):
        assert syntactic_cancel(BraidWord(4, (1, -1))) == BraidWord(4)

    def test_no_cancel(self):
        assert syntactic_cancel(BraidWord(4, (1, 2))) == BraidWord(4, (1, 2))

    def test_prefix(self):
        assert syntactic_cancel(BraidWord(4, (-2, 2, 1))) == BraidWord(4, (1,))

    @given(braid_words(5))
    def test_same_mapping_class(self, b):
        assert out_equal(gamma(syntactic_cancel(b)), gamma(b))


class TestGamma:
    def test_sigma1(self):
        phi = gamma(BraidWord(4, (1,)))
        assert phi.image_letters == ((1, 2, -1), (1,), (3,))

    def test_sigma3_hand_substitution(self):
        # x3 -> x3 x4 x3^-1 with x4 = (x1 x2 x3)^-1, reduced by hand
        phi = gamma(BraidWord(4, (3,)))
        assert phi.image_letters == ((1,), (2,), (-2, -1, -3))

    def test_fulltwist_trivial(self):
        for m in (4, 6, 8):
            assert out_equal(gamma(fulltwist_word(m)), FreeAut.identity(m - 1))

    def test_fulltwist_inverse_also_trivial(self):
        assert out_equal(gamma(fulltwist_word(6).inverse()), FreeAut.identity(5))

    @pytest.mark.parametrize("m", [4, 6, 8, 10])
    def test_perm_agrees_on_random_words(self, m, rng):
        for _ in range(500):
            b = random_braid(rng, m, rng.randint(0, 15))
            assert puncture_perm(gamma(b)) == perm_of(b)

    @pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8, 9, 10])
    def test_braid_relations_exhaustive(self, m):
        for i in range(1, m - 1):
            assert out_equal(gamma(BraidWord(m, (i, i + 1, i))), gamma(BraidWord(m, (i + 1, i, i + 1))))
        for i in range(1, m):
            for j in range(i + 2, m):
                assert out_equal(gamma(BraidWord(m, (i, j))), gamma(BraidWord(m, (j, i))))

    @pytest.mark.parametrize("m", [4, 6, 8])
    def test_spherical_relation(self, m):
        word = BraidWord(m, tuple(range(1, m)) + tuple(range(m - 1, 0, -1)))
        assert common_conjugator(gamma(word)) is not None

    def test_spherical_relation_fails_on_subchain(self):
        # dropping the last generator leaves a nontrivial point-pushing class
        word = BraidWord(6, (1, 2, 3, 4, 4, 3, 2, 1))
        assert common_conjugator(gamma(word)) is None

    @given(braid_words(6, 8), braid_words(6, 8))
    def test_homomorphism(self, b1, b2):
        assert out_equal(gamma(b1 * b2), compose(gamma(b1), gamma(b2)))

    def test_left_first_convention_is_reversal(self):
        b = BraidWord(6, (1, -4, 2, 5))
        assert gamma(b, "left-first") == gamma(b.reversed())

    def test_unknown_convention(self):
        with pytest.raises(ValueError):
            gamma(BraidWord(4, (1,)), "sideways")

    def test_puncture_shaped(self, rng):
        for m in (4, 6, 8):
            for _ in range(50):
                phi = gamma(random_braid(rng, m, 20))
                puncture_perm(phi)  # raises if not puncture-shaped
                for img in phi.images:
                    assert isinstance(img, FreeWord)
