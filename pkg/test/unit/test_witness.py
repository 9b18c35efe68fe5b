"""
Unit tests for the witness constructions.
"""

from fractions import Fraction

import pytest

from src.core.exceptions import (
    CapExceededError,
    DimensionMismatchError,
    NonPositiveSeedError,
    WitnessError,
)
from src.exactla import RationalMatrix, is_positive_definite
from src.frames import coordinate
from src.subspaces import FormSpace, random_subspace, span
from src.witness import (
    LEMMA_M_STEPS,
    WitnessConfig,
    ab_matrices,
    ab_step,
    b_certificate,
    build_m2,
    certificate_holds,
    check_doubling,
    congruence_certificate,
    covered_steps,
    doubled_space,
    doubling_embed,
    family_member,
    invertibility_family_check,
    m2_form,
    positive_definite_report,
    verify_lemma_m,
    verify_m1_chain,
)


def M(rows):
    return RationalMatrix.from_rows(rows)


class TestRecursion:
    """A_k and B_k."""

    def test_level_one(self):
        big_a, big_b = ab_matrices(1, 3, 5)
        assert big_a == M([[3]]) and big_b == M([[5]])

    def test_level_two(self):
        big_a, big_b = ab_matrices(2)
        assert big_a == M([[2, 1], [1, 2]])
        assert big_b == M([[1, 1], [1, 2]])

    def test_level_three(self):
        big_a, big_b = ab_matrices(3)
        assert big_a == M([[3, 2, 1, 1], [2, 4, 1, 2], [1, 1, 2, 2], [1, 2, 2, 4]])
        assert big_b == M([[1, 1, 1, 1], [1, 2, 1, 2], [1, 1, 2, 2], [1, 2, 2, 4]])

    def test_step_matches(self):
        a, b = ab_matrices(2, "1/2", 3)
        assert ab_step(a, b) == ab_matrices(3, "1/2", 3)

    def test_config(self):
        config = WitnessConfig(4, "2/3")
        assert config.size == 8
        assert config.a == Fraction(2, 3)

    @pytest.mark.parametrize("a, b", [(0, 1), (1, -1), ("-1/2", 2)])
    def test_non_positive_seed(self, a, b):
        with pytest.raises(NonPositiveSeedError):
            ab_matrices(2, a, b)

    def test_level_zero(self):
        with pytest.raises(WitnessError):
            WitnessConfig(0)


class TestPositiveDefinite:
    """Leading minors and congruence certificates agree."""

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_both_methods(self, k):
        report = positive_definite_report(k)
        assert report.passed
        assert report.get("methods-agree").passed

    @pytest.mark.parametrize("k, c", [(2, 0), (3, "1/2"), (4, 3), (3, "-1/2")])
    def test_certificates(self, k, c):
        assert certificate_holds(k, c)

    def test_certificate_shape(self):
        p, d = congruence_certificate(3)
        big_a, _ = ab_matrices(3)
        assert p.transpose() @ big_a @ p == d
        assert is_positive_definite(d)

    def test_b_certificate(self):
        p, d = b_certificate(3, 2)
        _, big_b = ab_matrices(3, 1, 2)
        assert p.transpose() @ big_b @ p == RationalMatrix.scalar(2, 4)
        assert d == RationalMatrix.scalar(2, 4)

    def test_other_seeds(self):
        assert positive_definite_report(3, "1/3", 7).passed


class TestInvertibilityFamily:
    """a + (1 - 2^-j) b."""

    def test_members(self):
        assert family_member(1, 1, 0) == 1
        assert family_member(1, 1, 1) == Fraction(3, 2)
        assert family_member(1, 2, 2) == Fraction(5, 2)

    def test_positive_seeds(self):
        report = invertibility_family_check(1, 1)
        assert report.passed
        assert report.data["all_j"]

    def test_first_violation(self):
        report = invertibility_family_check(1, -2)
        assert not report.passed
        assert report.data["first_violation"] == 1
        assert not report.data["all_j"]

    def test_definite_matrices(self):
        report = invertibility_family_check(M([[2, 1], [1, 2]]), RationalMatrix.identity(2))
        assert report.passed and report.data["all_j"]

    def test_mixed_operands(self):
        with pytest.raises(WitnessError):
            invertibility_family_check(1, RationalMatrix.identity(2))


class TestM2:
    """The form making the canonical frame orthogonal."""

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_build(self, k):
        instance = build_m2(WitnessConfig(k))
        assert instance.report.passed, instance.report.failures()
        assert instance.ambient.dimension == 3 * 2 ** (k - 1)
        assert instance.frame.orthogonal and instance.frame.spanning

    def test_designated_elements(self):
        instance = build_m2(WitnessConfig(2))
        assert coordinate(instance.psi_a) == instance.A
        assert coordinate(instance.psi_b) == instance.B
        assert instance.report.data["convention"] == {"psi-A": "negated", "psi-B": "negated"}

    def test_gram(self):
        big_a, big_b = ab_matrices(2)
        gram = m2_form(big_a, big_b).gram
        assert gram.block(1, 1, 2) == M([["2/3", "-1/3"], ["-1/3", "2/3"]])
        assert gram.block(2, 2, 2) == M([[2, -1], [-1, 1]])

    def test_without_verification(self):
        instance = build_m2(WitnessConfig(2, 2, 3), verify=False)
        assert "convention" not in instance.report.data
        assert coordinate(instance.psi_a) == instance.A


class TestLemmaReplay:
    """The 6-frame construction inside a 3-frame."""

    def test_unit_seeds(self):
        report = verify_lemma_m()
        assert report.passed, report.failures()
        assert covered_steps(report) == list(LEMMA_M_STEPS)

    def test_rational_seeds(self):
        assert verify_lemma_m(1, "1/2", 3).passed

    def test_matrix_seeds(self):
        report = verify_lemma_m(2, M([[2, 1], [1, 2]]), RationalMatrix.identity(2))
        assert report.passed, report.failures()
        assert report.data["A"].rows == 4

    def test_failed_hypothesis(self):
        report = verify_lemma_m(1, 1, -2)
        assert not report.passed
        assert covered_steps(report) == ["hypothesis"]

    def test_wrong_seed_size(self):
        with pytest.raises(WitnessError):
            verify_lemma_m(2, RationalMatrix.identity(3), 1)


class TestGenerationChain:
    """Replay of the inductive generation chain."""

    def test_first_level(self):
        report = verify_m1_chain(1)
        assert report.passed, report.failures()
        assert "level-2/frame-closure" in report.data["trace"]
        reached = report.data["reached"]
        assert reached["diag(2, 0)"] == M([[2, 0], [0, 0]])
        assert reached["[[0, 1], [0, 0]]"] == M([[0, 1], [0, 0]])

    def test_lemma_steps_per_level(self):
        report = verify_m1_chain(1)
        assert covered_steps(report, "level-2/") == list(LEMMA_M_STEPS)

    def test_cap(self):
        with pytest.raises(CapExceededError) as exc:
            verify_m1_chain(1, cap=3)
        assert len(exc.value.partial) == 3

    @pytest.mark.parametrize("k", [0, 4])
    def test_out_of_range(self, k):
        with pytest.raises(WitnessError):
            verify_m1_chain(k)


class TestDoubling:
    """x -> x ⊕ x."""

    def test_axis(self):
        q2 = FormSpace.identity(2)
        image = doubling_embed(q2.coordinates([0]))
        assert image == FormSpace.identity(4).coordinates([0, 2])

    def test_doubled_form(self):
        space = FormSpace.diagonal([1, 2])
        assert doubled_space(space).gram == RationalMatrix.diag([1, 2, 1, 2])

    def test_homomorphism(self, forms, rng):
        for space in forms:
            for _ in range(5):
                u, v = random_subspace(space, rng), random_subspace(space, rng)
                assert check_doubling(u, v).passed

    def test_bounds(self):
        q3 = FormSpace.identity(3)
        assert doubling_embed(q3.zero()).is_zero
        assert doubling_embed(q3.full()).is_full

    def test_target_mismatch(self):
        q2 = FormSpace.identity(2)
        with pytest.raises(DimensionMismatchError):
            doubling_embed(span(q2, [[1, 1]]), FormSpace.identity(3))
