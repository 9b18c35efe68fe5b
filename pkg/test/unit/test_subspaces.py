"""
Unit tests for subspace lattices of Q^n.
"""

import numpy as np
import pytest

from src.core.exceptions import (
    AmbientMismatchError,
    DimensionMismatchError,
    FormError,
    NotAnAtomError,
    NotBelowError,
    NotSymmetricError,
    ParseError,
)
from src.exactla import RationalMatrix
from src.subspaces import (
    FormSpace,
    check_polarity_sample,
    interval_ortho,
    is_perspective,
    modular_law_check,
    random_atom,
    random_subspace,
    random_subspace_of,
    read_subspace,
    span,
    write_subspace,
)


class TestFormSpace:
    """Admissible Gram matrices."""

    def test_identity(self):
        assert FormSpace.identity(3).dimension == 3

    def test_indefinite_rejected(self):
        with pytest.raises(FormError):
            FormSpace.diagonal([1, -1])

    def test_degenerate_rejected(self):
        with pytest.raises(FormError):
            FormSpace(RationalMatrix.from_rows([[1, 1], [1, 1]]))

    def test_non_symmetric_rejected(self):
        with pytest.raises(NotSymmetricError):
            FormSpace(RationalMatrix.from_rows([[2, 1], [0, 2]]))

    def test_non_square_rejected(self):
        with pytest.raises(DimensionMismatchError):
            FormSpace(RationalMatrix.from_rows([[1, 0, 0]]))


class TestSpan:
    """Canonical bases."""

    @pytest.fixture
    def q2(self):
        return FormSpace.identity(2)

    def test_empty(self, q2):
        assert span(q2, []).is_zero

    def test_dependent(self, q2):
        u = span(q2, [[1, 0], [2, 0]])
        assert u.dim == 1
        assert u == q2.coordinates([0])

    def test_full(self, q2):
        assert span(q2, [[1, 1], [1, -1]]).is_full

    def test_wrong_length(self, q2):
        with pytest.raises(DimensionMismatchError):
            span(q2, [[1, 2, 3]])

    def test_equality_is_basis_independent(self, q2):
        assert span(q2, [[1, 2]]) == span(q2, [[-2, -4]])


class TestLatticeOperations:
    """Sum, intersection and orthocomplement."""

    @pytest.fixture
    def q3(self):
        return FormSpace.identity(3)

    def test_sum_of_axes(self):
        q2 = FormSpace.identity(2)
        assert (q2.coordinates([0]) + q2.coordinates([1])).is_full

    def test_intersection(self, q3):
        assert q3.coordinates([0, 1]) & q3.coordinates([1, 2]) == q3.coordinates([1])

    def test_sum_with_zero(self, q3, rng):
        u = random_subspace(q3, rng)
        assert u + q3.zero() == u

    def test_ortho_of_axis(self, q3):
        assert q3.coordinates([0]).perp() == q3.coordinates([1, 2])

    def test_ortho_of_diagonal(self, q3):
        u = span(q3, [[1, 1, 0]])
        assert u.perp() == span(q3, [[1, -1, 0], [0, 0, 1]])

    def test_ortho_of_full(self, q3):
        assert q3.full().perp().is_zero

    def test_ortho_uses_the_form(self):
        space = FormSpace.diagonal([1, 2])
        u = span(space, [[1, 1]])
        assert u.perp() == span(space, [[2, -1]])

    def test_ambient_mismatch(self, q3):
        other = FormSpace.diagonal([1, 2, 3])
        with pytest.raises(AmbientMismatchError):
            q3.coordinates([0]) + other.coordinates([0])


class TestLatticeLaws:
    """Sampled ortholattice laws in every test form."""

    def test_de_morgan(self, forms, rng):
        for space in forms:
            for _ in range(10):
                u, v = random_subspace(space, rng), random_subspace(space, rng)
                assert (u + v).perp() == u.perp() & v.perp()
                assert (u & v).perp() == u.perp() + v.perp()

    def test_involution_and_anisotropy(self, forms, rng):
        for space in forms:
            for _ in range(10):
                u = random_subspace(space, rng)
                assert u.perp().perp() == u
                assert (u & u.perp()).is_zero
                assert u.dim + u.perp().dim == space.dimension

    def test_order_reversal(self, forms, rng):
        for space in forms:
            for _ in range(10):
                v = random_subspace(space, rng)
                u = random_subspace_of(v, rng)
                assert u <= v
                assert v.perp() <= u.perp()

    def test_orthomodular_instance(self, forms, rng):
        for space in forms:
            for _ in range(10):
                v = random_subspace(space, rng)
                u = random_subspace_of(v, rng)
                assert v == u + (v & u.perp())


class TestIntervalOrtho:
    """Relative orthocomplements in [0, u]."""

    @pytest.fixture
    def q3(self):
        return FormSpace.identity(3)

    def test_axis(self, q3):
        assert interval_ortho(q3.coordinates([0, 1]), q3.coordinates([0])) == q3.coordinates([1])

    def test_bounds(self, q3):
        u = q3.coordinates([0, 1])
        assert interval_ortho(u, q3.zero()) == u
        assert interval_ortho(u, u).is_zero

    def test_not_below(self, q3):
        with pytest.raises(NotBelowError):
            interval_ortho(q3.coordinates([0]), q3.coordinates([1]))


class TestPerspectivity:
    """Common complement witnesses."""

    def test_axes(self):
        q2 = FormSpace.identity(2)
        c = is_perspective(q2.coordinates([0]), q2.coordinates([1]))
        assert c == span(q2, [[1, 1]])

    def test_equal_subspaces(self):
        q3 = FormSpace.identity(3)
        u = q3.coordinates([0, 2])
        assert is_perspective(u, u).is_zero
        assert is_perspective(q3.zero(), q3.zero()).is_zero

    def test_dimension_mismatch(self):
        q3 = FormSpace.identity(3)
        assert is_perspective(q3.coordinates([0]), q3.coordinates([1, 2])) is None

    def test_random_pairs(self, forms, rng):
        for space in forms:
            for _ in range(10):
                u = random_subspace(space, rng, dim=2)
                v = random_subspace(space, rng, dim=2)
                if u.dim != v.dim:
                    continue
                c = is_perspective(u, v)
                top = u + v
                assert u + c == top and v + c == top
                assert (u & c).is_zero and (v & c).is_zero


class TestPolaritySample:
    """Atoms and their orthocomplements."""

    def test_axis(self):
        q3 = FormSpace.identity(3)
        assert check_polarity_sample(q3, [q3.coordinates([0])]).passed

    def test_diagonal_form(self):
        space = FormSpace.diagonal([1, 2, 3])
        assert check_polarity_sample(space, [span(space, [[1, 1, 1]])]).passed

    def test_random_atoms(self, forms, rng):
        for space in forms:
            atoms = [random_atom(space, rng) for _ in range(5)]
            report = check_polarity_sample(space, atoms)
            assert report.passed
            assert len(report.checks) == 5

    def test_not_an_atom(self):
        q3 = FormSpace.identity(3)
        with pytest.raises(NotAnAtomError):
            check_polarity_sample(q3, [q3.coordinates([0, 1])])


class TestModularLaw:
    """u + (v & w) = (u + v) & w for u <= w."""

    def test_random_triples(self, rng):
        q4 = FormSpace.identity(4)
        for _ in range(20):
            w = random_subspace(q4, rng)
            u = random_subspace_of(w, rng)
            v = random_subspace(q4, rng)
            assert modular_law_check(u, v, w)

    def test_degenerate_cases(self, rng):
        q4 = FormSpace.identity(4)
        w, v = random_subspace(q4, rng), random_subspace(q4, rng)
        assert modular_law_check(q4.zero(), v, w)
        assert modular_law_check(w, v, w)

    def test_not_below(self):
        q2 = FormSpace.identity(2)
        with pytest.raises(NotBelowError):
            modular_law_check(q2.coordinates([0]), q2.zero(), q2.coordinates([1]))


class TestSubspaceFormat:
    """The ambient-prefixed basis format."""

    def test_read(self):
        u = read_subspace("ambient 3\n1 3\n1 1 0\n")
        assert u == span(FormSpace.identity(3), [[1, 1, 0]])

    def test_write_then_read(self):
        space = FormSpace.diagonal([1, 2, 3])
        u = span(space, [[1, 2, 3], [0, 1, "1/2"]])
        assert read_subspace(write_subspace(u), space) == u

    def test_zero_subspace(self):
        q2 = FormSpace.identity(2)
        assert write_subspace(q2.zero()) == "ambient 2\n0 2\n"

    def test_bad_header(self):
        with pytest.raises(ParseError):
            read_subspace("space 3\n1 3\n1 0 0\n")

    def test_form_dimension_mismatch(self):
        with pytest.raises(ParseError):
            read_subspace("ambient 2\n1 2\n1 0\n", FormSpace.identity(3))


def test_sampling_is_reproducible():
    space = FormSpace.identity(4)
    a = [random_subspace(space, np.random.default_rng(7)) for _ in range(3)]
    b = [random_subspace(space, np.random.default_rng(7)) for _ in range(3)]
    assert a == b
