"""
Unit tests for point geometries, polarities and representations.
"""

import numpy as np
import pytest

from src.core.exceptions import (
    CapExceededError,
    NotPolarityError,
    NotSubalgebraError,
    OrthogonalityAxiomError,
    ParseError,
    TriangleAxiomError,
)
from src.finlat import (
    boolean,
    build_lattice,
    canonical_orthogonality,
    congruence_from_quotient,
    mo,
    validate,
)
from src.geometry import (
    PointGeometry,
    RepresentationMap,
    canonical_representation,
    check_atom_collinearity,
    check_induced_orthogonality,
    check_polarity,
    check_polarity_closure,
    closed_subspaces,
    components,
    components_orthogonal,
    geometry_span,
    hat_conditions,
    induced_point_orthogonality,
    is_polarity,
    points_of,
    quotient_representation,
    read_geometry,
    subgeometry_closure,
    subspace_lattice,
    write_geometry,
)

FANO = """\
points: 1 2 3 4 5 6 7
collinear:
1 2 3
1 4 5
1 6 7
2 4 6
2 5 7
3 4 7
3 5 6
"""


@pytest.fixture
def fano():
    return read_geometry(FANO)


class TestPointsOf:
    """Atoms and collinearity of finite modular lattices."""

    def test_mo3_is_a_line(self):
        g = points_of(mo(3))
        assert g.size == 6
        assert len(g.triples) == 20

    def test_boolean_has_no_lines(self):
        g = points_of(boolean(3))
        assert g.size == 3
        assert not g.triples

    def test_two_element_chain(self):
        g = points_of(boolean(1))
        assert g.size == 1
        assert not g.triples

    def test_canonical_orthogonality(self):
        g = points_of(mo(2))
        assert g.orthogonal(g.index["a1"], g.index["a1'"])
        assert not g.orthogonal(g.index["a1"], g.index["a2"])


class TestComponents:
    """Irreducible components and their orthogonality."""

    def test_single_line(self):
        assert len(components(points_of(mo(3)))) == 1

    def test_boolean_singletons(self):
        parts = components(points_of(boolean(3)))
        assert [len(p) for p in parts] == [1, 1, 1]

    def test_product_components_orthogonal(self):
        g = points_of(build_lattice("prod:mo:2,mo:2"))
        parts = components(g)
        assert [len(p) for p in parts] == [4, 4]
        assert components_orthogonal(g, parts)

    def test_corpus_components_orthogonal(self, mol_corpus):
        for spec, l in mol_corpus:
            g = points_of(l)
            assert components_orthogonal(g, components(g)), spec


class TestClosure:
    """Triangle-axiom closure of point sets."""

    def test_no_configuration(self):
        g = points_of(boolean(3))
        assert subgeometry_closure(g, g.points) == frozenset(g.points)

    def test_two_points_on_a_line(self):
        g = points_of(mo(4))
        assert subgeometry_closure(g, ["a1", "a2"]) == {"a1", "a2"}

    def test_full_set(self, fano):
        assert subgeometry_closure(fano, fano.points) == frozenset(fano.points)

    def test_two_lines_close_to_the_plane(self, fano):
        assert subgeometry_closure(fano, ["1", "2", "3", "4", "5"]) == frozenset(fano.points)

    def test_cap(self, fano):
        with pytest.raises(CapExceededError) as exc:
            subgeometry_closure(fano, ["1", "2", "3", "4", "5"], cap=1)
        assert {"1", "2", "3", "4", "5"} <= exc.value.partial

    def test_span(self, fano):
        assert geometry_span(fano, ["1", "2"]) == {"1", "2", "3"}
        assert geometry_span(fano, ["1", "2", "4"]) == frozenset(fano.points)


class TestSubspaceLattice:
    """Materialized subspace lattices."""

    def test_fano(self, fano):
        l = subspace_lattice(fano)
        assert l.size == 16
        assert validate(l).data["is_modular"]
        assert not l.has_ortho

    def test_mo2_points(self):
        l = subspace_lattice(points_of(mo(2)))
        assert l.size == 6
        assert validate(l).data["is_mol"]

    def test_boolean_points(self):
        assert subspace_lattice(points_of(boolean(2))).size == 4

    def test_bound(self, fano):
        with pytest.raises(CapExceededError):
            closed_subspaces(fano, bound=5)


class TestPolarity:
    """Polarity criteria on point orthogonalities."""

    def test_mo2(self):
        report = check_polarity(points_of(mo(2)))
        assert report.passed
        assert report.data["is_polarity"] and report.data["anisotropic"]

    def test_mo3(self):
        assert is_polarity(points_of(mo(3)))

    def test_empty_orthogonality(self):
        g = PointGeometry(["p", "q"], [], perp=[])
        assert not check_polarity(g).data["is_polarity"]

    def test_needs_orthogonality(self, fano):
        with pytest.raises(NotPolarityError):
            check_polarity(fano)
        assert not is_polarity(fano)

    def test_closure_on_corpus(self, mol_corpus):
        for spec, l in mol_corpus:
            assert check_polarity_closure(l, canonical_orthogonality(l)).passed, spec


class TestHatConditions:
    """Closed-element extensions of subsets."""

    def test_mo3_four_element_subset(self):
        m = mo(3)
        report = hat_conditions(m, canonical_orthogonality(m), ["0", "1", "a1", "a1'"])
        assert report.passed
        assert report.data["closed"] == list(m.names)
        assert report.data["mu"].startswith("total")

    def test_bounds_only(self):
        m = mo(3)
        assert hat_conditions(m, canonical_orthogonality(m), ["0", "1"]).passed

    def test_boolean(self):
        m = boolean(3)
        report = hat_conditions(m, canonical_orthogonality(m), m.names)
        assert report.passed
        assert len(report.data["closed"]) == m.size

    def test_not_a_polarity(self):
        m = boolean(2)
        never = np.zeros((m.size, m.size), dtype=bool)
        with pytest.raises(NotPolarityError):
            hat_conditions(m, never, ["0", "1"])


class TestRepresentation:
    """Canonical and quotient representations."""

    def test_mo2_subalgebra(self):
        rep = canonical_representation(mo(2), ["0", "1", "a1", "a1'"])
        assert rep["a1"] == {"a1"}
        assert rep.verified

    def test_bounds(self):
        m = mo(2)
        rep = canonical_representation(m, ["0", "1"])
        assert rep["1"] == frozenset(points_of(m).points)
        assert rep["0"] == frozenset()
        assert induced_point_orthogonality(rep) == set()

    def test_boolean_whole(self):
        m = boolean(2)
        rep = canonical_representation(m, m.names)
        assert rep.verified
        assert rep["b1"] == {"b1"}

    def test_induced_is_canonical(self):
        m = mo(2)
        rep = canonical_representation(m, m.names)
        g = points_of(m)
        canonical = {(p, q) for p in g.points for q in g.points
                     if g.orthogonal(g.index[p], g.index[q])}
        assert induced_point_orthogonality(rep) == canonical

    def test_complement_must_fill_the_perp(self):
        g = PointGeometry(["p", "q"], [])
        rep = RepresentationMap(boolean(1), g, {"0": frozenset(), "1": frozenset({"p"})})
        report = check_induced_orthogonality(rep, induced_point_orthogonality(rep))
        failed = {c.name: c.witness for c in report.failures()}
        assert failed == {"complement": {"elements": ["0"]}}

    def test_quotient_runs_induced_checks(self):
        m = build_lattice("prod:mo:2,bool:1")
        rep = quotient_representation(m, m.names, congruence_from_quotient(m, "(0,1)", "(0,0)"))
        names = {c.name for c in rep.report.checks}
        assert {"induced-anisotropic", "induced-complement"} <= names

    def test_not_subalgebra(self):
        with pytest.raises(NotSubalgebraError):
            canonical_representation(mo(2), ["0", "1", "a1"])

    def test_corpus(self, mol_corpus):
        for spec, l in mol_corpus:
            assert canonical_representation(l, l.names).verified, spec

    def test_projection_kernel(self):
        m = build_lattice("prod:mo:2,bool:1")
        theta = congruence_from_quotient(m, "(0,1)", "(0,0)")
        rep = quotient_representation(m, m.names, theta)
        assert set(rep.geometry.points) == {"(a1,0)", "(a1',0)", "(a2,0)", "(a2',0)"}
        assert rep.source.size == 6
        assert rep.verified

    def test_identity_congruence(self):
        m = build_lattice("prod:mo:2,bool:1")
        rep = quotient_representation(m, m.names, congruence_from_quotient(m, "0", "0"))
        assert rep.assignment == canonical_representation(m, m.names).assignment

    def test_all_congruence(self):
        m = mo(2)
        theta = congruence_from_quotient(m, "1", "0")
        rep = quotient_representation(m, m.names, theta)
        assert rep.source.size == 1
        assert rep.geometry.points == ()


class TestAtomCollinearity:
    """Collinear atoms from disjoint pairs."""

    def test_mo3(self):
        report = check_atom_collinearity(mo(3))
        assert report.passed
        assert report.data["configurations"] > 0

    def test_corpus(self, mol_corpus):
        for spec, l in mol_corpus:
            assert check_atom_collinearity(l).passed, spec


class TestGeometryFormat:
    """The points/collinear/perp format."""

    def test_read(self, fano):
        assert fano.size == 7
        assert len(fano.triples) == 7

    def test_write_then_read(self):
        g = points_of(mo(2))
        assert read_geometry(write_geometry(g)).to_dict() == g.to_dict()

    def test_triangle_axiom(self):
        with pytest.raises(TriangleAxiomError):
            read_geometry("points: p s q t r\ncollinear:\np s q\nq t r\n")

    def test_orthogonality_axiom(self):
        text = "points: a b c d\ncollinear:\na b c\nperp:\nd a\nd b\n"
        with pytest.raises(OrthogonalityAxiomError):
            read_geometry(text)

    @pytest.mark.parametrize("text", [
        "collinear:\n1 2 3\n",
        "points: 1 2 3\ncollinear:\n1 2 4\n",
        "points: 1 2 3\ncollinear:\n1 2\n",
        "points: 1 2 3\n1 2 3\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            read_geometry(text)
