"""
Unit tests for explicit finite ortholattices.
"""

from collections import Counter

import numpy as np
import pytest

from src.core.exceptions import (
    NoComplementFoundError,
    NotBelowError,
    NotComparableError,
    NotMOLError,
    NotModularError,
    NotNeutralIdealError,
    ParseError,
    UnknownSpecError,
)
from src.finlat import (
    boolean,
    build_lattice,
    canonical_orthogonality,
    chain,
    check_ideal_approximation,
    check_toll_closure,
    congruence_from_quotient,
    congruence_from_quotients,
    congruence_lattice,
    congruence_relation,
    decompose_finite_mol,
    find_isomorphism,
    generate_subalgebra,
    interval_subalgebra,
    is_isomorphism,
    is_mol,
    is_neutral_ideal,
    is_subdirectly_irreducible,
    mo,
    neutral_ideal,
    o6,
    perspective_witness,
    perspectivity,
    product,
    quotient_lattice,
    read_lattice,
    reconstruct_orthocomplement,
    tolerance_closure,
    validate,
    write_lattice,
)

FOUR_ELEMENT = """\
# the square
elements: 4 0 a b 1
bottom: 0
top: 1
leq:
0 a
0 b
a 1
b 1
ortho:
a b
0 1
"""


def names(l, indices):
    return {l.names[x] for x in indices}


class TestConstructors:
    """Standard lattices and the MOL-preserving constructions."""

    def test_mo_size(self):
        l = mo(3)
        assert l.size == 8
        assert len(l.atoms()) == 6

    def test_boolean_names(self):
        assert boolean(2).names == ("0", "b1", "b2", "1")

    def test_product_size(self):
        assert product(mo(2), boolean(1)).size == 12

    def test_product_is_mol(self):
        assert is_mol(product(mo(2), boolean(1)))

    def test_full_interval_is_identity(self):
        l = mo(2)
        assert interval_subalgebra(l, "1", "0") == l

    def test_interval_complementation(self):
        l = boolean(3)
        sub = interval_subalgebra(l, "b12", "0")
        assert sub.size == 4
        assert sub.names[sub.o(sub["b1"])] == "b2"

    def test_interval_needs_order(self):
        with pytest.raises(NotBelowError):
            interval_subalgebra(boolean(2), "b1", "b2")

    def test_generated_subalgebra(self):
        l = mo(3)
        sub = generate_subalgebra(l, ["a1"])
        assert set(sub.names) == {"0", "1", "a1", "a1'"}

    @pytest.mark.parametrize("spec, size", [
        ("bool:3", 8), ("mo:4", 10), ("chain:3", 3), ("o6", 6),
        ("prod:mo:2,bool:1", 12), ("interval:b12:0:bool:3", 4),
    ])
    def test_specs(self, spec, size):
        assert build_lattice(spec).size == size

    @pytest.mark.parametrize("spec", ["mo:0", "tree:3", "prod:", "interval:x:0:bool:2", "o7"])
    def test_unknown_specs(self, spec):
        with pytest.raises(UnknownSpecError):
            build_lattice(spec)


class TestValidate:
    """Exhaustive axiom checks."""

    def test_boolean_cube(self):
        report = validate(boolean(3))
        assert report.passed
        assert all(report.data[k] for k in
                   ("is_lattice", "is_ortholattice", "is_modular", "is_orthomodular", "is_mol"))

    def test_hexagon_is_not_orthomodular(self):
        report = validate(o6())
        assert report.data["is_ortholattice"]
        assert not report.data["is_orthomodular"]
        assert report.get("orthomodular").witness

    def test_mo3(self):
        assert validate(mo(3)).data["is_mol"]

    def test_chain_has_no_ortho(self):
        report = validate(chain(3))
        assert report.data["is_lattice"] and report.data["is_modular"]
        assert not report.data["is_ortholattice"]

    def test_corpus(self, mol_corpus):
        for spec, l in mol_corpus:
            assert validate(l).data["is_mol"], spec


class TestPerspectivity:
    """Perspectivity and neutral ideals."""

    def test_mo3_atoms_pairwise_perspective(self):
        l = mo(3)
        relation = perspectivity(l)
        atoms = l.atoms()
        assert relation[np.ix_(atoms, atoms)].all()
        assert perspective_witness(l, l["a1"], l["a2"]) is not None

    def test_mo3_ideal_is_whole(self):
        l = mo(3)
        assert len(neutral_ideal(l, "a1")) == l.size

    def test_boolean_ideal_is_principal(self):
        l = boolean(2)
        assert names(l, neutral_ideal(l, "b1")) == {"0", "b1"}

    def test_zero_ideal(self):
        l = mo(2)
        assert names(l, neutral_ideal(l, "0")) == {"0"}

    def test_ideals_are_neutral(self, mol_corpus):
        for spec, l in mol_corpus:
            for a in range(l.size):
                assert is_neutral_ideal(l, neutral_ideal(l, a)), spec

    def test_not_modular(self):
        with pytest.raises(NotModularError):
            perspectivity(o6())


class TestCongruences:
    """Quotient sets and their closure."""

    def test_mo2_is_simple(self):
        l = mo(2)
        assert congruence_from_quotient(l, "a1", "0").is_all

    def test_boolean_zero_class(self):
        l = boolean(2)
        q = congruence_from_quotient(l, "b1", "0")
        assert names(l, q.zero_class()) == {"0", "b1"}
        assert quotient_lattice(l, q).size == 2

    def test_trivial_quotient(self):
        l = boolean(2)
        assert congruence_from_quotient(l, "b1", "b1").is_identity

    def test_not_comparable(self):
        with pytest.raises(NotComparableError):
            congruence_from_quotient(boolean(2), "b1", "b2")

    def test_closure_rules_hold(self, mol_corpus):
        for spec, l in mol_corpus:
            for q in congruence_lattice(l):
                assert check_toll_closure(q).passed, spec

    def test_tolerance_closure_is_congruence(self, mol_corpus, rng):
        for spec, l in mol_corpus:
            for _ in range(3):
                a, b = (int(x) for x in rng.integers(0, l.size, size=2))
                q = congruence_from_quotients(l, [(l.j(a, b), l.m(a, b))])
                assert np.array_equal(tolerance_closure(l, [(a, b)]), congruence_relation(q)), spec

    def test_boolean_congruence_count(self):
        # Boolean(n) has 2^n congruences
        assert len(congruence_lattice(boolean(3))) == 8


class TestIrreducibility:
    """Subdirect irreducibility and its perspectivity cross-check."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_mo_is_si(self, n):
        result = is_subdirectly_irreducible(mo(n))
        assert result.irreducible
        assert result.minimal.is_all
        assert result.agrees

    @pytest.mark.parametrize("spec", ["bool:2", "mo:1", "prod:mo:2,mo:2", "prod:mo:3,bool:2"])
    def test_not_si(self, spec):
        result = is_subdirectly_irreducible(build_lattice(spec))
        assert not result.irreducible
        assert result.agrees

    def test_two_element_is_si(self):
        assert is_subdirectly_irreducible(boolean(1)).irreducible

    def test_criteria_agree_on_corpus(self, mol_corpus):
        for spec, l in mol_corpus:
            assert is_subdirectly_irreducible(l).agrees, spec

    def test_intervals_under_minimal_are_simple(self, mol_corpus):
        for spec, l in mol_corpus:
            result = is_subdirectly_irreducible(l)
            if not result.irreducible:
                continue
            for b in result.minimal.zero_class():
                if b == l.bottom:
                    continue
                sub = interval_subalgebra(l, b, l.bottom)
                assert len(congruence_lattice(sub)) == 2, (spec, l.names[b])


class TestDecomposition:
    """Boolean and MO_n factors with a verified isomorphism."""

    def test_boolean(self):
        assert decompose_finite_mol(boolean(3)).labels == ["Boolean(3)"]

    def test_mo(self):
        assert decompose_finite_mol(mo(3)).labels == ["MO_3"]

    def test_mixed_product(self):
        d = decompose_finite_mol(build_lattice("prod:mo:2,bool:1"))
        assert d.labels == ["MO_2", "Boolean(1)"]
        assert is_isomorphism(d.lattice, d.product, d.isomorphism)

    def test_not_mol(self):
        with pytest.raises(NotMOLError):
            decompose_finite_mol(o6())

    def test_random_products(self, random_corpus):
        for spec, l in random_corpus:
            d = decompose_finite_mol(l)
            assert is_isomorphism(l, d.product, d.isomorphism), spec
            parts = spec.partition(":")[2].split(",")
            expected_mo = Counter(f"MO_{p[3:]}" for p in parts if p.startswith("mo:"))
            boolean_atoms = sum(int(p[5:]) for p in parts if p.startswith("bool:"))
            assert Counter(x for x in d.labels if x.startswith("MO_")) == expected_mo
            found_atoms = sum(f.n for f in d.factors if f.kind == "Boolean")
            assert found_atoms == boolean_atoms

    def test_find_isomorphism(self):
        phi = find_isomorphism(boolean(2), mo(1))
        assert phi is not None
        assert find_isomorphism(mo(2), boolean(3)) is None


class TestIdealApproximation:
    """Approximating polynomial values from inside a neutral ideal."""

    def test_single_variable(self):
        l = mo(3)
        ideal = neutral_ideal(l, "a1")
        for c in range(l.size):
            assert check_ideal_approximation(l, ideal, lambda x: x, [c], "a1")

    def test_boolean_join(self):
        l = boolean(3)
        ideal = neutral_ideal(l, "b1")
        f = lambda x, y: l.j(x, y)  # noqa: E731
        for c1 in range(l.size):
            for c2 in range(l.size):
                for p in ideal:
                    assert check_ideal_approximation(l, ideal, f, [c1, c2], p)

    def test_mo_whole_ideal(self):
        l = mo(3)
        ideal = list(range(l.size))
        f = lambda x, y: l.m(l.j(x, y), l.o(x))  # noqa: E731
        for c1 in range(l.size):
            for c2 in range(l.size):
                assert check_ideal_approximation(l, ideal, f, [c1, c2], "a2")

    def test_not_neutral(self):
        l = mo(3)
        with pytest.raises(NotNeutralIdealError):
            check_ideal_approximation(l, [l["0"], l["a1"]], lambda x: x, ["a1"], "a1")


class TestReconstruction:
    """Orthocomplements recovered from orthogonality."""

    def test_mo2_canonical(self):
        l = mo(2)
        table = reconstruct_orthocomplement(l, canonical_orthogonality(l))
        assert np.array_equal(table, l.ortho)

    def test_boolean_disjointness(self):
        l = boolean(2)
        table = reconstruct_orthocomplement(l, l.meet == l.bottom)
        assert np.array_equal(table, l.ortho)

    def test_chain_fails(self):
        l = chain(3)
        n = l.size
        trivial = np.zeros((n, n), dtype=bool)
        trivial[l.bottom, :] = True
        trivial[:, l.bottom] = True
        with pytest.raises(NoComplementFoundError) as exc:
            reconstruct_orthocomplement(l, trivial)
        assert exc.value.element == "c1"

    def test_corpus(self, mol_corpus):
        for spec, l in mol_corpus:
            table = reconstruct_orthocomplement(l, canonical_orthogonality(l))
            assert np.array_equal(table, l.ortho), spec


class TestLatticeFormat:
    """The elements/bottom/top/leq/ortho format."""

    def test_read(self):
        l = read_lattice(FOUR_ELEMENT)
        assert l.size == 4
        assert l.names[l.o(l["a"])] == "b"
        assert is_mol(l)

    def test_write_then_read(self, mol_corpus):
        for spec, l in mol_corpus:
            assert read_lattice(write_lattice(l)) == l, spec

    @pytest.mark.parametrize("broken", [
        FOUR_ELEMENT.replace("elements: 4", "elements: 5"),
        FOUR_ELEMENT.replace("a 1\n", "a x\n"),
        FOUR_ELEMENT.replace("bottom: 0", "bottom: a"),
        FOUR_ELEMENT.replace("a b\n", ""),
        FOUR_ELEMENT + "a 0\n",
    ])
    def test_malformed(self, broken):
        with pytest.raises(ParseError):
            read_lattice(broken)
