"""
End-to-end checks over frames, witnesses, the lattice corpus and subspace lattices.
"""

from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from src.exactla import RationalMatrix
from src.finlat import (
    build_lattice,
    check_toll_closure,
    congruence_from_quotient,
    congruence_lattice,
    decompose_finite_mol,
    is_isomorphism,
    is_subdirectly_irreducible,
    random_product_specs,
)
from src.frames import canonical_frame, oracle_sweep
from src.geometry import (
    check_atom_collinearity,
    check_embedding,
    induced_point_orthogonality,
    quotient_representation,
)
from src.subspaces import FormSpace, random_subspace, random_subspace_of
from src.terms import (
    identity_holds,
    orthoimplication_holds,
    parse,
    to_orthoimplication,
)
from src.witness import (
    LEMMA_M_STEPS,
    WitnessConfig,
    build_m2,
    check_doubling,
    covered_steps,
    verify_lemma_m,
    verify_m1_chain,
)

ORACLE_VALUES = (0, 1, -1, 2, -2, "1/2", "-1/2", 3, -3, 5, "1/3")

# (name, identity, holds in every MOL)
IDENTITIES = [
    ("absorption-meet", "(= (* x (+ x y)) x)", True),
    ("absorption-join", "(= (+ x (* x y)) x)", True),
    ("idempotence", "(= (+ x x) x)", True),
    ("commutativity", "(= (* x y) (* y x))", True),
    ("double-negation", "(= (' (' x)) x)", True),
    ("de-morgan", "(= (' (+ x y)) (* (' x) (' y)))", True),
    ("orthomodular", "(= (+ x (* (' x) (+ x y))) (+ x y))", True),
    ("modular", "(= (+ x (* y (+ x z))) (* (+ x y) (+ x z)))", True),
    ("excluded-middle", "(= (+ x (' x)) 1)", True),
    ("distributive", "(= (* x (+ y z)) (+ (* x y) (* x z)))", False),
    ("boolean-split", "(= (+ (* x y) (* x (' y))) x)", False),
]


def sample_matrices(size):
    values = [Fraction(v) for v in ORACLE_VALUES]
    if size == 1:
        return [RationalMatrix.scalar(v, 1) for v in values]
    return [RationalMatrix.from_rows([[v, 1], [0, w]]) for v, w in zip(values, reversed(values))]


@pytest.mark.integration
class TestFrames:
    """Canonical frames and the ring oracle."""

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    @pytest.mark.parametrize("block_size", [1, 2])
    def test_canonical_frames(self, n, block_size):
        frame = canonical_frame(n, block_size=block_size)
        assert frame.valid and frame.spanning and frame.orthogonal
        assert frame.ambient.dimension == n * block_size

    @pytest.mark.parametrize("block_size", [1, 2])
    def test_oracle(self, block_size):
        frame = canonical_frame(3, block_size=block_size)
        report = oracle_sweep(frame, sample_matrices(block_size))
        assert report.passed, report.failures()

    @pytest.mark.parametrize("diagonal", [[1, 2, 3], [1, "1/2", 5]])
    def test_involution_oracle(self, diagonal):
        frame = canonical_frame(3, form=FormSpace.diagonal(diagonal))
        report = oracle_sweep(frame, sample_matrices(1), ops=["star"])
        assert report.passed, report.failures()


@pytest.mark.integration
class TestWitnesses:
    """The M2 form, the lemma replay and the generation chain."""

    def test_lemma_replay_covers_every_step(self):
        report = verify_lemma_m(1, 1, 1)
        assert report.passed, report.failures()
        assert covered_steps(report) == list(LEMMA_M_STEPS)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_m2(self, k):
        instance = build_m2(WitnessConfig(k))
        assert instance.report.passed, instance.report.failures()

    @pytest.mark.parametrize("k", [1, 2])
    def test_m1(self, k):
        report = verify_m1_chain(k)
        assert report.passed, report.failures()
        assert covered_steps(report, f"level-{k + 1}/") == list(LEMMA_M_STEPS)


@pytest.mark.integration
class TestCorpus:
    """Decomposition and congruences over random and named MOLs."""

    def test_random_decomposition(self):
        rng = np.random.default_rng(11)
        for spec in random_product_specs(20, rng):
            l = build_lattice(spec)
            d = decompose_finite_mol(l)
            assert is_isomorphism(l, d.product, d.isomorphism), spec
            parts = spec.partition(":")[2].split(",")
            expected = Counter(f"MO_{p[3:]}" for p in parts if p.startswith("mo:"))
            assert Counter(x for x in d.labels if x.startswith("MO_")) == expected, spec

    def test_congruences(self, mol_corpus):
        for spec, l in mol_corpus:
            for q in congruence_lattice(l):
                assert check_toll_closure(q).passed, spec
            result = is_subdirectly_irreducible(l)
            assert result.agrees, spec

    @pytest.mark.parametrize("spec, irreducible", [
        ("bool:1", True), ("mo:3", True), ("bool:2", False), ("prod:mo:2,bool:1", False),
    ])
    def test_irreducible_examples(self, spec, irreducible):
        assert is_subdirectly_irreducible(build_lattice(spec)).irreducible == irreducible

    def test_atom_collinearity(self, mol_corpus):
        for spec, l in mol_corpus:
            assert check_atom_collinearity(l).passed, spec

    def test_quotient_representation(self):
        m = build_lattice("prod:mo:2,bool:1")
        theta = congruence_from_quotient(m, "(0,1)", "(0,0)")
        rep = quotient_representation(m, m.names, theta)
        assert rep.verified, rep.report.failures()
        assert check_embedding(rep).passed
        quotient = rep.source
        induced = induced_point_orthogonality(rep)
        for x in range(quotient.size):
            image = rep[quotient.name(x)]
            complement = rep[quotient.name(int(quotient.ortho[x]))]
            perp = {q for q in rep.geometry.points if all((p, q) in induced for p in image)}
            assert complement == perp, quotient.name(x)


@pytest.mark.integration
class TestIdentityTranslation:
    """g = h against its orthoimplication on every named MOL."""

    @pytest.mark.parametrize("name, text, universal", IDENTITIES)
    def test_translation_agrees(self, mol_corpus, name, text, universal):
        identity = parse(text)
        s, t = identity.lhs, identity.rhs
        oi = to_orthoimplication(s * t, s + t)
        verdicts = []
        for spec, l in mol_corpus:
            holds = bool(identity_holds(s, t, l))
            report = orthoimplication_holds(oi, l)
            assert report.passed == holds, f"{name} on {spec}"
            verdicts.append(holds)
        assert all(verdicts) == universal


@pytest.mark.integration
class TestSubspaceLaws:
    """Lattice laws on random subspaces under several forms."""

    FORMS = [
        FormSpace.identity(6),
        FormSpace.diagonal([1, 2, 3, 5, 7, "1/2"]),
        FormSpace(RationalMatrix.from_rows(
            [[2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(6)]
             for i in range(6)])),
    ]

    @pytest.mark.parametrize("space", FORMS, ids=["identity", "diagonal", "tridiagonal"])
    def test_laws(self, space):
        rng = np.random.default_rng(5)
        zero, full = space.zero(), space.full()
        for _ in range(60):
            u, v, w = (random_subspace(space, rng) for _ in range(3))
            assert u + v == v + u and u & v == v & u
            assert u & (u + v) == u and u + (u & v) == u
            assert (u + v).perp() == u.perp() & v.perp()
            assert u.perp().perp() == u
            assert u + u.perp() == full and u & u.perp() == zero
            assert (u + v).dim + (u & v).dim == u.dim + v.dim
            x = random_subspace_of(w, rng)
            assert x + (u & w) == (x + u) & w

    def test_larger_ambient(self):
        rng = np.random.default_rng(8)
        space = FormSpace.identity(8)
        for _ in range(20):
            u, v = random_subspace(space, rng), random_subspace(space, rng)
            assert (u & v).perp() == u.perp() + v.perp()


@pytest.mark.integration
class TestDoubling:
    """x -> x ⊕ x on random subspaces of Q^4."""

    def test_homomorphism(self, forms):
        rng = np.random.default_rng(3)
        for index in range(200):
            space = forms[index % len(forms)]
            u, v = random_subspace(space, rng), random_subspace(space, rng)
            report = check_doubling(u, v)
            assert report.passed, report.failures()
