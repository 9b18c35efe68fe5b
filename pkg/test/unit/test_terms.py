"""
Unit tests for ortholattice terms.
"""

import numpy as np
import pytest

from src.core.constants import MAX_TERM_DEPTH
from src.core.exceptions import (
    NotALatticeError,
    TermError,
    TermSyntaxError,
    UnboundVariableError,
    UnknownSpecError,
)
from src.exactla import RationalMatrix
from src.finlat import FiniteOrtholattice, boolean, chain, mo, o6, write_lattice
from src.subspaces import FormSpace
from src.terms.syntax import height
from src.terms import (
    ONE,
    ZERO,
    Identity,
    Join,
    Meet,
    Ortho,
    OrthoImplication,
    as_function,
    back_substitute,
    below_on_models,
    evaluate,
    evaluate_grid,
    fresh_names,
    identity_holds,
    identity_report,
    malcev_term,
    nnf,
    orthoimplication_holds,
    parse,
    parse_term,
    render,
    replace_constants,
    resolve_model,
    sampled_identity_report,
    substitute,
    to_orthoimplication,
    var,
    variables,
)

x, y, z = var("x"), var("y"), var("z")

MODULAR = parse("(= (+ x (* y (+ x z))) (* (+ x y) (+ x z)))")
DISTRIBUTIVE = parse("(= (* x (+ y z)) (+ (* x y) (* x z)))")
# x + x'(x + y) <= x + y, equal exactly in orthomodular lattices
OM_LOWER = parse_term("(+ x (* (' x) (+ x y)))")
OM_UPPER = parse_term("(+ x y)")


class TestSyntax:
    """Parsing and rendering."""

    def test_left_associative(self):
        assert parse("(+ x y z)") == Join(Join(x, y), z)
        assert render(parse("(* x y z)")) == "(* (* x y) z)"

    def test_builders(self):
        assert x + y * ~z == Join(x, Meet(y, Ortho(z)))

    def test_constants(self):
        assert parse("(+ 0 (' 1))") == Join(ZERO, Ortho(ONE))

    def test_identity(self):
        parsed = parse("(= (+ x x) x)")
        assert isinstance(parsed, Identity)
        assert parsed.rhs == x

    def test_orthoimplication(self):
        parsed = parse("(oimp ((x y1) (y y2)) (* x (+ y1 y2)))")
        assert isinstance(parsed, OrthoImplication)
        assert parsed.premises == (("x", "y1"), ("y", "y2"))
        assert parsed.premise_variables() == ["x", "y1", "y", "y2"]

    @pytest.mark.parametrize("text", [
        "(+ (' x) (* y 0))",
        "(= (' (' x)) x)",
        "(oimp ((a b)) (+ a b))",
        "(oimp () 0)",
    ])
    def test_render_is_canonical(self, text):
        assert render(parse(text)) == text

    @pytest.mark.parametrize("text, position", [
        ("", 0),
        ("(+ x)", 1),
        ("(+ x y", 6),
        ("x )", 2),
        ("(/ x y)", 1),
        ("(' x y)", 1),
        ("(oimp ((x y)) (' x))", 0),
    ])
    def test_syntax_errors(self, text, position):
        with pytest.raises(TermSyntaxError) as exc:
            parse(text)
        assert exc.value.position == position

    def test_deep_nesting_is_rejected(self):
        with pytest.raises(TermSyntaxError, match="nesting deeper") as exc:
            parse("(' " * 1500 + "x" + ")" * 1500)
        assert exc.value.position == 3 * MAX_TERM_DEPTH

    def test_long_chain_is_rejected(self):
        with pytest.raises(TermSyntaxError, match="nesting deeper"):
            parse("(= x (+ " + " ".join(["y"] * 1500) + "))")

    def test_nesting_at_the_limit(self):
        text = "(' " * (MAX_TERM_DEPTH - 1) + "x" + ")" * (MAX_TERM_DEPTH - 1)
        assert height(parse(text)) == MAX_TERM_DEPTH

    def test_parse_term_rejects_identity(self):
        with pytest.raises(TermSyntaxError):
            parse_term("(= x x)")

    def test_bad_atoms(self):
        with pytest.raises(TermError):
            var("oimp")
        with pytest.raises(TermError):
            OrthoImplication([("x", "y")], Ortho(x))


class TestOperations:
    """Structural rewriting."""

    def test_variables_in_order(self):
        assert variables(parse_term("(* (+ z x) (' z))")) == ["z", "x"]

    def test_substitute(self):
        assert substitute(x + y, {"x": y, "y": x}) == y + x

    def test_nnf(self):
        assert nnf(parse_term("(' (+ x (* y (' z))))")) == Meet(~x, Join(~y, z))
        assert nnf(parse_term("(' (' (' x)))")) == ~x
        assert nnf(~ONE) == ZERO

    def test_replace_constants(self):
        u = var("u")
        assert replace_constants(x + ONE, u) == x + (u + ~u)
        assert replace_constants(ZERO, u) == u * ~u

    def test_fresh_names(self):
        assert fresh_names(2, ["x", "y"]) == ["y1", "y2"]
        assert fresh_names(2, ["y1", "y3"]) == ["y2", "y4"]

    def test_malcev_shape(self):
        assert render(malcev_term(x, y, z)) == \
            "(* (+ x (* (+ y z) (' y))) (+ z (* (+ x y) (' y))))"


class TestEvaluate:
    """Evaluation in finite and subspace models."""

    def test_by_name(self):
        l = mo(2)
        assert l.name(evaluate(~x, l, {"x": "a1"})) == "a1'"
        assert evaluate(x + ~x, l, {"x": "a2"}) == l.top

    def test_unbound(self):
        with pytest.raises(UnboundVariableError):
            evaluate(x + y, mo(2), {"x": "a1"})

    def test_needs_ortho(self):
        with pytest.raises(NotALatticeError):
            evaluate(~x, chain(3), {"x": "c1"})

    def test_lattice_term_without_ortho(self):
        l = chain(3)
        assert l.name(evaluate(x * y, l, {"x": "c1", "y": "1"})) == "c1"

    def test_subspaces(self):
        q3 = FormSpace.identity(3)
        value = evaluate(~(x + y), q3, {"x": q3.coordinates([0]), "y": q3.coordinates([1])})
        assert value == q3.coordinates([2])
        assert evaluate(ONE, q3, {}).is_full

    def test_grid(self):
        l = boolean(2)
        grid = evaluate_grid(x * y, l)
        assert grid.shape == (4, 4)
        assert np.array_equal(grid, l.meet)

    def test_grid_dummy_axis(self):
        l = boolean(1)
        grid = evaluate_grid(x, l, ["x", "y"])
        assert grid.shape == (2, 2)
        assert grid[1, 0] == 1

    def test_as_function(self):
        l = mo(3)
        f = as_function(x + y, l)
        assert f(l["a1"], l["a2"]) == l.top
        with pytest.raises(UnboundVariableError):
            f(l["a1"])


class TestIdentities:
    """Exhaustive and sampled identity checks."""

    @pytest.mark.parametrize("model", [boolean(3), mo(3), mo(4)])
    def test_modular_law_holds(self, model):
        assert identity_holds(MODULAR.lhs, MODULAR.rhs, model)

    def test_modular_law_fails_in_hexagon(self):
        result = identity_holds(MODULAR.lhs, MODULAR.rhs, o6())
        assert not result.holds
        assert set(result.counterexample) == {"x", "y", "z"}

    def test_distributive_fails_in_mo2(self):
        result = identity_holds(DISTRIBUTIVE.lhs, DISTRIBUTIVE.rhs, mo(2))
        assert not result.holds
        l = mo(2)
        a = {k: l[v] for k, v in result.counterexample.items()}
        lhs = l.m(a["x"], l.j(a["y"], a["z"]))
        rhs = l.j(l.m(a["x"], a["y"]), l.m(a["x"], a["z"]))
        assert lhs != rhs
        assert result.values == (l.name(lhs), l.name(rhs))

    def test_malcev(self):
        p = malcev_term(x, x, z)
        assert identity_holds(p, z, mo(3))
        assert identity_holds(malcev_term(x, z, z), x, boolean(2))
        assert not identity_holds(p, z, o6())

    def test_closed_terms(self):
        result = identity_holds(ONE, ZERO, mo(2))
        assert not result.holds
        assert result.counterexample == {}
        assert result.values == ("1", "0")

    def test_needs_finite_model(self):
        with pytest.raises(TermError):
            identity_holds(x, x, FormSpace.identity(2))

    def test_report(self):
        report = identity_report(OM_LOWER, OM_UPPER, o6(), "om")
        assert not report.passed
        assert report.get("identity").witness["assignment"]
        assert identity_report(OM_LOWER, OM_UPPER, mo(2)).passed

    def test_sampled_modular(self, rng):
        report = sampled_identity_report(MODULAR.lhs, MODULAR.rhs, FormSpace.identity(3), 20,
                                         rng, 3)
        assert report.passed
        assert report.data["verdict"] == "no counterexample in 20 samples"

    def test_sampled_distributive_fails(self, rng):
        report = sampled_identity_report(DISTRIBUTIVE.lhs, DISTRIBUTIVE.rhs,
                                         FormSpace.identity(2), 500, rng, 3)
        assert not report.passed
        assert report.data["verdict"] == "fails"


class TestOrthoImplications:
    """Translation of identities and their checks."""

    def test_translation_names(self):
        oi = to_orthoimplication(x * y, x)
        assert oi.premises == (("x", "y1"), ("y", "y2"))
        assert render(oi) == "(oimp ((x y1) (y y2)) (* x (+ y1 y2)))"

    def test_orthomodular_translation(self):
        oi = to_orthoimplication(OM_LOWER, OM_UPPER)
        assert oi.conclusion == parse_term("(* (+ x y) (* y1 (+ x (* y1 y2))))")
        assert orthoimplication_holds(oi, mo(2)).data["verdict"] == "holds"
        # h·g' vanishes in the hexagon although g = h fails there
        assert orthoimplication_holds(oi, o6()).data["verdict"] == "holds"
        assert not identity_holds(OM_LOWER, OM_UPPER, o6())

    def test_back_substitution(self):
        oi = to_orthoimplication(OM_LOWER, OM_UPPER)
        assert identity_holds(back_substitute(oi), ZERO, mo(3))

    def test_constants_get_a_fresh_variable(self):
        oi = to_orthoimplication(x * ~x, ZERO)
        assert "u1" in oi.premise_variables()

    def test_invalid_identity_fails(self):
        oi = to_orthoimplication(x * y, x)
        report = orthoimplication_holds(oi, boolean(2))
        assert not report.passed
        assert report.get("exhaustive").witness["assignment"]

    def test_below_on_models(self):
        assert below_on_models(x * y, x) is None
        assert below_on_models(x, x * y) == "bool:1"

    def test_interval_mode(self):
        oi = to_orthoimplication(OM_LOWER, OM_UPPER)
        report = orthoimplication_holds(oi, mo(3), mode="interval")
        assert report.passed
        assert report.get("intervals-agree").passed

    def test_shared_premise_variables(self):
        holds = parse("(oimp ((x y) (x z)) (* x (+ y z)))")
        assert orthoimplication_holds(holds, mo(2)).data["verdict"] == "holds"
        fails = parse("(oimp ((x y) (x z)) (* y z))")
        assert orthoimplication_holds(fails, boolean(1)).data["verdict"] == "fails"

    def test_sampled_mode(self):
        oi = to_orthoimplication(OM_LOWER, OM_UPPER)
        report = orthoimplication_holds(oi, FormSpace.identity(3), mode="sampled", samples=30)
        assert report.passed
        assert report.data["verdict"] == "no counterexample in 30 samples"

    def test_mode_and_model(self):
        oi = to_orthoimplication(OM_LOWER, OM_UPPER)
        with pytest.raises(TermError):
            orthoimplication_holds(oi, mo(2), mode="sampled")
        with pytest.raises(TermError):
            orthoimplication_holds(oi, FormSpace.identity(2))
        with pytest.raises(TermError):
            orthoimplication_holds(oi, mo(2), mode="random")


class TestModels:
    """Model arguments."""

    def test_identity_space(self):
        assert resolve_model("space:4").dimension == 4

    def test_diagonal_space(self):
        space = resolve_model("space:1,2,1/2")
        assert space.gram == RationalMatrix.diag([1, 2, "1/2"])

    def test_corpus_spec(self):
        assert isinstance(resolve_model("mo:2"), FiniteOrtholattice)

    def test_lattice_file(self, tmp_path):
        path = tmp_path / "mo3.lat"
        path.write_text(write_lattice(mo(3)))
        assert resolve_model(str(path)) == mo(3)

    @pytest.mark.parametrize("spec", ["space:abc def", "space:1,x", "tree:2"])
    def test_unknown(self, spec):
        with pytest.raises(UnknownSpecError):
            resolve_model(spec)
