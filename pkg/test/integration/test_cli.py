"""
Integration tests for the molkit command line.
"""

import json

import pytest

from cli.molkit_cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from src.finlat import load_lattice

from ..conftest import FIXTURES_DIR, TEST_CONFIG_FILE

SQUARE = str(FIXTURES_DIR / "square.lat")
FANO = str(FIXTURES_DIR / "fano.geo")
DIAGONAL = str(FIXTURES_DIR / "diagonal.sub")
PLANE = str(FIXTURES_DIR / "plane.sub")
GRAM = str(FIXTURES_DIR / "gram.mat")


def run_json(capsys, *argv):
    code = run(["--json", *argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.mark.integration
class TestGlobalOptions:
    """Parsing, exit codes and output formats."""

    def test_no_command(self, capsys):
        assert run([]) == EXIT_USAGE

    def test_help(self, capsys):
        assert run(["--help"]) == EXIT_OK
        assert "lattice" in capsys.readouterr().out

    def test_unknown_action(self, capsys):
        assert run(["lattice", "rotate", "mo:2"]) == EXIT_USAGE

    def test_text_report(self, capsys):
        assert run(["lattice", "check", "mo:3"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("# ")
        assert out.rstrip().endswith("PASS")

    def test_json_report(self, capsys):
        code, report = run_json(capsys, "lattice", "check", SQUARE)
        assert code == EXIT_OK
        assert report["passed"]
        assert {c["name"] for c in report["checks"]} >= {"lattice", "bounds"}

    def test_config_file(self, capsys):
        code = run(["--config", str(TEST_CONFIG_FILE), "lattice", "si", "mo:2"])
        assert code == EXIT_OK

    def test_missing_config(self, capsys, tmp_path):
        assert run(["--config", str(tmp_path / "absent.yaml"), "lattice", "si", "mo:2"]) \
            == EXIT_USAGE

    def test_seed_is_reproducible(self, capsys):
        argv = ("--seed", "9", "space", "polarity", "--form", "diag:1,2,3", "--samples", "6")
        first = run_json(capsys, *argv)
        second = run_json(capsys, *argv)
        assert first[0] == second[0] == EXIT_OK
        assert first[1]["data"] == second[1]["data"]
        assert first[1]["data"]["seed"] == 9


@pytest.mark.integration
class TestLatticeCommand:
    """molkit lattice."""

    def test_not_orthomodular(self, capsys):
        code, report = run_json(capsys, "lattice", "check", "o6")
        assert code == EXIT_FAILED
        failed = {c["name"] for c in report["checks"] if c["status"] == "fail"}
        assert "orthomodular" in failed

    def test_decompose(self, capsys):
        code, report = run_json(capsys, "lattice", "decompose", "prod:mo:2,bool:1")
        assert code == EXIT_OK
        assert report["data"]["factors"] == ["MO_2", "Boolean(1)"]
        assert len(report["data"]["isomorphism"]) == 12

    def test_decompose_needs_mol(self, capsys):
        assert run(["lattice", "decompose", "o6"]) == EXIT_FAILED

    def test_congruences(self, capsys):
        code, report = run_json(capsys, "lattice", "congruences", "bool:2")
        assert code == EXIT_OK
        assert report["data"]["count"] == 4

    def test_si(self, capsys):
        code, report = run_json(capsys, "lattice", "si", "mo:3")
        assert code == EXIT_OK
        assert report["data"]["irreducible"]

    def test_unknown_spec(self, capsys):
        assert run(["lattice", "check", "tree:3"]) == EXIT_USAGE


@pytest.mark.integration
class TestSpaceCommand:
    """molkit space."""

    def test_ortho(self, capsys):
        code, report = run_json(capsys, "space", "ortho", "--in", DIAGONAL)
        assert code == EXIT_OK
        assert report["data"]["result"]["dim"] == 2

    def test_ortho_under_form(self, capsys):
        code, report = run_json(capsys, "space", "ortho", "--form", GRAM, "--in", DIAGONAL)
        assert code == EXIT_OK
        assert report["data"]["result"]["dim"] == 2

    def test_meet_and_join(self, capsys):
        code, meet = run_json(capsys, "space", "meet", "--in", PLANE, "--in", DIAGONAL)
        assert code == EXIT_OK and meet["data"]["result"]["dim"] == 0
        code, join = run_json(capsys, "space", "join", "--in", PLANE, "--in", DIAGONAL)
        assert code == EXIT_OK and join["data"]["result"]["dim"] == 3

    def test_not_perspective(self, capsys):
        assert run(["space", "perspective", "--in", PLANE, "--in", DIAGONAL]) == EXIT_FAILED

    def test_wrong_operand_count(self, capsys):
        assert run(["space", "meet", "--in", PLANE]) == EXIT_USAGE

    def test_missing_file(self, capsys, tmp_path):
        assert run(["space", "ortho", "--in", str(tmp_path / "none.sub")]) == EXIT_USAGE


@pytest.mark.integration
class TestGeomCommand:
    """molkit geom."""

    def test_components(self, capsys):
        code, report = run_json(capsys, "geom", "components", "prod:mo:2,mo:2")
        assert code == EXIT_OK
        assert len(report["data"]["components"]) == 2

    def test_closure(self, capsys):
        code, report = run_json(capsys, "geom", "closure", FANO, "--points", "1,2,4")
        assert code == EXIT_OK
        assert report["data"]["span"] == ["1", "2", "3", "4", "5", "6", "7"]

    def test_polarity_needs_orthogonality(self, capsys):
        assert run(["geom", "polarity", FANO]) == EXIT_FAILED

    def test_polarity_of_atoms(self, capsys):
        code, report = run_json(capsys, "geom", "polarity", "mo:2")
        assert code == EXIT_OK
        assert report["data"]["subspace_lattice_size"] == 6

    def test_represent_quotient(self, capsys):
        code, report = run_json(capsys, "geom", "represent", "prod:mo:2,bool:1",
                                "--quotient", "(0,1)/(0,0)")
        assert code == EXIT_OK
        assert len(report["data"]["representation"]["points"]) == 4

    def test_bad_quotient(self, capsys):
        assert run(["geom", "represent", "mo:2", "--quotient", "a1"]) == EXIT_USAGE


@pytest.mark.integration
class TestFrameCommand:
    """molkit frame."""

    def test_check(self, capsys):
        code, report = run_json(capsys, "frame", "check", "--frame", "4:2")
        assert code == EXIT_OK
        assert report["passed"]

    def test_ring_op(self, capsys):
        code, report = run_json(capsys, "frame", "ring-op", "--op", "mul", "--args", "2", "3")
        assert code == EXIT_OK
        assert report["data"]["result"]["entries"] == [["6"]]

    def test_star(self, capsys):
        code, report = run_json(capsys, "frame", "ring-op", "--op", "star",
                                "--form", "diag:1,2,1", "--args", "3")
        assert code == EXIT_OK
        assert report["data"]["result"]["entries"] == [["3"]]

    def test_oracle(self, capsys):
        code, report = run_json(capsys, "frame", "oracle", "--form", "diag:1,2,3")
        assert code == EXIT_OK
        assert "star" in {c["name"] for c in report["checks"]}

    def test_bad_frame_spec(self, capsys):
        assert run(["frame", "check", "--frame", "x"]) == EXIT_USAGE


@pytest.mark.integration
class TestWitnessCommand:
    """molkit witness."""

    def test_ab(self, capsys):
        assert run(["witness", "ab", "--k", "3"]) == EXIT_OK

    def test_m2(self, capsys):
        code, report = run_json(capsys, "witness", "m2", "--k", "2", "--verify")
        assert code == EXIT_OK
        assert report["data"]["convention"] == {"psi-A": "negated", "psi-B": "negated"}

    def test_lemma_m(self, capsys):
        assert run(["witness", "lemma-m", "--a", "1/2", "--b", "3"]) == EXIT_OK

    def test_m1(self, capsys):
        assert run(["witness", "m1", "--k", "1"]) == EXIT_OK

    def test_m1_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("MOLKIT_CAP", "5")
        code, report = run_json(capsys, "witness", "m1", "--k", "1")
        assert code == EXIT_FAILED
        assert report["checks"][-1]["name"] == "cap"
        assert len(report["checks"]) == 6

    def test_double(self, capsys):
        assert run(["witness", "double", "--in", DIAGONAL]) == EXIT_OK

    def test_family_violation(self, capsys):
        code, report = run_json(capsys, "witness", "family", "--a", "1", "--b", "-2")
        assert code == EXIT_FAILED
        assert report["data"]["first_violation"] == 1

    def test_non_positive_seed(self, capsys):
        assert run(["witness", "ab", "--k", "2", "--a", "0"]) == EXIT_FAILED


@pytest.mark.integration
class TestTermCommand:
    """molkit term."""

    def test_eval(self, capsys):
        code, report = run_json(capsys, "term", "eval", "--model", "mo:2", "--assign", "x=a1",
                                "(+ x (' x))")
        assert code == EXIT_OK
        assert report["data"]["value"] == "1"

    def test_identity_holds(self, capsys):
        assert run(["term", "check", "--model", "mo:2", "(= (* x (+ x y)) x)"]) == EXIT_OK

    def test_identity_fails(self, capsys):
        text = "(= (* x (+ y z)) (+ (* x y) (* x z)))"
        assert run(["term", "check", "--model", "mo:2", text]) == EXIT_FAILED

    def test_sampled_identity(self, capsys):
        code, report = run_json(capsys, "term", "check", "--model", "space:3", "--samples", "5",
                                "(= (' (+ x y)) (* (' x) (' y)))")
        assert code == EXIT_OK
        assert report["data"]["verdict"] == "no counterexample in 5 samples"

    def test_translate(self, capsys):
        code, report = run_json(capsys, "term", "translate", "--model", "mo:3",
                                "(= (' (+ x y)) (* (' x) (' y)))")
        assert code == EXIT_OK
        assert report["data"]["premises"] == [["x", "y1"], ["y", "y2"]]
        assert report["data"]["verdict"] == "holds"

    def test_syntax_error(self, capsys):
        assert run(["term", "eval", "--model", "mo:2", "(+ x"]) == EXIT_USAGE

    def test_deep_term(self, capsys):
        text = "(' " * 1500 + "x" + ")" * 1500
        assert run(["term", "eval", "--model", "mo:2", "--assign", "x=a1", text]) == EXIT_USAGE

    def test_missing_model(self, capsys):
        assert run(["term", "check", "(= x x)"]) == EXIT_USAGE


@pytest.mark.integration
class TestCorpusCommand:
    """molkit corpus."""

    def test_writes_files(self, capsys, tmp_path):
        code, report = run_json(capsys, "corpus", "mo:3", "o6", "prod:mo:2,bool:1",
                                "--out", str(tmp_path))
        assert code == EXIT_OK
        assert report["data"]["sizes"] == {"mo:3": 8, "o6": 6, "prod:mo:2,bool:1": 12}
        assert load_lattice(tmp_path / "mo_3.lat").size == 8
        assert run(["lattice", "check", str(tmp_path / "o6.lat")]) == EXIT_FAILED

    def test_random(self, capsys, tmp_path):
        code, report = run_json(capsys, "corpus", "--random", "3", "--out", str(tmp_path))
        assert code == EXIT_OK
        assert len(report["data"]["files"]) == 3

    def test_no_specs(self, capsys, tmp_path):
        assert run(["corpus", "--out", str(tmp_path)]) == EXIT_USAGE
