"""
Term command implementation for the molkit CLI.

    molkit term eval --model mo:2 --assign x=a1 "(+ x (' x))"
    molkit term check --model mo:3 "(= (* x (+ x y)) x)"
    molkit term check --model space:4 --mode sampled "(oimp ((x y)) (* x y))"
    molkit term translate [--model mo:3] "(= (' (+ x y)) (* (' x) (' y)))"

Models are lattice files, corpus specs, or ``space:N``, ``space:1,2,3``,
``space:FORM.mat`` for subspace lattices.
"""

import argparse
import logging
from typing import Any, Dict

import numpy as np

from src.config.settings import Settings
from src.core.exceptions import ParseError, TermError
from src.core.report import Report
from src.finlat import FiniteOrtholattice
from src.subspaces import FormSpace, load_subspace
from src.terms import (
    MODES,
    Identity,
    OrthoImplication,
    Term,
    evaluate,
    identity_holds,
    identity_report,
    orthoimplication_holds,
    parse,
    render,
    resolve_model,
    sampled_identity_report,
    to_orthoimplication,
    variables,
)

logger = logging.getLogger(__name__)

ACTIONS = ("eval", "check", "translate")


def add_arguments(subparsers) -> None:
    parser = subparsers.add_parser('term', help='Terms, identities and orthoimplications')
    parser.add_argument('action', choices=ACTIONS, help='Operation')
    parser.add_argument('text', help='Term, identity (= g h) or orthoimplication (oimp ...)')
    parser.add_argument('--model', help='Lattice file, corpus spec or space:FORM')
    parser.add_argument('--assign', action='append', default=[],
                        help='Variable assignment name=value (element name or subspace file)')
    parser.add_argument('--mode', choices=MODES,
                        help='Orthoimplication mode (exhaustive for finite models, '
                             'sampled for spaces)')
    parser.add_argument('--samples', type=int, help='Sample count for sampled checks')


def _assignment(args: argparse.Namespace, model: Any) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for item in args.assign:
        name, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"expected name=value, got {item!r}")
        out[name] = load_subspace(value, model) if isinstance(model, FormSpace) else value
    return out


def _require_model(args: argparse.Namespace):
    if args.model is None:
        raise ParseError(f"term {args.action} needs --model")
    return resolve_model(args.model)


def evaluate_term(args: argparse.Namespace, settings: Settings) -> Report:
    t = parse(args.text)
    if not isinstance(t, Term):
        raise TermError("eval takes a plain term")
    model = _require_model(args)
    value = evaluate(t, model, _assignment(args, model))
    report = Report("term eval")
    report.data["term"] = render(t)
    report.data["variables"] = variables(t)
    report.data["value"] = model.name(value) if isinstance(model, FiniteOrtholattice) else value
    return report.finish()


def _oimp_report(oi: OrthoImplication, model: Any, mode: str, settings: Settings,
                 samples: int) -> Report:
    sampling = settings.get_sampling_params()
    return orthoimplication_holds(oi, model, mode, samples=samples, seed=sampling['seed'],
                                  entry_range=sampling['entry_range'])


def check_value(args: argparse.Namespace, settings: Settings) -> Report:
    parsed = parse(args.text)
    model = _require_model(args)
    sampling = settings.get_sampling_params()
    samples = args.samples or sampling['count']
    sampled = isinstance(model, FormSpace)
    if isinstance(parsed, OrthoImplication):
        mode = args.mode or ("sampled" if sampled else "exhaustive")
        return _oimp_report(parsed, model, mode, settings, samples)
    if not isinstance(parsed, Identity):
        raise TermError("check takes an identity (= g h) or an orthoimplication")
    if sampled:
        rng = np.random.default_rng(sampling['seed'])
        return sampled_identity_report(parsed.lhs, parsed.rhs, model, samples, rng,
                                       sampling['entry_range'], args.model)
    return identity_report(parsed.lhs, parsed.rhs, model, args.model)


def translate(args: argparse.Namespace, settings: Settings) -> Report:
    parsed = parse(args.text)
    if not isinstance(parsed, Identity):
        raise TermError("translate takes an identity (= g h)")
    oi = to_orthoimplication(parsed.lhs, parsed.rhs)
    report = Report("term translate")
    report.data["orthoimplication"] = render(oi)
    report.data["premises"] = [list(p) for p in oi.premises]
    if args.model is not None:
        model = resolve_model(args.model)
        sampling = settings.get_sampling_params()
        samples = args.samples or sampling['count']
        if isinstance(model, FormSpace):
            oimp = _oimp_report(oi, model, args.mode or "sampled", settings, samples)
            report.extend(oimp, prefix="oimp/")
        else:
            direct = identity_holds(parsed.lhs, parsed.rhs, model)
            oimp = _oimp_report(oi, model, args.mode or "exhaustive", settings, samples)
            report.extend(oimp, prefix="oimp/")
            agrees = direct.holds == (oimp.data["verdict"] == "holds")
            report.add("equivalent", agrees,
                       "the identity and its orthoimplication agree on the model",
                       None if agrees else {"identity": direct.to_dict(),
                                            "orthoimplication": oimp.data["verdict"]})
        report.data["verdict"] = oimp.data["verdict"]
    return report.finish()


def handle(args: argparse.Namespace, settings: Settings) -> Report:
    """Dispatch a term action."""
    handlers = {"eval": evaluate_term, "check": check_value, "translate": translate}
    return handlers[args.action](args, settings)
