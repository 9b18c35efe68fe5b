"""
Identities as orthoimplications.

For g <= h valid in all ortholattices, g = h holds in an orthomodular
lattice iff h·g' = 0 does. Replacing the constants by u·u' and u + u',
pushing complements to the variables and renaming each x' to a fresh y
turns h·g' into a lattice term f(x_1, y_1, ..., x_n, y_n), and the
identity becomes x_1 ⊥ y_1, ..., x_n ⊥ y_n -> f = 0.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.core.constants import DEFAULT_SAMPLE_COUNT, DEFAULT_SEED, SAMPLE_ENTRY_RANGE
from src.core.exceptions import TermError
from src.core.report import Report
from src.finlat import FiniteOrtholattice, boolean, interval_subalgebra, mo, o6
from src.subspaces import FormSpace, Subspace, random_subspace, random_subspace_of
from src.terms.evaluate import Model, axis_leaves, evaluate, evaluate_arrays, evaluate_grid
from src.terms.operations import (
    fresh_names,
    has_constants,
    nnf,
    replace_constants,
    substitute,
    variables,
    variables_of,
)
from src.terms.syntax import Meet, Ortho, OrthoImplication, Term, Var, render

logger = logging.getLogger(__name__)

MODES = ("exhaustive", "interval", "sampled")


def _translation_models() -> List[Tuple[str, FiniteOrtholattice]]:
    return [("bool:1", boolean(1)), ("mo:2", mo(2)), ("o6", o6())]


def below_on_models(g: Term, h: Term,
                    models: Optional[Sequence[Tuple[str, FiniteOrtholattice]]] = None
                    ) -> Optional[str]:
    """Name of the first model where g <= h fails, or None."""
    names = variables_of([g, h])
    for label, l in models or _translation_models():
        gv = evaluate_grid(g, l, names)
        hv = evaluate_grid(h, l, names)
        if not l.leq[gv, hv].all():
            return label
    return None


def to_orthoimplication(g: Term, h: Term) -> OrthoImplication:
    """
    Translate g = h, for g <= h, into an orthoimplication.

    g <= h is not decided; it is checked on Boolean(1), MO_2 and O6 and a
    warning is logged when it fails there.

    Returns:
        Premises (x_i, y_i) in variable order and the conclusion f with
        h·g' = f(x_1, x_1', ...)
    """
    failing = below_on_models(g, h)
    if failing is not None:
        logger.warning(f"{render(g)} <= {render(h)} fails in {failing}; "
                       f"the translation assumes it")
    t = Meet(h, Ortho(g))
    if has_constants(t):
        u = Var(fresh_names(1, variables(t), stem="u")[0])
        t = replace_constants(t, u)
    t = nnf(t)
    xs = variables(t)
    ys = fresh_names(len(xs), xs)
    complements: Dict[Term, Term] = {Ortho(Var(x)): Var(y) for x, y in zip(xs, ys)}
    conclusion = _rename_complements(t, complements)
    return OrthoImplication(list(zip(xs, ys)), conclusion)


def _rename_complements(t: Term, complements: Dict[Term, Term]) -> Term:
    if t in complements:
        return complements[t]
    if isinstance(t, Ortho):
        raise TermError(f"complement of a non-variable left after normalization: {render(t)}")
    if not t.children():
        return t
    return type(t)(*(_rename_complements(c, complements) for c in t.children()))


def _oimp_counterexample(oi: OrthoImplication,
                         l: FiniteOrtholattice) -> Optional[Dict[str, str]]:
    """
    Exhaustive search over premise-satisfying assignments.

    With pairwise distinct premise variables the search runs over tuples of
    orthogonal pairs; otherwise over all assignments with a premise mask.
    """
    names = oi.premise_variables()
    extra = [v for v in variables(oi.conclusion) if v not in names]
    if extra:
        raise TermError(f"conclusion variable {extra[0]} is not constrained by a premise")
    bottom = l.bottom
    if len(names) == 2 * len(oi.premises):
        orth = np.argwhere(l.leq[:, l.ortho])
        count = len(oi.premises)
        if count == 0:
            return None if evaluate(oi.conclusion, l, {}) == bottom else {}
        slots = [f"p{i}" for i in range(count)]
        shape = (len(orth),) * (count - 1)
        picks = axis_leaves(slots[1:], shape)
        for first in range(len(orth)):
            picks[slots[0]] = np.asarray(first, dtype=np.int64)
            leaves = {}
            for slot, (x, y) in zip(slots, oi.premises):
                leaves[x] = orth[picks[slot], 0]
                leaves[y] = orth[picks[slot], 1]
            values = np.broadcast_to(evaluate_arrays(oi.conclusion, l, leaves), shape)
            bad = np.argwhere(values != bottom)
            if len(bad):
                where = (first,) + tuple(int(i) for i in bad[0])
                return {name: l.name(int(orth[w, side]))
                        for w, (x, y) in zip(where, oi.premises)
                        for name, side in ((x, 0), (y, 1))}
        return None
    shape = (l.size,) * len(names)
    leaves = axis_leaves(names, shape)
    mask = np.ones(shape, dtype=bool)
    for x, y in oi.premises:
        mask &= l.leq[leaves[x], l.ortho[leaves[y]]]
    values = np.broadcast_to(evaluate_arrays(oi.conclusion, l, leaves), shape)
    bad = np.argwhere(mask & (values != bottom))
    if len(bad):
        return {name: l.name(int(i)) for name, i in zip(names, bad[0])}
    return None


def _sampled_counterexample(oi: OrthoImplication, space: FormSpace, samples: int,
                            rng: np.random.Generator,
                            entry_range: int) -> Optional[Dict[str, Subspace]]:
    names = oi.premise_variables()
    if len(names) != 2 * len(oi.premises):
        raise TermError("sampled mode needs pairwise distinct premise variables")
    for _ in range(samples):
        assignment: Dict[str, Subspace] = {}
        for x, y in oi.premises:
            assignment[x] = random_subspace(space, rng, entry_range=entry_range)
            assignment[y] = random_subspace_of(assignment[x].perp(), rng, entry_range)
        if not evaluate(oi.conclusion, space, assignment).is_zero:
            return assignment
    return None


def orthoimplication_holds(oi: OrthoImplication, model: Model, mode: str = "exhaustive",
                           samples: int = DEFAULT_SAMPLE_COUNT, seed: int = DEFAULT_SEED,
                           entry_range: int = SAMPLE_ENTRY_RANGE) -> Report:
    """
    Check an orthoimplication in a model.

    Args:
        oi: The orthoimplication
        model: Finite ortholattice (exhaustive, interval) or form space (sampled)
        mode: ``exhaustive`` quantifies over all premise-satisfying tuples;
            ``interval`` additionally checks every interval [0, u] with its
            relative complement; ``sampled`` draws random subspace tuples with
            x_i <= y_i^perp
        samples: Number of tuples in sampled mode
        seed: Seed of the numpy generator in sampled mode
        entry_range: Bound on random generator entries

    Returns:
        Report whose ``data['verdict']`` is ``holds``, ``fails`` or
        ``no counterexample in N samples`` (inconclusive)

    Raises:
        TermError: On an unknown mode or a mode the model does not support
    """
    if mode not in MODES:
        raise TermError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    report = Report(f"term oimp {mode}")
    if mode == "sampled":
        if not isinstance(model, FormSpace):
            raise TermError("sampled mode needs a form space")
        rng = np.random.default_rng(seed)
        witness = _sampled_counterexample(oi, model, samples, rng, entry_range)
        if witness is None:
            verdict = f"no counterexample in {samples} samples"
            report.add_inconclusive("sampled", verdict, {"seed": seed})
        else:
            verdict = "fails"
            report.add("sampled", False, render(oi), {k: v.to_dict() for k, v in witness.items()})
        report.data["verdict"] = verdict
        return report.finish()

    if not isinstance(model, FiniteOrtholattice) or not model.has_ortho:
        raise TermError(f"{mode} mode needs a finite ortholattice")
    witness = _oimp_counterexample(oi, model)
    report.add("exhaustive", witness is None, render(oi),
               None if witness is None else {"assignment": witness})
    holds = witness is None
    if mode == "interval":
        failing_u = None
        for u in range(model.size):
            sub = interval_subalgebra(model, u, model.bottom)
            local = _oimp_counterexample(oi, sub)
            if local is not None:
                failing_u = (model.name(u), local)
                break
        report.add("intervals", failing_u is None, "holds in every [0, u]",
                   None if failing_u is None else {"u": failing_u[0], "assignment": failing_u[1]})
        report.add("intervals-agree", (failing_u is None) == holds,
                   "holding in L agrees with holding in all [0, u]")
    report.data["verdict"] = "holds" if holds else "fails"
    logger.debug(f"{render(oi)}: {report.data['verdict']} ({mode})")
    return report.finish()


def back_substitute(oi: OrthoImplication) -> Term:
    """The conclusion with every y_i replaced by x_i'."""
    return substitute(oi.conclusion, {y: Ortho(Var(x)) for x, y in oi.premises})
