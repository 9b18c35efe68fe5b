"""
Evaluation of terms in finite ortholattices and in subspace lattices.

On a finite model a term is evaluated for all assignments at once: every
variable becomes an index array shaped to broadcast along its own axis, and
joins, meets and orthocomplements are fancy-indexed table lookups.
"""

import logging
from typing import Any, Callable, Dict, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from src.core.exceptions import NotALatticeError, TermError, UnboundVariableError
from src.core.report import Report
from src.finlat import FiniteOrtholattice
from src.subspaces import FormSpace, Subspace, random_subspace
from src.terms.operations import variables, variables_of
from src.terms.syntax import Const, Join, Ortho, Term, Var, has_ortho, render

logger = logging.getLogger(__name__)

Model = Union[FiniteOrtholattice, FormSpace]


def _require_ortho(l: FiniteOrtholattice, t: Term) -> None:
    if not l.has_ortho and has_ortho(t):
        raise NotALatticeError("the model carries no orthocomplement")


def _eval_finite(t: Term, l: FiniteOrtholattice, assignment: Mapping[str, int]) -> int:
    if isinstance(t, Var):
        if t.name not in assignment:
            raise UnboundVariableError(f"variable {t.name} is not assigned")
        return assignment[t.name]
    if isinstance(t, Const):
        return l.top if t.value else l.bottom
    if isinstance(t, Ortho):
        return l.o(_eval_finite(t.arg, l, assignment))
    left, right = _eval_finite(t.left, l, assignment), _eval_finite(t.right, l, assignment)
    return l.j(left, right) if isinstance(t, Join) else l.m(left, right)


def _eval_space(t: Term, space: FormSpace, assignment: Mapping[str, Subspace]) -> Subspace:
    if isinstance(t, Var):
        if t.name not in assignment:
            raise UnboundVariableError(f"variable {t.name} is not assigned")
        return assignment[t.name]
    if isinstance(t, Const):
        return space.full() if t.value else space.zero()
    if isinstance(t, Ortho):
        return _eval_space(t.arg, space, assignment).perp()
    left, right = _eval_space(t.left, space, assignment), _eval_space(t.right, space, assignment)
    return left + right if isinstance(t, Join) else left & right


def evaluate(t: Term, model: Model, assignment: Mapping[str, Any]) -> Any:
    """
    Structural evaluation.

    Args:
        t: Term
        model: Finite ortholattice (values are indices or names) or form
            space (values are subspaces)
        assignment: Values of the variables of t

    Returns:
        Element index, or subspace

    Raises:
        UnboundVariableError: If a variable of t is not assigned
    """
    if isinstance(model, FiniteOrtholattice):
        _require_ortho(model, t)
        resolved = {name: model.resolve(value) for name, value in assignment.items()}
        return _eval_finite(t, model, resolved)
    return _eval_space(t, model, assignment)


def evaluate_arrays(t: Term, l: FiniteOrtholattice,
                    leaves: Mapping[str, np.ndarray]) -> np.ndarray:
    """Evaluate on broadcastable index arrays, one per variable."""
    if isinstance(t, Var):
        if t.name not in leaves:
            raise UnboundVariableError(f"variable {t.name} is not assigned")
        return leaves[t.name]
    if isinstance(t, Const):
        return np.asarray(l.top if t.value else l.bottom, dtype=np.int64)
    if isinstance(t, Ortho):
        return l.ortho[evaluate_arrays(t.arg, l, leaves)]
    left = evaluate_arrays(t.left, l, leaves)
    right = evaluate_arrays(t.right, l, leaves)
    table = l.join if isinstance(t, Join) else l.meet
    return table[left, right]


def axis_leaves(names: Sequence[str], sizes: Sequence[int]) -> Dict[str, np.ndarray]:
    """Index arrays over a grid: variable i varies along axis i."""
    k = len(names)
    leaves = {}
    for axis, (name, size) in enumerate(zip(names, sizes)):
        shape = [1] * k
        shape[axis] = size
        leaves[name] = np.arange(size, dtype=np.int64).reshape(shape)
    return leaves


def evaluate_grid(t: Term, l: FiniteOrtholattice,
                  names: Optional[Sequence[str]] = None) -> np.ndarray:
    """
    Values of t for all assignments.

    Args:
        t: Term
        l: Finite ortholattice
        names: Variable order (the variables of t when omitted); names not
            occurring in t become dummy axes

    Returns:
        Integer array of shape (|l|,) * len(names)
    """
    _require_ortho(l, t)
    names = list(names) if names is not None else variables(t)
    missing = [v for v in variables(t) if v not in names]
    if missing:
        raise UnboundVariableError(f"variable {missing[0]} is not among the grid axes")
    shape = (l.size,) * len(names)
    values = evaluate_arrays(t, l, axis_leaves(names, shape))
    return np.broadcast_to(values, shape)


class IdentityResult:
    """
    Outcome of an exhaustive identity check.

    Attributes:
        holds: No assignment separates the sides
        counterexample: Separating assignment by element names, or None
        values: Values of both sides at the counterexample
    """

    def __init__(self, holds: bool, counterexample: Optional[Dict[str, str]] = None,
                 values: Optional[Tuple[str, str]] = None):
        self.holds = holds
        self.counterexample = counterexample
        self.values = values

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {"holds": self.holds, "counterexample": self.counterexample,
                "values": list(self.values) if self.values else None}

    def __repr__(self) -> str:
        return f"IdentityResult(holds={self.holds}, counterexample={self.counterexample})"


def identity_holds(g: Term, h: Term, model: FiniteOrtholattice) -> IdentityResult:
    """
    Exhaustive check of g = h over every assignment.

    The grid is processed one value of the first variable at a time.
    """
    if not isinstance(model, FiniteOrtholattice):
        raise TermError("exhaustive identity checks need a finite model")
    _require_ortho(model, g)
    _require_ortho(model, h)
    names = variables_of([g, h])
    if not names:
        a, b = evaluate(g, model, {}), evaluate(h, model, {})
        values = (model.name(a), model.name(b))
        return IdentityResult(a == b, None if a == b else {}, None if a == b else values)
    rest = names[1:]
    shape = (model.size,) * len(rest)
    leaves = axis_leaves(rest, shape)
    for first in range(model.size):
        leaves[names[0]] = np.asarray(first, dtype=np.int64)
        lhs = np.broadcast_to(evaluate_arrays(g, model, leaves), shape)
        rhs = np.broadcast_to(evaluate_arrays(h, model, leaves), shape)
        diff = np.argwhere(lhs != rhs)
        if len(diff):
            where = tuple(int(i) for i in diff[0])
            assignment = {names[0]: model.name(first)}
            assignment.update({name: model.name(i) for name, i in zip(rest, where)})
            values = (model.name(int(lhs[where])), model.name(int(rhs[where])))
            logger.debug(f"{render(g)} != {render(h)} at {assignment}")
            return IdentityResult(False, assignment, values)
    return IdentityResult(True)


def identity_report(g: Term, h: Term, model: FiniteOrtholattice, label: str = "") -> Report:
    """identity_holds as a one-check report."""
    report = Report(f"term check {label}".strip())
    result = identity_holds(g, h, model)
    witness = None
    if not result.holds:
        witness = {"assignment": result.counterexample, "lhs": result.values[0],
                   "rhs": result.values[1]}
    report.add("identity", result.holds, f"(= {render(g)} {render(h)})", witness)
    return report.finish()


def as_function(t: Term, l: FiniteOrtholattice,
                names: Optional[Sequence[str]] = None) -> Callable[..., int]:
    """The term as a polynomial function of element indices, in variable order."""
    names = list(names) if names is not None else variables(t)

    def f(*args: int) -> int:
        if len(args) != len(names):
            raise UnboundVariableError(f"expected {len(names)} arguments, got {len(args)}")
        return evaluate(t, l, dict(zip(names, args)))

    return f


def sampled_identity_report(g: Term, h: Term, space: FormSpace, samples: int,
                            rng: np.random.Generator, entry_range: int,
                            label: str = "") -> Report:
    """
    Compare both sides on random subspace assignments.

    A clean run is inconclusive: ``no counterexample in N samples``.
    """
    report = Report(f"term check {label}".strip())
    names = variables_of([g, h])
    for index in range(samples):
        assignment = {name: random_subspace(space, rng, entry_range=entry_range)
                      for name in names}
        lhs, rhs = evaluate(g, space, assignment), evaluate(h, space, assignment)
        if lhs != rhs:
            report.add("identity", False, f"(= {render(g)} {render(h)})",
                       {"sample": index, "assignment": assignment, "lhs": lhs, "rhs": rhs})
            report.data["verdict"] = "fails"
            return report.finish()
    verdict = f"no counterexample in {samples} samples"
    report.add_inconclusive("identity", verdict)
    report.data["verdict"] = verdict
    return report.finish()
