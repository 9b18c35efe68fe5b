"""
Structural operations on terms.
"""

from typing import Iterable, List, Mapping

from src.terms.syntax import ONE, ZERO, Const, Join, Meet, Ortho, Term, Var, iter_subterms


def variables(t: Term) -> List[str]:
    """Variable names in order of first appearance."""
    names: List[str] = []
    for node in iter_subterms(t):
        if isinstance(node, Var) and node.name not in names:
            names.append(node.name)
    return names


def variables_of(terms: Iterable[Term]) -> List[str]:
    names: List[str] = []
    for t in terms:
        names.extend(n for n in variables(t) if n not in names)
    return names


def has_constants(t: Term) -> bool:
    return any(isinstance(node, Const) for node in iter_subterms(t))


def substitute(t: Term, mapping: Mapping[str, Term]) -> Term:
    """Replace variables by terms simultaneously; unmapped variables stay."""
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Const):
        return t
    if isinstance(t, Ortho):
        return Ortho(substitute(t.arg, mapping))
    return type(t)(substitute(t.left, mapping), substitute(t.right, mapping))


def replace_constants(t: Term, u: Var) -> Term:
    """0 -> u·u' and 1 -> u + u'."""
    if isinstance(t, Const):
        return Meet(u, Ortho(u)) if t.value == 0 else Join(u, Ortho(u))
    if isinstance(t, Var):
        return t
    if isinstance(t, Ortho):
        return Ortho(replace_constants(t.arg, u))
    return type(t)(replace_constants(t.left, u), replace_constants(t.right, u))


def nnf(t: Term) -> Term:
    """
    Push orthocomplements down to variables with De Morgan's laws and x'' = x.

    In the result every Ortho node wraps a Var.
    """
    if isinstance(t, (Var, Const)):
        return t
    if isinstance(t, (Join, Meet)):
        return type(t)(nnf(t.left), nnf(t.right))
    inner = t.arg
    if isinstance(inner, Var):
        return t
    if isinstance(inner, Const):
        return ONE if inner.value == 0 else ZERO
    if isinstance(inner, Ortho):
        return nnf(inner.arg)
    if isinstance(inner, Join):
        return Meet(nnf(Ortho(inner.left)), nnf(Ortho(inner.right)))
    return Join(nnf(Ortho(inner.left)), nnf(Ortho(inner.right)))


def fresh_names(count: int, taken: Iterable[str], stem: str = "y") -> List[str]:
    """``stem1, stem2, ...`` avoiding taken names."""
    used = set(taken)
    names = []
    index = 1
    while len(names) < count:
        candidate = f"{stem}{index}"
        if candidate not in used:
            names.append(candidate)
            used.add(candidate)
        index += 1
    return names


def malcev_term(x: Term, y: Term, z: Term) -> Term:
    """p(x, y, z) = (x + (y + z)y')(z + (x + y)y')."""
    return Meet(Join(x, Meet(Join(y, z), Ortho(y))), Join(z, Meet(Join(x, y), Ortho(y))))
