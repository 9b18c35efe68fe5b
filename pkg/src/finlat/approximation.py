"""
Approximation of polynomial values from inside a neutral ideal.

For a neutral ideal I of a complemented modular lattice, a lattice
polynomial f, arguments c_i and p in I:

    f(c_1, ..., c_m) >= p  iff  f(u_1, ..., u_m) >= p
    for some u_i in I with u_i <= c_i
"""

import logging
from itertools import product as cartesian
from typing import Callable, Iterable, Optional, Sequence, Tuple

import numpy as np

from src.core.exceptions import NotBelowError
from src.finlat.lattice import FiniteOrtholattice
from src.finlat.perspectivity import require_modular, require_neutral_ideal

logger = logging.getLogger(__name__)

Polynomial = Callable[..., int]


def approximation_witness(l: FiniteOrtholattice, ideal: Iterable[int], f: Polynomial,
                          args: Sequence[int], p: int) -> Optional[Tuple[int, ...]]:
    """Exhaustive search for u_i in the ideal, u_i <= c_i, with f(u) >= p."""
    members = sorted(set(ideal))
    choices = [[u for u in members if l.leq[u, c]] for c in args]
    for us in cartesian(*choices):
        if l.leq[p, f(*us)]:
            return tuple(us)
    return None


def check_ideal_approximation(l: FiniteOrtholattice, ideal: Iterable[int], f: Polynomial,
                              args: Sequence, p) -> bool:
    """
    Check the approximation biconditional on one instance.

    Args:
        l: A complemented modular lattice
        ideal: Indices of a neutral ideal
        f: Lattice polynomial as a function of element indices
        args: Arguments c_1..c_m (indices or names)
        p: Element of the ideal

    Returns:
        Whether both sides of the biconditional agree

    Raises:
        NotModularError: If l is not modular
        NotNeutralIdealError: If ideal is not a neutral ideal
        NotBelowError: If p is not in the ideal
    """
    require_modular(l)
    ideal = sorted(set(int(x) for x in ideal))
    require_neutral_ideal(l, ideal)
    args = [l.resolve(c) for c in args]
    p = l.resolve(p)
    if p not in ideal:
        raise NotBelowError(f"{l.names[p]} is not in the ideal")
    holds = bool(l.leq[p, f(*args)])
    witness = approximation_witness(l, ideal, f, args, p)
    agrees = holds == (witness is not None)
    if not agrees:
        logger.warning(f"approximation fails at p={l.names[p]}, "
                       f"args={[l.names[c] for c in args]}")
    return agrees


def principal_ideal(l: FiniteOrtholattice, a) -> np.ndarray:
    """Indices of [0, a]."""
    return l.below(l.resolve(a))
