"""
Random subspaces for sampled checks.

Generators are random integer vectors with entries in [-r, r] drawn from a
numpy ``Generator``, so every sample is reproducible from the seed.
"""

from typing import List, Optional

import numpy as np

from src.core.constants import SAMPLE_ENTRY_RANGE
from src.subspaces.space import FormSpace, Subspace, span


def random_vectors(rng: np.random.Generator, count: int, n: int,
                   entry_range: int = SAMPLE_ENTRY_RANGE) -> List[List[int]]:
    block = rng.integers(-entry_range, entry_range + 1, size=(count, n))
    return [[int(x) for x in row] for row in block]


def random_subspace(space: FormSpace, rng: np.random.Generator,
                    dim: Optional[int] = None,
                    entry_range: int = SAMPLE_ENTRY_RANGE) -> Subspace:
    """
    Span of random integer generators.

    Args:
        space: Ambient form space
        rng: Random generator
        dim: Number of generators (uniform in 0..n when omitted); the span may
            have smaller dimension when generators happen to be dependent
        entry_range: Bound on absolute entry values

    Returns:
        The spanned subspace
    """
    n = space.dimension
    count = int(rng.integers(0, n + 1)) if dim is None else dim
    return span(space, random_vectors(rng, count, n, entry_range))


def random_subspace_of(u: Subspace, rng: np.random.Generator,
                       entry_range: int = SAMPLE_ENTRY_RANGE) -> Subspace:
    """Random subspace of u from random integer combinations of its basis."""
    if u.is_zero:
        return u
    count = int(rng.integers(0, u.dim + 1))
    coefficients = random_vectors(rng, count, u.dim, entry_range)
    basis = u.vectors()
    n = u.ambient.dimension
    combos = [[sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(n)]
              for coeffs in coefficients]
    return span(u.ambient, combos)


def random_atom(space: FormSpace, rng: np.random.Generator,
                entry_range: int = SAMPLE_ENTRY_RANGE) -> Subspace:
    """Random one-dimensional subspace."""
    while True:
        atom = span(space, random_vectors(rng, 1, space.dimension, entry_range))
        if atom.dim == 1:
            return atom
