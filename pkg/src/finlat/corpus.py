"""
Lattice corpus specifications.

    mo:N             MO_N
    bool:N           Boolean algebra with N atoms
    chain:N          N-element chain
    o6               hexagon ortholattice
    prod:S1,S2,...   direct product of the listed specs
    interval:U:V:S   interval [V, U] of S with the induced complementation
"""

import logging
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from src.core.constants import LATTICE_SUFFIX
from src.core.exceptions import UnknownSpecError
from src.finlat.constructors import boolean, chain, interval_subalgebra, mo, o6, product_all
from src.finlat.io import save_lattice
from src.finlat.lattice import FiniteOrtholattice

logger = logging.getLogger(__name__)

DEFAULT_MAX_CORPUS_SIZE = 200


def _split_top_level(text: str) -> List[str]:
    """Split at commas outside parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif ch == ',' and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def _count(spec: str, value: str, minimum: int) -> int:
    if not value.isdigit() or int(value) < minimum:
        raise UnknownSpecError(f"{spec!r}: expected an integer >= {minimum}")
    return int(value)


def build_lattice(spec: str) -> FiniteOrtholattice:
    """
    Build a lattice from its corpus specification.

    Raises:
        UnknownSpecError: If the specification is not recognized
    """
    spec = spec.strip()
    kind, _, rest = spec.partition(':')
    if kind == 'o6' and not rest:
        return o6()
    if kind == 'mo':
        return mo(_count(spec, rest, 1))
    if kind == 'bool':
        return boolean(_count(spec, rest, 0))
    if kind == 'chain':
        return chain(_count(spec, rest, 1))
    if kind == 'prod' and rest:
        return product_all([build_lattice(part) for part in _split_top_level(rest)])
    if kind == 'interval':
        fields = rest.split(':', 2)
        if len(fields) == 3:
            upper, lower, inner = fields
            base = build_lattice(inner)
            try:
                return interval_subalgebra(base, upper, lower)
            except KeyError as e:
                raise UnknownSpecError(f"{spec!r}: {e}")
    raise UnknownSpecError(f"unknown lattice specification {spec!r}")


def spec_size(spec: str) -> int:
    """Size of mo/bool products without building them."""
    total = 1
    for part in spec.partition(':')[2].split(','):
        kind, _, n = part.partition(':')
        total *= 2 * int(n) + 2 if kind == 'mo' else 1 << int(n)
    return total


def random_product_specs(count: int, rng: np.random.Generator,
                         max_size: int = DEFAULT_MAX_CORPUS_SIZE) -> List[str]:
    """
    Random products of Boolean(1..3) and MO_2..MO_4 of bounded size.

    Args:
        count: Number of specifications
        rng: Random generator
        max_size: Upper bound on the product size

    Returns:
        Specifications of the form ``prod:...``
    """
    specs: List[str] = []
    while len(specs) < count:
        factors = []
        for _ in range(int(rng.integers(1, 4))):
            if rng.random() < 0.5:
                factors.append(f"bool:{int(rng.integers(1, 4))}")
            else:
                factors.append(f"mo:{int(rng.integers(2, 5))}")
        spec = "prod:" + ",".join(factors)
        if spec_size(spec) <= max_size:
            specs.append(spec)
    return specs


def spec_filename(spec: str) -> str:
    safe = "".join(ch if ch.isalnum() else "_" for ch in spec).strip("_")
    return safe + LATTICE_SUFFIX


def write_corpus(specs: Sequence[str], out_dir: Union[str, Path]) -> List[Path]:
    """Build every specification and write it as a lattice file."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for spec in specs:
        path = out / spec_filename(spec)
        save_lattice(path, build_lattice(spec))
        logger.info(f"wrote {spec} to {path}")
        written.append(path)
    return written
