"""
Lattice text format.

    elements: 4 0 a b 1
    bottom: 0
    top: 1
    leq:
    0 a
    0 b
    a 1
    b 1
    ortho:
    a b
    0 1

``leq`` lists pairs x <= y; the reader takes the reflexive transitive
closure and the writer emits covering pairs only. ``ortho`` pairs x x'
(each pair once suffices).
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from src.core.constants import MAX_LATTICE_SIZE
from src.core.exceptions import ParseError
from src.exactla.io import content_lines
from src.finlat.lattice import FiniteOrtholattice

logger = logging.getLogger(__name__)


def _pair(line: str, number: int, index: Dict[str, int]) -> Tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise ParseError(f"expected a pair of element names, got {line!r}", number)
    for name in fields:
        if name not in index:
            raise ParseError(f"unknown element {name!r}", number)
    return index[fields[0]], index[fields[1]]


def _header(line: str, number: int, key: str) -> str:
    if not line.startswith(key + ":"):
        raise ParseError(f"expected '{key}:'", number)
    return line[len(key) + 1:].strip()


def read_lattice(text: str) -> FiniteOrtholattice:
    """
    Parse the lattice format.

    Raises:
        ParseError: On malformed input, unknown names, inconsistent bounds or
            an order that is not antisymmetric
    """
    lines = list(content_lines(text))
    if len(lines) < 4:
        raise ParseError("lattice file needs elements, bottom, top and leq sections")
    number, line = lines[0]
    fields = _header(line, number, "elements").split()
    if not fields or not fields[0].isdigit():
        raise ParseError("expected 'elements: n name1 ... namen'", number)
    n = int(fields[0])
    names = fields[1:]
    if len(names) != n:
        raise ParseError(f"declared {n} elements, listed {len(names)}", number)
    if n > MAX_LATTICE_SIZE:
        raise ParseError(f"{n} elements exceed the supported {MAX_LATTICE_SIZE}", number)
    index = {name: i for i, name in enumerate(names)}
    if len(index) != n:
        raise ParseError("element names must be distinct", number)

    number, line = lines[1]
    bottom_name = _header(line, number, "bottom")
    number, line = lines[2]
    top_name = _header(line, number, "top")
    for name, number in ((bottom_name, lines[1][0]), (top_name, lines[2][0])):
        if name not in index:
            raise ParseError(f"unknown element {name!r}", number)

    number, line = lines[3]
    if line != "leq:":
        raise ParseError("expected 'leq:'", number)
    leq = np.eye(n, dtype=bool)
    ortho_pairs: Optional[List[Tuple[int, int]]] = None
    for number, line in lines[4:]:
        if line == "ortho:":
            if ortho_pairs is not None:
                raise ParseError("duplicate 'ortho:' section", number)
            ortho_pairs = []
            continue
        pair = _pair(line, number, index)
        if ortho_pairs is None:
            leq[pair] = True
        else:
            ortho_pairs.append(pair)

    for k in range(n):
        leq |= leq[:, k][:, None] & leq[k][None, :]
    if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
        raise ParseError("leq pairs contain a cycle")

    ortho = None
    if ortho_pairs is not None:
        table = [-1] * n
        for x, y in ortho_pairs:
            for a, b in ((x, y), (y, x)):
                if table[a] not in (-1, b):
                    raise ParseError(f"conflicting orthocomplement for {names[a]}")
                table[a] = b
        missing = [names[i] for i, v in enumerate(table) if v == -1]
        if missing:
            raise ParseError(f"no orthocomplement given for {', '.join(missing)}")
        ortho = table

    lattice = FiniteOrtholattice(names, leq, ortho)
    if lattice.bottom != index[bottom_name] or lattice.top != index[top_name]:
        raise ParseError("declared bottom/top are not the least/greatest elements")
    return lattice


def write_lattice(l: FiniteOrtholattice) -> str:
    """Render the lattice format with covering pairs in index order."""
    out = [f"elements: {l.size} " + " ".join(l.names),
           f"bottom: {l.names[l.bottom]}",
           f"top: {l.names[l.top]}",
           "leq:"]
    out.extend(f"{l.names[a]} {l.names[b]}" for a, b in l.cover_pairs())
    if l.has_ortho:
        out.append("ortho:")
        out.extend(f"{l.names[x]} {l.names[l.o(x)]}" for x in range(l.size)
                   if x <= l.o(x))
    return "\n".join(out) + "\n"


def load_lattice(path: Union[str, Path]) -> FiniteOrtholattice:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    return read_lattice(text)


def save_lattice(path: Union[str, Path], l: FiniteOrtholattice) -> None:
    Path(path).write_text(write_lattice(l))
