"""
Geometry text format.

    points: p q r s
    collinear:
    p q r
    perp:
    p s

``collinear`` lists triples of point names; the optional ``perp`` section
lists orthogonal pairs (symmetry is implied).
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from src.core.exceptions import GeometryError, ParseError
from src.exactla.io import content_lines
from src.geometry.geometry import PointGeometry


def read_geometry(text: str) -> PointGeometry:
    """
    Parse the geometry format and check the axioms.

    Raises:
        ParseError: On malformed sections or unknown points
        TriangleAxiomError: If the collinearity violates the triangle axiom
        OrthogonalityAxiomError: If perp is not an orthogonality
    """
    lines = list(content_lines(text))
    if not lines:
        raise ParseError("empty geometry file")
    number, line = lines[0]
    if not line.startswith("points:"):
        raise ParseError("expected 'points:'", number)
    points = line[len("points:"):].split()
    known = set(points)

    section: Optional[str] = None
    collinear: List[Tuple[str, ...]] = []
    perp: Optional[List[Tuple[str, ...]]] = None
    for number, line in lines[1:]:
        if line in ("collinear:", "perp:"):
            section = line[:-1]
            if section == "perp":
                if perp is not None:
                    raise ParseError("duplicate 'perp:' section", number)
                perp = []
            continue
        fields = tuple(line.split())
        unknown = [p for p in fields if p not in known]
        if unknown:
            raise ParseError(f"unknown point {unknown[0]!r}", number)
        if section == "collinear":
            if len(fields) != 3:
                raise ParseError("collinear lines need three points", number)
            collinear.append(fields)
        elif section == "perp":
            if len(fields) != 2:
                raise ParseError("perp lines need two points", number)
            perp.append(fields)
        else:
            raise ParseError("expected 'collinear:' or 'perp:'", number)
    try:
        return PointGeometry(points, collinear, perp)
    except GeometryError as e:
        if type(e) is GeometryError:
            raise ParseError(str(e))
        raise


def write_geometry(g: PointGeometry) -> str:
    """Render the geometry format; triples and pairs in point order."""
    out = ["points: " + " ".join(g.points), "collinear:"]
    for t in sorted(sorted(t) for t in g.triples):
        out.append(" ".join(g.points[i] for i in t))
    if g.perp is not None:
        out.append("perp:")
        out.extend(f"{g.points[a]} {g.points[b]}" for a, b in np.argwhere(g.perp) if a <= b)
    return "\n".join(out) + "\n"


def load_geometry(path: Union[str, Path]) -> PointGeometry:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    return read_geometry(text)


def save_geometry(path: Union[str, Path], g: PointGeometry) -> None:
    Path(path).write_text(write_geometry(g))
