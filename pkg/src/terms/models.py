"""
Model arguments of the term commands.

    mo:3, bool:2, prod:..., o6     corpus specs (finite ortholattices)
    path/to/lattice.lat            lattice file
    space:4                        Q^4 with the identity form
    space:1,2,3                    Q^3 with the diagonal form diag(1, 2, 3)
    space:path/to/form.mat         Q^n with the Gram matrix read from a file
"""

import logging
import re
from pathlib import Path

from src.core.exceptions import ParseError, UnknownSpecError
from src.exactla import parse_rational
from src.finlat import build_lattice, load_lattice
from src.subspaces import FormSpace, load_form
from src.terms.evaluate import Model

logger = logging.getLogger(__name__)

_DIAGONAL_RE = re.compile(r"^[^,\s]+(,[^,\s]+)*$")


def resolve_model(spec: str) -> Model:
    """
    Turn a model argument into a finite ortholattice or a form space.

    Raises:
        UnknownSpecError: If the argument is neither a file, a ``space:``
            form nor a corpus spec
        ParseError: If a referenced file is malformed
    """
    if spec.startswith("space:"):
        body = spec[len("space:"):]
        if body.isdigit():
            return FormSpace.identity(int(body))
        if Path(body).is_file():
            return load_form(body)
        if _DIAGONAL_RE.match(body):
            try:
                values = [parse_rational(v) for v in body.split(",")]
            except ParseError as e:
                raise UnknownSpecError(f"bad diagonal form {body!r}: {e}")
            return FormSpace.diagonal(values)
        raise UnknownSpecError(f"unknown form {body!r}")
    if Path(spec).is_file():
        logger.debug(f"loading lattice file {spec}")
        return load_lattice(spec)
    return build_lattice(spec)
