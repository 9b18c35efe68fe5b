"""
Structure of finite MOLs: a direct product of Boolean algebras and MO_n's.

Atoms split into components of the perspectivity graph. Each component
spans a central element z; the map x -> (x·z_1, ..., x·z_r) is the product
decomposition, and every factor is matched to Boolean(k) or MO_n by an
explicit isomorphism.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

import networkx as nx
import numpy as np

from src.core.exceptions import DecompositionFailure, NotMOLError
from src.finlat.constructors import boolean, interval_subalgebra, mo, product_all
from src.finlat.lattice import FiniteOrtholattice
from src.finlat.perspectivity import perspectivity
from src.finlat.validate import is_mol

logger = logging.getLogger(__name__)

BOOLEAN = "Boolean"
MO = "MO"


class Factor:
    """
    One directly irreducible block of a decomposition (Boolean blocks merged).

    Attributes:
        kind: ``Boolean`` or ``MO``
        n: k for Boolean(k), n for MO_n
        central: Index of the central element spanning the block
        atoms: Atom indices of the block
    """

    def __init__(self, kind: str, n: int, central: int, atoms: Sequence[int]):
        self.kind = kind
        self.n = n
        self.central = central
        self.atoms = list(atoms)

    @property
    def label(self) -> str:
        return f"Boolean({self.n})" if self.kind == BOOLEAN else f"MO_{self.n}"

    def model(self) -> FiniteOrtholattice:
        return boolean(self.n) if self.kind == BOOLEAN else mo(self.n)

    def to_dict(self) -> Dict[str, Any]:
        return {"factor": self.label, "size": self.model().size}

    def __repr__(self) -> str:
        return f"Factor({self.label})"


class Decomposition:
    """
    Factors of a finite MOL with the verified isomorphism onto their product.

    Attributes:
        factors: Factors, MO blocks first in atom order, then the Boolean block
        isomorphism: ``isomorphism[x]`` is the index of x in ``product``
        product: The product of the factor models
    """

    def __init__(self, lattice: FiniteOrtholattice, factors: List[Factor],
                 isomorphism: np.ndarray, product: FiniteOrtholattice):
        self.lattice = lattice
        self.factors = factors
        self.isomorphism = isomorphism
        self.product = product

    @property
    def labels(self) -> List[str]:
        return [f.label for f in self.factors]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "factors": [f.label for f in self.factors],
            "central": [self.lattice.names[f.central] for f in self.factors],
            "isomorphism": {self.lattice.names[x]: self.product.names[int(y)]
                            for x, y in enumerate(self.isomorphism)},
        }


def is_isomorphism(l1: FiniteOrtholattice, l2: FiniteOrtholattice, phi: np.ndarray) -> bool:
    """Bijective, order-preserving and -reflecting, and compatible with '."""
    phi = np.asarray(phi, dtype=np.int64)
    if l1.size != l2.size or len(phi) != l1.size:
        return False
    if len(set(int(x) for x in phi)) != l1.size:
        return False
    if not np.array_equal(l1.leq, l2.leq[np.ix_(phi, phi)]):
        return False
    if l1.has_ortho and l2.has_ortho:
        return bool(np.array_equal(phi[l1.ortho], l2.ortho[phi]))
    return True


def _is_atomistic(l: FiniteOrtholattice) -> bool:
    return all(l.join_all(l.atoms_below(x)) == x for x in range(l.size))


def find_isomorphism(l1: FiniteOrtholattice, l2: FiniteOrtholattice) -> Optional[np.ndarray]:
    """
    Search an isomorphism of atomistic lattices by backtracking over atoms.

    An atom bijection extends by x -> join of the images of the atoms below
    x; partial maps are pruned by the atom counts under pairwise joins and by
    the orthocomplement on atom pairs. The result is verified on the full
    tables.

    Returns:
        Index array mapping l1 onto l2, or None
    """
    if l1.size != l2.size or len(l1.atoms()) != len(l2.atoms()):
        return None
    if not (_is_atomistic(l1) and _is_atomistic(l2)):
        return None
    atoms1, atoms2 = l1.atoms(), l2.atoms()
    below1 = {x: set(l1.atoms_below(x)) for x in range(l1.size)}
    below2 = {x: set(l2.atoms_below(x)) for x in range(l2.size)}
    use_ortho = l1.has_ortho and l2.has_ortho
    assignment: Dict[int, int] = {}

    def consistent(p: int, image: int) -> bool:
        for q, q_image in assignment.items():
            if len(below1[l1.j(p, q)]) != len(below2[l2.j(image, q_image)]):
                return False
            if use_ortho and (l1.o(p) == q) != (l2.o(image) == q_image):
                return False
        return True

    def extend(position: int) -> Optional[np.ndarray]:
        if position == len(atoms1):
            phi = np.array([l2.join_all(assignment[p] for p in sorted(below1[x]))
                            for x in range(l1.size)], dtype=np.int64)
            return phi if is_isomorphism(l1, l2, phi) else None
        p = atoms1[position]
        used = set(assignment.values())
        for image in atoms2:
            if image in used or not consistent(p, image):
                continue
            assignment[p] = image
            found = extend(position + 1)
            if found is not None:
                return found
            del assignment[p]
        return None

    return extend(0)


def atom_components(l: FiniteOrtholattice) -> List[List[int]]:
    """Connected components of the atoms under perspectivity, in atom order."""
    relation = perspectivity(l)
    graph = nx.Graph()
    atoms = l.atoms()
    graph.add_nodes_from(atoms)
    graph.add_edges_from((p, q) for i, p in enumerate(atoms) for q in atoms[i + 1:]
                         if relation[p, q])
    components = [sorted(c) for c in nx.connected_components(graph)]
    components.sort(key=lambda c: c[0])
    return components


def _classify(l: FiniteOrtholattice, component: List[int]) -> Factor:
    z = l.join_all(component)
    block = interval_subalgebra(l, z, l.bottom)
    if len(component) % 2 or block.height() != 2:
        raise DecompositionFailure(
            f"irreducible block under {l.names[z]} has {len(component)} atoms "
            f"and height {block.height()}")
    return Factor(MO, len(component) // 2, z, component)


def decompose_finite_mol(l: FiniteOrtholattice) -> Decomposition:
    """
    Decompose a finite MOL into Boolean and MO_n factors.

    Args:
        l: A validated finite MOL

    Returns:
        Decomposition with the explicit isomorphism onto the product

    Raises:
        NotMOLError: If l is not a modular ortholattice
        DecompositionFailure: If a block has no matching model or the
            isomorphism check fails
    """
    if not is_mol(l):
        raise NotMOLError("decomposition needs a modular orthomodular lattice")

    factors: List[Factor] = []
    singletons: List[int] = []
    for component in atom_components(l):
        if len(component) == 1:
            singletons.extend(component)
        else:
            factors.append(_classify(l, component))
    if singletons:
        factors.append(Factor(BOOLEAN, len(singletons), l.join_all(singletons), singletons))

    if not factors:
        model = boolean(0)
        return Decomposition(l, [], np.zeros(l.size, dtype=np.int64), model)

    # project onto every factor and carry the block onto its model
    models = [f.model() for f in factors]
    maps = []
    for factor, model in zip(factors, models):
        block = interval_subalgebra(l, factor.central, l.bottom)
        phi = find_isomorphism(block, model)
        if phi is None:
            raise DecompositionFailure(f"block under {l.names[factor.central]} "
                                       f"is not isomorphic to {factor.label}")
        position = {int(x): i for i, x in enumerate(l.interval(l.bottom, factor.central))}
        maps.append((factor.central, position, phi))

    target = product_all(models)
    isomorphism = np.zeros(l.size, dtype=np.int64)
    for x in range(l.size):
        index = 0
        for (z, position, phi), model in zip(maps, models):
            index = index * model.size + int(phi[position[l.m(x, z)]])
        isomorphism[x] = index

    if not is_isomorphism(l, target, isomorphism):
        raise DecompositionFailure("x -> (x·z_i) is not an isomorphism onto the product")
    logger.info(f"decomposed lattice of size {l.size} into "
                f"{', '.join(f.label for f in factors)}")
    return Decomposition(l, factors, isomorphism, target)
