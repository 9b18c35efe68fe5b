"""
Congruences of finite orthomodular lattices represented by quotient sets.

A quotient a/b (a >= b) belongs to the set of a congruence when a and b are
congruent. A set of quotients comes from a congruence iff it contains every
a/a and is closed under subquotients, transposes and the two rules

    a/c, b/c in Q  =>  (a + b)/c in Q
    c/a, c/b in Q  =>  c/(a·b) in Q

The closure below is a worklist fixed point over these rules.
"""

import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.core.exceptions import NotComparableError
from src.core.report import Report
from src.finlat.lattice import FiniteOrtholattice
from src.finlat.perspectivity import perspectivity
from src.finlat.validate import is_modular, is_orthomodular

logger = logging.getLogger(__name__)

Quotient = Tuple[int, int]


class QuotientSet:
    """
    Quotients of a congruence, held as a boolean matrix ``q[a, b]``.

    Attributes:
        lattice: The lattice the quotients live in
        matrix: ``matrix[a, b]`` is True iff a/b is in the set
    """

    def __init__(self, lattice: FiniteOrtholattice, matrix: np.ndarray):
        self.lattice = lattice
        self.matrix = matrix
        self.matrix.setflags(write=False)

    def __contains__(self, quotient: Quotient) -> bool:
        a, b = quotient
        return bool(self.matrix[a, b])

    def pairs(self) -> List[Quotient]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.matrix)]

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def zero_class(self) -> List[int]:
        """Elements congruent to 0."""
        return [int(x) for x in np.flatnonzero(self.matrix[:, self.lattice.bottom])]

    @property
    def is_identity(self) -> bool:
        return len(self) == self.lattice.size

    @property
    def is_all(self) -> bool:
        return bool(self.matrix[self.lattice.top, self.lattice.bottom])

    def __le__(self, other: 'QuotientSet') -> bool:
        return not (self.matrix & ~other.matrix).any()

    def __lt__(self, other: 'QuotientSet') -> bool:
        return self <= other and self != other

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QuotientSet):
            return NotImplemented
        return np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.matrix.tobytes())

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation (the 0-class determines the congruence)."""
        names = self.lattice.names
        return {
            "quotients": len(self),
            "zero_class": [names[x] for x in self.zero_class()],
            "identity": self.is_identity,
            "all": self.is_all,
        }

    def __repr__(self) -> str:
        return f"QuotientSet({len(self)} quotients, 0-class of {len(self.zero_class())})"


def _identity_matrix(l: FiniteOrtholattice) -> np.ndarray:
    return np.eye(l.size, dtype=bool)


def _close(l: FiniteOrtholattice, q: np.ndarray, seeds: Iterable[Quotient]) -> np.ndarray:
    """Saturate q in place under the closure rules, starting from seeds."""
    leq, join, meet = l.leq, l.join, l.meet
    work: List[Quotient] = []

    def push(a: int, b: int) -> None:
        if not q[a, b]:
            q[a, b] = True
            work.append((a, b))

    def push_many(tops: np.ndarray, bottoms: np.ndarray) -> None:
        fresh = ~q[tops, bottoms]
        for a, b in zip(tops[fresh], bottoms[fresh]):
            push(int(a), int(b))

    for a, b in seeds:
        push(a, b)
    while work:
        a, b = work.pop()
        # subquotients c/d with b <= d <= c <= a
        inside = np.flatnonzero(leq[b] & leq[:, a])
        lower, upper = np.nonzero(leq[np.ix_(inside, inside)])
        push_many(inside[upper], inside[lower])
        # up-transposes (a + x)/x for a·x = b
        xs = np.flatnonzero(meet[a] == b)
        push_many(join[a, xs], xs)
        # down-transposes y/(y·b) for y + b = a
        ys = np.flatnonzero(join[b] == a)
        push_many(ys, meet[b, ys])
        # same bottom: c/b in Q gives (a + c)/b
        cs = np.flatnonzero(q[:, b])
        push_many(join[a, cs], np.full(len(cs), b))
        # same top: a/c in Q gives a/(b·c)
        cs = np.flatnonzero(q[a])
        push_many(np.full(len(cs), a), meet[b, cs])
    return q


def congruence_from_quotients(l: FiniteOrtholattice,
                              quotients: Iterable[Quotient]) -> QuotientSet:
    """
    Least quotient set of a congruence containing the given quotients.

    Args:
        l: A finite orthomodular lattice
        quotients: Pairs (a, b) with a >= b

    Raises:
        NotComparableError: If some pair has a not above b
    """
    seeds = []
    for a, b in quotients:
        a, b = l.resolve(a), l.resolve(b)
        if not l.leq[b, a]:
            raise NotComparableError(f"{l.names[a]}/{l.names[b]} is not a quotient")
        seeds.append((a, b))
    q = _close(l, _identity_matrix(l), seeds)
    return QuotientSet(l, q)


def congruence_from_quotient(l: FiniteOrtholattice, a, b) -> QuotientSet:
    """Principal congruence generated by a/b."""
    return congruence_from_quotients(l, [(a, b)])


def join_congruences(l: FiniteOrtholattice, qs: Sequence[QuotientSet]) -> QuotientSet:
    """Least congruence above all given ones."""
    matrix = _identity_matrix(l)
    seeds = []
    for q in qs:
        seeds.extend(q.pairs())
    return QuotientSet(l, _close(l, matrix, seeds))


def identity_congruence(l: FiniteOrtholattice) -> QuotientSet:
    return QuotientSet(l, _identity_matrix(l))


def all_congruence(l: FiniteOrtholattice) -> QuotientSet:
    return QuotientSet(l, l.leq.T.copy())


def congruence_relation(q: QuotientSet) -> np.ndarray:
    """Boolean matrix of a θ b iff (a + b)/(a·b) is in q."""
    l = q.lattice
    return q.matrix[l.join, l.meet]


def check_toll_closure(q: QuotientSet) -> Report:
    """
    Re-check every closure rule on a finished quotient set.

    Returns:
        Report with one check per rule and a witness for the first failure
    """
    l = q.lattice
    m = q.matrix
    leq, join, meet = l.leq, l.join, l.meet
    report = Report("quotient closure")

    def first(pairs: np.ndarray) -> Optional[Dict[str, str]]:
        if len(pairs):
            return {"quotient": "/".join(l.names[int(x)] for x in pairs[0])}
        return None

    report.add("trivial", bool(m.diagonal().all()), "contains every a/a")
    report.add("quotients", not (m & ~leq.T).any(), "every member a/b has a >= b")

    bad_sub = []
    bad_up = []
    bad_down = []
    bad_join = []
    bad_meet = []
    for a, b in np.argwhere(m):
        inside = np.flatnonzero(leq[b] & leq[:, a])
        block = leq[np.ix_(inside, inside)].T
        if (block & ~m[np.ix_(inside, inside)]).any():
            bad_sub.append((a, b))
        xs = np.flatnonzero(meet[a] == b)
        if not m[join[a, xs], xs].all():
            bad_up.append((a, b))
        ys = np.flatnonzero(join[b] == a)
        if not m[ys, meet[b, ys]].all():
            bad_down.append((a, b))
        cs = np.flatnonzero(m[:, b])
        if not m[join[a, cs], b].all():
            bad_join.append((a, b))
        cs = np.flatnonzero(m[a])
        if not m[a, meet[b, cs]].all():
            bad_meet.append((a, b))

    for name, bad, detail in [
        ("subquotients", bad_sub, "closed under subquotients"),
        ("up-transposes", bad_up, "a/b with a·x = b gives (a + x)/x"),
        ("down-transposes", bad_down, "a/b with y + b = a gives y/(y·b)"),
        ("join-rule", bad_join, "a/c, b/c give (a + b)/c"),
        ("meet-rule", bad_meet, "c/a, c/b give c/(a·b)"),
    ]:
        report.add(name, not bad, detail, first(np.array(bad)))
    return report.finish()


def tolerance_closure(l: FiniteOrtholattice, pairs: Iterable[Tuple[Any, Any]]) -> np.ndarray:
    """
    Least reflexive symmetric relation compatible with + and · containing the seeds.

    On an orthomodular lattice the result is transitive and equals the
    congruence generated by the seeds.

    Returns:
        Boolean relation matrix
    """
    relation = np.eye(l.size, dtype=bool)
    work = []
    for a, b in pairs:
        a, b = l.resolve(a), l.resolve(b)
        for x, y in ((a, b), (b, a)):
            if not relation[x, y]:
                relation[x, y] = True
                work.append((x, y))
    while work:
        a, b = work.pop()
        related_x, related_y = np.nonzero(relation)
        for table in (l.join, l.meet):
            xs = table[a, related_x]
            ys = table[b, related_y]
            fresh = ~relation[xs, ys]
            for x, y in zip(xs[fresh], ys[fresh]):
                for u, v in ((int(x), int(y)), (int(y), int(x))):
                    if not relation[u, v]:
                        relation[u, v] = True
                        work.append((u, v))
    return relation


def principal_congruences(l: FiniteOrtholattice) -> List[QuotientSet]:
    """
    Distinct principal congruences generating all congruences.

    On an orthomodular lattice every congruence is determined by its 0-class,
    so the congruences of atoms over 0 suffice; otherwise covering quotients
    are used.
    """
    if is_orthomodular(l):
        seeds = [(p, l.bottom) for p in l.atoms()]
    else:
        seeds = [(b, a) for a, b in l.cover_pairs()]
    found: List[QuotientSet] = []
    for seed in seeds:
        q = congruence_from_quotients(l, [seed])
        if q not in found:
            found.append(q)
    return found


def congruence_lattice(l: FiniteOrtholattice) -> List[QuotientSet]:
    """
    All congruences of a finite lattice.

    Principal congruences are joined pairwise until no new congruence appears.

    Returns:
        Congruences ordered by size, identity first
    """
    principals = principal_congruences(l)
    result = [identity_congruence(l)] + principals
    seen = set(result)
    frontier = list(principals)
    while frontier:
        fresh = []
        for q in frontier:
            for p in principals:
                joined = join_congruences(l, [q, p])
                if joined not in seen:
                    seen.add(joined)
                    fresh.append(joined)
        result.extend(fresh)
        frontier = fresh
    result.sort(key=len)
    logger.info(f"lattice of size {l.size} has {len(result)} congruences")
    return result


def minimal_congruences(congruences: Sequence[QuotientSet]) -> List[QuotientSet]:
    """Atoms of the congruence lattice."""
    nontrivial = [q for q in congruences if not q.is_identity]
    return [q for q in nontrivial if not any(p < q for p in nontrivial)]


class IrreducibilityResult:
    """
    Outcome of the subdirect irreducibility test.

    Attributes:
        irreducible: Verdict from congruence enumeration
        minimal: The unique minimal nontrivial congruence when irreducible
        perspectivity_criterion: Verdict of the perspectivity criterion, or
            None when it does not apply (non-modular input)
    """

    def __init__(self, irreducible: bool, minimal: Optional[QuotientSet],
                 perspectivity_criterion: Optional[bool], congruence_count: int):
        self.irreducible = irreducible
        self.minimal = minimal
        self.perspectivity_criterion = perspectivity_criterion
        self.congruence_count = congruence_count

    @property
    def agrees(self) -> bool:
        return self.perspectivity_criterion is None or \
            self.perspectivity_criterion == self.irreducible

    def __bool__(self) -> bool:
        return self.irreducible

    def to_dict(self) -> Dict[str, Any]:
        return {
            "irreducible": self.irreducible,
            "minimal": None if self.minimal is None else self.minimal.to_dict(),
            "perspectivity_criterion": self.perspectivity_criterion,
            "congruence_count": self.congruence_count,
        }


def perspectivity_criterion(l: FiniteOrtholattice) -> bool:
    """
    Any two nonzero elements have nonzero perspective parts below them.

    For a finite atomic lattice it suffices that all atoms are pairwise
    perspective.
    """
    relation = perspectivity(l)
    atoms = l.atoms()
    if l.size < 2:
        return False
    return bool(relation[np.ix_(atoms, atoms)].all())


def is_subdirectly_irreducible(l: FiniteOrtholattice) -> IrreducibilityResult:
    """
    Decide subdirect irreducibility and cross-check it by perspectivity.

    Args:
        l: A finite MOL

    Returns:
        IrreducibilityResult; ``irreducible`` holds iff there is a unique
        minimal nontrivial congruence
    """
    congruences = congruence_lattice(l)
    minimal = minimal_congruences(congruences)
    irreducible = len(minimal) == 1
    criterion = perspectivity_criterion(l) if is_modular(l) else None
    result = IrreducibilityResult(irreducible, minimal[0] if irreducible else None,
                                  criterion, len(congruences))
    if not result.agrees:
        logger.warning("congruence enumeration and perspectivity criterion disagree")
    return result


def quotient_lattice(l: FiniteOrtholattice, q: QuotientSet) -> FiniteOrtholattice:
    """
    The quotient ortholattice by a congruence.

    Classes are intervals; each is named after its least element.
    """
    theta = congruence_relation(q)
    down_count = l.leq.sum(axis=0)
    least = np.empty(l.size, dtype=np.int64)
    for x in range(l.size):
        members = np.flatnonzero(theta[x])
        least[x] = members[np.argmin(down_count[members])]
    reps = sorted(set(int(r) for r in least))
    position = {r: i for i, r in enumerate(reps)}
    reps_arr = np.asarray(reps, dtype=np.int64)
    # [a] <= [b] iff a·b is congruent to a
    leq = least[l.meet[np.ix_(reps_arr, reps_arr)]] == reps_arr[:, None]
    ortho = None
    if l.has_ortho:
        ortho = [position[int(least[l.ortho[r]])] for r in reps]
    return FiniteOrtholattice([l.names[r] for r in reps], leq, ortho)
