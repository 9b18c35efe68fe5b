"""
Ortholattice terms and their s-expression syntax.

    x, y1          variables
    0, 1           constants
    (+ s t ...)    join (left associative)
    (* s t ...)    meet (left associative)
    (' t)          orthocomplement
    (= g h)        identity
    (oimp ((x u) (y v)) f)   orthoimplication x ⊥ u, y ⊥ v -> f = 0
"""

import re
from typing import Any, Dict, Iterator, List, Sequence, Tuple, Union

from src.core.constants import MAX_TERM_DEPTH
from src.core.exceptions import TermError, TermSyntaxError

_TOKEN_RE = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED = {"oimp"}


class Term:
    """Base class of term nodes; nodes are immutable and compare structurally."""

    __slots__ = ()

    def _key(self) -> Tuple:
        raise NotImplementedError

    def children(self) -> Tuple["Term", ...]:
        return ()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Term):
            return NotImplemented
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._key()))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({render(self)})"

    def to_dict(self) -> Dict[str, Any]:
        return {"term": render(self)}

    # Builders, so terms read naturally in code: x + y, x * y, ~x

    def __add__(self, other: "Term") -> "Term":
        return Join(self, other)

    def __mul__(self, other: "Term") -> "Term":
        return Meet(self, other)

    def __invert__(self) -> "Term":
        return Ortho(self)


class Var(Term):
    __slots__ = ("name",)

    def __init__(self, name: str):
        if not _NAME_RE.match(name) or name in _RESERVED:
            raise TermError(f"invalid variable name {name!r}")
        self.name = name

    def _key(self) -> Tuple:
        return (self.name,)


class Const(Term):
    __slots__ = ("value",)

    def __init__(self, value: int):
        if value not in (0, 1):
            raise TermError(f"constants are 0 and 1, got {value!r}")
        self.value = value

    def _key(self) -> Tuple:
        return (self.value,)


class Join(Term):
    __slots__ = ("left", "right")

    def __init__(self, left: Term, right: Term):
        self.left = left
        self.right = right

    def _key(self) -> Tuple:
        return (self.left, self.right)

    def children(self) -> Tuple[Term, ...]:
        return (self.left, self.right)


class Meet(Term):
    __slots__ = ("left", "right")

    def __init__(self, left: Term, right: Term):
        self.left = left
        self.right = right

    def _key(self) -> Tuple:
        return (self.left, self.right)

    def children(self) -> Tuple[Term, ...]:
        return (self.left, self.right)


class Ortho(Term):
    __slots__ = ("arg",)

    def __init__(self, arg: Term):
        self.arg = arg

    def _key(self) -> Tuple:
        return (self.arg,)

    def children(self) -> Tuple[Term, ...]:
        return (self.arg,)


ZERO = Const(0)
ONE = Const(1)


def var(name: str) -> Var:
    return Var(name)


def join(*terms: Term) -> Term:
    """Left associative join; the empty join is 0."""
    if not terms:
        return ZERO
    result = terms[0]
    for t in terms[1:]:
        result = Join(result, t)
    return result


def meet(*terms: Term) -> Term:
    """Left associative meet; the empty meet is 1."""
    if not terms:
        return ONE
    result = terms[0]
    for t in terms[1:]:
        result = Meet(result, t)
    return result


def has_ortho(t: Term) -> bool:
    if isinstance(t, Ortho):
        return True
    return any(has_ortho(c) for c in t.children())


def height(t: Term) -> int:
    """Length of the longest root-to-leaf path, counting nodes."""
    best = 0
    stack = [(t, 1)]
    while stack:
        node, level = stack.pop()
        best = max(best, level)
        stack.extend((c, level + 1) for c in node.children())
    return best


class Identity:
    """The identity g = h."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: Term, rhs: Term):
        self.lhs = lhs
        self.rhs = rhs

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Identity):
            return NotImplemented
        return self.lhs == other.lhs and self.rhs == other.rhs

    def __hash__(self) -> int:
        return hash((self.lhs, self.rhs))

    def to_dict(self) -> Dict[str, Any]:
        return {"identity": render(self)}

    def __repr__(self) -> str:
        return f"Identity({render(self)})"


class OrthoImplication:
    """
    x_1 ⊥ y_1, ..., x_n ⊥ y_n -> f = 0 with f a lattice term.

    Attributes:
        premises: Pairs of variable names (x_i, y_i)
        conclusion: Term without orthocomplements

    Raises:
        TermError: If the conclusion contains an orthocomplement
    """

    __slots__ = ("premises", "conclusion")

    def __init__(self, premises: Sequence[Tuple[str, str]], conclusion: Term):
        if has_ortho(conclusion):
            raise TermError("the conclusion of an orthoimplication must be a lattice term")
        self.premises: Tuple[Tuple[str, str], ...] = tuple((x, y) for x, y in premises)
        self.conclusion = conclusion

    def premise_variables(self) -> List[str]:
        """Distinct premise variables in order of appearance."""
        seen: List[str] = []
        for pair in self.premises:
            for name in pair:
                if name not in seen:
                    seen.append(name)
        return seen

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, OrthoImplication):
            return NotImplemented
        return self.premises == other.premises and self.conclusion == other.conclusion

    def __hash__(self) -> int:
        return hash((self.premises, self.conclusion))

    def to_dict(self) -> Dict[str, Any]:
        return {"premises": [list(p) for p in self.premises],
                "conclusion": render(self.conclusion), "text": render(self)}

    def __repr__(self) -> str:
        return f"OrthoImplication({render(self)})"


Parsed = Union[Term, Identity, OrthoImplication]


def _terms_of(value: Parsed) -> Tuple[Term, ...]:
    if isinstance(value, Identity):
        return (value.lhs, value.rhs)
    if isinstance(value, OrthoImplication):
        return (value.conclusion,)
    return (value,)


# Parsing

_Token = Tuple[str, str, int]


def _tokens(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            if text[pos:].strip() == "":
                break
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if match.group(1):
            tokens.append(("(", "(", match.start(1)))
        elif match.group(2):
            tokens.append((")", ")", match.start(2)))
        elif match.group(3):
            tokens.append(("atom", match.group(3), match.start(3)))
        pos = match.end()
    return tokens


class _Parser:

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokens(text)
        self.pos = 0
        self.depth = 0

    def _peek(self) -> _Token:
        if self.pos >= len(self.tokens):
            raise TermSyntaxError("unexpected end of input", len(self.text))
        return self.tokens[self.pos]

    def _next(self) -> _Token:
        token = self._peek()
        self.pos += 1
        return token

    def _expect(self, kind: str) -> _Token:
        token = self._next()
        if token[0] != kind:
            raise TermSyntaxError(f"expected {kind!r}, got {token[1]!r}", token[2])
        return token

    def parse(self) -> Parsed:
        if not self.tokens:
            raise TermSyntaxError("empty input", 0)
        result = self._top()
        if self.pos < len(self.tokens):
            token = self.tokens[self.pos]
            raise TermSyntaxError(f"trailing input {token[1]!r}", token[2])
        for t in _terms_of(result):
            if height(t) > MAX_TERM_DEPTH:
                raise TermSyntaxError(f"nesting deeper than {MAX_TERM_DEPTH}", 0)
        return result

    def _top(self) -> Parsed:
        kind = self._peek()[0]
        if kind == "(" and self.pos + 1 < len(self.tokens):
            head = self.tokens[self.pos + 1][1]
            if head == "=":
                self._next()
                self._next()
                lhs, rhs = self._term(), self._term()
                self._expect(")")
                return Identity(lhs, rhs)
            if head == "oimp":
                return self._oimp()
        return self._term()

    def _oimp(self) -> OrthoImplication:
        start = self._expect("(")
        self._next()
        self._expect("(")
        premises = []
        while self._peek()[0] == "(":
            self._next()
            x = self._name()
            y = self._name()
            self._expect(")")
            premises.append((x, y))
        self._expect(")")
        conclusion = self._term()
        self._expect(")")
        try:
            return OrthoImplication(premises, conclusion)
        except TermError as e:
            raise TermSyntaxError(str(e), start[2])

    def _name(self) -> str:
        kind, value, where = self._next()
        if kind != "atom" or not _NAME_RE.match(value) or value in _RESERVED:
            raise TermSyntaxError(f"expected a variable, got {value!r}", where)
        return value

    def _term(self) -> Term:
        kind, value, where = self._next()
        if kind == "atom":
            if value in ("0", "1"):
                return Const(int(value))
            if _NAME_RE.match(value) and value not in _RESERVED:
                return Var(value)
            raise TermSyntaxError(f"unexpected symbol {value!r}", where)
        if kind == ")":
            raise TermSyntaxError("unexpected ')'", where)
        self.depth += 1
        if self.depth > MAX_TERM_DEPTH:
            raise TermSyntaxError(f"nesting deeper than {MAX_TERM_DEPTH}", where)
        op_kind, op, op_where = self._next()
        if op_kind != "atom" or op not in ("+", "*", "'"):
            raise TermSyntaxError(f"expected an operator, got {op!r}", op_where)
        args = []
        while self._peek()[0] != ")":
            args.append(self._term())
        self._next()
        self.depth -= 1
        if op == "'":
            if len(args) != 1:
                raise TermSyntaxError("orthocomplement takes one argument", op_where)
            return Ortho(args[0])
        if len(args) < 2:
            raise TermSyntaxError(f"{op} takes at least two arguments", op_where)
        return join(*args) if op == "+" else meet(*args)


def parse(text: str) -> Parsed:
    """
    Parse a term, an identity or an orthoimplication.

    Raises:
        TermSyntaxError: With the character offset of the problem
    """
    return _Parser(text).parse()


def parse_term(text: str) -> Term:
    """Parse and require a plain term."""
    result = parse(text)
    if not isinstance(result, Term):
        raise TermSyntaxError("expected a term", 0)
    return result


def _render_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Ortho):
        return f"(' {_render_term(t.arg)})"
    op = "+" if isinstance(t, Join) else "*"
    return f"({op} {_render_term(t.left)} {_render_term(t.right)})"


def render(value: Parsed) -> str:
    """Inverse of ``parse``: parse(render(v)) == v."""
    if isinstance(value, Identity):
        return f"(= {_render_term(value.lhs)} {_render_term(value.rhs)})"
    if isinstance(value, OrthoImplication):
        pairs = " ".join(f"({x} {y})" for x, y in value.premises)
        return f"(oimp ({pairs}) {_render_term(value.conclusion)})"
    return _render_term(value)


def iter_subterms(t: Term) -> Iterator[Term]:
    """Pre-order traversal."""
    yield t
    for c in t.children():
        yield from iter_subterms(c)
