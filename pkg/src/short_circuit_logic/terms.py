"""Terms of short-circuit logic.

A term is built from the constants ``T`` and ``F``, atoms, equation
variables, negation, left-sequential conjunction and disjunction and the
conditional ``ite(c, t, e)`` (then-branch ``t`` taken when the guard ``c``
yields true). The concrete syntax is::

    term  := or
    or    := and { "||" and }
    and   := unary { "&&" unary }
    unary := "!" unary | prim
    prim  := "T" | "F" | atom | var | "ite" "(" term "," term "," term ")"
           | "(" term ")"

Atoms are lowercase identifiers (``a``, ``set_1``) or single-quoted strings
(``'set:1:T'``, ``'n=n+1'``); variables are uppercase identifiers (``X``,
``Y1``). Every node type is an immutable, hashable dataclass.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache

ATOM_PATTERN = re.compile(r"[a-z][a-z0-9_]*")
VARIABLE_PATTERN = re.compile(r"[A-Z][A-Z0-9_]*")
KEYWORDS = frozenset({"T", "F", "ite"})

# Placeholder atom used by equation-scheme templates.
SCHEME_PLACEHOLDER = "a"

Position = tuple[int, ...]


class TermSyntaxError(ValueError):
    """Raised for malformed term text or equation files."""

    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class UnboundVariableError(ValueError):
    pass


class ConditionalError(ValueError):
    pass


class Term:
    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class ConstT(Term):
    pass


@dataclass(frozen=True, slots=True)
class ConstF(Term):
    pass


@dataclass(frozen=True, slots=True)
class Atom(Term):
    name: str


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str


@dataclass(frozen=True, slots=True)
class Not(Term):
    t: Term


@dataclass(frozen=True, slots=True)
class And(Term):
    l: Term
    r: Term


@dataclass(frozen=True, slots=True)
class Or(Term):
    l: Term
    r: Term


@dataclass(frozen=True, slots=True)
class Cond(Term):
    """``then`` if ``guard`` else ``orelse``; written ``ite(guard, then, orelse)``."""

    then: Term
    guard: Term
    orelse: Term


T = ConstT()
F = ConstF()


# --- structure -------------------------------------------------------------


def children(t: Term) -> tuple[Term, ...]:
    match t:
        case Not(x):
            return (x,)
        case And(l, r) | Or(l, r):
            return (l, r)
        case Cond(p, q, r):
            return (p, q, r)
        case _:
            return ()


def with_children(t: Term, kids: tuple[Term, ...]) -> Term:
    match t:
        case Not():
            return Not(kids[0])
        case And():
            return And(kids[0], kids[1])
        case Or():
            return Or(kids[0], kids[1])
        case Cond():
            return Cond(kids[0], kids[1], kids[2])
        case _:
            return t


def term_size(t: Term) -> int:
    return 1 + sum(term_size(c) for c in children(t))


def atoms_of(t: Term) -> frozenset[str]:
    if isinstance(t, Atom):
        return frozenset({t.name})
    found: frozenset[str] = frozenset()
    for c in children(t):
        found |= atoms_of(c)
    return found


def variables_of(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset({t.name})
    found: frozenset[str] = frozenset()
    for c in children(t):
        found |= variables_of(c)
    return found


def is_closed(t: Term) -> bool:
    if isinstance(t, Var):
        return False
    return all(is_closed(c) for c in children(t))


def positions(t: Term) -> Iterator[Position]:
    """Yield every subterm position in pre-order (root first)."""
    yield ()
    for i, c in enumerate(children(t)):
        for p in positions(c):
            yield (i, *p)


def subterm_at(t: Term, position: Position) -> Term:
    for i in position:
        kids = children(t)
        if i >= len(kids):
            raise IndexError(f"no child {i} in {render(t)}")
        t = kids[i]
    return t


def replace_at(t: Term, position: Position, new: Term) -> Term:
    if not position:
        return new
    kids = list(children(t))
    head, rest = position[0], position[1:]
    if head >= len(kids):
        raise IndexError(f"no child {head} in {render(t)}")
    kids[head] = replace_at(kids[head], rest, new)
    return with_children(t, tuple(kids))


# --- parsing ---------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<op>&&|\|\||!|\(|\)|,)"
    r"|(?P<quoted>'[^'\n]*')"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos] == "'":
                raise TermSyntaxError("unterminated quoted atom", pos)
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, value: str) -> None:
        kind, text, pos = self.advance()
        if text != value or kind == "quoted":
            found = "end of input" if kind == "end" else repr(text)
            raise TermSyntaxError(f"expected {value!r}, found {found}", pos)

    def parse(self) -> Term:
        t = self.parse_or()
        kind, text, pos = self.current
        if kind != "end":
            raise TermSyntaxError(f"unexpected {text!r}", pos)
        return t

    def parse_or(self) -> Term:
        t = self.parse_and()
        while self.current[:2] == ("op", "||"):
            self.advance()
            t = Or(t, self.parse_and())
        return t

    def parse_and(self) -> Term:
        t = self.parse_unary()
        while self.current[:2] == ("op", "&&"):
            self.advance()
            t = And(t, self.parse_unary())
        return t

    def parse_unary(self) -> Term:
        if self.current[:2] == ("op", "!"):
            self.advance()
            return Not(self.parse_unary())
        return self.parse_prim()

    def parse_prim(self) -> Term:
        kind, text, pos = self.advance()
        if kind == "quoted":
            name = text[1:-1]
            if not name:
                raise TermSyntaxError("empty quoted atom", pos)
            return Atom(name)
        if kind == "ident":
            if text == "T":
                return T
            if text == "F":
                return F
            if text == "ite":
                self.expect("(")
                guard = self.parse_or()
                self.expect(",")
                then = self.parse_or()
                self.expect(",")
                orelse = self.parse_or()
                self.expect(")")
                return Cond(then, guard, orelse)
            if ATOM_PATTERN.fullmatch(text):
                return Atom(text)
            if VARIABLE_PATTERN.fullmatch(text):
                return Var(text)
            raise TermSyntaxError(
                f"identifier {text!r} is neither an atom (lowercase) nor a variable (uppercase)",
                pos,
            )
        if (kind, text) == ("op", "("):
            t = self.parse_or()
            self.expect(")")
            return t
        found = "end of input" if kind == "end" else repr(text)
        raise TermSyntaxError(f"expected a term, found {found}", pos)


def parse(text: str) -> Term:
    return _Parser(text).parse()


# --- printing --------------------------------------------------------------


def _precedence(t: Term) -> int:
    if isinstance(t, Or):
        return 1
    if isinstance(t, And):
        return 2
    return 3


def _wrap(t: Term, needed: int) -> str:
    s = render(t)
    return f"({s})" if _precedence(t) < needed else s


def render_atom(name: str) -> str:
    if ATOM_PATTERN.fullmatch(name) and name not in KEYWORDS:
        return name
    return f"'{name}'"


def render(t: Term) -> str:
    match t:
        case ConstT():
            return "T"
        case ConstF():
            return "F"
        case Atom(name):
            return render_atom(name)
        case Var(name):
            return name
        case Not(x):
            return "!" + _wrap(x, 3)
        case And(l, r):
            return f"{_wrap(l, 2)} && {_wrap(r, 3)}"
        case Or(l, r):
            return f"{_wrap(l, 1)} || {_wrap(r, 2)}"
        case Cond(p, q, r):
            return f"ite({render(q)}, {render(p)}, {render(r)})"
    raise TypeError(f"not a term: {t!r}")


# --- transformations -------------------------------------------------------


def desugar(t: Term) -> Term:
    """Rewrite into the conditional-only signature {T, F, atoms, variables, ite}."""
    match t:
        case Not(x):
            return Cond(F, desugar(x), T)
        case And(l, r):
            return Cond(desugar(r), desugar(l), F)
        case Or(l, r):
            return Cond(T, desugar(l), desugar(r))
        case Cond(p, q, r):
            return Cond(desugar(p), desugar(q), desugar(r))
        case _:
            return t


def express_conditional(t: Term) -> Term:
    """Replace every conditional by ``(guard && then) || (!guard && else)``.

    Only memorizing and static semantics identify the result with the input.
    """
    match t:
        case Cond(p, q, r):
            guard = express_conditional(q)
            return Or(And(guard, express_conditional(p)), And(Not(guard), express_conditional(r)))
        case _:
            kids = children(t)
            if not kids:
                return t
            return with_children(t, tuple(express_conditional(c) for c in kids))


def dual(t: Term) -> Term:
    match t:
        case ConstT():
            return F
        case ConstF():
            return T
        case Not(x):
            return Not(dual(x))
        case And(l, r):
            return Or(dual(l), dual(r))
        case Or(l, r):
            return And(dual(l), dual(r))
        case Cond():
            raise ConditionalError(f"dual is undefined on conditionals: {render(t)}")
        case _:
            return t


def substitute_term(t: Term, binding: Mapping[str, Term]) -> Term:
    match t:
        case Var(name):
            return binding.get(name, t)
        case _:
            kids = children(t)
            if not kids:
                return t
            return with_children(t, tuple(substitute_term(c, binding) for c in kids))


def rename_atom(t: Term, old: str, new: str) -> Term:
    match t:
        case Atom(name):
            return Atom(new) if name == old else t
        case _:
            kids = children(t)
            if not kids:
                return t
            return with_children(t, tuple(rename_atom(c, old, new) for c in kids))


# --- equations -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Equation:
    name: str
    lhs: Term
    rhs: Term
    scheme_atom: str | None = None

    def __str__(self) -> str:
        return f"{render(self.lhs)} = {render(self.rhs)}"

    def variables(self) -> frozenset[str]:
        return variables_of(self.lhs) | variables_of(self.rhs)

    def dual(self) -> Equation:
        return Equation(self.name + "'", dual(self.lhs), dual(self.rhs), self.scheme_atom)

    def for_atom(self, atom: str) -> Equation:
        """Instance of a scheme template for one atom of the alphabet."""
        if self.scheme_atom is None:
            raise ValueError(f"{self.name} is not an equation scheme")
        return Equation(
            f"{self.name}[{atom}]",
            rename_atom(self.lhs, self.scheme_atom, atom),
            rename_atom(self.rhs, self.scheme_atom, atom),
            atom,
        )


def substitute(e: Equation, binding: Mapping[str, Term]) -> tuple[Term, Term]:
    missing = sorted(e.variables() - binding.keys())
    if missing:
        raise UnboundVariableError(f"no binding for {', '.join(missing)} in {e.name}")
    return substitute_term(e.lhs, binding), substitute_term(e.rhs, binding)


def _split_outside_quotes(text: str, separator: str) -> list[str]:
    parts, start, quoted = [], 0, False
    for i, ch in enumerate(text):
        if ch == "'":
            quoted = not quoted
        elif ch == separator and not quoted:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


_EQUATION_HEAD = re.compile(r"\s*(?P<name>[^\s:#]+)(?P<scheme>\s+@scheme)?\s*$")


def parse_equations(text: str) -> list[Equation]:
    """Read ``name : lhs = rhs`` lines; ``#`` starts a comment."""
    equations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _split_outside_quotes(raw, "#")[0]
        if not line.strip():
            continue
        head, sep, body = line.partition(":")
        m = _EQUATION_HEAD.fullmatch(head)
        if not sep or m is None:
            raise TermSyntaxError("expected 'name : lhs = rhs'", line=lineno)
        sides = _split_outside_quotes(body, "=")
        if len(sides) != 2:
            raise TermSyntaxError("expected exactly one '=' between the two sides", line=lineno)
        try:
            lhs, rhs = parse(sides[0]), parse(sides[1])
        except TermSyntaxError as exc:
            raise TermSyntaxError(str(exc), line=lineno) from exc
        scheme_atom = None
        if m.group("scheme"):
            if SCHEME_PLACEHOLDER not in atoms_of(lhs) | atoms_of(rhs):
                raise TermSyntaxError(
                    f"scheme {m.group('name')} does not mention atom {SCHEME_PLACEHOLDER!r}",
                    line=lineno,
                )
            scheme_atom = SCHEME_PLACEHOLDER
        equations.append(Equation(m.group("name"), lhs, rhs, scheme_atom))
    return equations


def render_equations(equations: Iterable[Equation], schemes: Iterable[Equation] = ()) -> str:
    lines = [f"{e.name} : {e}" for e in equations]
    lines += [f"{e.name} @scheme : {e}" for e in schemes]
    return "\n".join(lines) + "\n"


# --- enumeration -----------------------------------------------------------

SIGNATURES = ("scl", "full")


@lru_cache(maxsize=256)
def _terms_of_size(atoms: tuple[str, ...], size: int, signature: str) -> tuple[Term, ...]:
    if size == 1:
        return (T, F, *(Atom(a) for a in atoms))
    found: list[Term] = [Not(x) for x in _terms_of_size(atoms, size - 1, signature)]
    for op in (And, Or):
        for left in range(1, size - 1):
            for l in _terms_of_size(atoms, left, signature):
                for r in _terms_of_size(atoms, size - 1 - left, signature):
                    found.append(op(l, r))
    if signature == "full":
        for i in range(1, size - 2):
            for j in range(1, size - 1 - i):
                k = size - 1 - i - j
                for p in _terms_of_size(atoms, i, signature):
                    for q in _terms_of_size(atoms, j, signature):
                        for r in _terms_of_size(atoms, k, signature):
                            found.append(Cond(p, q, r))
    return tuple(found)


def enumerate_terms(atoms: Iterable[str], max_size: int, signature: str = "scl") -> Iterator[Term]:
    """Every closed term of at most ``max_size`` nodes, smallest first, each once."""
    if max_size < 1:
        raise ValueError(f"max_size must be at least 1, got {max_size}")
    if signature not in SIGNATURES:
        raise ValueError(f"Unknown signature: '{signature}'. Supported: {', '.join(SIGNATURES)}")
    alphabet = tuple(atoms)
    for size in range(1, max_size + 1):
        yield from _terms_of_size(alphabet, size, signature)
