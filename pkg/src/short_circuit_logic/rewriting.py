"""Single-step equational rewriting and proof traces."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .terms import (
    ConstF,
    ConstT,
    Equation,
    Position,
    Term,
    Var,
    children,
    parse,
    render,
    replace_at,
    subterm_at,
    term_size,
    variables_of,
)

FORWARD = "->"
BACKWARD = "<-"
DIRECTIONS = (FORWARD, BACKWARD)


class MalformedStepError(ValueError):
    pass


def match(pattern: Term, term: Term, binding: Mapping[str, Term] | None = None) -> dict[str, Term] | None:
    """Extend ``binding`` so that ``pattern`` instantiated by it is ``term``."""
    found = dict(binding or {})
    stack = [(pattern, term)]
    while stack:
        p, t = stack.pop()
        if isinstance(p, Var):
            bound = found.get(p.name)
            if bound is None:
                found[p.name] = t
            elif bound != t:
                return None
            continue
        if type(p) is not type(t):
            return None
        kids_p, kids_t = children(p), children(t)
        if not kids_p:
            if p != t:
                return None
            continue
        stack.extend(zip(kids_p, kids_t))
    return found


@dataclass(frozen=True, slots=True)
class Rule:
    """An equation used in one direction."""

    name: str
    direction: str
    source: Term
    target: Term
    fresh: frozenset[str]
    creative: bool


def _shallow(t: Term) -> bool:
    if isinstance(t, (ConstT, ConstF)):
        return True
    kids = children(t)
    return bool(kids) and all(isinstance(k, Var) for k in kids) and len(set(kids)) == len(kids)


def orient(e: Equation) -> list[Rule]:
    rules = []
    for direction, source, target in ((FORWARD, e.lhs, e.rhs), (BACKWARD, e.rhs, e.lhs)):
        fresh = variables_of(target) - variables_of(source)
        creative = (
            isinstance(source, Var)
            or bool(fresh)
            or (_shallow(source) and term_size(target) > term_size(source))
        )
        rules.append(Rule(e.name, direction, source, target, frozenset(fresh), creative))
    return rules


def sides(e: Equation, direction: str) -> tuple[Term, Term]:
    if direction == FORWARD:
        return e.lhs, e.rhs
    if direction == BACKWARD:
        return e.rhs, e.lhs
    raise MalformedStepError(f"direction must be '->' or '<-', got {direction!r}")


def is_rewrite(before: Term, after: Term, e: Equation, direction: str) -> bool:
    """Whether ``after`` is an instance of one side where ``before`` is the same instance of the other."""
    source, target = sides(e, direction)
    binding = match(source, before)
    return binding is not None and match(target, after, binding) is not None


@dataclass(frozen=True, slots=True)
class ProofStep:
    position: Position
    rule: str
    direction: str
    result: Term

    def to_json(self) -> dict:
        return {
            "position": list(self.position),
            "rule": self.rule,
            "direction": self.direction,
            "result": render(self.result),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> ProofStep:
        try:
            return cls(tuple(int(i) for i in data["position"]), str(data["rule"]), str(data["direction"]), parse(data["result"]))
        except (KeyError, TypeError) as exc:
            raise MalformedStepError(f"malformed proof step: {data!r}") from exc

    def __str__(self) -> str:
        where = ".".join(map(str, self.position)) or "root"
        return f"{self.rule} {self.direction} at {where}: {render(self.result)}"


@dataclass(frozen=True, slots=True)
class ProofTrace:
    lhs: Term
    rhs: Term
    steps: tuple[ProofStep, ...]

    def terms(self) -> list[Term]:
        return [self.lhs, *(s.result for s in self.steps)]

    def to_json(self) -> dict:
        return {"lhs": render(self.lhs), "rhs": render(self.rhs), "steps": [s.to_json() for s in self.steps]}

    @classmethod
    def from_json(cls, data: Mapping) -> ProofTrace:
        try:
            lhs, rhs, steps = parse(data["lhs"]), parse(data["rhs"]), data["steps"]
        except (KeyError, TypeError) as exc:
            raise MalformedStepError(f"malformed proof trace: missing {exc}") from exc
        return cls(lhs, rhs, tuple(ProofStep.from_json(s) for s in steps))

    def render_lines(self) -> list[str]:
        return [render(self.lhs), *(f"  = {s}" for s in self.steps)]


def check_step(current: Term, step: ProofStep, table: Mapping[str, Equation]) -> bool:
    """Whether ``step`` rewrites ``current`` legally.

    Raises MalformedStepError for unknown rules, directions or positions.
    """
    e = table.get(step.rule)
    if e is None:
        raise MalformedStepError(f"unknown rule {step.rule!r}")
    if step.direction not in DIRECTIONS:
        raise MalformedStepError(f"direction must be '->' or '<-', got {step.direction!r}")
    try:
        before = subterm_at(current, step.position)
        after = subterm_at(step.result, step.position)
    except IndexError as exc:
        raise MalformedStepError(f"position {list(step.position)} does not exist: {exc}") from exc
    if replace_at(current, step.position, after) != step.result:
        return False
    return is_rewrite(before, after, e, step.direction)


def _difference(before: Term, after: Term) -> Position:
    """Deepest position outside of which the two terms agree."""
    position: list[int] = []
    while type(before) is type(after):
        kids_b, kids_a = children(before), children(after)
        differing = [i for i, (b, a) in enumerate(zip(kids_b, kids_a)) if b != a]
        if len(differing) != 1:
            break
        i = differing[0]
        position.append(i)
        before, after = kids_b[i], kids_a[i]
    return tuple(position)


def derive(start: Term, moves: Iterable[tuple[str, Term | str]], table: Mapping[str, Equation]) -> ProofTrace:
    """Build a trace from a list of ``(rule, next term)`` moves.

    The rewrite position and direction of every move are recovered from the
    difference between consecutive terms.
    """
    current = start
    steps = []
    for rule, target in moves:
        target = parse(target) if isinstance(target, str) else target
        e = table.get(rule)
        if e is None:
            raise MalformedStepError(f"unknown rule {rule!r}")
        position = _difference(current, target)
        step = None
        for depth in range(len(position), -1, -1):
            p = position[:depth]
            for direction in DIRECTIONS:
                if is_rewrite(subterm_at(current, p), subterm_at(target, p), e, direction):
                    step = ProofStep(p, rule, direction, target)
                    break
            if step is not None:
                break
        if step is None:
            raise MalformedStepError(f"{rule} does not rewrite {render(current)} into {render(target)}")
        steps.append(step)
        current = target
    return ProofTrace(start, current, tuple(steps))


def flip(direction: str) -> str:
    return BACKWARD if direction == FORWARD else FORWARD


def reverse_steps(path: Sequence[tuple[Term, ProofStep]]) -> list[ProofStep]:
    """Turn steps leading away from a term into steps leading back to it.

    ``path`` lists ``(term before, step)`` pairs in the order they were taken.
    """
    reversed_steps = []
    for before, step in reversed(path):
        reversed_steps.append(ProofStep(step.position, step.rule, flip(step.direction), before))
    return reversed_steps
