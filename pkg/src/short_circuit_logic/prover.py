"""Bounded equational proof search and proof checking."""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from itertools import product

from .axioms import AxiomSet
from .rewriting import (
    MalformedStepError,
    ProofStep,
    ProofTrace,
    Rule,
    check_step,
    derive,
    match,
    orient,
    reverse_steps,
)
from .terms import (
    F,
    Atom,
    Equation,
    Position,
    T,
    Term,
    Var,
    atoms_of,
    children,
    desugar,
    is_closed,
    render,
    replace_at,
    substitute_term,
    term_size,
)
from .trees import OpenTermError, equal

logger = logging.getLogger(__name__)

PROVED = "proved"
REFUTED = "refuted"
EXHAUSTED = "exhausted"
BOUND_EXCEEDED = "bound-exceeded"


@dataclass(frozen=True)
class SearchResult:
    status: str
    lhs: Term
    rhs: Term
    set_name: str
    trace: ProofTrace | None = None
    explored: int = 0
    depth: int = 0

    @property
    def proved(self) -> bool:
        return self.status == PROVED

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "set": self.set_name,
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
            "explored": self.explored,
            "depth": self.depth,
            "trace": self.trace.to_json() if self.trace is not None else None,
        }


class _RuleIndex:
    def __init__(self, equations: list[Equation]):
        self.by_root: dict[type, list[Rule]] = defaultdict(list)
        self.anywhere: list[Rule] = []
        for e in equations:
            if e.lhs == e.rhs:
                continue
            for rule in orient(e):
                if isinstance(rule.source, Var):
                    self.anywhere.append(rule)
                else:
                    self.by_root[type(rule.source)].append(rule)

    def candidates(self, t: Term, creative: bool) -> Iterator[Rule]:
        for rule in self.by_root.get(type(t), ()):
            if creative or not rule.creative:
                yield rule
        if creative:
            yield from self.anywhere


def _subterms(t: Term, prefix: Position = ()) -> Iterator[tuple[Position, Term]]:
    yield prefix, t
    for i, c in enumerate(children(t)):
        yield from _subterms(c, (*prefix, i))


def _creative_pool(lhs: Term, rhs: Term) -> list[Term]:
    pool = {T: None, F: None}
    for a in sorted(atoms_of(lhs) | atoms_of(rhs)):
        pool[Atom(a)] = None
    for side in (lhs, rhs):
        for _, sub in _subterms(side):
            pool[sub] = None
    return sorted(pool, key=lambda t: (term_size(t), render(t)))


def _successors(
    t: Term, index: _RuleIndex, creative: bool, pool: list[Term], max_size: int
) -> Iterator[tuple[ProofStep, bool]]:
    size = term_size(t)
    for position, sub in _subterms(t):
        room = max_size - size + term_size(sub)
        for rule in index.candidates(sub, creative):
            binding = match(rule.source, sub)
            if binding is None:
                continue
            fresh = sorted(rule.fresh)
            for values in product(pool, repeat=len(fresh)):
                new_sub = substitute_term(rule.target, {**binding, **dict(zip(fresh, values))})
                if term_size(new_sub) > room:
                    continue
                yield ProofStep(position, rule.name, rule.direction, replace_at(t, position, new_sub)), rule.creative


class _Side:
    def __init__(self, root: Term):
        self.root = root
        self.parent: dict[Term, tuple[Term, ProofStep] | None] = {root: None}
        self.creative_used: dict[Term, int] = {root: 0}
        self.frontier = [root]
        self.depth = 0

    def path(self, t: Term) -> list[tuple[Term, ProofStep]]:
        """``(term before, step)`` pairs leading from the root to ``t``."""
        pairs = []
        while (link := self.parent[t]) is not None:
            pairs.append(link)
            t = link[0]
        return pairs[::-1]


def rewrite_search(
    lhs: Term,
    rhs: Term,
    axiom_set: AxiomSet,
    max_depth: int = 12,
    max_terms: int = 200_000,
    creative: int = 0,
    max_size: int | None = None,
) -> SearchResult:
    """Bidirectional breadth-first search for a rewrite proof of ``lhs = rhs``.

    Goals whose sides differ under the set's home logic are refuted without
    searching. Exhausting ``max_depth`` proves nothing.
    """
    if max_depth < 1 or max_terms < 1:
        raise ValueError(f"search bounds must be positive, got max_depth={max_depth}, max_terms={max_terms}")
    if creative < 0:
        raise ValueError(f"creative must be non-negative, got {creative}")
    for side in (lhs, rhs):
        if not is_closed(side):
            raise OpenTermError(f"proof search needs closed terms, {render(side)} has variables")
    if axiom_set.signature == "cond":
        lhs, rhs = desugar(lhs), desugar(rhs)

    def result(status: str, trace: ProofTrace | None = None, explored: int = 0, depth: int = 0) -> SearchResult:
        return SearchResult(status, lhs, rhs, axiom_set.name, trace, explored, depth)

    if lhs == rhs:
        return result(PROVED, ProofTrace(lhs, rhs, ()), 1)
    if not equal(lhs, rhs, axiom_set.logic_home):
        return result(REFUTED)

    cap = max_size if max_size is not None else 2 * max(term_size(lhs), term_size(rhs)) + 2
    index = _RuleIndex(axiom_set.rules())
    pool = _creative_pool(lhs, rhs) if creative else []
    forward, backward = _Side(lhs), _Side(rhs)
    explored = 2

    while forward.depth + backward.depth < max_depth and (forward.frontier or backward.frontier):
        if forward.frontier and (not backward.frontier or len(forward.frontier) <= len(backward.frontier)):
            side, other = forward, backward
        else:
            side, other = backward, forward
        next_frontier = []
        for t in side.frontier:
            used = side.creative_used[t]
            for step, is_creative in _successors(t, index, used < creative, pool, cap):
                new = step.result
                if new in side.parent:
                    continue
                side.parent[new] = (t, step)
                side.creative_used[new] = used + is_creative
                explored += 1
                if new in other.parent:
                    steps = [s for _, s in forward.path(new)] + reverse_steps(backward.path(new))
                    depth = forward.depth + backward.depth + 1
                    logger.info("proved %s = %s in %d steps, %d terms", render(lhs), render(rhs), len(steps), explored)
                    return result(PROVED, ProofTrace(lhs, rhs, tuple(steps)), explored, depth)
                if explored >= max_terms:
                    logger.info("search bound of %d terms exceeded", max_terms)
                    return result(BOUND_EXCEEDED, explored=explored, depth=forward.depth + backward.depth)
                next_frontier.append(new)
        side.frontier = next_frontier
        side.depth += 1
        logger.debug(
            "depth %d+%d, frontiers %d/%d, %d terms",
            forward.depth,
            backward.depth,
            len(forward.frontier),
            len(backward.frontier),
            explored,
        )
    return result(EXHAUSTED, explored=explored, depth=forward.depth + backward.depth)


def verify_trace(trace: ProofTrace, rules: AxiomSet | Mapping[str, Equation]) -> bool:
    """Replay ``trace`` step by step, independently of how it was found.

    Raises MalformedStepError for steps naming unknown rules or positions.
    """
    table = rules.rule_table() if isinstance(rules, AxiomSet) else rules
    current = trace.lhs
    for step in trace.steps:
        if not check_step(current, step, table):
            return False
        current = step.result
    return current == trace.rhs


def lemma_trace(axiom_set: AxiomSet, name: str) -> ProofTrace:
    for i, lemma in enumerate(axiom_set.lemmas):
        if lemma.name == name:
            return derive(lemma.equation.lhs, lemma.moves, axiom_set.context(i))
    raise ValueError(f"{axiom_set.name} has no lemma named {name!r}")


def verify_lemmas(axiom_set: AxiomSet) -> list[dict]:
    """Replay the derivation of every lemma of ``axiom_set``."""
    results = []
    for i, lemma in enumerate(axiom_set.lemmas):
        table = axiom_set.context(i)
        entry = {"name": lemma.name, "equation": str(lemma.equation), "steps": len(lemma.moves)}
        try:
            trace = derive(lemma.equation.lhs, lemma.moves, table)
        except MalformedStepError as exc:
            results.append({**entry, "valid": False, "error": str(exc)})
            continue
        valid = trace.rhs == lemma.equation.rhs and verify_trace(trace, table)
        entry["trace"] = trace.to_json()
        if not valid:
            logger.warning("derivation of %s in %s does not verify", lemma.name, axiom_set.name)
        results.append({**entry, "valid": valid, "error": None if valid else f"derivation ends at {render(trace.rhs)}"})
    return results

