"""Bounded validity checks of equations against the tree semantics.

Variables are instantiated with every closed term up to a size, one term per
congruence class of the logic under test. Valuation congruences are
congruences, so members of one class give equal instances and the
deduplication loses nothing.

Instances are evaluated over class ids. A ``ClassTable`` keeps the free tree
of one member per class and memoizes conditional composition on ids, the
way a decision diagram manager keeps a unique table and a computed table.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Sequence
from functools import cache, lru_cache
from itertools import product

from .axioms import AxiomSet
from .terms import And, Atom, Cond, ConstF, ConstT, Equation, F, Not, Or, T, Term, Var, children, enumerate_terms, render, substitute
from .trees import FALSE, TRUE, EvalTree, Logic, Node, compose, normalize, normalize_after, se

logger = logging.getLogger(__name__)

DEFAULT_INSTANCE_BUDGET = 8_000_000

# finitely many classes over a finite alphabet
_BOUNDED = (Logic.MEM, Logic.ST)


class ClassTable:
    """Congruence classes of closed terms under one logic, numbered in order of discovery."""

    def __init__(self, logic: Logic | str):
        self.logic = Logic.parse(logic)
        self._ids: dict[EvalTree, int] = {}
        self._members: list[EvalTree] = []
        self._cond: dict[tuple[int, int, int], int] = {}
        self._normal: dict[tuple[int, Hashable], EvalTree] = {}

    def __len__(self) -> int:
        return len(self._members)

    def add(self, free: EvalTree) -> int:
        """Class id of the term whose free tree is ``free``."""
        key = normalize(free, self.logic)
        found = self._ids.get(key)
        if found is None:
            found = self._ids[key] = len(self._members)
            self._members.append(free)
        return found

    def cond(self, then: int, guard: int, orelse: int) -> int:
        key = (then, guard, orelse)
        found = self._cond.get(key)
        if found is None:
            members = self._members
            found = self._cond[key] = self.add(compose(members[guard], members[then], members[orelse]))
        return found

    def normal_in(self, class_id: int, context: Hashable) -> EvalTree:
        key = (class_id, context)
        found = self._normal.get(key)
        if found is None:
            found = self._normal[key] = normalize_after(self._members[class_id], self.logic, context)
        return found

    def outcome(self, class_id: int) -> Hashable:
        """Comparable stand-in for the class."""
        if self.logic in _BOUNDED:
            return class_id
        return self.normal_in(class_id, None)

    def cond_outcome(self, then: int, guard: int, orelse: int) -> Hashable:
        """``outcome`` of a conditional, without filing the result as a class.

        Under fr, rp and cr almost every top-level instance is a class of its
        own, so these are normalized along the guard instead of interned.
        """
        if self.logic in _BOUNDED:
            return self.cond(then, guard, orelse)
        members = self._members
        if self.logic is Logic.FR:
            return compose(members[guard], members[then], members[orelse])
        return normalize_after(
            members[guard],
            self.logic,
            None,
            lambda leaf, context: self.normal_in(then if leaf.value else orelse, context),
        )


@cache
def class_table(logic: Logic) -> ClassTable:
    return ClassTable(logic)


Compiled = Callable[[tuple[int, ...]], int]


def _as_cond(t: Term) -> tuple[Term, Term, Term] | None:
    """``(then, guard, else)`` of a connective, or None for a leaf term."""
    match t:
        case Not(x):
            return F, x, T
        case And(l, r):
            return r, l, F
        case Or(l, r):
            return T, l, r
        case Cond(p, q, r):
            return p, q, r
    return None


def _compile(t: Term, table: ClassTable, index: dict[str, int]) -> Compiled:
    match t:
        case ConstT():
            found = table.add(TRUE)
            return lambda combo: found
        case ConstF():
            found = table.add(FALSE)
            return lambda combo: found
        case Atom(name):
            found = table.add(Node(name, TRUE, FALSE))
            return lambda combo: found
        case Var(name):
            k = index[name]
            return lambda combo: combo[k]
    then, guard, orelse = (_compile(part, table, index) for part in _as_cond(t))
    cond = table.cond
    return lambda combo: cond(then(combo), guard(combo), orelse(combo))


def _compile_outcome(t: Term, table: ClassTable, index: dict[str, int]) -> Callable[[tuple[int, ...]], Hashable]:
    parts = _as_cond(t)
    if parts is None:
        whole = _compile(t, table, index)
        return lambda combo: table.outcome(whole(combo))
    then, guard, orelse = (_compile(part, table, index) for part in parts)
    cond_outcome = table.cond_outcome
    return lambda combo: cond_outcome(then(combo), guard(combo), orelse(combo))


@lru_cache(maxsize=64)
def instance_pool(atoms: tuple[str, ...], max_size: int, signature: str, logic: Logic) -> tuple[tuple[Term, int], ...]:
    """The first closed term of every class of ``logic`` reachable within ``max_size``, with its class id."""
    table = class_table(logic)
    seen: dict[int, Term] = {}
    for t in enumerate_terms(atoms, max_size, signature):
        seen.setdefault(table.add(se(t)), t)
    return tuple((t, class_id) for class_id, t in seen.items())


def fit_pool(
    atoms: Sequence[str], inst_size: int, signature: str, arity: int, budget: int, logic: Logic | str = Logic.FR
) -> tuple[tuple[tuple[Term, int], ...], int]:
    """Shrink the instantiation size until ``|pool| ** arity`` fits the budget."""
    logic = Logic.parse(logic)
    size = inst_size
    pool = instance_pool(tuple(atoms), size, signature, logic)
    while size > 1 and len(pool) ** arity > budget:
        size -= 1
        pool = instance_pool(tuple(atoms), size, signature, logic)
    return pool, size


def _has_conditional(t: Term) -> bool:
    return isinstance(t, Cond) or any(_has_conditional(c) for c in children(t))


def check_equation(
    e: Equation,
    logic: Logic | str,
    atoms: Sequence[str] = ("a", "b"),
    inst_size: int = 4,
    budget: int = DEFAULT_INSTANCE_BUDGET,
    signature: str | None = None,
) -> dict:
    """Test ``e`` on closed instances; the verdict only covers the tested instances."""
    logic = Logic.parse(logic)
    if inst_size < 1:
        raise ValueError(f"inst_size must be at least 1, got {inst_size}")
    if signature is None:
        signature = "full" if _has_conditional(e.lhs) or _has_conditional(e.rhs) else "scl"
    variables = sorted(e.variables())
    pool, effective = fit_pool(atoms, inst_size, signature, len(variables), budget, logic)
    if effective < inst_size:
        logger.info("%s: instantiation size reduced from %d to %d by the instance budget", e.name, inst_size, effective)
    report = {
        "equation": e.name,
        "text": str(e),
        "logic": logic.value,
        "inst_size": inst_size,
        "effective_size": effective,
        "bounded": True,
    }
    table = class_table(logic)
    index = {v: k for k, v in enumerate(variables)}
    left, right = _compile_outcome(e.lhs, table, index), _compile_outcome(e.rhs, table, index)
    member_of = {class_id: t for t, class_id in pool}
    checked = 0
    for combo in product([class_id for _, class_id in pool], repeat=len(variables)):
        checked += 1
        if left(combo) != right(combo):
            binding = {v: member_of[class_id] for v, class_id in zip(variables, combo)}
            lhs, rhs = substitute(e, binding)
            return {
                **report,
                "verdict": "counterexample",
                "binding": {v: render(t) for v, t in binding.items()},
                "lhs": render(lhs),
                "rhs": render(rhs),
                "instances_checked": checked,
            }
    return {**report, "verdict": "valid_on_tested", "instances_checked": checked}


def soundness_check(
    axiom_set: AxiomSet,
    logic: Logic | str | None = None,
    atoms: Sequence[str] = ("a", "b"),
    inst_size: int = 3,
    budget: int = DEFAULT_INSTANCE_BUDGET,
) -> dict:
    """Check every equation and scheme instance of ``axiom_set`` under ``logic``.

    Defaults to the set's home logic. Failures are reported, not raised.
    """
    logic = Logic.parse(logic) if logic is not None else axiom_set.logic_home
    atoms = tuple(atoms)
    if len(atoms) < 2:
        logger.warning("soundness over fewer than two atoms can miss counterexamples: %s", ", ".join(atoms))
    signature = "full" if axiom_set.signature == "cond" else "scl"
    results = [
        check_equation(e, logic, atoms, inst_size, budget, signature)
        for e in axiom_set.with_alphabet(atoms).instances()
    ]
    failures = [r for r in results if r["verdict"] == "counterexample"]
    return {
        "set": axiom_set.name,
        "logic": logic.value,
        "atoms": list(atoms),
        "inst_size": inst_size,
        "effective_size": min((r["effective_size"] for r in results), default=inst_size),
        "equations_checked": len(results),
        "passed": len(results) - len(failures),
        "failures": failures,
        "results": results,
        "sound": not failures,
        "bounded": True,
    }
