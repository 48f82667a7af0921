"""Evaluation trees and the valuation congruences decided on them.

``se`` maps a closed term to the binary tree of all its possible
short-circuit evaluations. Free valuation congruence is equality of these
trees; the stronger congruences are equality after ``normalize``.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Mapping
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Union

from .terms import And, Atom, Cond, ConstF, ConstT, Not, Or, Term, Var, atoms_of

logger = logging.getLogger(__name__)


class OpenTermError(ValueError):
    pass


class Logic(str, Enum):
    FR = "fr"
    RP = "rp"
    CR = "cr"
    MEM = "mem"
    ST = "st"

    @classmethod
    def parse(cls, name: str | Logic) -> Logic:
        if isinstance(name, Logic):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            supported = ", ".join(logic.value for logic in cls)
            raise ValueError(f"Unknown logic: '{name}'. Supported: {supported}") from None

    @property
    def strength(self) -> int:
        return list(Logic).index(self)

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class Leaf:
    value: bool


@dataclass(frozen=True, slots=True)
class Node:
    atom: str
    on_true: EvalTree
    on_false: EvalTree


EvalTree = Union[Leaf, Node]
LeafContinuation = Callable[[Leaf, Hashable], EvalTree]

TRUE = Leaf(True)
FALSE = Leaf(False)


def compose(tr: EvalTree, on_true: EvalTree, on_false: EvalTree) -> EvalTree:
    """Replace every true leaf of ``tr`` by ``on_true`` and every false leaf by ``on_false``."""
    if isinstance(tr, Leaf):
        return on_true if tr.value else on_false
    return Node(tr.atom, compose(tr.on_true, on_true, on_false), compose(tr.on_false, on_true, on_false))


def se_open(t: Term, env: Mapping[str, EvalTree]) -> EvalTree:
    """Evaluation tree of ``t`` with variables read from ``env``."""
    match t:
        case ConstT():
            return TRUE
        case ConstF():
            return FALSE
        case Atom(name):
            return Node(name, TRUE, FALSE)
        case Var(name):
            if name not in env:
                raise OpenTermError(f"term is not closed: variable {name} is unbound")
            return env[name]
        case Not(x):
            return compose(se_open(x, env), FALSE, TRUE)
        case And(l, r):
            return compose(se_open(l, env), se_open(r, env), FALSE)
        case Or(l, r):
            return compose(se_open(l, env), TRUE, se_open(r, env))
        case Cond(p, q, r):
            return compose(se_open(q, env), se_open(p, env), se_open(r, env))
    raise TypeError(f"not a term: {t!r}")


def se(t: Term) -> EvalTree:
    return se_open(t, {})


# --- normalization ---------------------------------------------------------


def _keep(leaf: Leaf, context: Hashable) -> EvalTree:
    return leaf


def _free(tr: EvalTree, context: None, at_leaf: LeafContinuation) -> EvalTree:
    if isinstance(tr, Leaf):
        return at_leaf(tr, context)
    return Node(tr.atom, _free(tr.on_true, context, at_leaf), _free(tr.on_false, context, at_leaf))


def _repetition_proof(tr: EvalTree, last: tuple[str, bool] | None, at_leaf: LeafContinuation) -> EvalTree:
    if isinstance(tr, Leaf):
        return at_leaf(tr, last)
    if last is not None and last[0] == tr.atom:
        chosen = _repetition_proof(tr.on_true if last[1] else tr.on_false, last, at_leaf)
        return Node(tr.atom, chosen, chosen)
    return Node(
        tr.atom,
        _repetition_proof(tr.on_true, (tr.atom, True), at_leaf),
        _repetition_proof(tr.on_false, (tr.atom, False), at_leaf),
    )


def _contractive(tr: EvalTree, last: tuple[str, bool] | None, at_leaf: LeafContinuation) -> EvalTree:
    if isinstance(tr, Leaf):
        return at_leaf(tr, last)
    if last is not None and last[0] == tr.atom:
        return _contractive(tr.on_true if last[1] else tr.on_false, last, at_leaf)
    return Node(
        tr.atom,
        _contractive(tr.on_true, (tr.atom, True), at_leaf),
        _contractive(tr.on_false, (tr.atom, False), at_leaf),
    )


def _memorizing(tr: EvalTree, known: frozenset[tuple[str, bool]], at_leaf: LeafContinuation) -> EvalTree:
    if isinstance(tr, Leaf):
        return at_leaf(tr, known)
    if (tr.atom, True) in known:
        return _memorizing(tr.on_true, known, at_leaf)
    if (tr.atom, False) in known:
        return _memorizing(tr.on_false, known, at_leaf)
    return Node(
        tr.atom,
        _memorizing(tr.on_true, known | {(tr.atom, True)}, at_leaf),
        _memorizing(tr.on_false, known | {(tr.atom, False)}, at_leaf),
    )


_PATH_NORMALIZERS: dict[Logic, tuple[Callable, Hashable]] = {
    Logic.FR: (_free, None),
    Logic.RP: (_repetition_proof, None),
    Logic.CR: (_contractive, None),
    Logic.MEM: (_memorizing, frozenset()),
}


def normalize_after(
    tr: EvalTree,
    logic: Logic | str,
    context: Hashable = None,
    at_leaf: LeafContinuation = _keep,
) -> EvalTree:
    """Normalize ``tr`` as the part of a larger tree reached along a path.

    ``context`` is what the normalizer of ``logic`` remembers of that path:
    nothing for fr, the last ``(atom, reply)`` for rp and cr, the set of
    decided ``(atom, reply)`` pairs for mem. ``at_leaf(leaf, context)``
    returns the normal form continuing below each leaf, so
    ``normalize(compose(g, x, y))`` is ``normalize_after(g, ...)`` with
    ``at_leaf`` normalizing ``x`` or ``y`` in the context it is handed.
    st is not a path normalization and is rejected.
    """
    logic = Logic.parse(logic)
    if logic not in _PATH_NORMALIZERS:
        raise ValueError(f"{logic} is not decided by a path normalizer")
    walk, start = _PATH_NORMALIZERS[logic]
    return walk(tr, start if context is None else context, at_leaf)


def follow(tr: EvalTree, assignment: Mapping[str, bool]) -> bool:
    while isinstance(tr, Node):
        tr = tr.on_true if assignment[tr.atom] else tr.on_false
    return tr.value


def _static(tr: EvalTree) -> EvalTree:
    order = sorted(tree_atoms(tr))

    def build(i: int, assignment: dict[str, bool]) -> EvalTree:
        if i == len(order):
            return Leaf(follow(tr, assignment))
        atom = order[i]
        hi = build(i + 1, {**assignment, atom: True})
        lo = build(i + 1, {**assignment, atom: False})
        return hi if hi == lo else Node(atom, hi, lo)

    return build(0, {})


def normalize(tr: EvalTree, logic: Logic | str) -> EvalTree:
    logic = Logic.parse(logic)
    if logic is Logic.FR:
        return tr
    if logic is Logic.ST:
        return _static(tr)
    return normalize_after(tr, logic)


def canonical(t: Term, logic: Logic | str) -> EvalTree:
    return normalize(se(t), logic)


def equal(t1: Term, t2: Term, logic: Logic | str) -> bool:
    return canonical(t1, logic) == canonical(t2, logic)


# --- inspection ------------------------------------------------------------


def tree_atoms(tr: EvalTree) -> set[str]:
    if isinstance(tr, Leaf):
        return set()
    return {tr.atom} | tree_atoms(tr.on_true) | tree_atoms(tr.on_false)


def tree_size(tr: EvalTree) -> int:
    if isinstance(tr, Leaf):
        return 1
    return 1 + tree_size(tr.on_true) + tree_size(tr.on_false)


def tree_depth(tr: EvalTree) -> int:
    if isinstance(tr, Leaf):
        return 0
    return 1 + max(tree_depth(tr.on_true), tree_depth(tr.on_false))


def tree_stats(tr: EvalTree) -> dict:
    """Size, depth and atoms of ``tr``.

    ``size`` counts every node, leaves included, so ``se(a && b)`` (two atom
    nodes and three leaves) has size 5. ``depth`` counts atom nodes on the
    longest path.
    """
    return {"size": tree_size(tr), "depth": tree_depth(tr), "atoms": sorted(tree_atoms(tr))}


def tree_to_json(tr: EvalTree) -> dict:
    if isinstance(tr, Leaf):
        return {"leaf": tr.value}
    return {"atom": tr.atom, "t": tree_to_json(tr.on_true), "f": tree_to_json(tr.on_false)}


def tree_from_json(data: Mapping) -> EvalTree:
    if "leaf" in data:
        return Leaf(bool(data["leaf"]))
    try:
        return Node(str(data["atom"]), tree_from_json(data["t"]), tree_from_json(data["f"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed tree encoding: {data!r}") from exc


def render_tree(tr: EvalTree, indent: str = "") -> str:
    """Indented text view, true branch first."""
    if isinstance(tr, Leaf):
        return indent + ("T" if tr.value else "F")
    return "\n".join(
        [indent + tr.atom, render_tree(tr.on_true, indent + "  "), render_tree(tr.on_false, indent + "  ")]
    )


def render_tree_inline(tr: EvalTree) -> str:
    if isinstance(tr, Leaf):
        return "T" if tr.value else "F"
    return f"{tr.atom}[{render_tree_inline(tr.on_true)}, {render_tree_inline(tr.on_false)}]"


# --- static comparator -----------------------------------------------------


def static_value(t: Term, assignment: Mapping[str, bool]) -> bool:
    """Value of ``t`` when every atom has a fixed value; no trees involved."""
    match t:
        case ConstT():
            return True
        case ConstF():
            return False
        case Atom(name):
            return assignment[name]
        case Not(x):
            return not static_value(x, assignment)
        case And(l, r):
            return static_value(l, assignment) and static_value(r, assignment)
        case Or(l, r):
            return static_value(l, assignment) or static_value(r, assignment)
        case Cond(p, q, r):
            return static_value(p, assignment) if static_value(q, assignment) else static_value(r, assignment)
        case Var(name):
            raise OpenTermError(f"term is not closed: variable {name} is unbound")
    raise TypeError(f"not a term: {t!r}")


def truth_table(t: Term, atoms: list[str] | tuple[str, ...]) -> tuple[bool, ...]:
    order = sorted(atoms)
    return tuple(
        static_value(t, dict(zip(order, values)))
        for values in product((True, False), repeat=len(order))
    )


def same_truth_table(t1: Term, t2: Term) -> bool:
    atoms = sorted(atoms_of(t1) | atoms_of(t2))
    return truth_table(t1, atoms) == truth_table(t2, atoms)
