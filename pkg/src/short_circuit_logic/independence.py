"""Models showing that each axiom of CPstat* is independent of the others.

Every model interprets the conditional-only signature over atoms ``a`` and
``b`` and violates exactly one axiom. Models 1, 2, 4 and 5 are algebras
folded over the desugared term; model 3 is memorizing evaluation trees.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Hashable, Mapping
from dataclasses import dataclass
from itertools import product
from typing import Any

from .axioms import AxiomSet, build_registry, get_axiom_set
from .prover import rewrite_search, verify_lemmas, verify_trace
from .soundness import DEFAULT_INSTANCE_BUDGET, soundness_check
from .terms import (
    Atom,
    Cond,
    ConstF,
    ConstT,
    Equation,
    Term,
    Var,
    atoms_of,
    desugar,
    enumerate_terms,
    parse,
    render,
    substitute,
    substitute_term,
)
from .trees import EvalTree, Logic, OpenTermError, normalize, render_tree_inline, se, se_open
from .valuations import UnknownAtomError

logger = logging.getLogger(__name__)

MODEL_ATOMS = ("a", "b")


class Interpretation(ABC):
    index: int
    domain: str
    violates: str
    witness: Mapping[str, str]

    def __init__(self, index: int, domain: str, violates: str, witness: Mapping[str, str]):
        self.index = index
        self.domain = domain
        self.violates = violates
        self.witness = dict(witness)

    @abstractmethod
    def value(self, t: Term) -> Hashable:
        """Interpretation of a closed conditional-only term."""

    @abstractmethod
    def instance_value(self, side: Term, env: Mapping[str, Hashable]) -> Hashable:
        """Interpretation of an equation side with variables bound to domain values."""

    def show(self, value: Hashable) -> Any:
        return value

    @property
    def name(self) -> str:
        return f"model {self.index}"


@dataclass(frozen=True)
class _Operations:
    t: Any
    f: Any
    a: Any
    b: Any
    cond: Callable[[Any, Any, Any], Any]


class AlgebraInterpretation(Interpretation):
    """Constants and atoms as fixed values; ``cond(then, guard, else)`` combines them."""

    def __init__(self, index: int, domain: str, violates: str, witness: Mapping[str, str], ops: _Operations):
        super().__init__(index, domain, violates, witness)
        self.ops = ops

    def _fold(self, t: Term, env: Mapping[str, Hashable]) -> Hashable:
        match t:
            case ConstT():
                return self.ops.t
            case ConstF():
                return self.ops.f
            case Atom(name):
                return self.ops.a if name == "a" else self.ops.b
            case Var(name):
                if name not in env:
                    raise OpenTermError(f"term is not closed: variable {name} is unbound")
                return env[name]
            case Cond(p, q, r):
                return self.ops.cond(self._fold(p, env), self._fold(q, env), self._fold(r, env))
        raise TypeError(f"not a conditional-only term: {render(t)}")

    def value(self, t: Term) -> Hashable:
        return self._fold(desugar(t), {})

    def instance_value(self, side: Term, env: Mapping[str, Hashable]) -> Hashable:
        return self._fold(desugar(side), env)

    def show(self, value: Hashable) -> Any:
        if isinstance(value, bool):
            return "T" if value else "F"
        return value


class MemorizingInterpretation(Interpretation):
    """Terms denote their memorizing evaluation trees."""

    def value(self, t: Term) -> EvalTree:
        return normalize(se(t), Logic.MEM)

    def instance_value(self, side: Term, env: Mapping[str, EvalTree]) -> EvalTree:
        return normalize(se_open(side, env), Logic.MEM)

    def show(self, value: EvalTree) -> str:
        return render_tree_inline(value)


def _cond_by_cases(p: int, q: int, r: int) -> int:
    if q == 0:
        return p
    if q == 1:
        return r
    return q * r


MODELS: dict[int, Interpretation] = {
    1: AlgebraInterpretation(
        1,
        "{T, F}; constant T denotes F, constant F and the atoms denote T; conditional is guard and else-branch",
        "CP1",
        {"X": "F", "Y": "F"},
        _Operations(False, True, True, True, lambda p, q, r: q and r),
    ),
    2: AlgebraInterpretation(
        2,
        "{T, F}; conditional is its then-branch",
        "CP2",
        {"X": "T", "Y": "F"},
        _Operations(True, False, True, True, lambda p, q, r: p),
    ),
    3: MemorizingInterpretation(
        3,
        "memorizing evaluation trees over a and b",
        "CP3*",
        {"X": "a", "Y": "b"},
    ),
    4: AlgebraInterpretation(
        4,
        "naturals; T=0, F=1, a=2, b=3; guard 0 takes then, guard 1 takes else, otherwise guard times else",
        "CP4",
        {"X": "F", "Y": "F", "Z": "a", "U": "T", "V": "T"},
        _Operations(0, 1, 2, 3, _cond_by_cases),
    ),
    5: AlgebraInterpretation(
        5,
        "integers; T=0, F=1, a=2, b=3; conditional is (1 - guard) * then + guard * else",
        "CP5",
        {"X": "T", "Y": "a", "Z": "F"},
        _Operations(0, 1, 2, 3, lambda p, q, r: (1 - q) * p + q * r),
    ),
}


def get_interpretation(index: int) -> Interpretation:
    if index not in MODELS:
        raise ValueError(f"Unknown independence model: {index}. Supported: 1-5")
    return MODELS[index]


def interpret(t: Term, m: Interpretation) -> Hashable:
    """Value of the closed term ``t`` in model ``m``."""
    unknown = sorted(atoms_of(t) - set(MODEL_ATOMS))
    if unknown:
        raise UnknownAtomError(f"independence models only interpret atoms a and b, got {', '.join(unknown)}")
    return m.value(t)


def _pool(m: Interpretation, inst_size: int, arity: int, budget: int) -> tuple[list[tuple[Term, Hashable]], int]:
    size = inst_size
    while True:
        seen: dict[Hashable, Term] = {}
        for t in enumerate_terms(MODEL_ATOMS, size, "full"):
            key = se(t) if isinstance(m, MemorizingInterpretation) else m.value(t)
            seen.setdefault(key, t)
        pool = [(t, key) for key, t in seen.items()]
        if size == 1 or len(pool) ** arity <= budget:
            return pool, size
        size -= 1


def _check_axiom(m: Interpretation, e: Equation, inst_size: int, budget: int) -> dict:
    variables = sorted(e.variables())
    entry: dict[str, Any] = {"equation": str(e)}
    if e.name == m.violates and m.witness:
        binding = {v: parse(m.witness[v]) for v in variables}
        lhs, rhs = substitute(e, binding)
        left, right = m.value(lhs), m.value(rhs)
        logger.info("%s: designated witness for %s gives %s vs %s", m.name, e.name, m.show(left), m.show(right))
        if left != right:
            return {
                **entry,
                "status": "violated",
                "witness": {v: render(t) for v, t in binding.items()},
                "lhs": m.show(left),
                "rhs": m.show(right),
                "instances_checked": 1,
            }
    pool, effective = _pool(m, inst_size, len(variables), budget)
    checked = 0
    for combo in product(pool, repeat=len(variables)):
        checked += 1
        if isinstance(m, MemorizingInterpretation):
            env = {v: se(t) for v, (t, _) in zip(variables, combo)}
        else:
            env = {v: value for v, (_, value) in zip(variables, combo)}
        left, right = m.instance_value(e.lhs, env), m.instance_value(e.rhs, env)
        if left != right:
            return {
                **entry,
                "status": "violated",
                "witness": {v: render(t) for v, (t, _) in zip(variables, combo)},
                "lhs": m.show(left),
                "rhs": m.show(right),
                "instances_checked": checked,
                "effective_size": effective,
            }
    return {**entry, "status": "satisfied", "instances_checked": checked, "effective_size": effective}


def independence_report(
    m: Interpretation,
    axiom_set: AxiomSet | None = None,
    inst_size: int = 3,
    budget: int = DEFAULT_INSTANCE_BUDGET,
) -> dict:
    """Which axioms of ``axiom_set`` (CPstat* by default) hold in ``m``."""
    axiom_set = axiom_set or get_axiom_set("CPstat*")
    axioms = {e.name: _check_axiom(m, e, inst_size, budget) for e in axiom_set.instances()}
    violated = [name for name, entry in axioms.items() if entry["status"] == "violated"]
    return {
        "model": m.index,
        "domain": m.domain,
        "set": axiom_set.name,
        "inst_size": inst_size,
        "axioms": axioms,
        "violated": violated,
        "designated": m.violates,
        "independent": violated == [m.violates],
    }


def _representative(e: Equation) -> tuple[Term, Term]:
    cycle = [Atom("a"), Atom("b"), parse("T"), parse("F")]
    binding = {v: cycle[i % len(cycle)] for i, v in enumerate(sorted(e.variables()))}
    return substitute_term(e.lhs, binding), substitute_term(e.rhs, binding)


def symmetric_variant_check(
    inst_size: int = 3,
    max_depth: int = 12,
    max_terms: int = 200_000,
    budget: int = DEFAULT_INSTANCE_BUDGET,
) -> dict:
    """Check that exchanging CP3* and CP5 for their symmetric forms loses nothing."""
    registry = build_registry(MODEL_ATOMS)
    swapped = get_axiom_set("CPstat*-swapped", registry)
    original = get_axiom_set("CPstat*", registry)
    soundness = soundness_check(swapped, Logic.ST, MODEL_ATOMS, inst_size, budget)
    goals = [(e.name, *_representative(e)) for e in original.equations]
    goals.append(("commutativity", parse("a && b"), parse("b && a")))
    lemmas = verify_lemmas(swapped)
    proofs = {}
    for name, lhs, rhs in goals:
        found = rewrite_search(lhs, rhs, swapped, max_depth, max_terms)
        proofs[name] = {
            **found.to_json(),
            "verified": found.trace is not None and verify_trace(found.trace, swapped),
        }
    return {
        "set": swapped.name,
        "soundness": soundness,
        "lemmas": [{k: v for k, v in entry.items() if k != "trace"} for entry in lemmas],
        "proofs": proofs,
        "equally_strong": soundness["sound"]
        and all(entry["valid"] for entry in lemmas)
        and all(p["status"] == "proved" and p["verified"] for p in proofs.values()),
    }
