"""Reactive valuations: stateful atom oracles and a short-circuit interpreter.

A valuation answers each atom evaluation with a reply and a new state.
States are immutable values, so one valuation instance can serve any number
of independent evaluations.
"""

from __future__ import annotations

import json
import logging
from abc import ABC, abstractmethod
from collections.abc import Hashable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path
from typing import Any

from .terms import And, Atom, Cond, ConstF, ConstT, Not, Or, Term, Var, atoms_of, render_atom
from .trees import EvalTree, Leaf, Logic, OpenTermError

logger = logging.getLogger(__name__)

MAX_ENUMERATION_ATOMS = 2
MAX_DEPTH_BOUND = 4
MAX_STATE_BOUND = 3


class UnknownAtomError(ValueError):
    pass


class ModelSpecError(ValueError):
    pass


class BoundTooLargeError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class EvalRecord:
    result: bool
    trace: tuple[tuple[str, bool], ...]
    final_state: Hashable


class ReactiveValuation(ABC):
    @abstractmethod
    def initial_state(self) -> Hashable:
        ...

    @abstractmethod
    def reply(self, state: Hashable, atom: str) -> tuple[bool, Hashable]:
        """Reply to evaluating ``atom`` in ``state`` and the state afterwards."""

    def knows(self, atom: str) -> bool:
        return True

    def check_atom(self, atom: str) -> None:
        if not self.knows(atom):
            raise UnknownAtomError(f"atom {render_atom(atom)} is unknown to {self.describe()}")

    def describe(self) -> str:
        return type(self).__name__

    def describe_state(self, state: Hashable) -> Any:
        return state

    @classmethod
    def from_spec(cls, argument: str) -> ReactiveValuation:
        raise ModelSpecError(f"{cls.__name__} cannot be built from a model spec")


# --- valuation kinds -------------------------------------------------------


class AutomatonValuation(ReactiveValuation):
    """Finite automaton with outputs on transitions."""

    def __init__(
        self,
        states: Iterable[Hashable],
        init: Hashable,
        output: Mapping[Hashable, Mapping[str, bool]],
        next_state: Mapping[Hashable, Mapping[str, Hashable]],
    ):
        self.states = tuple(states)
        if init not in self.states:
            raise ModelSpecError(f"initial state {init!r} is not among the states")
        self.init = init
        self.output = {s: dict(output.get(s, {})) for s in self.states}
        self.next_state = {s: dict(next_state.get(s, {})) for s in self.states}
        self.alphabet = frozenset(self.output[init])
        for s in self.states:
            if set(self.output[s]) != self.alphabet or set(self.next_state[s]) != self.alphabet:
                raise ModelSpecError(f"state {s!r} does not define output and next for every atom")
            for target in self.next_state[s].values():
                if target not in self.states:
                    raise ModelSpecError(f"transition from {s!r} leads to unknown state {target!r}")

    def initial_state(self) -> Hashable:
        return self.init

    def reply(self, state: Hashable, atom: str) -> tuple[bool, Hashable]:
        return self.output[state][atom], self.next_state[state][atom]

    def knows(self, atom: str) -> bool:
        return atom in self.alphabet

    def describe(self) -> str:
        return f"automaton with {len(self.states)} states"

    def to_json(self) -> dict:
        return {
            "states": list(self.states),
            "init": self.init,
            "output": {str(s): dict(sorted(self.output[s].items())) for s in self.states},
            "next": {str(s): dict(sorted(self.next_state[s].items())) for s in self.states},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> AutomatonValuation:
        try:
            states = [str(s) for s in data["states"]]
            return cls(
                states,
                str(data["init"]),
                {str(s): {a: bool(r) for a, r in table.items()} for s, table in data["output"].items()},
                {str(s): {a: str(n) for a, n in table.items()} for s, table in data["next"].items()},
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise ModelSpecError(f"malformed automaton description: {exc}") from exc

    @classmethod
    def from_spec(cls, argument: str) -> AutomatonValuation:
        path = Path(argument)
        if not argument or not path.is_file():
            raise ModelSpecError(f"automaton file not found: '{argument}'")
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ModelSpecError(f"automaton file {argument} is not valid JSON: {exc}") from exc
        return cls.from_json(data)


class TrieValuation(ReactiveValuation):
    """Free valuation: the reply depends on the whole sequence of atoms evaluated.

    ``table`` maps an atom sequence (history plus the current atom) to the
    reply; sequences missing from the table reply false.
    """

    def __init__(self, table: Mapping[tuple[str, ...], bool], alphabet: Iterable[str]):
        self.table = dict(table)
        self.alphabet = frozenset(alphabet)

    def initial_state(self) -> tuple[str, ...]:
        return ()

    def reply(self, state: tuple[str, ...], atom: str) -> tuple[bool, tuple[str, ...]]:
        history = (*state, atom)
        return self.table.get(history, False), history

    def knows(self, atom: str) -> bool:
        return atom in self.alphabet

    def describe_state(self, state: tuple[str, ...]) -> list[str]:
        return list(state)


class MemorizingValuation(ReactiveValuation):
    """Replies to the first evaluation of an atom are remembered.

    ``response`` decides a fresh atom from the assignment recorded so far,
    keyed by ``(sorted assignment pairs, atom)``; missing keys reply false.
    """

    def __init__(self, response: Mapping[tuple[tuple[tuple[str, bool], ...], str], bool], alphabet: Iterable[str]):
        self.response = dict(response)
        self.alphabet = frozenset(alphabet)

    def initial_state(self) -> tuple[tuple[str, bool], ...]:
        return ()

    def reply(self, state, atom):
        known = dict(state)
        if atom in known:
            return known[atom], state
        value = self.response.get((state, atom), False)
        return value, tuple(sorted((*state, (atom, value))))

    def knows(self, atom: str) -> bool:
        return atom in self.alphabet

    def describe_state(self, state) -> dict[str, bool]:
        return dict(state)


class StaticValuation(ReactiveValuation):
    def __init__(self, assignment: Mapping[str, bool]):
        self.assignment = dict(assignment)

    def initial_state(self) -> tuple:
        return ()

    def reply(self, state, atom):
        return self.assignment[atom], state

    def knows(self, atom: str) -> bool:
        return atom in self.assignment

    def describe(self) -> str:
        values = ", ".join(f"{a}={'T' if v else 'F'}" for a, v in sorted(self.assignment.items()))
        return f"static valuation {{{values}}}"

    def describe_state(self, state) -> dict[str, bool]:
        return dict(sorted(self.assignment.items()))

    @classmethod
    def from_spec(cls, argument: str) -> StaticValuation:
        assignment = {}
        for part in filter(None, (p.strip() for p in argument.split(","))):
            atom, sep, value = part.partition("=")
            if not sep or value not in ("T", "F") or not atom:
                raise ModelSpecError(f"expected atom=T or atom=F, got '{part}'")
            assignment[atom.strip("'")] = value == "T"
        if not assignment:
            raise ModelSpecError("static model needs at least one assignment, e.g. static:a=T,b=F")
        return cls(assignment)


# --- evaluation ------------------------------------------------------------


def evaluate(t: Term, v: ReactiveValuation) -> EvalRecord:
    """Short-circuit evaluation of ``t`` from ``v``'s initial state."""
    for atom in sorted(atoms_of(t)):
        v.check_atom(atom)
    trace: list[tuple[str, bool]] = []

    def run(t: Term, state: Hashable) -> tuple[bool, Hashable]:
        match t:
            case ConstT():
                return True, state
            case ConstF():
                return False, state
            case Atom(name):
                reply, state = v.reply(state, name)
                trace.append((name, reply))
                return reply, state
            case Not(x):
                value, state = run(x, state)
                return not value, state
            case And(l, r):
                value, state = run(l, state)
                return run(r, state) if value else (False, state)
            case Or(l, r):
                value, state = run(l, state)
                return (True, state) if value else run(r, state)
            case Cond(p, q, r):
                value, state = run(q, state)
                return run(p if value else r, state)
            case Var(name):
                raise OpenTermError(f"term is not closed: variable {name} is unbound")
        raise TypeError(f"not a term: {t!r}")

    result, final_state = run(t, v.initial_state())
    return EvalRecord(result, tuple(trace), final_state)


def run_tree(tr: EvalTree, v: ReactiveValuation) -> EvalRecord:
    """Walk ``tr`` following ``v``'s replies."""
    state = v.initial_state()
    trace = []
    while not isinstance(tr, Leaf):
        v.check_atom(tr.atom)
        reply, state = v.reply(state, tr.atom)
        trace.append((tr.atom, reply))
        tr = tr.on_true if reply else tr.on_false
    return EvalRecord(tr.value, tuple(trace), state)


OBSERVATIONS = ("result", "effects")


def agree(t1: Term, t2: Term, v: ReactiveValuation, observe: str = "result") -> bool:
    """Whether both terms give the same result under ``v``.

    With ``observe="effects"`` the final states must match as well.
    """
    if observe not in OBSERVATIONS:
        raise ValueError(f"Unknown observation: '{observe}'. Supported: {', '.join(OBSERVATIONS)}")
    r1, r2 = evaluate(t1, v), evaluate(t2, v)
    if observe == "effects":
        return (r1.result, r1.final_state) == (r2.result, r2.final_state)
    return r1.result == r2.result


def record_to_json(record: EvalRecord, v: ReactiveValuation) -> dict:
    return {
        "result": record.result,
        "trace": [{"atom": atom, "reply": reply} for atom, reply in record.trace],
        "final_state": v.describe_state(record.final_state),
    }


# --- enumeration -----------------------------------------------------------


def _check_bounds(atoms: tuple[str, ...], depth_bound: int, state_bound: int) -> None:
    if not atoms:
        raise ValueError("enumeration needs at least one atom")
    if len(atoms) > MAX_ENUMERATION_ATOMS:
        raise BoundTooLargeError(f"at most {MAX_ENUMERATION_ATOMS} atoms can be enumerated, got {len(atoms)}")
    if not 1 <= depth_bound <= MAX_DEPTH_BOUND:
        raise BoundTooLargeError(f"depth_bound must be between 1 and {MAX_DEPTH_BOUND}, got {depth_bound}")
    if not 1 <= state_bound <= MAX_STATE_BOUND:
        raise BoundTooLargeError(f"state_bound must be between 1 and {MAX_STATE_BOUND}, got {state_bound}")


def _strings(atoms: tuple[str, ...], max_length: int) -> list[tuple[str, ...]]:
    return [s for n in range(1, max_length + 1) for s in product(atoms, repeat=n)]


def _free(atoms: tuple[str, ...], depth_bound: int) -> Iterator[ReactiveValuation]:
    keys = _strings(atoms, depth_bound - 1)
    for replies in product((False, True), repeat=len(keys)):
        yield TrieValuation(dict(zip(keys, replies)), atoms)


def _memorizing_points(atoms: tuple[str, ...]) -> list[tuple[tuple[tuple[str, bool], ...], str]]:
    points = []
    for bound in range(len(atoms)):
        for chosen in combinations(atoms, bound):
            for values in product((True, False), repeat=bound):
                partial = tuple(zip(chosen, values))
                points += [(partial, atom) for atom in atoms if atom not in chosen]
    return points


def _memorizing(atoms: tuple[str, ...]) -> Iterator[ReactiveValuation]:
    points = _memorizing_points(atoms)
    for replies in product((False, True), repeat=len(points)):
        yield MemorizingValuation(dict(zip(points, replies)), atoms)


def _static(atoms: tuple[str, ...]) -> Iterator[ReactiveValuation]:
    for values in product((True, False), repeat=len(atoms)):
        yield StaticValuation(dict(zip(atoms, values)))


def _behaviour(v: ReactiveValuation, atoms: tuple[str, ...], depth: int) -> tuple:
    signature = []
    for word in product(atoms, repeat=depth):
        state = v.initial_state()
        replies = []
        for atom in word:
            reply, state = v.reply(state, atom)
            replies.append(reply)
        signature.append(tuple(replies))
    return tuple(signature)


def _automata(atoms: tuple[str, ...], logic: Logic, depth_bound: int, state_bound: int) -> Iterator[ReactiveValuation]:
    seen: set[tuple] = set()
    for n in range(1, state_bound + 1):
        cells = [(s, a) for s in range(n) for a in atoms]
        for targets in product(range(n), repeat=len(cells)):
            next_state = dict(zip(cells, targets))
            if logic is Logic.CR and any(next_state[(next_state[c], c[1])] != next_state[c] for c in cells):
                continue
            for replies in product((False, True), repeat=len(cells)):
                output = dict(zip(cells, replies))
                if any(output[(next_state[c], c[1])] != output[c] for c in cells):
                    continue
                v = AutomatonValuation(
                    range(n),
                    0,
                    {s: {a: output[(s, a)] for a in atoms} for s in range(n)},
                    {s: {a: next_state[(s, a)] for a in atoms} for s in range(n)},
                )
                key = _behaviour(v, atoms, depth_bound)
                if key not in seen:
                    seen.add(key)
                    yield v


def enumerate_valuations(
    atoms: Iterable[str],
    logic: Logic | str,
    depth_bound: int = 3,
    state_bound: int = 3,
) -> Iterator[ReactiveValuation]:
    """Every valuation of the class over ``atoms``, within the bounds.

    Costs grow doubly exponentially, so at most two atoms, ``depth_bound``
    up to 4 and ``state_bound`` up to 3 are accepted.
    """
    alphabet = tuple(sorted(set(atoms)))
    logic = Logic.parse(logic)
    _check_bounds(alphabet, depth_bound, state_bound)
    if logic is Logic.FR:
        return _free(alphabet, depth_bound)
    if logic is Logic.MEM:
        return _memorizing(alphabet)
    if logic is Logic.ST:
        return _static(alphabet)
    return _automata(alphabet, logic, depth_bound, state_bound)


def conforms(v: ReactiveValuation, logic: Logic | str, atoms: Iterable[str], depth: int = 3) -> bool:
    """Check the class constraint of ``logic`` on every history up to ``depth`` evaluations."""
    logic = Logic.parse(logic)
    alphabet = tuple(sorted(set(atoms)))
    if logic is Logic.FR:
        return True

    def explore(state: Hashable, memory: dict[str, bool], remaining: int) -> bool:
        if remaining == 0:
            return True
        for atom in alphabet:
            reply, after = v.reply(state, atom)
            if logic in (Logic.RP, Logic.CR):
                again, after_again = v.reply(after, atom)
                if again != reply or (logic is Logic.CR and after_again != after):
                    return False
            elif atom in memory and memory[atom] != reply:
                return False
            elif logic is Logic.ST and (after != state or reply != v.reply(v.initial_state(), atom)[0]):
                return False
            if not explore(after, {**memory, atom: reply}, remaining - 1):
                return False
        return True

    return explore(v.initial_state(), {}, depth)
