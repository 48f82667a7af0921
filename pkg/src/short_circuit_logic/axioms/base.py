from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field, replace

from ..terms import Equation, parse, parse_equations, render_equations
from ..trees import Logic

SIGNATURES = ("scl", "cond")


@dataclass(frozen=True)
class Lemma:
    """A derived equation together with the moves of its derivation.

    Each move names the rule applied and the term it produces; positions
    and directions are recovered when the derivation is replayed.
    """

    equation: Equation
    moves: tuple[tuple[str, str], ...]

    @classmethod
    def of(cls, name: str, lhs: str, rhs: str, moves: Sequence[tuple[str, str]]) -> Lemma:
        return cls(Equation(name, parse(lhs), parse(rhs)), tuple(moves))

    @property
    def name(self) -> str:
        return self.equation.name


@dataclass(frozen=True)
class AxiomSet:
    name: str
    equations: tuple[Equation, ...]
    schemes: tuple[Equation, ...] = ()
    logic_home: Logic = Logic.FR
    signature: str = "scl"
    lemmas: tuple[Lemma, ...] = ()
    alphabet: tuple[str, ...] = ("a", "b")
    description: str = ""
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_text(cls, name: str, text: str, **kwargs) -> AxiomSet:
        parsed = parse_equations(text)
        return cls(
            name,
            tuple(e for e in parsed if e.scheme_atom is None),
            tuple(e for e in parsed if e.scheme_atom is not None),
            **kwargs,
        )

    def extend(self, name: str, text: str = "", **kwargs) -> AxiomSet:
        """A new set holding this set's equations followed by the ones in ``text``."""
        extra = parse_equations(text)
        return replace(
            self,
            name=name,
            equations=self.equations + tuple(e for e in extra if e.scheme_atom is None),
            schemes=self.schemes + tuple(e for e in extra if e.scheme_atom is not None),
            _cache={},
            **kwargs,
        )

    def with_alphabet(self, atoms: Sequence[str]) -> AxiomSet:
        return replace(self, alphabet=tuple(atoms), _cache={})

    @property
    def self_dual(self) -> bool:
        names = {e.name for e in self.equations}
        return self.signature == "scl" and {"SCL2", "SCL3"} <= names

    def instances(self) -> list[Equation]:
        """The equations followed by every scheme instance over the alphabet."""
        return [*self.equations, *(s.for_atom(a) for s in self.schemes for a in self.alphabet)]

    def _with_duals(self, equations: Sequence[Equation]) -> list[Equation]:
        found = []
        for e in equations:
            found.append(e)
            if self.self_dual:
                d = e.dual()
                if {d.lhs, d.rhs} != {e.lhs, e.rhs}:
                    found.append(d)
        return found

    def context(self, lemma_count: int) -> dict[str, Equation]:
        """Rules available to the derivation of lemma number ``lemma_count``."""
        key = ("context", lemma_count)
        if key not in self._cache:
            equations = self.instances() + [lemma.equation for lemma in self.lemmas[:lemma_count]]
            self._cache[key] = {e.name: e for e in self._with_duals(equations)}
        return self._cache[key]

    def rules(self) -> list[Equation]:
        return list(self.context(len(self.lemmas)).values())

    def rule_table(self) -> dict[str, Equation]:
        return self.context(len(self.lemmas))

    def dump(self) -> str:
        header = f"# {self.name}: sound for {self.logic_home.value} ({self.signature} signature)\n"
        return header + render_equations(self.equations, self.schemes)

    def summary(self) -> dict:
        return {
            "name": self.name,
            "logic_home": self.logic_home.value,
            "signature": self.signature,
            "description": self.description,
            "equations": [{"name": e.name, "equation": str(e)} for e in self.equations],
            "schemes": [{"name": e.name, "equation": str(e)} for e in self.schemes],
            "lemmas": [{"name": lemma.name, "equation": str(lemma.equation)} for lemma in self.lemmas],
            "alphabet": list(self.alphabet),
        }
