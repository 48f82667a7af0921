import logging

from .axioms import AxiomSet, build_registry, get_axiom_set
from .independence import get_interpretation, independence_report, symmetric_variant_check
from .models import get_model, model_kinds
from .prover import rewrite_search, verify_lemmas, verify_trace
from .rewriting import ProofTrace
from .soundness import DEFAULT_INSTANCE_BUDGET, check_equation, soundness_check
from .state import ProofStore
from .terms import (
    ATOM_PATTERN,
    SIGNATURES,
    Equation,
    atoms_of,
    enumerate_terms,
    is_closed,
    parse,
    render,
    term_size,
    variables_of,
)
from .trees import Logic, canonical, equal, render_tree, tree_stats, tree_to_json
from .valuations import evaluate, record_to_json

logger = logging.getLogger(__name__)

MAX_INST_SIZE = 5
MAX_SEARCH_DEPTH = 40


class LogicEngine:
    def __init__(
        self,
        atoms: tuple[str, ...] | list[str] = ("a", "b"),
        logic: Logic | str = "fr",
        inst_size: int = 3,
        max_depth: int = 12,
        max_terms: int = 200_000,
        instance_budget: int = DEFAULT_INSTANCE_BUDGET,
        proof_store: ProofStore | None = None,
    ):
        self.atoms = atoms  # rebuilds the registry
        self.logic = logic
        self.inst_size = inst_size
        self.max_depth = max_depth
        self.max_terms = max_terms
        self.instance_budget = instance_budget
        self._proofs = proof_store or ProofStore()

    @property
    def atoms(self) -> tuple[str, ...]:
        return self._atoms

    @atoms.setter
    def atoms(self, value: tuple[str, ...] | list[str]) -> None:
        value = tuple(value)
        if not value:
            raise ValueError("atoms must not be empty")
        bad = [a for a in value if not ATOM_PATTERN.fullmatch(a) or a == "ite"]
        if bad:
            raise ValueError(f"atoms must be lowercase identifiers, got {', '.join(bad)}")
        if len(set(value)) != len(value):
            raise ValueError(f"atoms must be distinct, got {', '.join(value)}")
        self._atoms = value
        self._registry = build_registry(value)

    @property
    def logic(self) -> Logic:
        return self._logic

    @logic.setter
    def logic(self, value: Logic | str) -> None:
        self._logic = Logic.parse(value)

    @property
    def inst_size(self) -> int:
        return self._inst_size

    @inst_size.setter
    def inst_size(self, value: int) -> None:
        if not (1 <= value <= MAX_INST_SIZE):
            raise ValueError(f"inst_size must be between 1 and {MAX_INST_SIZE}, got {value}")
        self._inst_size = value

    @property
    def max_depth(self) -> int:
        return self._max_depth

    @max_depth.setter
    def max_depth(self, value: int) -> None:
        if not (1 <= value <= MAX_SEARCH_DEPTH):
            raise ValueError(f"max_depth must be between 1 and {MAX_SEARCH_DEPTH}, got {value}")
        self._max_depth = value

    @property
    def max_terms(self) -> int:
        return self._max_terms

    @max_terms.setter
    def max_terms(self, value: int) -> None:
        if value < 1:
            raise ValueError(f"max_terms must be at least 1, got {value}")
        self._max_terms = value

    @property
    def instance_budget(self) -> int:
        return self._instance_budget

    @instance_budget.setter
    def instance_budget(self, value: int) -> None:
        if value < 1:
            raise ValueError(f"instance_budget must be at least 1, got {value}")
        self._instance_budget = value

    @property
    def proofs(self) -> ProofStore:
        return self._proofs

    @property
    def registry(self) -> dict[str, AxiomSet]:
        return self._registry

    def axiom_set(self, name: str) -> AxiomSet:
        return get_axiom_set(name, self._registry)

    def _logic_or_default(self, logic: Logic | str | None) -> Logic:
        return Logic.parse(logic) if logic is not None else self._logic

    def settings(self) -> dict:
        return {
            "atoms": list(self._atoms),
            "logic": self._logic.value,
            "inst_size": self._inst_size,
            "max_depth": self._max_depth,
            "max_terms": self._max_terms,
            "instance_budget": self._instance_budget,
            "axiom_sets": list(self._registry),
            "model_kinds": model_kinds(),
        }

    # --- terms and trees ---

    def parse(self, text: str) -> dict:
        t = parse(text)
        return {
            "term": render(t),
            "size": term_size(t),
            "atoms": sorted(atoms_of(t)),
            "variables": sorted(variables_of(t)),
            "closed": is_closed(t),
        }

    def tree(self, text: str, logic: Logic | str | None = None) -> dict:
        logic = self._logic_or_default(logic)
        t = parse(text)
        tr = canonical(t, logic)
        return {
            "term": render(t),
            "logic": logic.value,
            "tree": tree_to_json(tr),
            "stats": tree_stats(tr),
            "rendered": render_tree(tr),
        }

    def equiv(self, lhs: str, rhs: str, logic: Logic | str | None = None) -> dict:
        logic = self._logic_or_default(logic)
        t1, t2 = parse(lhs), parse(rhs)
        same = equal(t1, t2, logic)
        return {
            "lhs": render(t1),
            "rhs": render(t2),
            "logic": logic.value,
            "equal": same,
            "verdict": "equal" if same else "not-equal",
        }

    def evaluate(self, text: str, model: str) -> dict:
        t = parse(text)
        v = get_model(model)
        record = evaluate(t, v)
        logger.debug("%s under %s: %s", render(t), v.describe(), record.result)
        return {"term": render(t), "model": model, **record_to_json(record, v)}

    def enumerate(
        self, max_size: int, atoms: list[str] | None = None, signature: str = "scl"
    ) -> dict:
        if signature not in SIGNATURES:
            raise ValueError(f"Unknown signature: '{signature}'. Supported: {', '.join(SIGNATURES)}")
        if not (1 <= max_size <= MAX_INST_SIZE):
            raise ValueError(f"max_size must be between 1 and {MAX_INST_SIZE}, got {max_size}")
        atoms = tuple(atoms) if atoms else self._atoms
        terms = [render(t) for t in enumerate_terms(atoms, max_size, signature)]
        return {
            "atoms": list(atoms),
            "max_size": max_size,
            "signature": signature,
            "count": len(terms),
            "terms": terms,
        }

    # --- axioms ---

    def check_axioms(
        self,
        set_name: str,
        logic: Logic | str | None = None,
        atoms: list[str] | None = None,
        inst_size: int | None = None,
    ) -> dict:
        axiom_set = self.axiom_set(set_name)
        logic = Logic.parse(logic) if logic is not None else axiom_set.logic_home
        return soundness_check(
            axiom_set,
            logic,
            tuple(atoms) if atoms else self._atoms,
            inst_size or self._inst_size,
            self._instance_budget,
        )

    def dump_axioms(self, set_name: str) -> dict:
        axiom_set = self.axiom_set(set_name)
        return {**axiom_set.summary(), "set": axiom_set.name, "text": axiom_set.dump()}

    def lemmas(self, set_name: str) -> dict:
        axiom_set = self.axiom_set(set_name)
        results = verify_lemmas(axiom_set)
        return {
            "set": axiom_set.name,
            "lemmas": results,
            "valid": all(r["valid"] for r in results),
        }

    def check_law(
        self, lhs: str, rhs: str, logic: Logic | str | None = None, inst_size: int | None = None
    ) -> dict:
        e = Equation("law", parse(lhs), parse(rhs))
        return check_equation(
            e,
            self._logic_or_default(logic),
            self._atoms,
            inst_size or self._inst_size,
            self._instance_budget,
        )

    # --- proofs ---

    def prove(
        self,
        lhs: str,
        rhs: str,
        set_name: str,
        max_depth: int | None = None,
        creative: int = 0,
    ) -> dict:
        self._proofs.prune_expired()
        axiom_set = self.axiom_set(set_name)
        found = rewrite_search(
            parse(lhs),
            parse(rhs),
            axiom_set,
            max_depth or self._max_depth,
            self._max_terms,
            creative,
        )
        result = found.to_json()
        result["proof_id"] = None
        result["verified"] = None
        if found.trace is not None:
            result["verified"] = verify_trace(found.trace, axiom_set)
            result["proof_id"] = self._proofs.add(found.trace, axiom_set.name)
            result["lines"] = found.trace.render_lines()
        return result

    def verify_proof(
        self,
        proof_id: str | None = None,
        trace: dict | None = None,
        set_name: str | None = None,
    ) -> dict:
        """Replay a stored proof, or a trace given in its JSON encoding."""
        if proof_id is not None:
            stored = self._proofs.get(proof_id)
            if stored is None:
                return {"error": f"Proof '{proof_id}' not found or expired"}
            found, stored_set = stored
            set_name = set_name or stored_set
        elif trace is not None:
            found = ProofTrace.from_json(trace)
        else:
            raise ValueError("either proof_id or trace is required")
        if set_name is None:
            raise ValueError("set_name is required to check a trace")
        axiom_set = self.axiom_set(set_name)
        return {
            "set": axiom_set.name,
            "lhs": render(found.lhs),
            "rhs": render(found.rhs),
            "steps": len(found.steps),
            "valid": verify_trace(found, axiom_set),
        }

    # --- independence ---

    def independence(self, model: int, set_name: str | None = None, inst_size: int | None = None) -> dict:
        axiom_set = self.axiom_set(set_name) if set_name else None
        return independence_report(
            get_interpretation(model),
            axiom_set,
            inst_size or self._inst_size,
            self._instance_budget,
        )

    def symmetric_check(self, inst_size: int | None = None) -> dict:
        return symmetric_variant_check(
            inst_size or self._inst_size,
            self._max_depth,
            self._max_terms,
            self._instance_budget,
        )
