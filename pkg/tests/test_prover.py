import pytest

from short_circuit_logic.axioms import get_axiom_set
from short_circuit_logic.prover import (
    BOUND_EXCEEDED,
    EXHAUSTED,
    PROVED,
    REFUTED,
    rewrite_search,
    verify_trace,
)
from short_circuit_logic.rewriting import ProofStep, ProofTrace
from short_circuit_logic.terms import desugar, parse
from short_circuit_logic.trees import OpenTermError, equal

SCL8_INSTANCE = ("(a || b) && (c && F)", "(!a || (c && F)) && (b && (c && F))")
SCL9_INSTANCE = ("(a || b) && (c || T)", "(a && (c || T)) || (b && (c || T))")
SCL10_INSTANCE = ("((a && F) || b) && c", "(a && F) || (b && c)")


def prove(lhs, rhs, set_name, **kwargs):
    return rewrite_search(parse(lhs), parse(rhs), get_axiom_set(set_name), **kwargs)


class TestRewriteSearch:
    def test_identical_sides(self):
        result = prove("a && b", "a && b", "EqFSCL")
        assert result.status == PROVED
        assert result.trace.steps == ()
        assert result.explored == 1

    def test_single_axiom_step(self):
        result = prove("T && a", "a", "EqFSCL")
        assert result.proved
        assert [s.rule for s in result.trace.steps] == ["SCL4"]

    def test_lemma_step(self):
        result = prove("a && F", "!a && F", "EqFSCL")
        assert result.proved
        assert verify_trace(result.trace, get_axiom_set("EqFSCL"))

    def test_refuted_without_search(self):
        result = prove("a && b", "b && a", "EqMSCL")
        assert result.status == REFUTED
        assert result.trace is None
        assert result.explored == 0

    def test_commutativity_in_static_logic(self):
        result = prove("a && b", "b && a", "EqSSCL")
        assert result.proved
        assert verify_trace(result.trace, get_axiom_set("EqSSCL"))

    def test_conditional_sets_work_on_desugared_terms(self):
        result = prove("a || b", "b || a", "CPstat*")
        assert result.proved
        assert result.lhs == desugar(parse("a || b"))
        assert verify_trace(result.trace, get_axiom_set("CPstat*"))

    def test_exhausted(self):
        result = prove(*SCL9_INSTANCE, "EqMSCL", max_depth=1)
        assert result.status == EXHAUSTED
        assert result.depth == 1

    def test_bound_exceeded(self):
        result = prove(*SCL9_INSTANCE, "EqMSCL", max_terms=3)
        assert result.status == BOUND_EXCEEDED
        assert result.explored == 3

    def test_open_terms_are_rejected(self):
        with pytest.raises(OpenTermError):
            prove("X && F", "!X && F", "EqFSCL")

    @pytest.mark.parametrize("kwargs", [{"max_depth": 0}, {"max_terms": 0}, {"creative": -1}])
    def test_invalid_bounds(self, kwargs):
        with pytest.raises(ValueError):
            prove("a", "a", "EqFSCL", **kwargs)

    def test_to_json(self):
        data = prove("T && a", "a", "EqFSCL").to_json()
        assert data["status"] == "proved"
        assert data["set"] == "EqFSCL"
        assert data["trace"]["steps"][0] == {"position": [], "rule": "SCL4", "direction": "->", "result": "a"}

    def test_creative_steps(self):
        result = prove("a", "a && a", "EqMSCL", creative=1)
        assert result.proved
        assert verify_trace(result.trace, get_axiom_set("EqMSCL"))


class TestVerifyTrace:
    def setup_method(self):
        self.axioms = get_axiom_set("EqFSCL")
        self.trace = prove("(T && a) && (T && b)", "a && b", "EqFSCL").trace

    def test_found_trace_verifies(self):
        assert len(self.trace.steps) == 2
        assert verify_trace(self.trace, self.axioms)

    def test_corrupted_result(self):
        first, second = self.trace.steps
        bad = ProofStep(first.position, first.rule, first.direction, parse("b && a"))
        assert not verify_trace(ProofTrace(self.trace.lhs, self.trace.rhs, (bad, second)), self.axioms)

    def test_reversed_direction(self):
        first, second = self.trace.steps
        flipped = ProofStep(first.position, first.rule, "<-", first.result)
        assert not verify_trace(ProofTrace(self.trace.lhs, self.trace.rhs, (flipped, second)), self.axioms)

    def test_accepts_a_rule_table(self):
        assert verify_trace(self.trace, self.axioms.rule_table())


@pytest.mark.slow
class TestDerivedAxioms:
    @pytest.mark.parametrize("lhs, rhs", [SCL8_INSTANCE, SCL9_INSTANCE, SCL10_INSTANCE])
    def test_free_axioms_from_memorizing_axioms(self, lhs, rhs):
        axioms = get_axiom_set("EqMSCL")
        result = prove(lhs, rhs, "EqMSCL", max_depth=12, max_terms=2_000_000)
        assert result.proved
        assert verify_trace(result.trace, axioms)
        assert equal(result.lhs, result.rhs, axioms.logic_home)
