import json

from short_circuit_logic.engine import LogicEngine
from short_circuit_logic.tools.axioms import (
    handle_check_axioms,
    handle_check_law,
    handle_dump_axioms,
    handle_verify_lemmas,
)
from short_circuit_logic.tools.configure import handle_configure
from short_circuit_logic.tools.enumerate_terms import handle_enumerate_terms
from short_circuit_logic.tools.equiv import handle_equiv
from short_circuit_logic.tools.evaluate import handle_evaluate
from short_circuit_logic.tools.independence import handle_independence, handle_symmetric_check
from short_circuit_logic.tools.parse_term import handle_parse_term
from short_circuit_logic.tools.prove import handle_prove, handle_verify_proof
from short_circuit_logic.tools.tree import handle_tree


class TestTermTools:
    def setup_method(self):
        self.engine = LogicEngine()

    def test_parse_term_returns_valid_json(self):
        data = json.loads(handle_parse_term(self.engine, term="ite(a, b, F)"))
        assert data["term"] == "ite(a, b, F)"
        assert data["closed"] is True

    def test_parse_term_error(self):
        data = json.loads(handle_parse_term(self.engine, term="a &&"))
        assert "error" in data

    def test_tree_leaves_out_the_rendering(self):
        data = json.loads(handle_tree(self.engine, term="a || b", logic="mem"))
        assert "rendered" not in data
        assert data["tree"]["atom"] == "a"

    def test_tree_open_term(self):
        data = json.loads(handle_tree(self.engine, term="a && X"))
        assert "not closed" in data["error"]

    def test_equiv(self):
        data = json.loads(handle_equiv(self.engine, lhs="a && F", rhs="!a && F"))
        assert data["verdict"] == "equal"

    def test_equiv_unknown_logic(self):
        data = json.loads(handle_equiv(self.engine, lhs="a", rhs="a", logic="xx"))
        assert data["error"].startswith("Unknown logic")

    def test_evaluate(self):
        data = json.loads(handle_evaluate(self.engine, term="'set:1:T' && 'eq:1:T'", model="registers:1"))
        assert data["result"] is True
        assert data["final_state"] == {"1": "T"}

    def test_evaluate_bad_model(self):
        data = json.loads(handle_evaluate(self.engine, term="a", model="registers:x"))
        assert "error" in data

    def test_enumerate_terms(self):
        data = json.loads(handle_enumerate_terms(self.engine, max_size=3, atoms=["a"]))
        assert data["atoms"] == ["a"]
        assert data["count"] == len(data["terms"])


class TestAxiomTools:
    def setup_method(self):
        self.engine = LogicEngine()

    def test_check_axioms_drops_per_equation_results(self):
        data = json.loads(handle_check_axioms(self.engine, set_name="CPmem", inst_size=2))
        assert data["sound"] is True
        assert "results" not in data

    def test_check_axioms_reports_failures(self):
        data = json.loads(handle_check_axioms(self.engine, set_name="EqMSCL", logic="fr", inst_size=2))
        assert data["sound"] is False
        assert data["failures"]

    def test_check_axioms_unknown_set(self):
        data = json.loads(handle_check_axioms(self.engine, set_name="nope"))
        assert "Unknown axiom set" in data["error"]

    def test_dump_axioms(self):
        data = json.loads(handle_dump_axioms(self.engine, set_name="cpstat-star"))
        assert data["set"] == "CPstat*"
        assert [e["name"] for e in data["equations"]] == ["CP1", "CP2", "CP3*", "CP4", "CP5"]

    def test_verify_lemmas(self):
        data = json.loads(handle_verify_lemmas(self.engine, set_name="EqMSCL"))
        assert data["valid"] is True

    def test_check_law(self):
        data = json.loads(handle_check_law(self.engine, lhs="X && Y", rhs="Y && X", logic="st", inst_size=2))
        assert data["verdict"] == "valid_on_tested"


class TestProofTools:
    def setup_method(self):
        self.engine = LogicEngine()

    def test_prove_then_verify(self):
        proved = json.loads(handle_prove(self.engine, lhs="a && b", rhs="b && a", set_name="EqSSCL"))
        assert proved["status"] == "proved"
        assert proved["verified"] is True
        data = json.loads(handle_verify_proof(self.engine, proof_id=proved["proof_id"]))
        assert data["valid"] is True

    def test_prove_unknown_set(self):
        data = json.loads(handle_prove(self.engine, lhs="a", rhs="a", set_name="nope"))
        assert "error" in data

    def test_verify_bad_id(self):
        data = json.loads(handle_verify_proof(self.engine, proof_id="bad-id"))
        assert "error" in data

    def test_verify_malformed_trace(self):
        data = json.loads(handle_verify_proof(self.engine, trace={"lhs": "a"}, set_name="EqFSCL"))
        assert "malformed" in data["error"]


class TestIndependenceTools:
    def setup_method(self):
        self.engine = LogicEngine(inst_size=2)

    def test_independence(self):
        data = json.loads(handle_independence(self.engine, model=5))
        assert data["independent"] is True
        assert data["violated"] == ["CP5"]

    def test_independence_unknown_model(self):
        data = json.loads(handle_independence(self.engine, model=0))
        assert "Unknown independence model" in data["error"]

    def test_symmetric_check(self):
        data = json.loads(handle_symmetric_check(self.engine))
        assert data["equally_strong"] is True
        assert "results" not in data["soundness"]


class TestConfigureTool:
    def setup_method(self):
        self.engine = LogicEngine()

    def test_configure_settings(self):
        data = json.loads(handle_configure(self.engine, atoms=["p", "q"], logic="st", inst_size=2))
        assert data["status"] == "ok"
        assert data["atoms"] == ["p", "q"]
        assert data["logic"] == "st"
        assert self.engine.inst_size == 2

    def test_configure_rejects_bad_values(self):
        data = json.loads(handle_configure(self.engine, max_depth=100))
        assert "max_depth" in data["error"]
        assert self.engine.max_depth == 12
