import pytest

from short_circuit_logic.axioms import get_axiom_set
from short_circuit_logic.independence import (
    MODELS,
    get_interpretation,
    independence_report,
    interpret,
    symmetric_variant_check,
)
from short_circuit_logic.soundness import check_equation, soundness_check
from short_circuit_logic.terms import Equation, parse
from short_circuit_logic.valuations import UnknownAtomError


class TestInterpretations:
    def test_five_models(self):
        assert sorted(MODELS) == [1, 2, 3, 4, 5]
        assert [MODELS[i].violates for i in range(1, 6)] == ["CP1", "CP2", "CP3*", "CP4", "CP5"]

    def test_unknown_model(self):
        with pytest.raises(ValueError, match="Unknown independence model: 6"):
            get_interpretation(6)

    def test_only_a_and_b(self):
        with pytest.raises(UnknownAtomError):
            interpret(parse("a && c"), get_interpretation(2))

    def test_values(self):
        assert interpret(parse("T"), get_interpretation(1)) is False
        assert interpret(parse("ite(F, a, b)"), get_interpretation(2)) is True
        assert interpret(parse("ite(T, a, b)"), get_interpretation(4)) == 2
        assert interpret(parse("ite(F, a, b)"), get_interpretation(4)) == 3
        assert interpret(parse("ite(a, T, F)"), get_interpretation(5)) == 2

    def test_sequential_connectives_are_desugared(self):
        m = get_interpretation(5)
        assert interpret(parse("a && b"), m) == interpret(parse("ite(a, b, F)"), m)

    def test_memorizing_model_shows_trees(self):
        m = get_interpretation(3)
        assert m.show(interpret(parse("a || b"), m)) == "a[T, b[T, F]]"


class TestIndependence:
    @pytest.mark.parametrize("index", [1, 2, 3, 4, 5])
    def test_each_model_violates_only_its_axiom(self, index):
        report = independence_report(get_interpretation(index), inst_size=2)
        assert report["violated"] == [report["designated"]]
        assert report["independent"]

    @pytest.mark.parametrize(
        "index, lhs, rhs",
        [(1, "F", "T"), (2, "T", "F"), (3, "a[T, b[T, F]]", "b[T, a[T, F]]"), (4, 1, 2), (5, 0, 2)],
    )
    def test_designated_witness(self, index, lhs, rhs):
        m = get_interpretation(index)
        entry = independence_report(m, inst_size=1)["axioms"][m.violates]
        assert entry["status"] == "violated"
        assert entry["instances_checked"] == 1
        assert (entry["lhs"], entry["rhs"]) == (lhs, rhs)

    def test_report_shape(self):
        report = independence_report(get_interpretation(4), inst_size=2)
        assert report["model"] == 4
        assert report["set"] == "CPstat*"
        assert list(report["axioms"]) == ["CP1", "CP2", "CP3*", "CP4", "CP5"]
        assert report["axioms"]["CP4"]["witness"] == {"U": "T", "V": "T", "X": "F", "Y": "F", "Z": "a"}
        assert report["axioms"]["CP1"]["status"] == "satisfied"

    def test_another_set(self):
        report = independence_report(get_interpretation(1), get_axiom_set("CP"), inst_size=2)
        assert report["set"] == "CP"
        assert "CP1" in report["violated"]

    @pytest.mark.slow
    @pytest.mark.parametrize("index", [1, 2, 3, 4, 5])
    def test_independence_at_size_three(self, index):
        assert independence_report(get_interpretation(index), inst_size=3)["independent"]


class TestSymmetricVariant:
    def test_equally_strong(self):
        report = symmetric_variant_check(inst_size=2)
        assert report["set"] == "CPstat*-swapped"
        assert report["soundness"]["sound"]
        assert all(entry["valid"] for entry in report["lemmas"])
        assert all("trace" not in entry for entry in report["lemmas"])
        assert set(report["proofs"]) == {"CP1", "CP2", "CP3*", "CP4", "CP5", "commutativity"}
        assert all(p["status"] == "proved" and p["verified"] for p in report["proofs"].values())
        assert report["equally_strong"]


class TestStaticConsequences:
    @pytest.mark.parametrize(
        "name, lhs, rhs",
        [
            ("distributivity", "X || (Y && Z)", "(X || Y) && (X || Z)"),
            ("contraction", "ite(X, ite(X, Y, Z), U)", "ite(X, Y, U)"),
            ("guard-swap", "ite(U, ite(Y, X, Z), V)", "ite(Y, ite(U, X, V), ite(U, Z, V))"),
        ],
    )
    def test_holds_under_static(self, name, lhs, rhs):
        result = check_equation(Equation(name, parse(lhs), parse(rhs)), "st", inst_size=3)
        assert result["verdict"] == "valid_on_tested"
        assert result["effective_size"] == 3

    def test_static_sets_agree(self):
        for name in ("CPstat", "CPstat*"):
            assert soundness_check(get_axiom_set(name), "st", inst_size=3)["sound"]
