import pytest

from short_circuit_logic.models import CounterModel, RegisterModel, get_model, model_kinds
from short_circuit_logic.terms import parse
from short_circuit_logic.valuations import (
    AutomatonValuation,
    ModelSpecError,
    StaticValuation,
    UnknownAtomError,
    evaluate,
)


class TestGetModel:
    def test_kinds(self):
        assert model_kinds() == ["automaton", "counter", "registers", "static"]

    def test_counter(self):
        model = get_model("counter:3")
        assert isinstance(model, CounterModel)
        assert model.init == 3

    def test_counter_default(self):
        assert get_model("counter").init == 0

    def test_registers(self):
        model = get_model("registers:2:FT")
        assert isinstance(model, RegisterModel)
        assert model.initial_state() == (False, True)

    def test_registers_default_init(self):
        assert get_model("registers:3").initial_state() == (False, False, False)

    def test_static(self):
        model = get_model("static:a=T,b=F")
        assert isinstance(model, StaticValuation)
        assert model.assignment == {"a": True, "b": False}

    def test_kind_is_case_insensitive(self):
        assert isinstance(get_model("Counter:0"), CounterModel)

    def test_automaton(self, tmp_path):
        path = tmp_path / "one.json"
        path.write_text('{"states": [0], "init": 0, "output": {"0": {"a": true}}, "next": {"0": {"a": 0}}}')
        assert isinstance(get_model(f"automaton:{path}"), AutomatonValuation)

    def test_unknown_kind(self):
        with pytest.raises(ModelSpecError, match="Unsupported model kind: 'oracle'"):
            get_model("oracle:1")

    @pytest.mark.parametrize(
        "spec",
        ["counter:x", "counter:-1", "registers:two", "registers:0", "registers:2:FTF", "registers:1:X", "static:", "static:a=1"],
    )
    def test_malformed_specs(self, spec):
        with pytest.raises(ModelSpecError):
            get_model(spec)


class TestCounterModel:
    def setup_method(self):
        self.model = CounterModel(0)

    def test_increment_replies_true(self):
        record = evaluate(parse("'n=n+1'"), self.model)
        assert record.result is True
        assert self.model.describe_state(record.final_state) == {"n": 1}

    def test_compare_does_not_write(self):
        record = evaluate(parse("'n==0' && 'n==0'"), self.model)
        assert record.result is True
        assert record.final_state == ()

    def test_counters_are_independent(self):
        record = evaluate(parse("'x=x+1' && 'y==0'"), self.model)
        assert record.result is True
        assert self.model.describe_state(record.final_state) == {"x": 1}

    def test_non_counter_atom(self):
        with pytest.raises(UnknownAtomError):
            evaluate(parse("a"), self.model)

    def test_malformed_counter_atom(self):
        with pytest.raises(ModelSpecError, match="malformed counter atom"):
            evaluate(parse("'x=y+1'"), self.model)


class TestRegisterModel:
    def setup_method(self):
        self.model = RegisterModel(2)

    def test_set_then_read(self):
        record = evaluate(parse("'set:2:T' && 'eq:2:T'"), self.model)
        assert record.result is True
        assert self.model.describe_state(record.final_state) == {"1": "F", "2": "T"}

    def test_read_only(self):
        assert evaluate(parse("'eq:1:T'"), self.model).result is False

    def test_index_out_of_range(self):
        with pytest.raises(ModelSpecError, match="out of range"):
            evaluate(parse("'eq:3:T'"), self.model)

    def test_non_register_atom(self):
        with pytest.raises(UnknownAtomError):
            evaluate(parse("'x=x+1'"), self.model)

    def test_init_length_must_match(self):
        with pytest.raises(ModelSpecError, match="expected 2 initial register values"):
            RegisterModel(2, (True,))
