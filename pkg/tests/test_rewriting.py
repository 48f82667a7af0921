import pytest

from short_circuit_logic.rewriting import (
    BACKWARD,
    FORWARD,
    MalformedStepError,
    ProofStep,
    ProofTrace,
    check_step,
    derive,
    is_rewrite,
    match,
    orient,
    reverse_steps,
)
from short_circuit_logic.terms import Equation, Var, parse


def eq(name, text):
    lhs, rhs = text.split(" = ")
    return Equation(name, parse(lhs), parse(rhs))


SCL4 = eq("SCL4", "T && X = X")
SCL7 = eq("SCL7", "(X && Y) && Z = X && (Y && Z)")
TABLE = {"SCL4": SCL4, "SCL7": SCL7}


class TestMatch:
    def test_binds_variables(self):
        assert match(parse("X && Y"), parse("a && !b")) == {"X": parse("a"), "Y": parse("!b")}

    def test_repeated_variable_must_agree(self):
        assert match(parse("X && X"), parse("a && a")) == {"X": parse("a")}
        assert match(parse("X && X"), parse("a && b")) is None

    def test_constants_and_atoms_match_exactly(self):
        assert match(parse("T && X"), parse("T && a")) is not None
        assert match(parse("T && X"), parse("F && a")) is None
        assert match(parse("a || X"), parse("b || a")) is None

    def test_extends_existing_binding(self):
        assert match(parse("X"), parse("a"), {"X": parse("b")}) is None


class TestOrient:
    def test_collapsing_direction_is_not_creative(self):
        forward, backward = orient(SCL4)
        assert (forward.direction, forward.creative) == (FORWARD, False)
        assert (backward.direction, backward.creative) == (BACKWARD, True)
        assert backward.source == Var("X")

    def test_fresh_variables(self):
        _, backward = orient(eq("CP1", "ite(T, X, Y) = X"))
        assert backward.fresh == frozenset({"Y"})
        assert backward.creative

    def test_expanding_a_constant_is_creative(self):
        forward, backward = orient(eq("SCL1", "F = !T"))
        assert forward.creative
        assert not backward.creative

    def test_reassociation_is_not_creative(self):
        assert not any(rule.creative for rule in orient(SCL7))


class TestSteps:
    def test_is_rewrite(self):
        assert is_rewrite(parse("T && a"), parse("a"), SCL4, FORWARD)
        assert is_rewrite(parse("a"), parse("T && a"), SCL4, BACKWARD)
        assert not is_rewrite(parse("T && a"), parse("b"), SCL4, FORWARD)

    def test_legal_step(self):
        step = ProofStep((1,), "SCL4", FORWARD, parse("a || b"))
        assert check_step(parse("a || (T && b)"), step, TABLE)

    def test_step_outside_the_position(self):
        step = ProofStep((1,), "SCL4", FORWARD, parse("c || b"))
        assert not check_step(parse("a || (T && b)"), step, TABLE)

    def test_unknown_rule(self):
        step = ProofStep((), "SCL99", FORWARD, parse("a"))
        with pytest.raises(MalformedStepError, match="unknown rule"):
            check_step(parse("T && a"), step, TABLE)

    def test_bad_direction(self):
        step = ProofStep((), "SCL4", "=>", parse("a"))
        with pytest.raises(MalformedStepError, match="direction"):
            check_step(parse("T && a"), step, TABLE)

    def test_missing_position(self):
        step = ProofStep((0, 0, 0), "SCL4", FORWARD, parse("a"))
        with pytest.raises(MalformedStepError, match="does not exist"):
            check_step(parse("T && a"), step, TABLE)

    def test_str(self):
        assert str(ProofStep((1, 0), "SCL4", FORWARD, parse("a || b"))) == "SCL4 -> at 1.0: a || b"
        assert str(ProofStep((), "SCL4", BACKWARD, parse("T && a"))) == "SCL4 <- at root: T && a"


class TestDerive:
    def test_recovers_position_and_direction(self):
        trace = derive(parse("(a && b) && c"), [("SCL7", "a && (b && c)"), ("SCL4", "a && (T && (b && c))")], TABLE)
        assert [(s.position, s.rule, s.direction) for s in trace.steps] == [
            ((), "SCL7", FORWARD),
            ((1,), "SCL4", BACKWARD),
        ]
        assert trace.rhs == parse("a && (T && (b && c))")

    def test_rejects_a_move_the_rule_cannot_make(self):
        with pytest.raises(MalformedStepError, match="does not rewrite"):
            derive(parse("a && b"), [("SCL7", "b && a")], TABLE)

    def test_unknown_rule(self):
        with pytest.raises(MalformedStepError):
            derive(parse("a"), [("SCL0", "a")], TABLE)


class TestProofTrace:
    def setup_method(self):
        self.trace = derive(parse("T && (a && b)"), [("SCL4", "a && b")], TABLE)

    def test_json_round_trip(self):
        data = self.trace.to_json()
        assert data == {
            "lhs": "T && (a && b)",
            "rhs": "a && b",
            "steps": [{"position": [], "rule": "SCL4", "direction": "->", "result": "a && b"}],
        }
        assert ProofTrace.from_json(data) == self.trace

    def test_malformed_step_json(self):
        with pytest.raises(MalformedStepError):
            ProofStep.from_json({"rule": "SCL4"})

    def test_render_lines(self):
        assert self.trace.render_lines() == ["T && (a && b)", "  = SCL4 -> at root: a && b"]

    def test_reverse_steps(self):
        path = list(zip(self.trace.terms(), self.trace.steps))
        (back,) = reverse_steps(path)
        assert back.direction == BACKWARD
        assert back.result == self.trace.lhs
        assert check_step(self.trace.rhs, back, TABLE)
