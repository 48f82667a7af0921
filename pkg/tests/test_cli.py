import json

import pytest
from typer.testing import CliRunner

from short_circuit_logic.cli import app, run
from short_circuit_logic.schemas import SCHEMAS, get_schema

PERL_RUN = "('x=x+1' && !'x=x+1') || 'x==2'"


def invoke(*args):
    return CliRunner().invoke(app, list(args))


def payload(*args):
    code, out = run(["--json", *args])
    data = json.loads(out)
    assert data["exit_code"] == code
    return code, data


class TestVerdicts:
    def test_not_equal_under_memorizing(self):
        result = invoke("equiv", "--logic", "mem", "a && b", "b && a")
        assert result.exit_code == 1
        assert result.stdout.strip() == "not-equal"

    def test_equal_under_static(self):
        result = invoke("equiv", "--logic", "st", "a && F", "F")
        assert result.exit_code == 0
        assert result.stdout.strip() == "equal"

    def test_counter_run(self):
        result = invoke("eval", "--model", "counter:0", "--trace", PERL_RUN)
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "true"
        assert lines[1:4] == ["  x=x+1 -> T", "  x=x+1 -> T", "  x==2 -> T"]
        assert lines[4] == '  final state: {"x": 2}'

    def test_false_result_exits_one(self):
        result = invoke("eval", "--model", "counter:0", "(!'x=x+1' && 'x=x+1') || 'x==2'")
        assert result.exit_code == 1
        assert result.stdout.strip() == "false"

    def test_tree(self):
        result = invoke("tree", "a && b")
        assert result.exit_code == 0
        assert result.stdout.rstrip("\n") == "a\n  b\n    T\n    F\n  F"

    def test_parse(self):
        result = invoke("parse", "(a && b) || !(c)")
        assert result.exit_code == 0
        assert result.stdout.strip() == "a && b || !c"

    def test_enumerate(self):
        result = invoke("enumerate", "--max-size", "2", "--atoms", "a")
        assert result.stdout.split() == ["T", "F", "a", "!T", "!F", "!a"]

    def test_prove(self):
        result = invoke("prove", "--set", "EqFSCL", "a && F", "!a && F")
        assert result.exit_code == 0
        assert result.stdout.startswith("proved")

    def test_prove_refuted(self):
        result = invoke("prove", "--set", "EqMSCL", "a && b", "b && a")
        assert result.exit_code == 1
        assert result.stdout.startswith("refuted")

    def test_axioms_check(self):
        result = invoke("axioms", "check", "--set", "CPmem", "--max-size", "2")
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1].startswith("CPmem under mem: 5/5 passed")

    def test_axioms_check_counterexample(self):
        result = invoke("axioms", "check", "--set", "EqSSCL", "--logic", "mem", "--max-size", "2")
        assert result.exit_code == 1
        assert "SSCL1: counterexample" in result.stdout

    def test_axioms_law(self):
        result = invoke("axioms", "law", "X && Y", "Y && X", "--logic", "st", "--max-size", "2")
        assert result.exit_code == 0
        assert result.stdout.startswith("valid on tested instances")

    def test_axioms_dump(self):
        result = invoke("axioms", "dump", "--set", "EqSSCL")
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1] == "SSCL1 : X && F = F"

    def test_axioms_lemmas(self):
        result = invoke("axioms", "lemmas", "--set", "EqFSCL")
        assert result.exit_code == 0
        assert result.stdout.strip() == "SCL8*: ok (6 steps)"

    def test_independence(self):
        result = invoke("independence", "--model", "4", "--max-size", "2")
        assert result.exit_code == 0
        assert "CP4: violated by" in result.stdout
        assert result.stdout.splitlines()[-1] == "model 4: independent"


class TestJsonOutput:
    def test_equiv_payload(self):
        code, data = payload("equiv", "--logic", "mem", "a && b", "b && a")
        assert code == 1
        assert data["command"] == "equiv"
        assert data["verdict"] == "not-equal"
        SCHEMAS["equiv"].model_validate(data)

    def test_global_json_flag(self):
        code, out = run(["--json", "equiv", "a", "a"])
        assert code == 0
        data = json.loads(out)
        assert data["equal"] is True
        assert data["command"] == "equiv"

    def test_global_json_flag_reaches_subgroups(self):
        result = invoke("--json", "axioms", "dump", "--set", "CP")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["command"] == "axioms dump"

    def test_local_json_flag(self):
        result = invoke("parse", "a || b", "--json")
        data = json.loads(result.stdout)
        assert data["command"] == "parse"
        assert data["exit_code"] == 0

    def test_eval_payload(self):
        code, data = payload("eval", "--model", "counter:0", PERL_RUN)
        assert code == 0
        assert data["result"] is True
        assert data["final_state"] == {"x": 2}
        SCHEMAS["eval"].model_validate(data)

    def test_tree_payload(self):
        _, data = payload("tree", "--logic", "st", "a && a")
        assert data["tree"] == {"atom": "a", "t": {"leaf": True}, "f": {"leaf": False}}
        SCHEMAS["tree"].model_validate(data)

    def test_soundness_payload(self):
        _, data = payload("axioms", "check", "--set", "CPstat*", "--max-size", "2")
        report = SCHEMAS["soundness"].model_validate(data)
        assert report.set_name == "CPstat*"
        assert report.sound

    def test_proof_payload(self):
        code, data = payload("prove", "--set", "EqFSCL", "T && a", "a")
        assert code == 0
        assert "proof_id" not in data
        proof = SCHEMAS["proof"].model_validate(data)
        assert proof.trace.steps[0].rule == "SCL4"

    def test_independence_payload(self):
        _, data = payload("independence", "--model", "5", "--max-size", "2")
        report = SCHEMAS["independence"].model_validate(data)
        assert report.violated == ["CP5"]
        assert report.axioms["CP5"].lhs == 0
        assert report.axioms["CP5"].rhs == 2

    def test_enumerate_payload(self):
        _, data = payload("enumerate", "--max-size", "4")
        assert data["count"] == 144
        SCHEMAS["enumerate"].model_validate(data)

    @pytest.mark.parametrize(
        "args",
        [
            ["equiv", "--logic", "cr", "a && a", "a"],
            ["tree", "--logic", "mem", "(a || b) && a"],
            ["prove", "--set", "EqSSCL", "a && b", "b && a"],
            ["axioms", "law", "X && X", "X", "--logic", "mem", "--max-size", "2"],
        ],
    )
    def test_output_is_deterministic(self, args):
        assert run(["--json", *args]) == run(["--json", *args])


class TestErrors:
    def test_bad_term_exits_two(self, capsys):
        code, out = run(["parse", "a && (b"])
        assert code == 2
        assert out == ""
        assert capsys.readouterr().err.startswith("scl parse: error: expected ')'")

    def test_bad_term_json(self, capsys):
        code, out = run(["--json", "equiv", "a &&", "a"])
        assert code == 2
        data = json.loads(out)
        assert data["command"] == "equiv"
        assert data["exit_code"] == 2
        SCHEMAS["error"].model_validate(data)

    def test_unknown_logic(self, capsys):
        code, _ = run(["equiv", "--logic", "xx", "a", "a"])
        assert code == 2
        assert "Unknown logic" in capsys.readouterr().err

    def test_unknown_axiom_set(self, capsys):
        code, _ = run(["axioms", "check", "--set", "nope"])
        assert code == 2
        assert "Unknown axiom set" in capsys.readouterr().err

    def test_independence_needs_a_model(self, capsys):
        code, _ = run(["independence"])
        assert code == 2
        assert "--model is required" in capsys.readouterr().err

    def test_usage_error(self, capsys):
        code, out = run(["equiv", "a"])
        assert code == 2
        assert out == ""
        assert "Missing argument" in capsys.readouterr().err

    def test_missing_arguments_with_options(self, capsys):
        code, _ = run(["equiv", "--logic", "mem"])
        assert code == 2
        assert "Missing argument" in capsys.readouterr().err

    def test_unknown_command(self, capsys):
        code, _ = run(["frobnicate"])
        assert code == 2
        assert "frobnicate" in capsys.readouterr().err


class TestSchemaCommand:
    def test_schema(self):
        code, out = run(["schema", "equiv"])
        assert code == 0
        schema = json.loads(out)
        assert set(schema["properties"]) >= {"lhs", "rhs", "logic", "equal", "verdict"}

    def test_aliases_in_schema(self):
        assert "set" in get_schema("soundness")["properties"]

    def test_unknown_schema(self, capsys):
        code, _ = run(["schema", "nope"])
        assert code == 2
        assert "Unknown schema" in capsys.readouterr().err
