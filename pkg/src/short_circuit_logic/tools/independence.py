import json

from ..engine import LogicEngine


def handle_independence(
    engine: LogicEngine,
    model: int,
    set_name: str | None = None,
    inst_size: int | None = None,
) -> str:
    try:
        result = engine.independence(model, set_name, inst_size)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    return json.dumps(result)


def handle_symmetric_check(engine: LogicEngine, inst_size: int | None = None) -> str:
    try:
        result = engine.symmetric_check(inst_size)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    result["soundness"].pop("results")
    return json.dumps(result)
