import json

from ..engine import LogicEngine


def handle_evaluate(engine: LogicEngine, term: str, model: str) -> str:
    try:
        result = engine.evaluate(term, model)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    return json.dumps(result)
