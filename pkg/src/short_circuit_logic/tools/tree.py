import json

from ..engine import LogicEngine


def handle_tree(engine: LogicEngine, term: str, logic: str | None = None) -> str:
    try:
        result = engine.tree(term, logic)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    result.pop("rendered")
    return json.dumps(result)
