import json

from ..engine import LogicEngine


def handle_equiv(engine: LogicEngine, lhs: str, rhs: str, logic: str | None = None) -> str:
    try:
        result = engine.equiv(lhs, rhs, logic)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    return json.dumps(result)
