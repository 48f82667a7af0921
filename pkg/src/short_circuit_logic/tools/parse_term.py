import json

from ..engine import LogicEngine


def handle_parse_term(engine: LogicEngine, term: str) -> str:
    try:
        result = engine.parse(term)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    return json.dumps(result)
