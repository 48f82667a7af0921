import json

from ..engine import LogicEngine


def handle_enumerate_terms(
    engine: LogicEngine,
    max_size: int,
    atoms: list[str] | None = None,
    signature: str = "scl",
) -> str:
    try:
        result = engine.enumerate(max_size, atoms, signature)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    return json.dumps(result)
