import json

from ..engine import LogicEngine


def handle_configure(
    engine: LogicEngine,
    atoms: list[str] | None = None,
    logic: str | None = None,
    inst_size: int | None = None,
    max_depth: int | None = None,
    max_terms: int | None = None,
    instance_budget: int | None = None,
) -> str:
    try:
        if atoms is not None:
            engine.atoms = atoms
        if logic is not None:
            engine.logic = logic
        if inst_size is not None:
            engine.inst_size = inst_size
        if max_depth is not None:
            engine.max_depth = max_depth
        if max_terms is not None:
            engine.max_terms = max_terms
        if instance_budget is not None:
            engine.instance_budget = instance_budget
    except ValueError as e:
        return json.dumps({"error": str(e)})

    return json.dumps({"status": "ok", **engine.settings()})
