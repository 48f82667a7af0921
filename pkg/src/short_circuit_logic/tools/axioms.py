import json
import logging

from ..engine import LogicEngine

logger = logging.getLogger(__name__)


def handle_check_axioms(
    engine: LogicEngine,
    set_name: str,
    logic: str | None = None,
    atoms: list[str] | None = None,
    inst_size: int | None = None,
) -> str:
    try:
        result = engine.check_axioms(set_name, logic, atoms, inst_size)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    if not result["sound"]:
        logger.warning("%s is not sound for %s", result["set"], result["logic"])
    result.pop("results")
    return json.dumps(result)


def handle_dump_axioms(engine: LogicEngine, set_name: str) -> str:
    try:
        result = engine.dump_axioms(set_name)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    return json.dumps(result)


def handle_verify_lemmas(engine: LogicEngine, set_name: str) -> str:
    try:
        result = engine.lemmas(set_name)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    return json.dumps(result)


def handle_check_law(
    engine: LogicEngine,
    lhs: str,
    rhs: str,
    logic: str | None = None,
    inst_size: int | None = None,
) -> str:
    try:
        result = engine.check_law(lhs, rhs, logic, inst_size)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    return json.dumps(result)
