import json
import logging

from ..engine import LogicEngine

logger = logging.getLogger(__name__)


def handle_prove(
    engine: LogicEngine,
    lhs: str,
    rhs: str,
    set_name: str,
    max_depth: int | None = None,
    creative: int = 0,
) -> str:
    try:
        result = engine.prove(lhs, rhs, set_name, max_depth, creative)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    except Exception as e:
        logger.exception("proof search failed")
        return json.dumps({"error": f"Proof search failed: {e}"})
    return json.dumps(result)


def handle_verify_proof(
    engine: LogicEngine,
    proof_id: str | None = None,
    trace: dict | None = None,
    set_name: str | None = None,
) -> str:
    try:
        result = engine.verify_proof(proof_id, trace, set_name)
    except ValueError as e:
        return json.dumps({"error": str(e)})
    return json.dumps(result)
