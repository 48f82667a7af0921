import logging
import os
from collections.abc import Mapping

from mcp.server.fastmcp import FastMCP

from .engine import LogicEngine

logging.basicConfig(level=os.environ.get("SCL_LOG_LEVEL", "INFO").upper())
logger = logging.getLogger(__name__)

mcp = FastMCP("short-circuit-logic")
engine = LogicEngine()


@mcp.tool()
def parse_term(term: str) -> str:
    """Parse a term and return its canonical rendering, size, atoms and variables.

    Args:
        term: Term in the concrete syntax, e.g. "(a && !b) || ite(a, T, F)".
              Atoms are lowercase or single-quoted ('x=x+1'), variables uppercase.
    """
    from .tools.parse_term import handle_parse_term
    return handle_parse_term(engine, term=term)


@mcp.tool()
def tree(term: str, logic: str | None = None) -> str:
    """Evaluation tree of a closed term, normalized for a valuation congruence.

    Args:
        term: Closed term to evaluate.
        logic: One of fr, rp, cr, mem, st. Defaults to the configured logic.
    """
    from .tools.tree import handle_tree
    return handle_tree(engine, term=term, logic=logic)


@mcp.tool()
def equiv(lhs: str, rhs: str, logic: str | None = None) -> str:
    """Decide whether two closed terms are equal under a valuation congruence.

    Args:
        lhs: First closed term.
        rhs: Second closed term.
        logic: One of fr, rp, cr, mem, st. Defaults to the configured logic.
    """
    from .tools.equiv import handle_equiv
    return handle_equiv(engine, lhs=lhs, rhs=rhs, logic=logic)


@mcp.tool()
def evaluate(term: str, model: str) -> str:
    """Evaluate a closed term under a stateful model, returning result and atom trace.

    Args:
        term: Closed term to evaluate.
        model: Model spec: "counter:0", "registers:2:FT", "static:a=T,b=F"
               or "automaton:/path/to/automaton.json".
    """
    from .tools.evaluate import handle_evaluate
    return handle_evaluate(engine, term=term, model=model)


@mcp.tool()
def check_axioms(
    set_name: str,
    logic: str | None = None,
    atoms: list[str] | None = None,
    inst_size: int | None = None,
) -> str:
    """Check every axiom of a set on all closed instances up to a size.

    Args:
        set_name: Axiom set, e.g. "EqMSCL", "CPstat*", "CSCL".
        logic: Logic to check against. Defaults to the set's own logic.
        atoms: Atoms used for instances. Defaults to the configured atoms.
        inst_size: Largest instance term size (1-5).
    """
    from .tools.axioms import handle_check_axioms
    return handle_check_axioms(engine, set_name=set_name, logic=logic, atoms=atoms, inst_size=inst_size)


@mcp.tool()
def dump_axioms(set_name: str) -> str:
    """List the equations, schemes and lemmas of an axiom set.

    Args:
        set_name: Axiom set name.
    """
    from .tools.axioms import handle_dump_axioms
    return handle_dump_axioms(engine, set_name=set_name)


@mcp.tool()
def verify_lemmas(set_name: str) -> str:
    """Replay the shipped derivation of every lemma of an axiom set.

    Args:
        set_name: Axiom set name.
    """
    from .tools.axioms import handle_verify_lemmas
    return handle_verify_lemmas(engine, set_name=set_name)


@mcp.tool()
def check_law(lhs: str, rhs: str, logic: str | None = None, inst_size: int | None = None) -> str:
    """Test an equation with variables on all closed instances up to a size.

    The verdict is bounded: "valid_on_tested" is not a proof.

    Args:
        lhs: Left-hand side, e.g. "X && F".
        rhs: Right-hand side, e.g. "!X && F".
        logic: One of fr, rp, cr, mem, st. Defaults to the configured logic.
        inst_size: Largest instance term size (1-5).
    """
    from .tools.axioms import handle_check_law
    return handle_check_law(engine, lhs=lhs, rhs=rhs, logic=logic, inst_size=inst_size)


@mcp.tool()
def prove(lhs: str, rhs: str, set_name: str, max_depth: int | None = None, creative: int = 0) -> str:
    """Search for an equational proof of lhs = rhs from an axiom set.

    Returns a step-by-step trace and a proof_id for verify_proof when found.

    Args:
        lhs: Closed term.
        rhs: Closed term.
        set_name: Axiom set to rewrite with.
        max_depth: Maximum proof length (1-40). Defaults to the configured depth.
        creative: Number of term-growing steps allowed per search direction.
    """
    from .tools.prove import handle_prove
    return handle_prove(engine, lhs=lhs, rhs=rhs, set_name=set_name, max_depth=max_depth, creative=creative)


@mcp.tool()
def verify_proof(proof_id: str | None = None, trace: dict | None = None, set_name: str | None = None) -> str:
    """Check a proof trace step by step.

    Args:
        proof_id: ID returned by the prove tool.
        trace: Alternatively, a trace as JSON: {"lhs", "rhs", "steps": [{"position", "rule", "direction", "result"}]}.
        set_name: Axiom set to check against. Required with trace.
    """
    from .tools.prove import handle_verify_proof
    return handle_verify_proof(engine, proof_id=proof_id, trace=trace, set_name=set_name)


@mcp.tool()
def independence(model: int, set_name: str | None = None, inst_size: int | None = None) -> str:
    """Report which axioms of CPstat* hold in one of the five independence models.

    Args:
        model: Model number 1-5; model i violates exactly axiom i.
        set_name: Check another conditional-only axiom set instead of CPstat*.
        inst_size: Largest instance term size (1-5).
    """
    from .tools.independence import handle_independence
    return handle_independence(engine, model=model, set_name=set_name, inst_size=inst_size)


@mcp.tool()
def symmetric_check(inst_size: int | None = None) -> str:
    """Check that CPstat* with CP3* and CP5 exchanged for their symmetric forms is equally strong.

    Args:
        inst_size: Largest instance term size for the soundness part (1-5).
    """
    from .tools.independence import handle_symmetric_check
    return handle_symmetric_check(engine, inst_size=inst_size)


@mcp.tool()
def enumerate_terms(max_size: int, atoms: list[str] | None = None, signature: str = "scl") -> str:
    """List every closed term up to a size in a fixed order.

    Args:
        max_size: Largest term size (1-5).
        atoms: Atoms to build terms from. Defaults to the configured atoms.
        signature: "scl" (T, F, atoms, !, &&, ||) or "full" (adds ite).
    """
    from .tools.enumerate_terms import handle_enumerate_terms
    return handle_enumerate_terms(engine, max_size=max_size, atoms=atoms, signature=signature)


@mcp.tool()
def configure(
    atoms: list[str] | None = None,
    logic: str | None = None,
    inst_size: int | None = None,
    max_depth: int | None = None,
    max_terms: int | None = None,
    instance_budget: int | None = None,
) -> str:
    """Configure the engine at runtime and return the active settings.

    Args:
        atoms: Atom alphabet for instances and scheme expansion, e.g. ["a", "b"].
        logic: Default logic: fr, rp, cr, mem or st.
        inst_size: Default instance size for soundness checks (1-5).
        max_depth: Default proof search depth (1-40).
        max_terms: Maximum number of terms a proof search may visit.
        instance_budget: Maximum instances per equation before the size is reduced.
    """
    from .tools.configure import handle_configure
    return handle_configure(
        engine,
        atoms=atoms,
        logic=logic,
        inst_size=inst_size,
        max_depth=max_depth,
        max_terms=max_terms,
        instance_budget=instance_budget,
    )


def configure_from_env(environ: Mapping[str, str] = os.environ) -> dict:
    """Apply ``SCL_ATOMS`` (comma-separated) and ``SCL_LOGIC`` to the shared engine."""
    atoms = [a.strip() for a in environ.get("SCL_ATOMS", "").split(",") if a.strip()]
    if atoms:
        engine.atoms = atoms
    if environ.get("SCL_LOGIC"):
        engine.logic = environ["SCL_LOGIC"]
    settings = engine.settings()
    logger.info("engine: atoms=%s logic=%s", ",".join(settings["atoms"]), settings["logic"])
    return settings


def main():
    configure_from_env()
    mcp.run(transport="stdio")
