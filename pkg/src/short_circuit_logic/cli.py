"""The ``scl`` command line.

Exit codes: 0 for success or a true verdict, 1 for a false verdict,
counterexample or missing proof, 2 for usage and input errors.
"""

import functools
import io
import json
import logging
import sys
from contextlib import redirect_stdout
from dataclasses import dataclass
from typing import Annotated, Any, Callable, Optional

import typer

from .engine import LogicEngine
from .schemas import get_schema

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="scl",
    help="Short-circuit logic: evaluation trees, valuation congruences, axioms and proofs.",
    no_args_is_help=True,
    add_completion=False,
)
axioms_app = typer.Typer(help="Check, list and use axiom sets.", no_args_is_help=True)
app.add_typer(axioms_app, name="axioms")

JsonOption = Annotated[bool, typer.Option("--json", help="Print a machine-readable JSON payload.")]
LogicOption = Annotated[Optional[str], typer.Option("--logic", "-l", help="fr, rp, cr, mem or st.")]
AtomsOption = Annotated[Optional[str], typer.Option("--atoms", help="Comma-separated atoms, e.g. a,b.")]
SetOption = Annotated[str, typer.Option("--set", "-s", help="Axiom set name, e.g. EqMSCL or CPstat*.")]


@dataclass
class _Options:
    json_output: bool = False
    verbose: bool = False


@app.callback()
def _main(
    ctx: typer.Context,
    json_output: JsonOption = False,
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log progress to stderr.")] = False,
) -> None:
    ctx.obj = _Options(json_output, verbose)
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, stream=sys.stderr, force=True)


def _wants_json(ctx: Optional[typer.Context], local: bool) -> bool:
    root = ctx.find_root().obj if ctx is not None else None
    return local or (isinstance(root, _Options) and root.json_output)


def _atoms(text: Optional[str]) -> Optional[list[str]]:
    if text is None:
        return None
    return [a.strip() for a in text.split(",") if a.strip()]


def _emit(ctx: typer.Context, command: str, exit_code: int, payload: dict, text: str, json_output: bool) -> None:
    if _wants_json(ctx, json_output):
        typer.echo(json.dumps({**payload, "command": command, "exit_code": exit_code}, sort_keys=True, indent=2))
    else:
        typer.echo(text)
    raise typer.Exit(exit_code)


def _command(name: str) -> Callable:
    """Turn ValueError raised by a command into exit code 2 with a diagnostic."""

    def decorate(fn: Callable) -> Callable:
        @functools.wraps(fn)
        def wrapper(*args: Any, **kwargs: Any) -> None:
            try:
                fn(*args, **kwargs)
            except ValueError as e:
                typer.echo(f"scl {name}: error: {e}", err=True)
                if _wants_json(kwargs.get("ctx"), kwargs.get("json_output", False)):
                    typer.echo(json.dumps({"command": name, "error": str(e), "exit_code": 2}, sort_keys=True, indent=2))
                raise typer.Exit(2) from e

        return wrapper

    return decorate


def _engine(atoms: Optional[str] = None) -> LogicEngine:
    parsed = _atoms(atoms)
    return LogicEngine(atoms=parsed) if parsed else LogicEngine()


@app.command("parse")
@_command("parse")
def parse_command(ctx: typer.Context, term: str, json_output: JsonOption = False) -> None:
    """Parse a term and print it in canonical form."""
    result = _engine().parse(term)
    _emit(ctx, "parse", 0, result, result["term"], json_output)


@app.command("tree")
@_command("tree")
def tree_command(ctx: typer.Context, term: str, logic: LogicOption = None, json_output: JsonOption = False) -> None:
    """Print the evaluation tree of a closed term, normalized for a logic."""
    result = _engine().tree(term, logic)
    _emit(ctx, "tree", 0, result, result["rendered"], json_output)


@app.command("equiv")
@_command("equiv")
def equiv_command(ctx: typer.Context, lhs: str, rhs: str, logic: LogicOption = None, json_output: JsonOption = False) -> None:
    """Decide whether two closed terms are equal under a logic."""
    result = _engine().equiv(lhs, rhs, logic)
    _emit(ctx, "equiv", 0 if result["equal"] else 1, result, result["verdict"], json_output)


@app.command("eval")
@_command("eval")
def eval_command(
    ctx: typer.Context,
    term: str,
    model: Annotated[str, typer.Option("--model", "-m", help="counter:0, registers:2:FT, static:a=T,b=F, automaton:<file>.")],
    trace: Annotated[bool, typer.Option("--trace", help="Also print every atom evaluated and its reply.")] = False,
    json_output: JsonOption = False,
) -> None:
    """Evaluate a closed term under a stateful model."""
    result = _engine().evaluate(term, model)
    lines = ["true" if result["result"] else "false"]
    if trace:
        lines += [f"  {step['atom']} -> {'T' if step['reply'] else 'F'}" for step in result["trace"]]
        lines.append(f"  final state: {json.dumps(result['final_state'], sort_keys=True)}")
    _emit(ctx, "eval", 0 if result["result"] else 1, result, "\n".join(lines), json_output)


@axioms_app.command("check")
@_command("axioms check")
def axioms_check_command(
    ctx: typer.Context,
    set_name: SetOption,
    logic: LogicOption = None,
    atoms: AtomsOption = None,
    max_size: Annotated[int, typer.Option("--max-size", help="Largest instance term size.")] = 3,
    json_output: JsonOption = False,
) -> None:
    """Check that every axiom of a set holds on closed instances up to a size."""
    result = _engine().check_axioms(set_name, logic, _atoms(atoms), max_size)
    lines = []
    for r in result["results"]:
        if r["verdict"] == "counterexample":
            binding = ", ".join(f"{v}={t}" for v, t in r["binding"].items())
            lines.append(f"{r['equation']}: counterexample {binding}: {r['lhs']} != {r['rhs']}")
        else:
            lines.append(f"{r['equation']}: ok ({r['instances_checked']} instances, size {r['effective_size']})")
    lines.append(
        f"{result['set']} under {result['logic']}: {result['passed']}/{result['equations_checked']} passed "
        f"(bounded check, instances up to size {result['inst_size']})"
    )
    _emit(ctx, "axioms check", 0 if result["sound"] else 1, result, "\n".join(lines), json_output)


@axioms_app.command("dump")
@_command("axioms dump")
def axioms_dump_command(ctx: typer.Context, set_name: SetOption, json_output: JsonOption = False) -> None:
    """Print the equations and schemes of a set in equation-file format."""
    result = _engine().dump_axioms(set_name)
    _emit(ctx, "axioms dump", 0, result, result["text"].rstrip("\n"), json_output)


@axioms_app.command("lemmas")
@_command("axioms lemmas")
def axioms_lemmas_command(ctx: typer.Context, set_name: SetOption, json_output: JsonOption = False) -> None:
    """Replay the derivation of every lemma shipped with a set."""
    result = _engine().lemmas(set_name)
    lines = [
        f"{r['name']}: ok ({r['steps']} steps)" if r["valid"] else f"{r['name']}: FAILED: {r['error']}"
        for r in result["lemmas"]
    ]
    if not lines:
        lines = [f"{result['set']} has no lemmas"]
    _emit(ctx, "axioms lemmas", 0 if result["valid"] else 1, result, "\n".join(lines), json_output)


@axioms_app.command("law")
@_command("axioms law")
def axioms_law_command(
    ctx: typer.Context,
    lhs: str,
    rhs: str,
    logic: LogicOption = None,
    atoms: AtomsOption = None,
    max_size: Annotated[int, typer.Option("--max-size", help="Largest instance term size.")] = 4,
    json_output: JsonOption = False,
) -> None:
    """Test an equation with variables on all closed instances up to a size."""
    result = _engine(atoms).check_law(lhs, rhs, logic, max_size)
    if result["verdict"] == "counterexample":
        binding = ", ".join(f"{v}={t}" for v, t in result["binding"].items())
        text = f"counterexample {binding}: {result['lhs']} != {result['rhs']}"
    else:
        text = f"valid on tested instances ({result['instances_checked']}, size {result['effective_size']})"
    _emit(ctx, "axioms law", 0 if result["verdict"] == "valid_on_tested" else 1, result, text, json_output)


@app.command("prove")
@_command("prove")
def prove_command(
    ctx: typer.Context,
    lhs: str,
    rhs: str,
    set_name: SetOption,
    depth: Annotated[int, typer.Option("--depth", "-d", help="Maximum proof length.")] = 12,
    max_terms: Annotated[int, typer.Option("--max-terms", help="Maximum number of terms visited.")] = 200_000,
    creative: Annotated[int, typer.Option("--creative", help="Term-growing steps allowed per direction.")] = 0,
    json_output: JsonOption = False,
) -> None:
    """Search for an equational proof of LHS = RHS from an axiom set."""
    engine = _engine()
    engine.max_terms = max_terms
    result = engine.prove(lhs, rhs, set_name, depth, creative)
    # proof ids are random
    result.pop("proof_id")
    proved = result["status"] == "proved" and bool(result["verified"])
    lines = [f"{result['status']} ({result['explored']} terms explored)"]
    lines += result.get("lines", [])
    _emit(ctx, "prove", 0 if proved else 1, result, "\n".join(lines), json_output)


@app.command("independence")
@_command("independence")
def independence_command(
    ctx: typer.Context,
    model: Annotated[Optional[int], typer.Option("--model", "-m", help="Independence model 1-5.")] = None,
    set_name: Annotated[Optional[str], typer.Option("--set", "-s", help="Axiom set, default CPstat*.")] = None,
    max_size: Annotated[int, typer.Option("--max-size", help="Largest instance term size.")] = 3,
    swapped: Annotated[bool, typer.Option("--swapped", help="Check the variant with CP3* and CP5 exchanged.")] = False,
    json_output: JsonOption = False,
) -> None:
    """Show that a model violates exactly its designated axiom of CPstat*."""
    engine = _engine()
    if swapped:
        result = engine.symmetric_check(max_size)
        lines = [f"{result['set']}: soundness {'ok' if result['soundness']['sound'] else 'FAILED'}"]
        lines += [f"{name}: {p['status']}" for name, p in result["proofs"].items()]
        lines.append("equally strong" if result["equally_strong"] else "NOT shown equally strong")
        _emit(ctx, "independence", 0 if result["equally_strong"] else 1, result, "\n".join(lines), json_output)
    if model is None:
        raise ValueError("--model is required unless --swapped is given")
    result = engine.independence(model, set_name, max_size)
    lines = []
    for name, entry in result["axioms"].items():
        if entry["status"] == "violated":
            witness = ", ".join(f"{v}={t}" for v, t in entry["witness"].items())
            lines.append(f"{name}: violated by {witness} ({entry['lhs']} vs {entry['rhs']})")
        else:
            lines.append(f"{name}: holds ({entry['instances_checked']} instances)")
    lines.append(f"model {model}: {'independent' if result['independent'] else 'NOT independent'}")
    _emit(ctx, "independence", 0 if result["independent"] else 1, result, "\n".join(lines), json_output)


@app.command("enumerate")
@_command("enumerate")
def enumerate_command(
    ctx: typer.Context,
    max_size: Annotated[int, typer.Option("--max-size", help="Largest term size.")],
    atoms: AtomsOption = "a,b",
    signature: Annotated[str, typer.Option("--signature", help="scl or full.")] = "scl",
    json_output: JsonOption = False,
) -> None:
    """List every closed term up to a size in a fixed order."""
    result = _engine().enumerate(max_size, _atoms(atoms), signature)
    _emit(ctx, "enumerate", 0, result, "\n".join(result["terms"]), json_output)


@app.command("schema")
@_command("schema")
def schema_command(name: str) -> None:
    """Print the JSON Schema of a payload (parse, tree, equiv, eval, soundness, ...)."""
    typer.echo(json.dumps(get_schema(name), sort_keys=True, indent=2))


def run(argv: list[str]) -> tuple[int, str]:
    """Run ``scl`` in-process and return its exit code and standard output.

    Usage errors are reported on stderr with exit code 2, as on the shell.
    """
    command = typer.main.get_command(app)
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        try:
            command.main(args=list(argv), prog_name="scl")
            code = 0
        except SystemExit as e:
            code = e.code if isinstance(e.code, int) else (0 if e.code is None else 1)
    return code, buffer.getvalue()


def main() -> None:
    app(prog_name="scl")
