"""Pydantic models of the JSON payloads printed by ``scl --json`` and returned by the MCP tools.

Every command payload carries ``command`` and ``exit_code`` when emitted by
the CLI; the tools leave them out.
"""

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

LogicName = Literal["fr", "rp", "cr", "mem", "st"]


class Payload(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    command: Optional[str] = None
    exit_code: Optional[int] = None


class ErrorResult(Payload):
    error: str


class ParseResult(Payload):
    term: str
    size: int = Field(..., ge=1)
    atoms: list[str]
    variables: list[str]
    closed: bool


class TreeStats(BaseModel):
    size: int = Field(..., ge=1)
    depth: int = Field(..., ge=0)
    atoms: list[str]


class TreeResult(Payload):
    term: str
    logic: LogicName
    tree: dict[str, Any]
    stats: TreeStats
    rendered: Optional[str] = None


class EquivResult(Payload):
    lhs: str
    rhs: str
    logic: LogicName
    equal: bool
    verdict: Literal["equal", "not-equal"]


class TraceEntry(BaseModel):
    atom: str
    reply: bool


class EvalResult(Payload):
    term: str
    model: str
    result: bool
    trace: list[TraceEntry]
    final_state: Any


class EquationCheck(Payload):
    equation: str
    text: str
    logic: LogicName
    inst_size: int
    effective_size: int
    bounded: bool
    verdict: Literal["counterexample", "valid_on_tested"]
    instances_checked: int
    binding: Optional[dict[str, str]] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None


class SoundnessReport(Payload):
    set_name: str = Field(..., alias="set")
    logic: LogicName
    atoms: list[str]
    inst_size: int
    equations_checked: int
    passed: int
    failures: list[EquationCheck]
    results: Optional[list[EquationCheck]] = None
    sound: bool
    bounded: bool


class NamedEquation(BaseModel):
    name: str
    equation: str


class AxiomSetDump(Payload):
    set_name: str = Field(..., alias="set")
    logic_home: LogicName
    signature: Literal["scl", "cond"]
    description: str
    equations: list[NamedEquation]
    schemes: list[NamedEquation]
    lemmas: list[NamedEquation]
    alphabet: list[str]
    text: str


class ProofStepModel(BaseModel):
    position: list[int]
    rule: str
    direction: Literal["->", "<-"]
    result: str


class ProofTraceModel(BaseModel):
    lhs: str
    rhs: str
    steps: list[ProofStepModel]


class LemmaCheck(BaseModel):
    name: str
    equation: str
    steps: int
    valid: bool
    error: Optional[str] = None
    trace: Optional[ProofTraceModel] = None


class LemmaReport(Payload):
    set_name: str = Field(..., alias="set")
    lemmas: list[LemmaCheck]
    valid: bool


class ProofResult(Payload):
    status: Literal["proved", "refuted", "exhausted", "bound-exceeded"]
    set_name: str = Field(..., alias="set")
    lhs: str
    rhs: str
    explored: int
    depth: int
    trace: Optional[ProofTraceModel] = None
    verified: Optional[bool] = None
    proof_id: Optional[str] = None
    lines: Optional[list[str]] = None


class AxiomVerdict(BaseModel):
    equation: str
    status: Literal["violated", "satisfied"]
    instances_checked: int
    effective_size: Optional[int] = None
    witness: Optional[dict[str, str]] = None
    lhs: Any = None
    rhs: Any = None


class IndependenceReport(Payload):
    model: int = Field(..., ge=1, le=5)
    domain: str
    set_name: str = Field(..., alias="set")
    inst_size: int
    axioms: dict[str, AxiomVerdict]
    violated: list[str]
    designated: str
    independent: bool


class SymmetricReport(Payload):
    set_name: str = Field(..., alias="set")
    soundness: SoundnessReport
    lemmas: list[LemmaCheck]
    proofs: dict[str, ProofResult]
    equally_strong: bool


class EnumerateResult(Payload):
    atoms: list[str]
    max_size: int
    signature: Literal["scl", "full"]
    count: int
    terms: list[str]


SCHEMAS: dict[str, type[Payload]] = {
    "parse": ParseResult,
    "tree": TreeResult,
    "equiv": EquivResult,
    "eval": EvalResult,
    "soundness": SoundnessReport,
    "law": EquationCheck,
    "dump": AxiomSetDump,
    "lemmas": LemmaReport,
    "proof": ProofResult,
    "independence": IndependenceReport,
    "symmetric": SymmetricReport,
    "enumerate": EnumerateResult,
    "error": ErrorResult,
}


def get_schema(name: str) -> dict:
    """JSON Schema of the payload called ``name``."""
    model = SCHEMAS.get(name)
    if model is None:
        raise ValueError(f"Unknown schema: '{name}'. Supported: {', '.join(SCHEMAS)}")
    return model.model_json_schema(by_alias=True)
