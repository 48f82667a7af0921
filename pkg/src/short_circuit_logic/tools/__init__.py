from .parse_term import handle_parse_term
from .tree import handle_tree
from .equiv import handle_equiv
from .evaluate import handle_evaluate
from .axioms import handle_check_axioms, handle_check_law, handle_dump_axioms, handle_verify_lemmas
from .prove import handle_prove, handle_verify_proof
from .independence import handle_independence, handle_symmetric_check
from .enumerate_terms import handle_enumerate_terms
from .configure import handle_configure

__all__ = [
    "handle_parse_term",
    "handle_tree",
    "handle_equiv",
    "handle_evaluate",
    "handle_check_axioms",
    "handle_dump_axioms",
    "handle_verify_lemmas",
    "handle_check_law",
    "handle_prove",
    "handle_verify_proof",
    "handle_independence",
    "handle_symmetric_check",
    "handle_enumerate_terms",
    "handle_configure",
]
