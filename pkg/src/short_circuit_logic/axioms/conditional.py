"""Axioms for proposition algebra: conditional composition only."""

from ..trees import Logic
from .base import AxiomSet
from .lemmas import SWAPPED_STATIC_LEMMAS

CP_TEXT = """\
CP1 : ite(T, X, Y) = X
CP2 : ite(F, X, Y) = Y
CP3 : ite(X, T, F) = X
CP4 : ite(ite(Z, Y, U), X, V) = ite(Z, ite(Y, X, V), ite(U, X, V))
"""

CP_RP_TEXT = """\
CPrp1 @scheme : ite(a, ite(a, X, Y), Z) = ite(a, ite(a, X, X), Z)
CPrp2 @scheme : ite(a, X, ite(a, Y, Z)) = ite(a, X, ite(a, Z, Z))
"""

CP_CR_TEXT = """\
CPcr1 @scheme : ite(a, ite(a, X, Y), Z) = ite(a, X, Z)
CPcr2 @scheme : ite(a, X, ite(a, Y, Z)) = ite(a, X, Z)
"""

CP_MEM_TEXT = """\
CPmem : ite(Y, X, ite(U, Z, ite(Y, V, W))) = ite(Y, X, ite(U, Z, W))
"""

CP_STAT_TEXT = """\
CPstat : ite(U, ite(Y, X, Z), V) = ite(Y, ite(U, X, V), ite(U, Z, V))
contraction : ite(Y, X, ite(Y, V, W)) = ite(Y, X, W)
"""

CP_STAT_STAR_TEXT = """\
CP1 : ite(T, X, Y) = X
CP2 : ite(F, X, Y) = Y
CP3* : ite(X, T, Y) = ite(Y, T, X)
CP4 : ite(ite(Z, Y, U), X, V) = ite(Z, ite(Y, X, V), ite(U, X, V))
CP5 : ite(Y, ite(Y, X, Z), F) = ite(Y, X, F)
"""

CP_STAT_SWAPPED_TEXT = """\
CP1 : ite(T, X, Y) = X
CP2 : ite(F, X, Y) = Y
CP3*-sym : ite(Y, X, F) = ite(X, Y, F)
CP4 : ite(ite(Z, Y, U), X, V) = ite(Z, ite(Y, X, V), ite(U, X, V))
CP5-sym : ite(X, T, ite(X, Y, Z)) = ite(X, T, Z)
"""


def create_conditional_sets() -> list[AxiomSet]:
    cp = AxiomSet.from_text(
        "CP", CP_TEXT, logic_home=Logic.FR, signature="cond", description="free proposition algebra"
    )
    return [
        cp,
        cp.extend("CPrp", CP_RP_TEXT, logic_home=Logic.RP, description="repetition-proof proposition algebra"),
        cp.extend("CPcr", CP_CR_TEXT, logic_home=Logic.CR, description="contractive proposition algebra"),
        cp.extend("CPmem", CP_MEM_TEXT, logic_home=Logic.MEM, description="memorizing proposition algebra"),
        cp.extend("CPstat", CP_STAT_TEXT, logic_home=Logic.ST, description="static proposition algebra"),
        AxiomSet.from_text(
            "CPstat*",
            CP_STAT_STAR_TEXT,
            logic_home=Logic.ST,
            signature="cond",
            description="independent axioms for static proposition algebra",
        ),
        AxiomSet.from_text(
            "CPstat*-swapped",
            CP_STAT_SWAPPED_TEXT,
            logic_home=Logic.ST,
            signature="cond",
            lemmas=SWAPPED_STATIC_LEMMAS,
            description="CPstat* with CP3* and CP5 exchanged for their symmetric forms",
        ),
    ]
