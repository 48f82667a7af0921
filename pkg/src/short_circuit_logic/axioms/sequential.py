"""Equations for short-circuit logics over the sequential connectives."""

from ..trees import Logic
from .base import AxiomSet
from .lemmas import FREE_LEMMAS, MEMORIZING_LEMMAS, STATIC_LEMMAS

FSCL_TEXT = """\
SCL1 : F = !T
SCL2 : X || Y = !(!X && !Y)
SCL3 : !!X = X
SCL4 : T && X = X
SCL5 : X && T = X
SCL6 : F && X = F
SCL7 : (X && Y) && Z = X && (Y && Z)
SCL8 : (X || Y) && (Z && F) = (!X || (Z && F)) && (Y && (Z && F))
SCL9 : (X || Y) && (Z || T) = (X && (Z || T)) || (Y && (Z || T))
SCL10 : ((X && F) || Y) && Z = (X && F) || (Y && Z)
"""

MSCL_TEXT = """\
SCL1 : F = !T
SCL2 : X || Y = !(!X && !Y)
SCL3 : !!X = X
SCL4 : T && X = X
SCL5 : X && T = X
SCL6 : F && X = F
SCL7 : (X && Y) && Z = X && (Y && Z)
SCL8* : X && F = !X && F
MSCL1 : X && (X || Y) = X
MSCL2 : X && (Y || Z) = (X && Y) || (X && Z)
MSCL3 : (X || Y) && (!X || Z) = (!X || Z) && (X || Y)
MSCL4 : ((X && Y) || (!X && Z)) && U = (X || (Z && U)) && (!X || (Y && U))
"""

SSCL_TEXT = """\
SSCL1 : X && F = F
"""

CSCL_TEXT = """\
CSCL1 @scheme : a && (a || X) = a
CSCL2 @scheme : a || (a && X) = a
CSCL3 @scheme : a || !a = a || T
CSCL4 @scheme : a && !a = a && F
"""

RPSCL_TEXT = """\
rp1 @scheme : a && (a || X) = a && (a || Y)
rp2 @scheme : a || (a && X) = a || (a && Y)
rp3 @scheme : (a || !a) && X = (!a && a) || X
rp4 @scheme : (!a || a) && X = (a && !a) || X
rp5 @scheme : (a && !a) && X = a && !a
rp6 @scheme : (!a && a) && X = !a && a
rp7 @scheme : (X || Y) && (a && !a) = (!X || (a && !a)) && (Y && (a && !a))
rp8 @scheme : (X || Y) && (!a && a) = (!X || (!a && a)) && (Y && (!a && a))
rp9 @scheme : (X || Y) && (a || !a) = (X && (a || !a)) || (Y && (a || !a))
rp10 @scheme : (X || Y) && (!a || a) = (X && (!a || a)) || (Y && (!a || a))
rp11 @scheme : ((a && !a) || Y) && Z = (a && !a) || (Y && Z)
rp12 @scheme : ((!a && a) || Y) && Z = (!a && a) || (Y && Z)
"""


def create_sequential_sets() -> list[AxiomSet]:
    fscl = AxiomSet.from_text(
        "EqFSCL",
        FSCL_TEXT,
        logic_home=Logic.FR,
        lemmas=FREE_LEMMAS,
        description="free short-circuit logic",
    )
    mscl = AxiomSet.from_text(
        "EqMSCL",
        MSCL_TEXT,
        logic_home=Logic.MEM,
        lemmas=MEMORIZING_LEMMAS,
        description="memorizing short-circuit logic",
    )
    return [
        fscl,
        mscl,
        mscl.extend(
            "EqSSCL",
            SSCL_TEXT,
            logic_home=Logic.ST,
            lemmas=MEMORIZING_LEMMAS + STATIC_LEMMAS,
            description="static short-circuit logic",
        ),
        fscl.extend("CSCL", CSCL_TEXT, logic_home=Logic.CR, description="contractive short-circuit logic"),
        fscl.extend("RPSCL", RPSCL_TEXT, logic_home=Logic.RP, description="repetition-proof short-circuit logic"),
    ]
