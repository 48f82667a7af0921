"""Derived equations shipped with their derivations.

Each derivation may use the equations of its set, their duals and the
lemmas listed before it. A primed rule name denotes the dual equation.
"""

from .base import Lemma

FREE_LEMMAS = (
    Lemma.of(
        "SCL8*",
        "X && F",
        "!X && F",
        [
            ("SCL5'", "(X || F) && F"),
            ("SCL6", "(X || F) && (F && F)"),
            ("SCL8", "(!X || (F && F)) && (F && (F && F))"),
            ("SCL6", "(!X || (F && F)) && F"),
            ("SCL6", "(!X || F) && F"),
            ("SCL5'", "!X && F"),
        ],
    ),
)

MEMORIZING_LEMMAS = (
    Lemma.of(
        "switch",
        "(X && Y) || (!X && Z)",
        "(X || Z) && (!X || Y)",
        [
            ("SCL5", "((X && Y) || (!X && Z)) && T"),
            ("MSCL4", "(X || (Z && T)) && (!X || (Y && T))"),
            ("SCL5", "(X || Z) && (!X || (Y && T))"),
            ("SCL5", "(X || Z) && (!X || Y)"),
        ],
    ),
    Lemma.of(
        "and-not-self",
        "X && !X",
        "X && F",
        [
            ("SCL5'", "(X || F) && !X"),
            ("SCL5'", "(X || F) && (!X || F)"),
            ("switch", "(X && F) || (!X && F)"),
            ("SCL8*", "(X && F) || (X && F)"),
            ("SCL5", "(X && F) || ((X && F) && T)"),
            ("MSCL1'", "X && F"),
        ],
    ),
    Lemma.of(
        "guard",
        "X && Y",
        "X && (!X || Y)",
        [
            ("SCL4'", "X && (F || Y)"),
            ("MSCL2", "(X && F) || (X && Y)"),
            ("and-not-self", "(X && !X) || (X && Y)"),
            ("MSCL2", "X && (!X || Y)"),
        ],
    ),
    Lemma.of(
        "or-expansion",
        "(X && Y) || Z",
        "(X && (Y || Z)) || (!X && Z)",
        [
            ("guard", "(X && (!X || Y)) || Z"),
            ("SCL5'", "((X || F) && (!X || Y)) || Z"),
            ("MSCL4'", "(X && (Y || Z)) || (!X && (F || Z))"),
            ("SCL4'", "(X && (Y || Z)) || (!X && Z)"),
        ],
    ),
    Lemma.of(
        "contradiction-split",
        "(X && !X) || U",
        "(X || U) && (!X || U)",
        [
            ("or-expansion", "(X && (!X || U)) || (!X && U)"),
            ("guard", "(X && U) || (!X && U)"),
            ("switch", "(X || U) && (!X || U)"),
        ],
    ),
    Lemma.of(
        "idempotence",
        "X && X",
        "X",
        [
            ("SCL5'", "X && (X || F)"),
            ("MSCL1", "X"),
        ],
    ),
    Lemma.of(
        "not-self-swap",
        "X && !X",
        "!X && X",
        [
            ("and-not-self", "X && F"),
            ("SCL8*", "!X && F"),
            ("and-not-self", "!X && !!X"),
            ("SCL3", "!X && X"),
        ],
    ),
    Lemma.of(
        "guard-swap",
        "X && (!X || Z)",
        "(!X || Z) && X",
        [
            ("SCL5'", "(X || F) && (!X || Z)"),
            ("MSCL3", "(!X || Z) && (X || F)"),
            ("SCL5'", "(!X || Z) && X"),
        ],
    ),
    Lemma.of(
        "guarded-collapse",
        "X && (Y || ((X && Z) || (!X && U)))",
        "X && (Y || Z)",
        [
            ("MSCL2", "(X && Y) || (X && ((X && Z) || (!X && U)))"),
            ("MSCL2", "(X && Y) || ((X && (X && Z)) || (X && (!X && U)))"),
            ("SCL7", "(X && Y) || (((X && X) && Z) || (X && (!X && U)))"),
            ("idempotence", "(X && Y) || ((X && Z) || (X && (!X && U)))"),
            ("SCL7", "(X && Y) || ((X && Z) || ((X && !X) && U))"),
            ("not-self-swap", "(X && Y) || ((X && Z) || ((!X && X) && U))"),
            ("SCL7", "(X && Y) || ((X && Z) || (!X && (X && U)))"),
            ("switch", "(X && Y) || ((X || (X && U)) && (!X || Z))"),
            ("MSCL1'", "(X && Y) || (X && (!X || Z))"),
            ("guard", "(X && Y) || (X && Z)"),
            ("MSCL2", "X && (Y || Z)"),
        ],
    ),
    Lemma.of(
        "memory",
        "X && (Y && X)",
        "X && Y",
        [
            ("guard", "X && (Y && (!Y || X))"),
            ("guard-swap", "X && ((!Y || X) && Y)"),
            ("SCL7", "(X && (!Y || X)) && Y"),
            ("SCL5'", "(X && (!Y || (X || F))) && Y"),
            ("guard'", "(X && (!Y || (X || (!X && F)))) && Y"),
            ("SCL5", "(X && (!Y || ((X && T) || (!X && F)))) && Y"),
            ("guarded-collapse", "(X && (!Y || T)) && Y"),
            ("SCL7", "X && ((!Y || T) && Y)"),
            ("guard-swap", "X && (Y && (!Y || T))"),
            ("guard", "X && (Y && T)"),
            ("SCL5", "X && Y"),
        ],
    ),
)

STATIC_LEMMAS = (
    Lemma.of(
        "and-not-self-false",
        "X && !X",
        "F",
        [
            ("and-not-self", "X && F"),
            ("SSCL1", "F"),
        ],
    ),
    Lemma.of(
        "contra-tail",
        "!X && (Y && X)",
        "F",
        [
            ("memory", "!X && ((Y && X) && !X)"),
            ("SCL7", "!X && (Y && (X && !X))"),
            ("and-not-self-false", "!X && (Y && F)"),
            ("SSCL1", "!X && F"),
            ("SSCL1", "F"),
        ],
    ),
    Lemma.of(
        "commutativity",
        "X && Y",
        "Y && X",
        [
            ("SCL4", "T && (X && Y)"),
            ("and-not-self-false'", "(Y || !Y) && (X && Y)"),
            ("contradiction-split'", "(Y && (X && Y)) || (!Y && (X && Y))"),
            ("memory", "(Y && X) || (!Y && (X && Y))"),
            ("contra-tail", "(Y && X) || F"),
            ("SCL5'", "Y && X"),
        ],
    ),
)

SWAPPED_STATIC_LEMMAS = (
    Lemma.of(
        "negated-guard",
        "ite(ite(Y, F, T), X, Z)",
        "ite(Y, Z, X)",
        [
            ("CP4", "ite(Y, ite(F, X, Z), ite(T, X, Z))"),
            ("CP2", "ite(Y, Z, ite(T, X, Z))"),
            ("CP1", "ite(Y, Z, X)"),
        ],
    ),
    Lemma.of(
        "double-negation",
        "ite(ite(X, F, T), F, T)",
        "X",
        [
            ("CP4", "ite(X, ite(F, F, T), ite(T, F, T))"),
            ("CP2", "ite(X, T, ite(T, F, T))"),
            ("CP1", "ite(X, T, F)"),
            ("CP3*-sym", "ite(T, X, F)"),
            ("CP1", "X"),
        ],
    ),
    Lemma.of(
        "CP3*",
        "ite(X, T, Y)",
        "ite(Y, T, X)",
        [
            ("double-negation", "ite(ite(ite(X, T, Y), F, T), F, T)"),
            ("CP4", "ite(ite(X, ite(T, F, T), ite(Y, F, T)), F, T)"),
            ("CP1", "ite(ite(X, F, ite(Y, F, T)), F, T)"),
            ("negated-guard", "ite(ite(ite(X, F, T), ite(Y, F, T), F), F, T)"),
            ("CP3*-sym", "ite(ite(ite(Y, F, T), ite(X, F, T), F), F, T)"),
            ("negated-guard", "ite(ite(Y, F, ite(X, F, T)), F, T)"),
            ("CP4", "ite(Y, ite(F, F, T), ite(ite(X, F, T), F, T))"),
            ("CP2", "ite(Y, T, ite(ite(X, F, T), F, T))"),
            ("double-negation", "ite(Y, T, X)"),
        ],
    ),
    Lemma.of(
        "CP5",
        "ite(Y, ite(Y, X, Z), F)",
        "ite(Y, X, F)",
        [
            ("negated-guard", "ite(ite(Y, F, T), F, ite(Y, X, Z))"),
            ("negated-guard", "ite(ite(Y, F, T), F, ite(ite(Y, F, T), Z, X))"),
            ("double-negation", "ite(ite(ite(ite(Y, F, T), F, ite(ite(Y, F, T), Z, X)), F, T), F, T)"),
            ("CP4", "ite(ite(ite(Y, F, T), ite(F, F, T), ite(ite(ite(Y, F, T), Z, X), F, T)), F, T)"),
            ("CP2", "ite(ite(ite(Y, F, T), T, ite(ite(ite(Y, F, T), Z, X), F, T)), F, T)"),
            ("CP4", "ite(ite(ite(Y, F, T), T, ite(ite(Y, F, T), ite(Z, F, T), ite(X, F, T))), F, T)"),
            ("CP5-sym", "ite(ite(ite(Y, F, T), T, ite(X, F, T)), F, T)"),
            ("CP4", "ite(ite(Y, F, T), ite(T, F, T), ite(ite(X, F, T), F, T))"),
            ("CP1", "ite(ite(Y, F, T), F, ite(ite(X, F, T), F, T))"),
            ("double-negation", "ite(ite(Y, F, T), F, X)"),
            ("negated-guard", "ite(Y, X, F)"),
        ],
    ),
)
