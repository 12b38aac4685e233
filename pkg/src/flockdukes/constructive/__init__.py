"""Witness extraction following the existence proofs step by step."""

from .biflock import corollary2_dukes, lemma1_duke, lemma3_duke, theorem4_classify
from .cases import lemma9_outcome
from .multiflock import (
    corollary7_three_3dukes,
    find_transmitter,
    lemma8_non_eclipsed_duke,
    theorem5_find_3duke,
    theorem6_pecked_witness,
    theorem8_fourth_3duke,
    theorem10_classify,
)
from .witnesses import (
    CASE_LABELS,
    ClassKind,
    Classification,
    DukeCertificate,
    Lemma9Kind,
    Lemma9Outcome,
    PeckedKind,
    PeckedWitness,
    certify_duke,
    shortest_chains,
)

__all__ = [
    "CASE_LABELS",
    "ClassKind",
    "Classification",
    "DukeCertificate",
    "Lemma9Kind",
    "Lemma9Outcome",
    "PeckedKind",
    "PeckedWitness",
    "certify_duke",
    "corollary2_dukes",
    "corollary7_three_3dukes",
    "find_transmitter",
    "lemma1_duke",
    "lemma3_duke",
    "lemma8_non_eclipsed_duke",
    "lemma9_outcome",
    "shortest_chains",
    "theorem4_classify",
    "theorem5_find_3duke",
    "theorem6_pecked_witness",
    "theorem8_fourth_3duke",
    "theorem10_classify",
]
