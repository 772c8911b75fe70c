"""Exact verification of cossic equations and polyhedron measurements."""

from ._rothcoss import (
    CorpusError,
    DomainError,
    NotFullyFactorable,
    ParseError,
    UnknownSolid,
    canonical_equation,
    circumdiameter,
    denest,
    edge,
    evaluate,
    factor,
    radical_equals,
    report,
    solid_ids,
    standard_form,
    verify_corpus,
)

__all__ = [
    "CorpusError",
    "DomainError",
    "NotFullyFactorable",
    "ParseError",
    "UnknownSolid",
    "canonical_equation",
    "circumdiameter",
    "denest",
    "edge",
    "evaluate",
    "factor",
    "radical_equals",
    "report",
    "solid_ids",
    "standard_form",
    "verify_corpus",
]
