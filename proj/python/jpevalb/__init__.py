"""Alignment-based PARSEVAL evaluation with an evalb-compatible legacy mode."""

from ._core import (
    ParamSet,
    ParseError,
    PrmError,
    SentenceScore,
    Status,
    SyntaxTree,
    align_sentences,
    align_words,
    edit_distance,
    evaluate,
    extract_constituents,
    format_row,
    leaves,
    legacy_score_pair,
    normalize_nospace,
    parse_bracketed,
    parse_prm,
    render_bracketed,
    run,
    score_group,
    similar,
)

__all__ = [
    "ParamSet",
    "ParseError",
    "PrmError",
    "SentenceScore",
    "Status",
    "SyntaxTree",
    "align_sentences",
    "align_words",
    "edit_distance",
    "evaluate",
    "extract_constituents",
    "format_row",
    "leaves",
    "legacy_score_pair",
    "normalize_nospace",
    "parse_bracketed",
    "parse_prm",
    "render_bracketed",
    "run",
    "score_group",
    "similar",
]
