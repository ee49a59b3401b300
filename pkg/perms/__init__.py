"""Permutation values, parsing and printing."""

from perms.permutation import (
    Permutation,
    act,
    commutes,
    compose,
    conjugate,
    format_permutation,
    inverse,
    parse_permutation,
    permutation_from_json,
)

__all__ = [
    "Permutation",
    "act",
    "commutes",
    "compose",
    "conjugate",
    "format_permutation",
    "inverse",
    "parse_permutation",
    "permutation_from_json",
]
