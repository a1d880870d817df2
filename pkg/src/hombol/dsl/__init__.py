"""A small language for graded multilinear identities."""

from .ast import Identity, print_expr, print_identity
from .evaluate import (
    BUILTIN_FILES,
    DslCheckRequest,
    builtin_text,
    check_identities,
    check_identity,
    evaluate_identity,
    load_builtin,
)
from .parser import ParseError, parse_identity, parse_identity_file

__all__ = [
    "BUILTIN_FILES",
    "DslCheckRequest",
    "Identity",
    "ParseError",
    "builtin_text",
    "check_identities",
    "check_identity",
    "evaluate_identity",
    "load_builtin",
    "parse_identity",
    "parse_identity_file",
    "print_expr",
    "print_identity",
]
