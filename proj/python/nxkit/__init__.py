"""Toolkit for typed first-order problems with modal connectives.

String-level bindings over the C++ core: parsing and canonical printing,
syntactic census, logic-specification normalization, classical embedding,
finite model checking, bounded countermodel search, and derivation
verification.
"""

from ._core import (
    census,
    check_model,
    check_types,
    embed,
    find_countermodel,
    normalize_logic,
    parse_print,
    system_axioms,
    verify_derivation,
)

__version__ = "0.1.0"

__all__ = [
    "census",
    "check_model",
    "check_types",
    "embed",
    "find_countermodel",
    "normalize_logic",
    "parse_print",
    "system_axioms",
    "verify_derivation",
    "__version__",
]
