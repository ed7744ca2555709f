"""Structural controllability of directed hypergraphs.

Node ids are 0-based in this API; the JSON interchange format renders them
1-based.
"""

from ._hsc import (
    CapacityError,
    Hypergraph,
    ValidationError,
    cross_validate,
    find_dilation_exact,
    from_json,
    generate,
    has_dilation,
    hypergraph,
    inaccessible_set,
    load,
    matching_lower_bound,
    select,
    strip_controls,
    target_accessible,
    verify,
    walk_reach,
    with_drivers,
)

__all__ = [
    "CapacityError",
    "Hypergraph",
    "ValidationError",
    "cross_validate",
    "find_dilation_exact",
    "from_json",
    "generate",
    "has_dilation",
    "hypergraph",
    "inaccessible_set",
    "load",
    "matching_lower_bound",
    "select",
    "strip_controls",
    "target_accessible",
    "verify",
    "walk_reach",
    "with_drivers",
]
