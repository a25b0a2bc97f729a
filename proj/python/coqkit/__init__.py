"""Cyclically ordered quivers, proper mutations and their invariants."""

from ._coqkit import (
    DomainError,
    ParseError,
    Quiver,
    ResourceError,
    alexander,
    alexander_text,
    braid,
    find_proper_ordering,
    forkless_part,
    invariants,
    is_proper,
    is_proper_vertex,
    load,
    markov,
    mutation_class,
    proper_mutate,
    verify_totally_proper,
)

__all__ = [
    "DomainError",
    "ParseError",
    "Quiver",
    "ResourceError",
    "alexander",
    "alexander_text",
    "braid",
    "find_proper_ordering",
    "forkless_part",
    "invariants",
    "is_proper",
    "is_proper_vertex",
    "load",
    "markov",
    "mutation_class",
    "proper_mutate",
    "verify_totally_proper",
]
