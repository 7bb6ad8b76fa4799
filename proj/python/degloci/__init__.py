"""Exact degeneracy-locus computations over Q and F_p."""

from ._degloci import (
    Error,
    HypothesisError,
    Ideal,
    ParseError,
    Polynomial,
    PreconditionError,
    ResourceError,
    Ring,
    check_scenario,
    max_degree,
    minors_ideal,
    pfaffian,
    run_file,
    run_scenario,
    set_max_degree,
)

__all__ = [
    "Error",
    "HypothesisError",
    "Ideal",
    "ParseError",
    "Polynomial",
    "PreconditionError",
    "ResourceError",
    "Ring",
    "check_scenario",
    "max_degree",
    "minors_ideal",
    "pfaffian",
    "run_file",
    "run_scenario",
    "set_max_degree",
]
