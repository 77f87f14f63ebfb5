"""Alon-Tarsi certificates for K5-minor-free graphs."""

from ._atcert import (
    AtcertError,
    Graph,
    K5MinorDetected,
    MalformedInput,
    PreconditionError,
    ResourceLimit,
    alon_tarsi_number,
    certify,
    coeff_of_monomial,
    complete_graph,
    cycle_graph,
    degeneracy,
    eulerian_diff,
    format_graph,
    generate,
    has_k5_minor,
    is_planar,
    is_wagner,
    parse_graph,
    verify,
    wagner_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
