"""Parity-filtration invariants of free and virtual knots."""

from ._core import (
    ChordDiagram,
    Error,
    GaussDiagram,
    ParseError,
    TypeRule,
    alternating_sum,
    cayley_dot,
    delta,
    delta_compact,
    fuzz,
    gamma,
    gamma_compact,
    index_assignment,
    odd_chords,
    parse_free_code,
    parse_virtual_code,
    random_diagram,
    random_gauss_diagram,
    vassiliev_check,
    vassiliev_value,
)

__all__ = [
    "ChordDiagram",
    "Error",
    "GaussDiagram",
    "ParseError",
    "TypeRule",
    "alternating_sum",
    "cayley_dot",
    "delta",
    "delta_compact",
    "fuzz",
    "gamma",
    "gamma_compact",
    "index_assignment",
    "odd_chords",
    "parse_free_code",
    "parse_virtual_code",
    "random_diagram",
    "random_gauss_diagram",
    "vassiliev_check",
    "vassiliev_value",
]
