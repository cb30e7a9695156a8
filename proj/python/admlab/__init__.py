"""Exact potential theory on metrized graphs.

Rational results come back as :class:`fractions.Fraction`. Points are written
``vertex:<id>`` or ``edge:<id>@<offset>``.
"""

from ._admlab import (
    Graph,
    GraphError,
    ParseError,
    canonical_measure,
    check,
    delta,
    epsilon,
    epsilon_via_resistance,
    faltings_constant,
    green,
    identity_names,
    isotriviality_floor,
    load_ledger,
    oracle,
    parse_ledger,
    phi,
    poly,
    poly_eval,
    random_graph,
    resistance,
    sweep,
    verify_identity,
)

__all__ = [
    "Graph",
    "GraphError",
    "ParseError",
    "canonical_measure",
    "check",
    "delta",
    "epsilon",
    "epsilon_via_resistance",
    "faltings_constant",
    "green",
    "identity_names",
    "isotriviality_floor",
    "load_ledger",
    "oracle",
    "parse_ledger",
    "phi",
    "poly",
    "poly_eval",
    "random_graph",
    "resistance",
    "sweep",
    "verify_identity",
]

__version__ = "0.1.0"
