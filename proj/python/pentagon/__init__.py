"""Exact verification toolkit for induced-C5 inducibility.

The heavy lifting lives in the C++ extension; this package re-exports it.
Rationals cross the boundary as "p/q" strings (feed them to fractions.Fraction).
"""

from pentagon._core import (  # noqa: F401
    SmallGraph,
    automorphism_count,
    certificate,
    complement,
    complete,
    count_induced,
    count_pattern,
    cycle,
    detect_5_partition,
    exhaustive_c,
    finite_density,
    from_graph6,
    grid_max,
    hill_climb,
    isomorphic,
    iterated_c5,
    limit_density,
    main_threshold,
    pentagon_blowup,
    petersen,
    qp_bound,
    recursion_value,
    to_graph6,
    verify_claims,
)

__all__ = [
    "SmallGraph",
    "automorphism_count",
    "certificate",
    "complement",
    "complete",
    "count_induced",
    "count_pattern",
    "cycle",
    "detect_5_partition",
    "exhaustive_c",
    "finite_density",
    "from_graph6",
    "grid_max",
    "hill_climb",
    "isomorphic",
    "iterated_c5",
    "limit_density",
    "main_threshold",
    "pentagon_blowup",
    "petersen",
    "qp_bound",
    "recursion_value",
    "to_graph6",
    "verify_claims",
]
