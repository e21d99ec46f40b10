"""Local and edge-local complementation toolkit.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (
    CapacityError,
    Graph,
    are_isomorphic,
    canonical_graph6,
    code_report,
    construct,
    count_orbits,
    count_preserved,
    elc_orbit,
    from_graph6,
    is_elc_preserved,
    lc_orbit,
)

__all__ = [
    "CapacityError",
    "Graph",
    "are_isomorphic",
    "canonical_graph6",
    "code_report",
    "construct",
    "count_orbits",
    "count_preserved",
    "elc_orbit",
    "from_graph6",
    "is_elc_preserved",
    "lc_orbit",
]
