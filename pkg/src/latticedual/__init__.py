"""Duality machinery for site configurations on the unit-square tiling.

Builds outermost boundaries of star/plus components, merges cycles through
bridge/gap bookkeeping, and constructs the vacant star-connected fence that
surrounds a finite plus component, together with independent verification
oracles for all of it.
"""

from ._kernels import BACKEND
from .boundary import (
    CycleGraph,
    OutermostBoundary,
    boundary_edges,
    cycle_graph,
    is_acyclic,
    outermost_boundary,
    outermost_cycle_of,
    trace_outermost,
)
from .components import (
    Component,
    LambdaSets,
    VacantGraph,
    component_of,
    contains_cycle,
    is_finite,
    lambda_sets,
    vacant_graph,
)
from .cycles import (
    BridgeDecomposition,
    BridgeSet,
    Cycle,
    LatticePath,
    bridge_decomposition,
    find_bridges,
    gap_of,
    interior_squares,
    merge_cycles,
    merge_square,
    square_cycle,
)
from .duality import (
    DualityReport,
    SCycle,
    Verdict,
    dual_fence,
    extract_scycle,
    verify_interior_plus_connected,
    verify_scycle_boundary,
    verify_theorem5,
)
from .lattice import (
    Corner,
    Edge,
    GridConfig,
    Square,
    edge_cosquares,
    plus_adjacent,
    square_boundary,
    star_adjacent,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BridgeDecomposition",
    "BridgeSet",
    "Component",
    "Corner",
    "Cycle",
    "CycleGraph",
    "DualityReport",
    "Edge",
    "GridConfig",
    "LambdaSets",
    "LatticePath",
    "OutermostBoundary",
    "SCycle",
    "Square",
    "VacantGraph",
    "Verdict",
    "boundary_edges",
    "bridge_decomposition",
    "component_of",
    "contains_cycle",
    "cycle_graph",
    "dual_fence",
    "edge_cosquares",
    "extract_scycle",
    "find_bridges",
    "gap_of",
    "interior_squares",
    "is_acyclic",
    "is_finite",
    "lambda_sets",
    "merge_cycles",
    "merge_square",
    "outermost_boundary",
    "outermost_cycle_of",
    "plus_adjacent",
    "square_boundary",
    "square_cycle",
    "star_adjacent",
    "trace_outermost",
    "vacant_graph",
    "verify_interior_plus_connected",
    "verify_scycle_boundary",
    "verify_theorem5",
]
