"""Exact counting of random walk labelings of graphs.

A random walk labeling stamps 1, 2, ... on the vertices of a graph in the
order a walker first visits them.  This package counts such labelings
exactly (by enumeration, by subset DP, and by closed forms for the classic
families plus 2 x n king and grid boards), expands the associated
generating functions over exact rationals, and machine-verifies the
inverse-binomial identities, integral identities, and the grid asymptotic
that tie everything together.
"""

from .combinat import CombCache, binomial, catalan, factorial
from .formulas import (
    FormulaId,
    a087547_from_recursion,
    a087547_from_sum,
    a087923,
    a182525,
    complete_labelings,
    cycle_labelings,
    grid2_labelings,
    king2_labelings,
    path_labelings,
)
from .graphs import (
    FamilySpec,
    Graph,
    build_family,
    complete_graph,
    cycle_graph,
    grid_graph,
    is_connected,
    king_graph,
    parse_graph,
    path_graph,
    render_graph,
)
from .series import PowerSeries
from .verification import VerificationResult
from .walks import (
    count_labelings_dp,
    count_labelings_started_at,
    enumerate_labelings_walk,
    order_from_labels,
)

__version__ = "0.1.0"

__all__ = [
    "CombCache",
    "FamilySpec",
    "FormulaId",
    "Graph",
    "PowerSeries",
    "VerificationResult",
    "__version__",
    "a087547_from_recursion",
    "a087547_from_sum",
    "a087923",
    "a182525",
    "binomial",
    "build_family",
    "catalan",
    "complete_graph",
    "complete_labelings",
    "count_labelings_dp",
    "count_labelings_started_at",
    "cycle_graph",
    "cycle_labelings",
    "enumerate_labelings_walk",
    "factorial",
    "grid2_labelings",
    "grid_graph",
    "is_connected",
    "king2_labelings",
    "king_graph",
    "order_from_labels",
    "parse_graph",
    "path_graph",
    "path_labelings",
    "render_graph",
]
