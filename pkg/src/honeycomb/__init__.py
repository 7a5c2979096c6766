"""Honeycomb arrays, Costas arrays and hexagonal permutations on the hexagonal grid."""

__version__ = "0.1.0"

from ._accel import NUMBA_ENABLED
from .config import (
    DotConfiguration,
    HoneycombArray,
    TheoremViolation,
    automorphism_group_order,
    bounding_region,
    canonicalize,
    hexagonal_permutation_index,
    honeycomb_radius,
    is_distinct_difference,
    is_hexagonal_permutation,
)
from .hexgrid import (
    Cell,
    Region,
    Symmetry,
    SYMMETRIES,
    apply_symmetry,
    hex_distance,
    line_indices,
    make_region,
    region_contains,
)
from .search import (
    BudgetExceeded,
    costas_to_honeycomb,
    count_hex_permutations,
    enumerate_costas,
    enumerate_hex_permutations,
    growth_report,
    max_brooks,
    search_honeycomb,
    search_symmetric_honeycomb,
)
