"""
cornerforge - corner-free sets in [N]^2

Builds, counts, enumerates and verifies digit-window sphere sets A_r, compares
them with Behrend-type sets, and computes exact optima on tiny grids.
"""

__version__ = "1.0.0"

from .construction import ConstructionParams, count_by_r, best_r, enumerate_A_r, density_report
from .corners import PointSet, find_corner
from .oracle import max_corner_free

__all__ = [
    'ConstructionParams', 'count_by_r', 'best_r', 'enumerate_A_r', 'density_report',
    'PointSet', 'find_corner', 'max_corner_free',
]
