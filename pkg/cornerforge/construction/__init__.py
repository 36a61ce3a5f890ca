"""
Corner-free constructions: digit-window spheres A_r and the Behrend baseline.
"""

from .green import (
    ConstructionParams, CountTable, in_window, window_pairs, window_size,
    total_window_pairs, member, count_by_r, best_r, pigeonhole_floor,
    choose_params, cocycle_holds, enumerate_A_r,
)
from .density import (
    DensityReport, REPORT_FIELDS, c_empirical, c_target, c_main_term,
    density_report, format_sig, make_report, round_sig,
)
from .behrend import (
    BehrendParams, BehrendSearch, sphere_counts, sphere_sizes, sphere_size_floor,
    behrend_set, corner_from_3ap, corner_size, iter_corner_points, lift_3ap_free,
    behrend_search, behrend_best, behrend_report,
)

__all__ = [
    'ConstructionParams', 'CountTable', 'in_window', 'window_pairs', 'window_size',
    'total_window_pairs', 'member', 'count_by_r', 'best_r', 'pigeonhole_floor',
    'choose_params', 'cocycle_holds', 'enumerate_A_r',
    'DensityReport', 'REPORT_FIELDS', 'c_empirical', 'c_target', 'c_main_term',
    'density_report', 'format_sig', 'make_report', 'round_sig',
    'BehrendParams', 'BehrendSearch', 'sphere_counts', 'sphere_sizes', 'sphere_size_floor',
    'behrend_set', 'corner_from_3ap', 'corner_size', 'iter_corner_points', 'lift_3ap_free',
    'behrend_search', 'behrend_best', 'behrend_report',
]
