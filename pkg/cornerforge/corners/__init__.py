"""
Point sets, corner verification and point-set files.
"""

from .pointset import Point, PointSet, CornerWitness
from .verify import find_corner, list_corners, is_3ap_free
from .pointfile import parse_points, read_points, write_points, format_points

__all__ = [
    'Point', 'PointSet', 'CornerWitness',
    'find_corner', 'list_corners', 'is_3ap_free',
    'parse_points', 'read_points', 'write_points', 'format_points',
]
