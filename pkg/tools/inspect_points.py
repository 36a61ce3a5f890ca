#!/usr/bin/env python3
"""
Simple point-set file inspector.
Reads a point-set file and prints its bound, size, row profile and corner status.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from cornerforge.corners import find_corner, read_points  # noqa: E402
from cornerforge.construction import c_empirical  # noqa: E402
from cornerforge.errors import CornerForgeError  # noqa: E402


def inspect_points_file(filename):
    """Inspect a point-set file and print summary information."""
    print("=== Point-set Inspector ===")
    print(f"File: {filename}")

    try:
        points = read_points(filename)
    except (OSError, CornerForgeError) as e:
        print(f"ERROR: {e}")
        return False

    rows = points.rows()
    print(f"Grid side N: {points.bound}")
    print(f"Points: {len(points)}")
    if points.bound:
        print(f"Density: {points.density():.6g}")
    if len(points) and points.bound >= 2:
        print(f"c_emp: {c_empirical(len(points), points.bound):.6g}")
    if rows:
        widths = [len(points.row(y)) for y in rows]
        print(f"Occupied rows: {len(rows)} (min {min(widths)}, max {max(widths)} points per row)")

    witness = find_corner(points)
    if witness is None:
        print("Corner-free: yes")
    else:
        print(f"Corner-free: no, e.g. x={witness.x} y={witness.y} d={witness.d}")
    return witness is None


if __name__ == "__main__":
    if len(sys.argv) != 2:
        print("Usage: python inspect_points.py <points.txt>")
        sys.exit(2)

    ok = inspect_points_file(sys.argv[1])
    sys.exit(0 if ok else 1)
