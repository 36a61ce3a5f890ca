"""
Density reports and the exponent c in |A| = N^2 2^(-(c + o(1)) sqrt(log2 N)).
"""

import math
from dataclasses import dataclass
from decimal import MAX_EMAX, MIN_EMIN, Decimal, localcontext
from fractions import Fraction
from typing import Any, Dict

from ..errors import DomainError
from .green import ConstructionParams, best_r, count_by_r

REPORT_FIELDS = ('construction', 'q', 'd', 'N', 'r', 'size', 'density', 'c_emp')


def round_sig(value: float, digits: int = 6) -> float:
    """Round to a fixed number of significant digits (stable JSON output)."""
    return float(f"{value:.{digits}g}")


def format_sig(value: Fraction, digits: int = 6) -> str:
    """
    Exact fraction as a decimal string with `digits` significant digits.

    Works far below the smallest float, e.g. "1.23457e-2410".
    """
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.Emin = MIN_EMIN
        ctx.Emax = MAX_EMAX
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return f"{quotient:g}"


def c_empirical(size: int, N: int) -> float:
    """
    -log2(size / N^2) / sqrt(log2 N), from exact integers.

    Logarithms are taken of the integers themselves, so the result stays
    accurate (about 1e-9) even when N^2 is far outside the float range.

    Raises:
        DomainError: If size is 0 or above N^2, or N < 2
    """
    if N < 2:
        raise DomainError(f"grid side N must be >= 2, got N={N}")
    if size < 1:
        raise DomainError(f"set size must be >= 1, got size={size}")
    if size > N * N:
        raise DomainError(f"set size {size} exceeds N^2 = {N * N}")
    log_n = math.log2(N)
    return (2 * log_n - math.log2(size)) / math.sqrt(log_n)


def c_target() -> float:
    """2 sqrt(2 log2(4/3)), about 1.8222."""
    return 2 * math.sqrt(2 * math.log2(4 / 3))


def c_main_term(q: int, d: int) -> float:
    """
    Exponent implied by the leading estimate |A_r| >= N^2 (d q^2)^-1 (3/4)^d.

    The gap to c_emp shows how much the O(q) corrections in W(q) and the
    pigeonhole loss matter at a given scale.
    """
    log_n = d * math.log2(q)
    return (d * math.log2(4 / 3) + math.log2(d * q * q)) / math.sqrt(log_n)


@dataclass(frozen=True)
class DensityReport:
    """One row of a density table; density is the exact fraction size / N^2."""

    construction: str
    q: int
    d: int
    N: int
    r: int
    size: int
    density: Fraction
    c_emp: float

    def to_record(self, significant_digits: int = 6) -> Dict[str, Any]:
        """Ordered record; big integers and the density become decimal strings."""
        return {
            'construction': self.construction,
            'q': self.q,
            'd': self.d,
            'N': str(self.N),
            'r': self.r,
            'size': str(self.size),
            'density': format_sig(self.density, significant_digits),
            'c_emp': round_sig(self.c_emp, significant_digits),
        }


def make_report(construction: str, q: int, d: int, N: int, r: int, size: int) -> DensityReport:
    return DensityReport(
        construction=construction,
        q=q,
        d=d,
        N=N,
        r=r,
        size=size,
        density=Fraction(size, N * N),
        c_emp=c_empirical(size, N),
    )


def density_report(p: ConstructionParams) -> DensityReport:
    """
    Exact size, density and c_emp of A_r; r defaults to best_r.

    Args:
        p: Construction parameters

    Returns:
        DensityReport labelled "green"
    """
    if p.r is None:
        r, size = best_r(p.q, p.d)
    else:
        r, size = p.r, count_by_r(p.q, p.d)[p.r]
    if size == 0:
        raise DomainError(f"A_r is empty for q={p.q}, d={p.d}, r={r}")
    return make_report('green', p.q, p.d, p.N, r, size)
