"""Exponential sums over the n-th roots of -1 and their sign dominance.

With w_k = e^{(2k-1) pi i / n}, the abscissae where the leading pair of
terms of sum_k w_k^l e^{x w_k} is real are x = pi*(b - l/n)/sin(pi/n) for
positive integers b; there the first term equals (-1)^b e^{x cos(pi/n)}
and its sign decides the sign of the whole sum.  The sign test is done on
a rescaled sum (every term divided by e^{x cos(pi/n)}) so it never
overflows; reported magnitudes may saturate to inf for extreme inputs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError

# For larger n and small b the terms span magnitudes that double precision
# cannot hold the sign of reliably; sweeps refuse n above this by default.
DEFAULT_MAX_N = 64


def _omega(n: int, k: int) -> complex:
    return cmath.exp(1j * math.pi * (2 * k - 1) / n)


def admissible_x(n: int, ell: int, b: int) -> float:
    """The abscissa pi*(b - ell/n)/sin(pi/n); ell is normalized into [0, n)."""
    if n < 2:
        raise DomainError("need n >= 2 (sin(pi/n) vanishes at n = 1)")
    if b < 1:
        raise DomainError("need integer b >= 1")
    ell = ell % n
    x = math.pi * (b - ell / n) / math.sin(math.pi / n)
    if x < 0:
        raise DomainError(f"admissible abscissa came out negative: {x}")
    return x


def exp_poly_sum(n: int, ell: int, x: float) -> complex:
    """sum_{k=0}^{n-1} w_k^ell * e^{x w_k} in complex arithmetic."""
    if n < 1:
        raise DomainError("need n >= 1")
    return sum(_omega(n, k) ** ell * cmath.exp(x * _omega(n, k)) for k in range(n))


def first_term_value(n: int, ell: int, b: int) -> float:
    """(-1)^b * e^{pi*(b - ell/n)*cot(pi/n)}, the first (real) term."""
    ell = ell % n
    x = admissible_x(n, ell, b)
    try:
        mag = math.exp(x * math.cos(math.pi / n))
    except OverflowError:
        mag = math.inf
    return -mag if b % 2 else mag


@dataclass(frozen=True)
class ExpSignCase:
    n: int
    ell: int
    b: int
    x: float
    sum_value: float
    first_term: float
    sign_match: bool
    im_defect: float


def check_sign_dominance(n: int, ell: int, b: int) -> ExpSignCase:
    """Compare the sign of the full sum against the sign of its first term.

    The comparison happens on the rescaled sum, so it stays valid even
    when the unscaled values overflow.
    """
    ell = ell % n
    x = admissible_x(n, ell, b)
    c0 = math.cos(math.pi / n)
    scaled = sum(
        _omega(n, k) ** ell * cmath.exp(x * (_omega(n, k) - c0)) for k in range(n)
    )
    first_sign = -1.0 if b % 2 else 1.0
    sign_match = (scaled.real > 0) if first_sign > 0 else (scaled.real < 0)
    try:
        mag = math.exp(x * c0)
    except OverflowError:
        mag = math.inf
    if math.isfinite(mag):
        sum_value = scaled.real * mag
        im_defect = abs(scaled.imag) * (mag / (1.0 + mag))
    else:
        sum_value = math.copysign(math.inf, scaled.real) if scaled.real else 0.0
        im_defect = abs(scaled.imag)
    return ExpSignCase(
        n=n, ell=ell, b=b, x=x,
        sum_value=sum_value,
        first_term=first_sign * mag,
        sign_match=sign_match,
        im_defect=im_defect,
    )
