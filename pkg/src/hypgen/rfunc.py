"""The rational function R(t) = r - t*P'/P + t*Q'/Q and the hypothesis checks.

R is evaluated in partial-fraction form, r - sum t/(t - tau_k) + sum
t/(t - gamma_j), which stays stable near zeros of P'.  Its imaginary part
factors as w(t) * Im(t) with the real weight

    w(t) = sum tau_k / |t - tau_k|^2 - sum gamma_j / |t - gamma_j|^2,

so the positivity conditions on the sector and the semi-disk reduce to
sampling w on a polar grid.  Sampling is a numerical certificate, not a
proof: the reports carry the minimum margin and its location so failures
are diagnosable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import BracketError, DomainError, PoleError
from .poly_core import GeneratorSpec, IndexedZeroSet, count_pos, count_neg, eval_at, expand

_POLE_RTOL = 1e-14

# Region-check defaults: 256x256 polar grid, boundary exclusion band 1e-3
# relative to each extent, 4x refinement around the running minimum, depth 3.
GRID_DEFAULT = 256
BAND_DEFAULT = 1e-3
REFINE_DEPTH = 3


def _guard_poles(spec: GeneratorSpec, t) -> None:
    for z in spec.P.zeros + spec.Q.zeros:
        zf = float(z)
        if abs(t - zf) <= _POLE_RTOL * abs(zf):
            raise PoleError(f"t={t} coincides with the zero {zf}")


def r_func(spec: GeneratorSpec, t):
    """Value of r - t*P'/P + t*Q'/Q at t (exactly r at t = 0)."""
    if t == 0:
        return float(spec.r) if not isinstance(t, complex) else complex(spec.r)
    _guard_poles(spec, t)
    acc = t * 0 + spec.r
    for z in spec.P.zeros:
        acc = acc - t / (t - float(z))
    for z in spec.Q.zeros:
        acc = acc + t / (t - float(z))
    return acc


@lru_cache(maxsize=256)
def _float_dense_pair(zs: IndexedZeroSet):
    dense = expand(zs)
    deriv = dense.derivative()
    return (
        tuple(float(c) for c in dense.coeffs),
        tuple(float(c) for c in deriv.coeffs),
    )


def _horner(coeffs, t):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * t + c
    return acc


def pr_product(spec: GeneratorSpec, t):
    """P(t)*R(t) with the poles at the zeros of P cancelled.

    Equal to r*P - t*P' + t*P*Q'/Q, which stays finite at zeros of P;
    zeros of Q remain genuine poles.
    """
    for z in spec.Q.zeros:
        zf = float(z)
        if abs(t - zf) <= _POLE_RTOL * abs(zf):
            raise PoleError(f"t={t} coincides with the Q zero {zf}")
    p_coeffs, dp_coeffs = _float_dense_pair(spec.P)
    pv = _horner(p_coeffs, t)
    dpv = _horner(dp_coeffs, t)
    qlog = sum(1.0 / (t - float(z)) for z in spec.Q.zeros)
    return spec.r * pv - t * dpv + t * pv * qlog


def im_r_weight(spec: GeneratorSpec, t) -> float:
    """Real weight w(t) with Im R(t) = w(t) * Im t."""
    _guard_poles(spec, t)
    w = 0.0
    for z in spec.P.zeros:
        zf = float(z)
        w += zf / abs(t - zf) ** 2
    for z in spec.Q.zeros:
        zf = float(z)
        w -= zf / abs(t - zf) ** 2
    return w


def check_condition1(spec: GeneratorSpec):
    """Positive-zero count condition; returns (holds, first violating x).

    The counts are step functions, so only the zeros of P and Q at or
    beyond tau2 (plus tau2 itself) are candidate violation points.  At
    each break-point the P zeros are counted on (0, x] and the Q zeros on
    (0, x): a zero of Q does not count against P's lead until it has been
    passed.  The second clause fails exactly when Q has a positive zero
    at or below tau2.
    """
    if spec.P.pos_count < 2:
        return False, None
    tau2 = spec.tau2
    violations = []
    if spec.Q.pos_count:
        gamma1 = float(spec.Q.zero_at(1))
        if gamma1 <= tau2:
            violations.append(gamma1)
    points = {tau2}
    points.update(float(z) for z in spec.P.zeros + spec.Q.zeros if float(z) >= tau2)
    for x in sorted(points):
        q_below = sum(1 for z in spec.Q.zeros if 0 < z < x)
        if count_pos(spec.P, x) - q_below < 2:
            violations.append(x)
    if violations:
        return False, min(violations)
    return True, None


def check_condition2(spec: GeneratorSpec):
    """Negative-zero count condition; returns (holds, first violating x)."""
    negs = sorted(
        {float(z) for z in spec.P.zeros + spec.Q.zeros if z < 0}, reverse=True
    )
    for x in negs:
        if count_neg(spec.Q, x) - count_neg(spec.P, x) < 0:
            return False, x
    return True, None


@dataclass(frozen=True)
class RegionCheckReport:
    """Outcome of sampling w(t) over one open region."""

    condition_id: str
    holds: bool
    min_margin: float
    argmin_point: complex
    grid_size: int
    boundary_band: float


def _weight_on_grid(spec: GeneratorSpec, tgrid: np.ndarray) -> np.ndarray:
    w = np.zeros(tgrid.shape, dtype=float)
    for z in spec.P.zeros:
        zf = float(z)
        w += zf / np.abs(tgrid - zf) ** 2
    for z in spec.Q.zeros:
        zf = float(z)
        w -= zf / np.abs(tgrid - zf) ** 2
    return w


def polar_samples(spec: GeneratorSpec, bound: float, top: float,
                  n_radii: int, n_angles: int, band: float = BAND_DEFAULT):
    """Sample points (radius-major) and weights over one polar region."""
    if bound <= 0 or top <= 0:
        raise DomainError("region extents must be positive")
    if n_radii < 1 or n_angles < 1:
        raise DomainError("grid sizes must be >= 1")
    radii = np.linspace(band * bound, bound - band * bound, n_radii)
    angles = np.linspace(band * top, top - band * top, n_angles)
    tgrid = radii[:, None] * np.exp(1j * angles[None, :])
    w = _weight_on_grid(spec, tgrid)
    return tgrid.ravel(), w.ravel(), radii, angles


def _region_scan(spec, condition_id, bound, top, n_radii, n_angles, band, depth):
    points, weights, radii, angles = polar_samples(
        spec, bound, top, n_radii, n_angles, band
    )
    k = int(np.argmin(weights))  # first occurrence: lexicographic tie-break
    best_val = float(weights[k])
    best_pt = complex(points[k])
    i, j = divmod(k, len(angles))
    for _ in range(depth):
        # refine 4x inside the 3-cell window around the running minimum
        i0, i1 = max(i - 1, 0), min(i + 1, len(radii) - 1)
        j0, j1 = max(j - 1, 0), min(j + 1, len(angles) - 1)
        radii = np.linspace(radii[i0], radii[i1], 13)
        angles = np.linspace(angles[j0], angles[j1], 13)
        tgrid = radii[:, None] * np.exp(1j * angles[None, :])
        w = _weight_on_grid(spec, tgrid)
        k = int(np.argmin(w))
        i, j = divmod(k, len(angles))
        if float(w.flat[k]) < best_val:
            best_val = float(w.flat[k])
            best_pt = complex(tgrid.flat[k])
    return RegionCheckReport(
        condition_id=condition_id,
        holds=best_val > 0.0,
        min_margin=best_val,
        argmin_point=best_pt,
        grid_size=n_radii * n_angles,
        boundary_band=band,
    )


def check_sector(spec: GeneratorSpec, tau2: Optional[float] = None, *,
                 n_radii: int = GRID_DEFAULT, n_angles: int = GRID_DEFAULT,
                 band: float = BAND_DEFAULT,
                 refine_depth: int = REFINE_DEPTH) -> RegionCheckReport:
    """Sample w over {0 < |t| < tau2, 0 < Arg t < pi/r}."""
    if tau2 is None:
        tau2 = spec.tau2
    if tau2 <= 0:
        raise DomainError("tau2 must be positive")
    return _region_scan(spec, "sector", tau2, math.pi / spec.r,
                        n_radii, n_angles, band, refine_depth)


def check_semidisk(spec: GeneratorSpec, t_a: Optional[float] = None, *,
                   n_radii: int = GRID_DEFAULT, n_angles: int = GRID_DEFAULT,
                   band: float = BAND_DEFAULT,
                   refine_depth: int = REFINE_DEPTH) -> RegionCheckReport:
    """Sample w over {0 < |t| < t_a, 0 < Arg t < pi}."""
    if t_a is None:
        t_a = find_t_a(spec)
    if t_a <= 0:
        raise DomainError("t_a must be positive")
    return _region_scan(spec, "semidisk", t_a, math.pi,
                        n_radii, n_angles, band, refine_depth)


def find_t_a(spec: GeneratorSpec, tol: float = 1e-12) -> float:
    """Smallest positive zero of P(t)*R(t): the root of R between the two
    smallest positive zeros of P, or that zero itself when it is repeated.

    Bisection uses the endpoint limits R -> -inf / +inf and the
    monotonicity of R on the open interval; the bracket is shrunk by
    1e-9*(tau2 - tau1) from each endpoint because R has poles exactly
    there.
    """
    z1 = spec.P.zero_at(1)
    z2 = spec.P.zero_at(2)
    if z1 == z2:
        return float(z1)
    tau1, tau2 = float(z1), float(z2)
    eps = 1e-9 * (tau2 - tau1)
    lo, hi = tau1 + eps, tau2 - eps
    flo, fhi = r_func(spec, lo), r_func(spec, hi)
    if not (flo < 0.0 < fhi):
        raise BracketError(
            f"R does not change sign on ({lo}, {hi}): R={flo:.3g}..{fhi:.3g}"
        )
    poles = sorted(float(z) for z in spec.P.zeros + spec.Q.zeros)
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if any(abs(mid - p) <= _POLE_RTOL * abs(p) for p in poles):
            mid += (hi - lo) * 1e-3
        if r_func(spec, mid) < 0.0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    # A sign change across a pole of R (a zero of Q inside the interval,
    # possible only when the hypotheses fail) also drives bisection to
    # convergence; a genuine root has |R| tiny at the result.
    if abs(r_func(spec, root)) > 1e-4 * spec.r:
        raise BracketError(
            f"sign change at {root} is a pole crossing, not a root of R"
        )
    return root


def endpoint_value(spec: GeneratorSpec, t: float) -> float:
    """The interval endpoint -P(t) / (t^r Q(t)) at a real point t."""
    t = float(t)
    return -eval_at(spec.P, t) / (t ** spec.r * eval_at(spec.Q, t))


@dataclass(frozen=True)
class HypothesisReport:
    """Verdicts and margins for the four hypotheses, plus the derived scalars."""

    cond1: bool
    cond1_violation: Optional[float]
    cond2: bool
    cond2_violation: Optional[float]
    cond3: Optional[RegionCheckReport]
    cond4: Optional[RegionCheckReport]
    t_a: Optional[float]
    tau1: Optional[float]
    tau2: Optional[float]
    a: Optional[float]
    sign_exponent: int

    @property
    def all_hold(self) -> bool:
        return (
            self.cond1
            and self.cond2
            and self.cond3 is not None and self.cond3.holds
            and self.cond4 is not None and self.cond4.holds
        )


@lru_cache(maxsize=64)
def _hypothesis_report(spec: GeneratorSpec, n_grid: int, band: float) -> HypothesisReport:
    c1, v1 = check_condition1(spec)
    c2, v2 = check_condition2(spec)
    tau1 = tau2 = None
    cond3 = cond4 = None
    t_a = a = None
    if spec.P.pos_count >= 2:
        tau1, tau2 = spec.tau1, spec.tau2
        cond3 = check_sector(spec, tau2, n_radii=n_grid, n_angles=n_grid, band=band)
    if c1 and c2 and cond3 is not None and cond3.holds:
        t_a = find_t_a(spec)
        cond4 = check_semidisk(spec, t_a, n_radii=n_grid, n_angles=n_grid, band=band)
        a = endpoint_value(spec, t_a)
    return HypothesisReport(
        cond1=c1, cond1_violation=v1,
        cond2=c2, cond2_violation=v2,
        cond3=cond3, cond4=cond4,
        t_a=t_a, tau1=tau1, tau2=tau2, a=a,
        sign_exponent=spec.sign_exponent,
    )


def hypothesis_report(spec: GeneratorSpec, n_grid: int = GRID_DEFAULT,
                      band: float = BAND_DEFAULT) -> HypothesisReport:
    """Run the four checks in order; t_a, cond4 and a only when 1-3 hold."""
    return _hypothesis_report(spec, n_grid, band)
