"""The implicit curve tau(theta) and the parameterization z(theta).

For t = tau*e^{i*theta} in the upper half-plane every real zero c of P or
Q gets an angle in (0, pi) defined by (t - c)/(conj(t) - c) = e^{2i*angle}.
The curve is the locus where the signed angle sum

    sum angles(P) - sum angles(Q) - r*theta

equals (p+ - q+ - 1)*pi.  Under the verified sector condition the sum is
strictly decreasing in tau, so each theta in (0, pi/r) has a unique tau,
found here by bisection.  Along the curve z(theta) = -P(t)/(t^r Q(t)) is
real with sign (-1)^(p+ - q+), and sign * z increases strictly from the
endpoint value at theta -> 0 to infinity at theta -> pi/r.

The endpoints theta = 0 and theta = pi/r are never solved directly (the
implicit system degenerates there); they are attached from the
double-root locator and the zero limit.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import (
    BracketError,
    DomainError,
    HypothesisError,
    MonotonicityViolation,
)
from .parallel import pmap
from .poly_core import GeneratorSpec, eval_at
from .rfunc import HypothesisReport, endpoint_value, find_t_a, hypothesis_report


def angle_of(zero, t: complex) -> float:
    """Angle in (0, pi) attached to one real zero at an upper-half-plane t.

    Half the principal argument of (t - zero)/(conj(t) - zero), shifted by
    pi into (0, pi) when the half-argument comes out nonpositive.
    """
    t = complex(t)
    if t.imag <= 0:
        raise DomainError("angle_of needs Im t > 0")
    zf = float(zero)
    ratio = (t - zf) / (t.conjugate() - zf)
    half = 0.5 * cmath.phase(ratio)
    if half <= 0.0:
        half += math.pi
    return half


def angle_sum_residual(spec: GeneratorSpec, tau: float, theta: float) -> float:
    """Signed angle sum minus its target value (p+ - q+ - 1)*pi."""
    if tau <= 0:
        raise DomainError("tau must be positive")
    if not 0.0 < theta < math.pi / spec.r:
        raise DomainError(f"theta must lie in (0, pi/{spec.r})")
    t = tau * cmath.exp(1j * theta)
    total = sum(angle_of(z, t) for z in spec.P.zeros)
    total -= sum(angle_of(z, t) for z in spec.Q.zeros)
    target = (spec.P.pos_count - spec.Q.pos_count - 1) * math.pi
    return total - spec.r * theta - target


def solve_tau(spec: GeneratorSpec, theta: float) -> float:
    """Unique tau in (0, tau2) solving the angle-sum equation at this theta.

    The bracket is (1e-12*tau2, tau2*(1 - 1e-12)); monotonicity of the
    residual in tau is only meaningful once the sector condition has been
    verified, and the endpoint residual signs must be (+, -).
    """
    tau2 = spec.tau2
    lo = 1e-12 * tau2
    hi = tau2 * (1.0 - 1e-12)
    rlo = angle_sum_residual(spec, lo, theta)
    rhi = angle_sum_residual(spec, hi, theta)
    if not (rlo > 0.0 > rhi):
        raise BracketError(
            f"angle-sum residual does not bracket a root at theta={theta}: "
            f"{rlo:.3g} .. {rhi:.3g}"
        )
    for _ in range(200):
        if hi - lo <= 1e-15 * tau2:
            break
        mid = 0.5 * (lo + hi)
        if angle_sum_residual(spec, mid, theta) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _curve_point(spec: GeneratorSpec, theta: float):
    tau = solve_tau(spec, theta)
    t = tau * cmath.exp(1j * theta)
    value = -eval_at(spec.P, t) / (t ** spec.r * eval_at(spec.Q, t))
    return tau, value


def z_of_theta(spec: GeneratorSpec, theta: float):
    """(Re z, Im z) at the curve point for this theta; Im z is a diagnostic."""
    _, value = _curve_point(spec, theta)
    return value.real, value.imag


@dataclass(frozen=True)
class TauCurveSample:
    theta: float
    tau: float
    z: float
    residual: float
    im_z: float
    low_confidence: bool = False


@dataclass(frozen=True)
class TauCurve:
    samples: tuple
    t_a_limit: float
    a_limit: float
    spec: GeneratorSpec


def _smallest_positive_multiplicity(spec: GeneratorSpec) -> int:
    z1 = spec.P.zero_at(1)
    return sum(1 for z in spec.P.zeros if z == z1)


def trace_curve(spec: GeneratorSpec, n_samples: int) -> TauCurve:
    """Sample the curve at theta_i = i/(n_samples+1) * pi/r, i = 1..n_samples.

    Raises MonotonicityViolation when sign * z fails to increase strictly,
    which signals either numerical trouble or failing hypotheses.  When
    the smallest positive zero of P is repeated (multiplicity rho > 1),
    samples with theta below 10*eps^(1/rho) are flagged low-confidence:
    the solver still converges there but loses accuracy.
    """
    if n_samples < 2:
        raise DomainError("n_samples must be >= 2")
    step = math.pi / spec.r / (n_samples + 1)
    rho = _smallest_positive_multiplicity(spec)
    flag_below = 10.0 * sys.float_info.epsilon ** (1.0 / rho) if rho > 1 else 0.0

    def sample(theta: float) -> TauCurveSample:
        tau, value = _curve_point(spec, theta)
        residual = angle_sum_residual(spec, tau, theta)
        return TauCurveSample(
            theta=theta,
            tau=tau,
            z=value.real,
            residual=residual,
            im_z=value.imag,
            low_confidence=theta < flag_below,
        )

    samples = pmap(sample, [i * step for i in range(1, n_samples + 1)])
    sign = spec.sign_exponent
    for prev, cur in zip(samples, samples[1:]):
        if sign * cur.z <= sign * prev.z:
            raise MonotonicityViolation(
                f"sign*z not strictly increasing between theta={prev.theta} "
                f"and theta={cur.theta}"
            )
    t_a = find_t_a(spec)
    return TauCurve(
        samples=tuple(samples),
        t_a_limit=t_a,
        a_limit=endpoint_value(spec, t_a),
        spec=spec,
    )


def check_disk_separation(spec: GeneratorSpec, theta: float,
                          hypothesis: Optional[HypothesisReport] = None) -> bool:
    """True when exactly the conjugate pair tau*e^{+/-i*theta} of the roots
    of P + z(theta)*t^r*Q lies within radius tau*(1 + 1e-8) and every other
    root is strictly outside radius tau."""
    from .hm_seq import d_expansion, poly_roots

    if hypothesis is None:
        hypothesis = hypothesis_report(spec)
    if not hypothesis.all_hold:
        raise HypothesisError("disk separation requires the verified hypotheses")
    if not 0.0 < theta < math.pi / spec.r:
        raise DomainError(f"theta must lie in (0, pi/{spec.r})")
    tau, value = _curve_point(spec, theta)
    roots = poly_roots(d_expansion(spec, value.real))
    near = [w for w in roots if abs(w) <= tau * (1.0 + 1e-8)]
    far = [w for w in roots if abs(w) > tau * (1.0 + 1e-8)]
    if len(near) != 2:
        return False
    if any(abs(w) <= tau for w in far):
        return False
    expected = tau * cmath.exp(1j * theta)
    pair_tol = 1e-6 * max(1.0, tau)
    hits = {min(range(2), key=lambda i: abs(near[i] - e))
            for e in (expected, expected.conjugate())}
    return len(hits) == 2 and all(
        min(abs(w - expected), abs(w - expected.conjugate())) <= pair_tol
        for w in near
    )
