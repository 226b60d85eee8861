import cmath
import math
import random

import pytest

from hypgen import (
    BracketError,
    DomainError,
    HypothesisError,
    angle_of,
    angle_sum_residual,
    check_disk_separation,
    endpoint_value,
    eval_at,
    expand,
    find_t_a,
    make_spec,
    solve_tau,
    trace_curve,
    z_of_theta,
)


def residual_scan_oracle(spec, theta, n=20001):
    """Independent sign scan of the angle-sum residual over (0, tau2)."""
    tau2 = spec.tau2
    taus = [tau2 * k / n for k in range(1, n)]
    prev_t, prev_v = taus[0], angle_sum_residual(spec, taus[0], theta)
    for tau in taus[1:]:
        v = angle_sum_residual(spec, tau, theta)
        if (prev_v > 0) != (v > 0):
            return prev_t, tau
        prev_t, prev_v = tau, v
    raise AssertionError("oracle found no sign change")


class TestAngleOf:
    def test_quarter_circle_value(self):
        assert abs(angle_of(1, 1j) - 3 * math.pi / 4) <= 1e-12

    def test_positive_zero_small_radius_limit(self):
        t = 1e-9 * cmath.exp(0.3j)
        assert angle_of(2, t) > math.pi - 1e-6

    def test_negative_zero_small_radius_limit(self):
        t = 1e-9 * cmath.exp(0.3j)
        assert angle_of(-2, t) < 1e-6

    def test_lower_half_plane_rejected(self):
        with pytest.raises(DomainError):
            angle_of(1, 1 - 1j)

    def test_radius_identity_at_random_points(self, example_spec):
        # tau = zero * sin(angle) / sin(angle - theta) for every zero
        rng = random.Random(515)
        for _ in range(50):
            tau = rng.uniform(0.05, 5.0)
            theta = rng.uniform(0.05, math.pi - 0.05)
            t = tau * cmath.exp(1j * theta)
            for z in example_spec.P.zeros + example_spec.Q.zeros:
                ang = angle_of(z, t)
                back = float(z) * math.sin(ang) / math.sin(ang - theta)
                assert abs(back - tau) <= 1e-8 * tau


class TestAngleSumResidual:
    def test_small_radius_limit(self, example_spec):
        theta = 0.4
        want = math.pi - example_spec.r * theta
        assert abs(angle_sum_residual(example_spec, 1e-9, theta) - want) <= 1e-6

    def test_large_radius_limit(self, example_spec):
        theta = 0.4
        n = example_spec.P.total
        s = example_spec.Q.total
        excess = example_spec.P.pos_count - example_spec.Q.pos_count - 1
        want = (n - s - example_spec.r) * theta - excess * math.pi
        assert abs(angle_sum_residual(example_spec, 1e9, theta) - want) <= 1e-6

    def test_log_function_bookkeeping(self, example_spec):
        # real part of the analytic log combination is ln|t^r Q / P| and its
        # negated imaginary part is the signed angle sum
        p = expand(example_spec.P)
        q = expand(example_spec.Q)
        rng = random.Random(7272)
        count = 0
        while count < 100:
            t = complex(rng.uniform(-6, 6), rng.uniform(1e-3, 6))
            if min(abs(t - float(z)) for z in
                   example_spec.P.zeros + example_spec.Q.zeros) < 1e-2:
                continue
            count += 1
            f = example_spec.r * cmath.log(t)
            f += sum(cmath.log(t - float(z)) for z in example_spec.Q.zeros)
            f -= sum(cmath.log(t - float(z)) for z in example_spec.P.zeros)
            direct = t ** example_spec.r * q.eval(t) / p.eval(t)
            assert abs(f.real - math.log(abs(direct))) <= 1e-10 * (1 + abs(f.real))
            angles = sum(angle_of(z, t) for z in example_spec.P.zeros)
            angles -= sum(angle_of(z, t) for z in example_spec.Q.zeros)
            angles -= example_spec.r * cmath.phase(t)
            assert abs(angles - (-f.imag)) <= 1e-10 * (1 + abs(f.imag))


class TestSolveTau:
    def test_agrees_with_scan_oracle(self, example_spec):
        theta = math.pi / 6
        tau = solve_tau(example_spec, theta)
        lo, hi = residual_scan_oracle(example_spec, theta)
        assert lo <= tau <= hi
        assert abs(angle_sum_residual(example_spec, tau, theta)) <= 1e-10

    def test_endpoint_continuity_toward_zero(self, example_spec):
        t_a = find_t_a(example_spec)
        err_small = abs(solve_tau(example_spec, 1e-6) - t_a)
        err_mid = abs(solve_tau(example_spec, 1e-5) - t_a)
        err_large = abs(solve_tau(example_spec, 1e-4) - t_a)
        assert err_mid <= 1e-3
        assert err_small <= err_large

    def test_vanishes_toward_upper_angle(self, example_spec):
        theta = (math.pi / 3) * (1 - 1e-5)
        assert solve_tau(example_spec, theta) < 1e-3

    def test_theta_domain_enforced(self, example_spec):
        with pytest.raises(DomainError):
            solve_tau(example_spec, math.pi / 3 + 0.1)

    def test_repeated_smallest_zero_still_solvable(self):
        # with a repeated smallest positive zero the curve hugs the bracket
        # endpoint like theta^2, so stay above the degradation regime
        spec = make_spec([1, 1, 4], [-2], 2)
        tau = solve_tau(spec, 1e-3)
        assert abs(tau - 1.0) < 0.01
        assert find_t_a(spec) == 1.0


class TestZOfTheta:
    def test_endpoint_value_toward_zero(self, example_spec):
        t_a = find_t_a(example_spec)
        a = endpoint_value(example_spec, t_a)
        z, im_z = z_of_theta(example_spec, 1e-5)
        assert abs(z - a) <= 1e-3
        assert abs(im_z) <= 1e-8 * (1 + abs(z))

    def test_unbounded_toward_upper_angle(self, example_spec):
        z, _ = z_of_theta(example_spec, (math.pi / 3) * (1 - 1e-5))
        assert z < -1e10

    def test_positive_sign_spec_gives_positive_z(self, positive_z_spec):
        for k in range(1, 8):
            z, _ = z_of_theta(positive_z_spec, k * (math.pi / 3) / 8)
            assert z > 0


class TestTraceCurve:
    def test_invariants_on_example(self, example_spec):
        curve = trace_curve(example_spec, 200)
        assert len(curve.samples) == 200
        sign = example_spec.sign_exponent
        for s in curve.samples:
            assert abs(s.residual) <= 1e-10
            assert 0 < s.tau < example_spec.tau2
            assert abs(s.im_z) <= 1e-8 * (1 + abs(s.z))
        zs = [sign * s.z for s in curve.samples]
        assert all(b > a for a, b in zip(zs, zs[1:]))
        assert curve.t_a_limit == find_t_a(example_spec)
        assert curve.a_limit == endpoint_value(example_spec, curve.t_a_limit)

    def test_minimal_sample_count(self, example_spec):
        curve = trace_curve(example_spec, 2)
        assert len(curve.samples) == 2
        sign = example_spec.sign_exponent
        assert sign * curve.samples[1].z > sign * curve.samples[0].z

    def test_sample_count_validated(self, example_spec):
        with pytest.raises(DomainError):
            trace_curve(example_spec, 1)

    def test_repeated_zero_curve_traces_without_flags(self):
        # theta grid stays far above the low-confidence cutoff, so every
        # sample is full confidence even though the smallest zero is double
        spec = make_spec([1, 1, 4], [-2], 2)
        curve = trace_curve(spec, 10)
        assert len(curve.samples) == 10
        assert all(not s.low_confidence for s in curve.samples)
        assert curve.t_a_limit == 1.0

    def test_positive_z_curve_shape(self, positive_z_spec):
        curve = trace_curve(positive_z_spec, 200)
        t_a = find_t_a(positive_z_spec)
        taus = [s.tau for s in curve.samples]
        assert abs(taus[0] - t_a) < 0.1
        assert taus[-1] < 0.1
        assert all(s.z > 0 for s in curve.samples)

    def test_interior_points_have_nonreal_ratio(self, example_spec):
        # P/(t^r Q) is real on the curve and only there inside the region
        curve = trace_curve(example_spec, 200)
        for k in (40, 100, 160):
            s = curve.samples[k]
            for j in range(1, 21):
                rho = s.tau * j / 21
                t = rho * cmath.exp(1j * s.theta)
                w = eval_at(example_spec.P, t) / (
                    t ** example_spec.r * eval_at(example_spec.Q, t))
                assert abs(w.imag) > 1e-9 * (1 + abs(w))


class TestDiskSeparation:
    @pytest.mark.parametrize("theta", [math.pi / 12, math.pi / 6, math.pi / 4])
    def test_example_separates(self, example_spec, theta):
        assert check_disk_separation(example_spec, theta)

    def test_refuses_failing_hypotheses(self, interlaced_spec):
        with pytest.raises(HypothesisError):
            check_disk_separation(interlaced_spec, math.pi / 6)
