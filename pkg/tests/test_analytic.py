import math

import numpy as np
import pytest

from drivenwalk import (
    AnalyticParams,
    PhaseSchedule,
    SeedAmplitudes,
    SingularTimeError,
    Spinor,
    WalkConfig,
    airy_ai,
    analytic_amplitude,
    analytic_distribution,
    default_grid,
    evolve,
    make_params,
    seed_from_simulation,
    velocity_integral,
    z_kernel,
)

RT = 1.0 / math.sqrt(2.0)


def point_seed():
    """All weight in one site at step 0; step-1 amplitudes empty."""
    return SeedAmplitudes(a0={"R": {0: 1.0 + 0.0j}, "L": {}}, a1={"R": {}, "L": {}})


class TestZKernel:
    def test_matches_direct_formula(self):
        sch = PhaseSchedule.linear(0.3, 0.02)
        tau = 40.0
        ivalue = velocity_integral(sch, tau)
        xi = np.linspace(-30.0, 30.0, 241)
        alpha = abs(2.0 / ivalue) ** (1.0 / 3.0)
        for b in (+1, -1):
            want = alpha * airy_ai(alpha * (b * xi - ivalue))
            got = z_kernel(xi, tau, b, sch)
            assert np.max(np.abs(got - want)) == 0.0

    def test_zero_argument_value(self):
        sch = PhaseSchedule.constant(0.5)
        tau = 12.0
        ivalue = velocity_integral(sch, tau)
        alpha = abs(2.0 / ivalue) ** (1.0 / 3.0)
        want = alpha * airy_ai(0.0)
        assert z_kernel(ivalue, tau, +1, sch) == pytest.approx(want, abs=1e-12)
        assert z_kernel(-ivalue, tau, -1, sch) == pytest.approx(want, abs=1e-12)

    def test_peak_location_free_walk(self):
        # Ballistic schedule, tau = 8: front at 8, Airy max offset
        # 1.0188/alpha behind it, mirrored per branch.
        sch = PhaseSchedule.constant(0.0)
        xi = np.linspace(-12.0, 12.0, 9601)
        alpha = (2.0 / 8.0) ** (1.0 / 3.0)
        want = 8.0 - 1.018792971647471 / alpha
        zp = z_kernel(xi, 8.0, +1, sch)
        zm = z_kernel(xi, 8.0, -1, sch)
        assert xi[np.argmax(zp)] == pytest.approx(want, abs=0.01)
        assert xi[np.argmax(zm)] == pytest.approx(-want, abs=0.01)

    def test_singular_time_raises(self):
        sch = PhaseSchedule.linear(0.0, math.pi / 60)
        with pytest.raises(SingularTimeError):
            z_kernel(0.0, 120.0, +1, sch)
        with pytest.raises(SingularTimeError):
            z_kernel(0.0, 0.0, +1, sch)

    def test_branch_argument_forms(self):
        sch = PhaseSchedule.constant(0.0)
        assert z_kernel(1.0, 5.0, "+", sch) == z_kernel(1.0, 5.0, +1, sch)
        assert z_kernel(1.0, 5.0, "-", sch) == z_kernel(1.0, 5.0, -1, sch)
        with pytest.raises(ValueError):
            z_kernel(1.0, 5.0, 2, sch)

    def test_scalar_and_array_shapes(self):
        sch = PhaseSchedule.constant(0.0)
        assert isinstance(z_kernel(0.5, 5.0, +1, sch), float)
        assert z_kernel(np.zeros((2, 3)), 5.0, +1, sch).shape == (2, 3)


class TestSeeds:
    def test_default_initial_step0(self):
        cfg = WalkConfig(steps=4, schedule=PhaseSchedule.constant(math.pi / 4))
        seeds = seed_from_simulation(cfg)
        assert seeds.a0["R"] == {0: pytest.approx(RT)}
        assert seeds.a0["L"] == {0: pytest.approx(1j * RT)}

    def test_quarter_pi_step1(self):
        cfg = WalkConfig(steps=4, schedule=PhaseSchedule.constant(math.pi / 4))
        seeds = seed_from_simulation(cfg)
        assert seeds.a1["R"] == {1: pytest.approx(0.5 + 0.5j, abs=1e-15)}
        assert seeds.a1["L"] == {-1: pytest.approx(0.5 - 0.5j, abs=1e-15)}

    def test_ballistic_right_seed(self):
        cfg = WalkConfig(
            steps=4, schedule=PhaseSchedule.constant(0.0), initial=Spinor(1.0, 0.0)
        )
        seeds = seed_from_simulation(cfg)
        assert seeds.a1["R"] == {1: pytest.approx(1.0)}
        assert seeds.a1["L"] == {}

    def test_linear_uses_theta_at_step_zero(self):
        # theta_0 = theta0 regardless of omega.
        cfg_a = WalkConfig(steps=4, schedule=PhaseSchedule.linear(0.7, 0.3))
        cfg_b = WalkConfig(steps=4, schedule=PhaseSchedule.constant(0.7))
        sa, sb = seed_from_simulation(cfg_a), seed_from_simulation(cfg_b)
        assert sa.a1 == sb.a1


class TestAmplitude:
    def test_component_with_no_seed_is_zero(self):
        params = AnalyticParams(
            grid=default_grid(10), times=np.array([8.0]), seed_amplitudes=point_seed()
        )
        sch = PhaseSchedule.constant(0.0)
        ap, am = analytic_amplitude(params.grid, 8.0, "L", params, sch)
        assert np.all(ap == 0.0) and np.all(am == 0.0)

    def test_single_seed_reduces_to_kernel(self):
        params = AnalyticParams(
            grid=default_grid(10), times=np.array([8.0]), seed_amplitudes=point_seed()
        )
        sch = PhaseSchedule.constant(0.0)
        ap, am = analytic_amplitude(params.grid, 8.0, "R", params, sch)
        assert np.max(np.abs(ap - 0.5 * z_kernel(params.grid, 8.0, +1, sch))) == 0.0
        assert np.max(np.abs(am - 0.5 * z_kernel(params.grid, 8.0, -1, sch))) == 0.0

    def test_dominant_branch_peaks_track_front(self):
        # Crossing-chain parameters at tau = 30: front at +-19.0986.
        sch = PhaseSchedule.linear(0.0, math.pi / 60)
        cfg = WalkConfig(steps=60, schedule=sch)
        params = make_params(cfg, times=[30.0])
        front = velocity_integral(sch, 30.0)
        ap_r, _ = analytic_amplitude(params.grid, 30.0, "R", params, sch)
        _, am_l = analytic_amplitude(params.grid, 30.0, "L", params, sch)
        assert params.grid[np.argmax(np.abs(ap_r))] == pytest.approx(front, abs=2.0)
        assert params.grid[np.argmax(np.abs(am_l))] == pytest.approx(-front, abs=2.0)

    def test_singular_time_raises(self):
        params = AnalyticParams(
            grid=default_grid(10), times=np.array([8.0]), seed_amplitudes=point_seed()
        )
        with pytest.raises(SingularTimeError):
            analytic_amplitude(params.grid, 120.0, "R", params, PhaseSchedule.linear(0.0, math.pi / 60))

    def test_state_validation(self):
        params = AnalyticParams(
            grid=default_grid(10), times=np.array([8.0]), seed_amplitudes=point_seed()
        )
        with pytest.raises(ValueError):
            analytic_amplitude(params.grid, 8.0, "X", params, PhaseSchedule.constant(0.0))


class TestMirrorSymmetry:
    def test_point_seed_exact_mirror(self):
        sch = PhaseSchedule.constant(0.0)
        grid = default_grid(20)
        params = AnalyticParams(grid=grid, times=np.array([9.0]), seed_amplitudes=point_seed())
        ap, am = analytic_amplitude(grid, 9.0, "R", params, sch)
        assert np.max(np.abs(ap - am[::-1])) <= 1e-9

    def test_mirror_holds_with_width_parameter(self):
        sch = PhaseSchedule.constant(0.0)
        grid = default_grid(20)
        params = AnalyticParams(
            grid=grid, times=np.array([9.0]), seed_amplitudes=point_seed(), w=0.4
        )
        ap, am = analytic_amplitude(grid, 9.0, "R", params, sch)
        assert np.max(np.abs(ap - am[::-1])) <= 1e-9


class TestDistribution:
    def test_decomposition_and_positivity(self):
        sch = PhaseSchedule.linear(math.pi / 4, math.pi / 60)
        cfg = WalkConfig(steps=50, schedule=sch)
        params = make_params(cfg, times=[15.0, 16.0, 45.0])
        field = analytic_distribution(params, sch)
        assert not field.absent.any()
        assert np.all(field.P >= 0.0)
        assert np.max(np.abs(field.P - (field.PR + field.PL))) == 0.0

    def test_parity_combination_consistency(self):
        sch = PhaseSchedule.linear(math.pi / 4, math.pi / 60)
        cfg = WalkConfig(steps=50, schedule=sch)
        params = make_params(cfg, times=[15.0, 16.0])
        field = analytic_distribution(params, sch)
        for i, tau in enumerate(params.times):
            parity = 1.0 if int(round(tau)) % 2 == 0 else -1.0
            pr = np.abs(field.amp[("R", 1)][i] + parity * field.amp[("R", -1)][i]) ** 2
            assert np.max(np.abs(field.PR[i] - pr)) == 0.0

    def test_vanishing_minus_branch_makes_parity_irrelevant(self):
        # Equal step-0/step-1 seeds cancel the minus branch entirely.
        seeds = SeedAmplitudes(a0={"R": {0: 1.0}, "L": {}}, a1={"R": {0: 1.0}, "L": {}})
        sch = PhaseSchedule.constant(0.0)
        params = AnalyticParams(grid=default_grid(12), times=np.array([7.0, 8.0]), seed_amplitudes=seeds)
        even = analytic_distribution(params, sch, n_parity_source=0)
        odd = analytic_distribution(params, sch, n_parity_source=1)
        assert np.max(np.abs(even.P - odd.P)) == 0.0
        assert np.max(np.abs(even.amp[("R", -1)][0])) == 0.0

    def test_singular_rows_absent(self):
        sch = PhaseSchedule.linear(0.0, math.pi / 60)
        cfg = WalkConfig(steps=130, schedule=sch)
        params = make_params(cfg, times=[0.0, 30.0, 60.0, 120.0])
        field = analytic_distribution(params, sch)
        assert list(field.absent) == [True, False, True, True]
        assert np.all(np.isnan(field.P[0]))
        assert np.all(np.isfinite(field.P[1]))

    def test_crossing_time_peaks_meet_at_origin(self):
        # Branch fronts coincide near xi = 0 one step away from the
        # singular crossing time.
        sch = PhaseSchedule.linear(0.0, math.pi / 60)
        cfg = WalkConfig(steps=70, schedule=sch)
        params = make_params(cfg, times=[59.0, 61.0])
        field = analytic_distribution(params, sch)
        for i in range(2):
            assert abs(params.grid[np.argmax(field.PR[i])]) <= 2.0
            assert abs(params.grid[np.argmax(field.PL[i])]) <= 2.0

    def test_parity_source_validation(self):
        sch = PhaseSchedule.constant(0.0)
        params = AnalyticParams(
            grid=default_grid(5), times=np.array([3.0]), seed_amplitudes=point_seed()
        )
        with pytest.raises(ValueError):
            analytic_distribution(params, sch, n_parity_source=1.5)


class TestPeakConsistency:
    # Walk argmax vs field argmax at decade times, singular times skipped.
    CONFIGS = (
        (math.pi / 4, (30,)),
        (0.0, (60,)),
        (3 * math.pi / 2, ()),
    )

    @pytest.mark.parametrize("theta0,skip", CONFIGS)
    def test_decade_argmax_within_four_sites(self, theta0, skip):
        sch = PhaseSchedule.linear(theta0, math.pi / 60)
        cfg = WalkConfig(steps=110, schedule=sch)
        rec = evolve(cfg)
        times = [float(t) for t in range(20, 111, 10) if t not in skip]
        params = make_params(cfg, times=times)
        field = analytic_distribution(params, sch)
        for i, tau in enumerate(times):
            assert not field.absent[i]
            xi_star = params.grid[np.argmax(field.P[i])]
            m_star = rec.sites[np.argmax(rec.P[int(tau)])]
            assert abs(xi_star - m_star) <= 4.0


class TestParams:
    def test_grid_must_increase(self):
        with pytest.raises(ValueError):
            AnalyticParams(
                grid=np.array([0.0, 0.0, 1.0]),
                times=np.array([1.0]),
                seed_amplitudes=point_seed(),
            )

    def test_times_nonnegative(self):
        with pytest.raises(ValueError):
            AnalyticParams(
                grid=np.array([0.0, 1.0]), times=np.array([-1.0]), seed_amplitudes=point_seed()
            )

    def test_seed_norm_enforced(self):
        bad = SeedAmplitudes(a0={"R": {0: 0.5}, "L": {}}, a1={"R": {}, "L": {}})
        with pytest.raises(ValueError):
            AnalyticParams(grid=np.array([0.0, 1.0]), times=np.array([1.0]), seed_amplitudes=bad)

    def test_default_grid_shape(self):
        g = default_grid(300)
        assert g[0] == -305.0 and g[-1] == 305.0
        assert len(g) == 1221
        assert np.allclose(np.diff(g), 0.5)

    def test_make_params_defaults(self):
        cfg = WalkConfig(steps=12, schedule=PhaseSchedule.constant(0.1))
        params = make_params(cfg)
        assert list(params.times) == [float(t) for t in range(13)]
        assert params.w == 0.0
