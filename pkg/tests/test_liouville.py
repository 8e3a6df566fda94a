"""Fixed-step RK4 Liouville propagator and the drive variants."""
import numpy as np
import pytest

from qdrive import (
    BadParam,
    InvariantDrift,
    OutOfRange,
    PulseParams,
    RabiParams,
    RwaRabi,
    Sampled,
    SquarePulse,
    StepSpansDiscontinuity,
    TimeGrid,
    dm_new,
    ground_state_dm,
    hamiltonian_at,
    liouville_rhs,
    mat2,
    propagate,
    pulse_density,
    rabi_density,
)

RES = RabiParams(e_g=0.0, e_e=1.0, omega0=1.0, coupling=0.5)


def zero_drive(t_end: float = 10.0) -> Sampled:
    return Sampled(times=np.array([0.0, t_end]),
                   matrices=np.zeros((2, 2, 2), dtype=complex))


class TestHamiltonianAt:
    def test_rwa_at_zero(self):
        p = RabiParams(e_g=0.2, e_e=1.3, omega0=0.9, coupling=0.3 + 0.4j)
        h = hamiltonian_at(RwaRabi(p), 0.0)
        expected = mat2(0.2, 0.3 - 0.4j, 0.3 + 0.4j, 1.3)
        assert np.abs(h - expected).max() <= 1e-15

    def test_square_pulse_branches(self):
        p = PulseParams(e0=1.0, f0=1.0, n_period=1)
        assert np.abs(hamiltonian_at(SquarePulse(p), 0.0)
                      - mat2(-1, -1, -1, 1)).max() == 0.0
        # right-limit branch at the switch: -E0 sigma_z + f0 E0 sigma_x
        assert np.abs(hamiltonian_at(SquarePulse(p), p.period / 2)
                      - mat2(-1, 1, 1, 1)).max() == 0.0

    def test_sampled_piecewise_left(self):
        drive = Sampled(
            times=np.array([0.0, 1.0, 2.0]),
            matrices=np.stack([k * np.eye(2, dtype=complex) for k in (1.0, 2.0, 3.0)]),
        )
        assert hamiltonian_at(drive, 0.5)[0, 0] == 1.0
        assert hamiltonian_at(drive, 1.0)[0, 0] == 2.0
        assert hamiltonian_at(drive, 2.0)[0, 0] == 3.0
        with pytest.raises(OutOfRange):
            hamiltonian_at(drive, 2.5)
        with pytest.raises(OutOfRange):
            hamiltonian_at(drive, -0.1)

    def test_sampled_validation(self):
        with pytest.raises(BadParam):
            Sampled(times=np.array([0.0, 0.0]), matrices=np.zeros((2, 2, 2), dtype=complex))
        nonherm = np.zeros((1, 2, 2), dtype=complex)
        nonherm[0, 0, 1] = 1.0
        with pytest.raises(BadParam):
            Sampled(times=np.array([0.0]), matrices=nonherm)


class TestRhs:
    def test_zero_hamiltonian(self):
        rho = ground_state_dm().matrix
        assert np.abs(liouville_rhs(zero_drive(), 1.0, rho)).max() == 0.0

    def test_resonant_initial_slope(self):
        # -i[H, diag(1,0)] has off-diagonal entries +i conj(g), -i g
        p = RabiParams(e_g=0.0, e_e=1.0, omega0=1.0, coupling=0.3 + 0.4j)
        out = liouville_rhs(RwaRabi(p), 0.0, ground_state_dm().matrix)
        expected = mat2(0.0, 1j * np.conj(p.coupling), -1j * p.coupling, 0.0)
        assert np.abs(out - expected).max() <= 1e-15

    def test_commuting_matrices_give_zero(self):
        drive = Sampled(times=np.array([0.0, 1.0]),
                        matrices=np.stack([np.diag([1.0, 2.0]).astype(complex)] * 2))
        rho = np.diag([0.3, 0.7]).astype(complex)
        assert np.abs(liouville_rhs(drive, 0.5, rho)).max() == 0.0


class TestPropagate:
    def test_zero_drive_is_constant(self):
        rho0 = dm_new(mat2(0.7, 0.2, 0.2, 0.3))
        series = propagate(zero_drive(), rho0, TimeGrid(0.0, 5.0, 64))
        assert np.abs(series.rho - rho0.matrix).max() == 0.0

    def test_rabi_example_against_closed_form(self):
        # one population period 2 pi / (2 Omega) at Omega = 1/2
        grid = TimeGrid(0.0, 2 * np.pi, 5000)
        series = propagate(RwaRabi(RES), ground_state_dm(), grid)
        err = np.abs(series.rho[-1] - rabi_density(RES, grid.t_end).matrix).max()
        assert err <= 1e-8

    def test_pulse_returns_to_ground(self):
        p = PulseParams(e0=1.0, f0=1.0, n_period=1)
        series = propagate(SquarePulse(p), ground_state_dm(), TimeGrid(0.0, p.period, 8192))
        assert np.abs(series.rho[-1] - np.diag([1.0, 0.0])).max() <= 1e-8

    def test_series_has_measure_columns(self):
        p = PulseParams(e0=1.0, f0=0.5, n_period=1)
        series = propagate(SquarePulse(p), ground_state_dm(), TimeGrid(0.0, p.period, 128))
        assert len(series) == 129
        assert np.all(series.purity > 0.999999)
        assert np.abs(series.c_frob - 1.0).max() <= 1e-6
        # spot-check one l1 value against the closed form
        i = 32
        assert series.c_l1[i] == pytest.approx(
            2 * abs(pulse_density(p, series.t[i]).rho01), abs=1e-7)

    def test_conservation_properties(self):
        runs = [
            (RwaRabi(RES), TimeGrid(0.0, RES.population_period, 5000)),
            (SquarePulse(PulseParams(e0=1.0, f0=1.0, n_period=1)),
             TimeGrid(0.0, PulseParams(e0=1.0, f0=1.0, n_period=1).period, 8192)),
        ]
        for drive, grid in runs:
            series = propagate(drive, ground_state_dm(), grid)
            trace_drift = np.abs(series.rho[:, 0, 0] + series.rho[:, 1, 1] - 1.0).max()
            herm_drift = np.abs(series.rho[:, 0, 1] - series.rho[:, 1, 0].conj()).max()
            purity_drift = np.abs(series.purity - 1.0).max()
            assert trace_drift <= 1e-9
            assert herm_drift <= 1e-9
            assert purity_drift <= 1e-8

    def test_fourth_order_convergence(self):
        # halving h shrinks the closed-form error ~16x while truncation
        # still dominates rounding
        errs = {}
        for steps in (2500, 5000):
            grid = TimeGrid(0.0, RES.population_period, steps)
            series = propagate(RwaRabi(RES), ground_state_dm(), grid)
            errs[steps] = max(
                np.abs(series.rho[i] - rabi_density(RES, t).matrix).max()
                for i, t in enumerate(series.t)
            )
        ratio = errs[2500] / errs[5000]
        assert 8.0 <= ratio <= 32.0

    def test_switch_inside_step_rejected(self):
        p = PulseParams(e0=1.0, f0=1.0, n_period=1)
        with pytest.raises(StepSpansDiscontinuity):
            propagate(SquarePulse(p), ground_state_dm(), TimeGrid(0.0, p.period, 101))

    def test_aligned_multiperiod_grid_accepted(self):
        p = PulseParams(e0=1.0, f0=1.0, n_period=1)
        series = propagate(SquarePulse(p), ground_state_dm(),
                           TimeGrid(0.0, 2 * p.period, 1024))
        assert np.abs(series.rho[-1] - np.diag([1.0, 0.0])).max() <= 1e-8

    def test_sampled_out_of_range_propagation(self):
        with pytest.raises(OutOfRange):
            propagate(zero_drive(t_end=1.0), ground_state_dm(), TimeGrid(0.0, 2.0, 16))

    def test_invariant_drift_detected(self):
        # a 1e-12 Hermiticity defect on the diagonal is amplified by a wildly
        # unstable step size until the drift guard trips; the Hermitian part
        # (I/2 + sigma_x/2) commutes with the sigma_x drive and stays put
        drive = Sampled(times=np.array([0.0, 1000.0]),
                        matrices=np.stack([mat2(0, 1, 1, 0)] * 2))
        rho0 = dm_new(mat2(0.5 + 1e-12j, 0.5, 0.5, 0.5))
        with pytest.raises(InvariantDrift):
            propagate(drive, rho0, TimeGrid(0.0, 1000.0, 10))
