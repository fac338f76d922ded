import math

import numpy as np
import pytest

from mmpassage.hilbert import basis_state
from mmpassage.lindblad import (
    IntegratorConfig,
    evolve,
    evolve_subspace,
    lindblad_rhs,
)
from mmpassage.model import ModelParams, build_model
from mmpassage.pulses import AngleProfile, PulseSchedule
from mmpassage.analysis import fidelity_error, transfer_target

TWO_PI = 2 * math.pi


def make_model(side_modes=0, g_MHz=15.0, **kw):
    params = ModelParams(fsr=TWO_PI * 100e6, side_modes=side_modes,
                         peak_coupling=TWO_PI * g_MHz * 1e6, **kw)
    return build_model(params)


def make_schedule(protocol, tau, theta_p=math.pi / 2, g_MHz=15.0, kind=None):
    kind = kind or ("linear" if protocol == "stirap" else "quintic")
    return PulseSchedule(protocol, AngleProfile(kind, theta_p, tau), TWO_PI * g_MHz * 1e6)


def excited_a(model):
    occ = [0] * model.space.n_subsystems
    occ[0] = 1
    return basis_state(model.space, occ)


def test_rhs_vanishes_for_maximally_mixed_closed_system():
    model = make_model()
    sched = make_schedule("stirap", 100e-9)
    dim = model.space.total_dimension
    rho = np.eye(dim) / dim
    out = lindblad_rhs(40e-9, rho, model, sched)
    assert np.max(np.abs(out)) < 1e-20


def test_rhs_relaxation_rate_equation():
    # H = 0 (zero couplings, resonant), single relaxation channel on qubit a
    model = make_model(side_modes=0, T1_a=100e-6)
    sched = PulseSchedule("stirap", AngleProfile("linear", 0.0, 100e-9), 0.0)
    rho = excited_a(model).matrix
    out = lindblad_rhs(0.0, rho, model, sched)
    k = model.space.flat_index([1, 0, 0])
    assert out[k, k].real == pytest.approx(-1 / 100e-6)


def test_rhs_traceless_for_random_hermitian_state():
    rng = np.random.default_rng(5)
    model = make_model(side_modes=1, T1_a=50e-6, T2phi_b=5e-6, Q_c=1e5)
    sched = make_schedule("satd", 80e-9)
    dim = model.space.total_dimension
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = m + m.conj().T
    out = lindblad_rhs(30e-9, rho, model, sched)
    # exact identities up to roundoff of the ~1e9 rad/s entries
    assert abs(np.trace(out)) < 1e-14 * dim * np.max(np.abs(out))
    assert np.max(np.abs(out - out.conj().T)) < 1e-14 * dim * np.max(np.abs(out))


def test_evolve_identity_without_drive():
    model = make_model(side_modes=0)
    sched = PulseSchedule("stirap", AngleProfile("linear", 0.0, 100e-9), 0.0)
    rho0 = excited_a(model)
    res = evolve(rho0, model, sched)
    assert np.max(np.abs(res.final_state.matrix - rho0.matrix)) < 1e-10


def test_evolve_pure_relaxation_matches_exponential():
    model = make_model(side_modes=0, T1_a=100e-6)
    sched = PulseSchedule("stirap", AngleProfile("linear", 0.0, 100e-9), 0.0)
    res = evolve(excited_a(model), model, sched)
    k = model.space.flat_index([1, 0, 0])
    expected = math.exp(-100e-9 / 100e-6)
    assert res.final_state.matrix[k, k].real == pytest.approx(expected, abs=1e-9)


def test_single_mode_transfer_at_lobe_minimum():
    model = make_model()
    g = TWO_PI * 15e6
    sched = make_schedule("stirap", 4 * math.pi / g)
    res = evolve_subspace(excited_a(model), model, sched)
    assert fidelity_error(res.final_state, transfer_target(model.space)) < 1e-3


def test_closed_system_purity_preserved():
    model = make_model(side_modes=1)
    sched = make_schedule("satd", 60e-9)
    res = evolve_subspace(excited_a(model), model, sched)
    assert res.final_state.purity() == pytest.approx(1.0, abs=1e-8)


def test_trace_and_positivity_with_dissipation():
    model = make_model(side_modes=1, T1_a=30e-6, T1_b=30e-6, T2phi_a=5e-6,
                       T2phi_b=5e-6, Q_c=2e4)
    sched = make_schedule("stirap", 120e-9)
    res = evolve_subspace(excited_a(model), model, sched)
    rho = res.final_state.matrix
    assert abs(np.trace(rho).real - 1.0) < 1e-8
    assert np.linalg.eigvalsh(rho).min() > -1e-7
    assert np.max(np.abs(rho - rho.conj().T)) < 1e-9


def test_full_and_subspace_agree_elementwise():
    model = make_model(side_modes=1, T1_a=100e-6, T1_b=100e-6, T2phi_a=10e-6,
                       T2phi_b=10e-6, Q_c=1e5)
    g = TWO_PI * 15e6
    sched = make_schedule("stirap", 2 * math.pi / g)
    rho0 = excited_a(model)
    full = evolve(rho0, model, sched).final_state
    sub = evolve_subspace(rho0, model, sched).final_state
    _, idx = model.space.low_excitation_basis()
    block = np.ix_(idx, idx)
    assert np.max(np.abs(full.matrix[block] - sub.matrix[block])) < 1e-8
    # no weight appears outside the block in the full integration either
    off = full.matrix.copy()
    off[block] = 0.0
    assert np.max(np.abs(off)) < 1e-10


def test_full_and_subspace_agree_on_error():
    model = make_model(side_modes=1, T1_a=100e-6, T1_b=100e-6, T2phi_a=10e-6,
                       T2phi_b=10e-6, Q_c=1e5)
    g = TWO_PI * 15e6
    sched = make_schedule("stirap", 4 * math.pi / g)
    rho0 = excited_a(model)
    e_full = fidelity_error(evolve(rho0, model, sched).final_state,
                            transfer_target(model.space))
    e_sub = fidelity_error(evolve_subspace(rho0, model, sched).final_state,
                           transfer_target(model.space))
    assert abs(e_full - e_sub) < 1e-8


def test_subspace_dimension_counts():
    model = make_model(side_modes=2)
    assert model.space.total_dimension == 128
    _, idx = model.space.low_excitation_basis()
    assert idx.size == 8


def test_tolerance_halving_converged():
    model = make_model(side_modes=2, T1_a=100e-6, T1_b=100e-6, Q_c=1e5)
    g = TWO_PI * 15e6
    sched = make_schedule("stirap", 4 * math.pi / g)
    rho0 = excited_a(model)
    target = transfer_target(model.space)
    e1 = fidelity_error(
        evolve_subspace(rho0, model, sched, IntegratorConfig(1e-10, 1e-10)).final_state, target)
    e2 = fidelity_error(
        evolve_subspace(rho0, model, sched, IntegratorConfig(5e-11, 5e-11)).final_state, target)
    assert abs(e1 - e2) < 1e-8


def test_evolve_deterministic():
    model = make_model(side_modes=1, T1_a=100e-6, Q_c=1e5)
    sched = make_schedule("satd", 70e-9)
    rho0 = excited_a(model)
    r1 = evolve_subspace(rho0, model, sched)
    r2 = evolve_subspace(rho0, model, sched)
    np.testing.assert_array_equal(r1.final_state.matrix, r2.final_state.matrix)
    assert r1.diagnostics.steps == r2.diagnostics.steps
    assert r1.diagnostics.rhs_evaluations == r2.diagnostics.rhs_evaluations


def test_subspace_rejects_unsupported_state():
    model = make_model(side_modes=0)
    sched = make_schedule("stirap", 50e-9)
    two_exc = basis_state(model.space, [1, 1, 0])
    with pytest.raises(ValueError):
        evolve_subspace(two_exc, model, sched)


def test_space_mismatch_rejected():
    model = make_model(side_modes=0)
    other = make_model(side_modes=1)
    sched = make_schedule("stirap", 50e-9)
    with pytest.raises(ValueError):
        evolve(excited_a(other), model, sched)


def test_sample_times_trajectory():
    model = make_model(side_modes=0)
    g = TWO_PI * 15e6
    tau = 4 * math.pi / g
    sched = make_schedule("stirap", tau)
    times = np.linspace(0.0, tau, 21)
    res = evolve_subspace(excited_a(model), model, sched, sample_times=times)
    assert res.sampled is not None
    assert res.sampled.values.shape == (21, 3)
    np.testing.assert_allclose(res.sampled.times, times, atol=1e-18)
    # starts fully on qubit a, ends (almost) fully on qubit b
    assert res.sampled.values[0, 0] == pytest.approx(1.0)
    assert res.sampled.values[-1, -1] == pytest.approx(1.0, abs=1e-3)
    # populations stay in [0, 1] along the way
    assert res.sampled.values.min() > -1e-9
    assert res.sampled.values.max() < 1 + 1e-9


def test_diagnostics_populated():
    model = make_model(side_modes=0)
    sched = make_schedule("stirap", 100e-9)
    res = evolve_subspace(excited_a(model), model, sched)
    d = res.diagnostics
    assert d.steps > 0
    assert d.rhs_evaluations > 12 * d.steps
    assert d.rejected_steps >= 0
    assert d.wall_time_s > 0


def test_integrator_config_validation():
    with pytest.raises(ValueError):
        IntegratorConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        IntegratorConfig(method="rk4")
