"""Simulation of adiabatic state transfer and Bell-state generation between
two qubits coupled through a multimode interconnect, with full Lindblad
open-system dynamics and both plain (stirap) and superadiabatic (satd)
pulse protocols."""

from ._version import __version__
from .hilbert import (
    CompositeSpace,
    DensityMatrix,
    OperatorMatrix,
    SubsystemSpec,
    annihilation,
    basis_state,
    basis_vector,
    embed,
    expectation,
    number,
)
from .model import (
    DissipatorSpec,
    LindbladModel,
    ModelParams,
    build_coupling_hamiltonian,
    build_dissipators,
    build_model,
    build_space,
    build_static_hamiltonian,
    kappa_of_mode,
)
from .pulses import (
    AngleProfile,
    PulseSchedule,
    controls,
    dressing_angle,
    emit_waveform,
    satd_controls,
    satd_dressing,
    stirap_controls,
    theta,
    write_waveform_csv,
)
from .lindblad import (
    EvolutionResult,
    IntegrationError,
    IntegratorConfig,
    SolverDiagnostics,
    TrajectorySamples,
    evolve,
    evolve_subspace,
    lindblad_rhs,
)
from .analysis import (
    LeakageBreakdown,
    TargetState,
    adiabatic_bell_floor,
    bell_phase_scan,
    bell_target,
    bright_states,
    dark_state,
    fidelity_error,
    indirect_gate_error,
    lambda_hamiltonian,
    leakage_breakdown,
    pseudo_dark_state,
    stirap_leakage_estimate,
    transfer_target,
)
from .sweeps import (
    ConvergenceReport,
    RunRecord,
    SweepSpec,
    figure_names,
    figure_recipes,
    records_to_csv,
    rerun_record,
    run_convergence,
    run_sweep,
    simulate_point,
    write_sweep_outputs,
)
