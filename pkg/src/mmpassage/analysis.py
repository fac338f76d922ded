"""Error metrics, eigenstructure oracles and analytic leakage estimates.

Everything here is closed-form or quadrature-based and independent of the
time integrator, so these functions double as cross-checks on simulation
output: the Lambda-system eigenstates, the leading-order (Magnus)
dark-to-bright leakage of the linear-ramp protocol, the pseudo-dark state
of the alternating-sign multimode chain, and the (g/fsr)^2 adiabatic
error floor it imposes on Bell-state generation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .hilbert import CompositeSpace, DensityMatrix, basis_vector
from .model import mode_offset_of
from .pulses import AngleProfile, theta

TARGET_KINDS = ("transfer", "bell")


@dataclass(frozen=True)
class TargetState:
    """Ideal final state: a unit vector on the composite space."""

    kind: str
    vector: np.ndarray
    space: CompositeSpace

    def __post_init__(self):
        v = np.asarray(self.vector, dtype=complex)
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise ValueError("target vector must be normalized")
        v.setflags(write=False)
        object.__setattr__(self, "vector", v)


def _single_excitation(space: CompositeSpace, label: str) -> np.ndarray:
    occ = [0] * space.n_subsystems
    occ[space.index_of(label)] = 1
    return basis_vector(space, occ)


def transfer_target(space: CompositeSpace) -> TargetState:
    """|0_a, 0...0, 1_b>."""
    return TargetState("transfer", _single_excitation(space, "b"), space)


def bell_target(space: CompositeSpace) -> TargetState:
    """(|1_a, 0...0, 0_b> - |0_a, 0...0, 1_b>)/sqrt(2); the relative sign is physical."""
    v = (_single_excitation(space, "a") - _single_excitation(space, "b")) / math.sqrt(2)
    return TargetState("bell", v, space)


def fidelity_error(rho: DensityMatrix, target: TargetState) -> float:
    """E = 1 - <psi|rho|psi>.  Raw value, never clipped.

    The metric is a projector overlap, so a global phase of the final
    state (the transfer protocol lands on -|...1_b> exactly) does not
    register; do not "fix" signs upstream.
    """
    if rho.space.dims != target.space.dims:
        raise ValueError("state and target live on different spaces")
    v = target.vector
    return float(1.0 - np.real(v.conj() @ rho.matrix @ v))


def lambda_hamiltonian(g_ac: float, g_bc: float) -> np.ndarray:
    """Resonant three-level chain (a, c, b) with instantaneous couplings."""
    return np.array([[0.0, g_ac, 0.0],
                     [g_ac, 0.0, g_bc],
                     [0.0, g_bc, 0.0]], dtype=complex)


def dark_state(th: float) -> np.ndarray:
    """Zero-eigenvalue eigenstate (cos theta, 0, -sin theta) of the Lambda chain."""
    return np.array([math.cos(th), 0.0, -math.sin(th)], dtype=complex)


def bright_states(th: float) -> tuple[np.ndarray, np.ndarray]:
    """Eigenstates at +-g: (sin theta, +-1, cos theta)/sqrt(2)."""
    s, c = math.sin(th), math.cos(th)
    b_plus = np.array([s, 1.0, c], dtype=complex) / math.sqrt(2)
    b_minus = np.array([s, -1.0, c], dtype=complex) / math.sqrt(2)
    return b_plus, b_minus


def stirap_leakage_estimate(profile: AngleProfile, g: float,
                            quad_tol: float = 1e-13) -> float:
    """Leading-order dark-to-bright leakage |int theta'(t) exp(-i g t) dt|^2.

    First-order Magnus estimate of the total population lost to the two
    bright channels of the resonant Lambda system (each channel carries
    half).  For a linear ramp this reduces to
    (2 theta_p / (g tau_p))^2 sin^2(g tau_p / 2), vanishing whenever
    g tau_p = 2 n pi.
    """
    if g <= 0:
        raise ValueError("needs g > 0")

    def integrand_re(t):
        _, d1, _ = theta(profile, t)
        return d1 * math.cos(g * t)

    def integrand_im(t):
        _, d1, _ = theta(profile, t)
        return d1 * math.sin(g * t)

    # subdivide by oscillation period so adaptive quadrature stays sharp
    periods = max(1, int(g * profile.tau_p / (2 * math.pi)) + 1)
    pts = np.linspace(0.0, profile.tau_p, periods + 1)
    re = im = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        re += quad(integrand_re, a, b, epsabs=quad_tol, epsrel=1e-12)[0]
        im += quad(integrand_im, a, b, epsabs=quad_tol, epsrel=1e-12)[0]
    return re * re + im * im


def pseudo_dark_state(th: float, g: float, fsr: float) -> np.ndarray:
    """Approximate null state of the three-mode alternating-sign chain.

    Normalized vector proportional to
    (cos th, (g/fsr) sin 2th, 0, -(g/fsr) sin 2th, -sin th)
    in the ordering (qubit a, mode -1, mode 0, mode +1, qubit b).  The
    odd-mode amplitude |(g/fsr) sin 2th| is an adiabatic feature: it does
    not shrink with slower passage, only with weaker coupling.
    """
    if fsr <= 0:
        raise ValueError("needs fsr > 0")
    eps = (g / fsr) * math.sin(2 * th)
    v = np.array([math.cos(th), eps, 0.0, -eps, -math.sin(th)], dtype=complex)
    return v / np.linalg.norm(v)


def adiabatic_bell_floor(g: float, fsr: float, theta_p: float = math.pi / 4) -> float:
    """Adiabatic overlap error 2 (g/fsr)^2 sin^2(2 theta_p).

    The two odd neighbors at +-fsr each contribute (g/fsr)^2 sin^2(2
    theta_p) of population at the final angle; for a Bell state
    (theta_p = pi/4) this floors the error at 2 (g/fsr)^2, while a full
    transfer (theta_p = pi/2) is immune.
    """
    if not g < fsr:
        raise ValueError("estimate only meaningful for g < fsr")
    return 2.0 * (g / fsr) ** 2 * math.sin(2 * theta_p) ** 2


@dataclass(frozen=True)
class LeakageBreakdown:
    """Final-time excitation bookkeeping per subsystem.

    mode_populations maps frequency offset n to <c_n^dag c_n>; residual is
    the population outside the vacuum + one-excitation block.
    """

    qubit_a: float
    qubit_b: float
    mode_populations: tuple[tuple[int, float], ...]
    residual: float

    @property
    def total_mode_population(self) -> float:
        return float(sum(p for _, p in self.mode_populations))


def leakage_breakdown(rho: DensityMatrix) -> LeakageBreakdown:
    """Number-operator expectations per subsystem plus multi-excitation residual."""
    space = rho.space
    diag = np.real(np.diag(rho.matrix))
    occs = np.array(np.unravel_index(np.arange(space.total_dimension), space.dims)).T
    pops = occs.T @ diag
    modes = []
    qubits = {}
    for k, sub in enumerate(space.subsystems):
        if sub.kind == "mode":
            modes.append((mode_offset_of(sub), float(pops[k])))
        else:
            qubits[sub.label] = float(pops[k])
    _, idx = space.low_excitation_basis()
    residual = float(1.0 - diag[idx].sum())
    return LeakageBreakdown(qubit_a=qubits["a"], qubit_b=qubits["b"],
                            mode_populations=tuple(modes), residual=residual)


def indirect_gate_error(e_gate: float, e_transfer: float) -> float:
    """Leading-order error of a remote gate built from two transfers: E_g + 2 E_st."""
    for v in (e_gate, e_transfer):
        if not 0.0 <= v <= 1.0:
            raise ValueError("error inputs must lie in [0, 1]")
    return e_gate + 2.0 * e_transfer


def bell_phase_scan(rho: DensityMatrix, n_phases: int = 64) -> tuple[np.ndarray, np.ndarray]:
    """Error against (|1_a..> - e^{i phi} |..1_b>)/sqrt(2) over a phase grid.

    Debugging aid: if the minimum sits away from phi = 0 the run has
    acquired a spurious relative phase between the two qubit branches.
    """
    space = rho.space
    va = _single_excitation(space, "a")
    vb = _single_excitation(space, "b")
    phases = np.linspace(-math.pi, math.pi, n_phases, endpoint=False)
    errors = np.empty_like(phases)
    for i, phi in enumerate(phases):
        v = (va - np.exp(1j * phi) * vb) / math.sqrt(2)
        errors[i] = 1.0 - float(np.real(v.conj() @ rho.matrix @ v))
    return phases, errors
