"""Physical model: chain layout, Hamiltonian terms and dissipator set.

The chain is (qubit a, modes -N..N ordered by frequency offset, qubit b).
Everything is assembled in the frame co-rotating with the center mode, so
the static part carries only detunings delta_q and the mode offsets
n * fsr; this is exact because the interaction is excitation preserving
and every dissipator commutes with the uniform rotation.  Mode decay
rates are still computed from lab-frame frequencies, kappa_n = omega_n/Q.

The qubit-b couplings carry the alternating (-1)^n sign of even/odd
standing-wave modes; the sign of the center mode is +1.  A "uniform"
rule (all +1) is included as the hypothetical control case in which the
ideal dark state survives for any number of modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hilbert import (
    CompositeSpace,
    OperatorMatrix,
    SubsystemSpec,
    annihilation,
    embed,
    number,
)

TWO_PI = 2 * math.pi
SIGN_RULES = ("alternating", "uniform")


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the two-qubit multimode-interconnect system.

    Frequencies are angular (rad/s), times in seconds; math.inf disables a
    decay channel.  `side_modes` is the number of interconnect modes kept
    on each side of the resonant center mode.
    """

    fsr: float                       # mode spacing Delta_c, rad/s
    side_modes: int = 2              # N; 2N+1 modes total
    center_frequency: float = TWO_PI * 5e9   # lab-frame center-mode frequency, rad/s
    delta_a: float = 0.0             # qubit detunings from the center mode, rad/s
    delta_b: float = 0.0
    alpha_a: float = -TWO_PI * 300e6  # anharmonicity, used only with >= 3 qubit levels
    alpha_b: float = -TWO_PI * 300e6
    peak_coupling: float = 0.0       # g, rad/s; recorded here, waveforms carry their own copy
    T1_a: float = math.inf           # seconds
    T1_b: float = math.inf
    T2phi_a: float = math.inf
    T2phi_b: float = math.inf
    Q_c: float = math.inf            # shared mode quality factor
    coupling_sign_rule: str = "alternating"
    qubit_levels: int = 2
    mode_levels: int = 2

    def __post_init__(self):
        if not (self.fsr > 0):
            raise ValueError("fsr must be positive")
        if self.side_modes < 0:
            raise ValueError("side_modes must be >= 0")
        if self.peak_coupling < 0:
            raise ValueError("peak_coupling must be >= 0")
        for name in ("T1_a", "T1_b", "T2phi_a", "T2phi_b"):
            v = getattr(self, name)
            if not v > 0:
                raise ValueError(f"{name} must be positive (math.inf allowed)")
        if not self.Q_c > 0:
            raise ValueError("Q_c must be positive (math.inf allowed)")
        if self.coupling_sign_rule not in SIGN_RULES:
            raise ValueError(f"coupling_sign_rule must be one of {SIGN_RULES}")
        if self.qubit_levels < 2 or self.mode_levels < 2:
            raise ValueError("qubit_levels and mode_levels must be >= 2")

    @property
    def mode_offsets(self) -> tuple[int, ...]:
        return tuple(range(-self.side_modes, self.side_modes + 1))


@dataclass(frozen=True)
class DissipatorSpec:
    """One Lindblad channel: D[C] rho = C rho C^dag - 1/2 {C^dag C, rho} at `rate`."""

    rate: float        # 1/s
    collapse: OperatorMatrix
    label: str = ""

    def __post_init__(self):
        if self.rate < 0:
            raise ValueError("dissipator rate must be >= 0")


def build_space(params: ModelParams) -> CompositeSpace:
    """Chain layout (qubit a, modes -N..N, qubit b) with the configured truncations."""
    subs = [SubsystemSpec("a", params.qubit_levels, "qubit")]
    for n in params.mode_offsets:
        subs.append(SubsystemSpec(f"m{n}", params.mode_levels, "mode"))
    subs.append(SubsystemSpec("b", params.qubit_levels, "qubit"))
    return CompositeSpace(tuple(subs))


def mode_offset_of(sub: SubsystemSpec) -> int:
    """Frequency offset index n of a mode subsystem (label 'm<n>')."""
    if sub.kind != "mode":
        raise ValueError(f"{sub.label!r} is not a mode")
    return int(sub.label[1:])


def _check_layout(params: ModelParams, space: CompositeSpace):
    expected = build_space(params)
    if space.dims != expected.dims or [s.label for s in space.subsystems] != [s.label for s in expected.subsystems]:
        raise ValueError("space layout does not match model parameters")


def build_static_hamiltonian(params: ModelParams, space: CompositeSpace) -> OperatorMatrix:
    """Diagonal frame Hamiltonian: qubit detunings, Kerr terms, mode offsets n*fsr."""
    _check_layout(params, space)
    h = np.zeros((space.total_dimension,) * 2, dtype=complex)
    dq = params.qubit_levels
    n_op = number(dq)
    kerr = 0.5 * n_op @ (n_op - np.eye(dq))  # (1/2) n(n-1) = (1/2) q^dag q^dag q q
    for label, delta, alpha in (("a", params.delta_a, params.alpha_a),
                                ("b", params.delta_b, params.alpha_b)):
        k = space.index_of(label)
        h += embed(delta * n_op + alpha * kerr, k, space).matrix
    for n in params.mode_offsets:
        k = space.index_of(f"m{n}")
        h += embed(n * params.fsr * number(params.mode_levels), k, space).matrix
    return OperatorMatrix(space, h)


def build_coupling_hamiltonian(params: ModelParams, space: CompositeSpace,
                               g_ac: float, g_bc: float) -> OperatorMatrix:
    """Exchange interaction at instantaneous coupling values (g_ac, g_bc).

    Sum over modes of g_ac (a c_n^dag + h.c.) + g_bc s_n (b c_n^dag + h.c.),
    with s_n = (-1)^n under the alternating rule and +1 under the uniform one.
    """
    _check_layout(params, space)
    if not (math.isfinite(g_ac) and math.isfinite(g_bc)):
        raise ValueError("couplings must be finite")
    h = np.zeros((space.total_dimension,) * 2, dtype=complex)
    a_low = annihilation(params.qubit_levels)
    m_low = annihilation(params.mode_levels)
    ia = space.index_of("a")
    ib = space.index_of("b")
    for n in params.mode_offsets:
        im = space.index_of(f"m{n}")
        a = embed(a_low, ia, space).matrix
        b = embed(a_low, ib, space).matrix
        c = embed(m_low, im, space).matrix
        s_n = (-1) ** abs(n) if params.coupling_sign_rule == "alternating" else 1.0
        h += g_ac * (a @ c.conj().T + a.conj().T @ c)
        h += g_bc * s_n * (b @ c.conj().T + b.conj().T @ c)
    return OperatorMatrix(space, h)


def kappa_of_mode(params: ModelParams, offset: int) -> float:
    """Decay rate of mode n: lab-frame frequency over the shared Q."""
    if abs(offset) > params.side_modes:
        raise ValueError(f"mode offset {offset} outside +-{params.side_modes}")
    if math.isinf(params.Q_c):
        return 0.0
    return (params.center_frequency + offset * params.fsr) / params.Q_c


def build_dissipators(params: ModelParams, space: CompositeSpace) -> list[DissipatorSpec]:
    """Relaxation, pure dephasing and mode-loss channels; zero-rate channels omitted."""
    _check_layout(params, space)
    out: list[DissipatorSpec] = []
    q_low = annihilation(params.qubit_levels)
    q_num = number(params.qubit_levels)
    for label, T1, T2 in (("a", params.T1_a, params.T2phi_a),
                          ("b", params.T1_b, params.T2phi_b)):
        k = space.index_of(label)
        if math.isfinite(T1):
            out.append(DissipatorSpec(1.0 / T1, embed(q_low, k, space), f"relax_{label}"))
        if math.isfinite(T2):
            out.append(DissipatorSpec(2.0 / T2, embed(q_num, k, space), f"dephase_{label}"))
    m_low = annihilation(params.mode_levels)
    for n in params.mode_offsets:
        kap = kappa_of_mode(params, n)
        if kap > 0:
            k = space.index_of(f"m{n}")
            out.append(DissipatorSpec(kap, embed(m_low, k, space), f"loss_m{n}"))
    return out


@dataclass(frozen=True)
class LindbladModel:
    """Precomputed pieces of the master equation for one parameter set.

    The time-dependent Hamiltonian is assembled per evaluation as
    h_static + g_ac(t) h_coupling_a + g_bc(t) h_coupling_b, with the three
    matrices built once here.
    """

    params: ModelParams
    space: CompositeSpace
    h_static: OperatorMatrix
    h_coupling_a: OperatorMatrix   # coupling term at g_ac = 1, g_bc = 0
    h_coupling_b: OperatorMatrix   # coupling term at g_ac = 0, g_bc = 1
    dissipators: tuple[DissipatorSpec, ...]


def build_model(params: ModelParams) -> LindbladModel:
    space = build_space(params)
    return LindbladModel(
        params=params,
        space=space,
        h_static=build_static_hamiltonian(params, space),
        h_coupling_a=build_coupling_hamiltonian(params, space, 1.0, 0.0),
        h_coupling_b=build_coupling_hamiltonian(params, space, 0.0, 1.0),
        dissipators=tuple(build_dissipators(params, space)),
    )
