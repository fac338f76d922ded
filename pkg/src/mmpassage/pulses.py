"""Mixing-angle profiles and the coupling waveforms driving the passage.

Two protocols are provided.  The plain adiabatic protocol ("stirap") uses
g_ac = g sin(theta), g_bc = g cos(theta).  The superadiabatic protocol
("satd") adds a correction proportional to the second derivative of the
mixing angle,

    g_ac = g [sin(theta) + cos(theta) theta'' / (g^2 + theta'^2)]
    g_bc = g [cos(theta) - sin(theta) theta'' / (g^2 + theta'^2)]

which cancels the dark-to-bright transitions of the resonant Lambda
system exactly.  All derivatives are closed-form; waveforms are evaluated
analytically at whatever times the integrator asks for, so no
interpolation error enters the dynamics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

PROFILE_KINDS = ("linear", "quintic")
PROTOCOLS = ("stirap", "satd")

# relative slack for t just outside [0, tau_p] from floating-point step
# arithmetic; anything further out is a caller error
_T_SLACK = 1e-9


@dataclass(frozen=True)
class AngleProfile:
    """Mixing angle theta(t) on [0, tau_p] rising from 0 to theta_p.

    kind "linear":  theta = theta_p t/tau_p
    kind "quintic": theta = theta_p [6 s^5 - 15 s^4 + 10 s^3], s = t/tau_p,
    the lowest-order polynomial with vanishing first and second derivative
    at both endpoints.
    """

    kind: str
    theta_p: float  # rad; pi/2 for full transfer, pi/4 for a Bell state
    tau_p: float    # s

    def __post_init__(self):
        if self.kind not in PROFILE_KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if not (self.tau_p > 0 and math.isfinite(self.tau_p)):
            raise ValueError("tau_p must be positive and finite")
        if not math.isfinite(self.theta_p):
            raise ValueError("theta_p must be finite")


@dataclass(frozen=True)
class PulseSchedule:
    """Protocol, angle profile and peak coupling g defining both waveforms."""

    protocol: str
    profile: AngleProfile
    peak_coupling: float  # rad/s

    def __post_init__(self):
        if self.protocol not in PROTOCOLS:
            raise ValueError(f"unknown protocol {self.protocol!r}")
        if not (self.peak_coupling >= 0 and math.isfinite(self.peak_coupling)):
            raise ValueError("peak_coupling must be finite and >= 0")
        if self.protocol == "satd" and self.peak_coupling == 0:
            raise ValueError("satd requires peak_coupling > 0")

    @property
    def tau_p(self) -> float:
        return self.profile.tau_p


def theta(profile: AngleProfile, t):
    """Angle and its first two time derivatives at t (scalar or array).

    Returns (theta, theta_dot, theta_ddot), all closed-form.
    """
    t = np.asarray(t, dtype=float)
    tau = profile.tau_p
    if np.any(t < -_T_SLACK * tau) or np.any(t > (1.0 + _T_SLACK) * tau):
        raise ValueError(f"t outside [0, {tau}]")
    s = np.clip(t / tau, 0.0, 1.0)
    thp = profile.theta_p
    if profile.kind == "linear":
        th = thp * s
        d1 = np.full_like(s, thp / tau)
        d2 = np.zeros_like(s)
    else:
        th = thp * (6 * s**5 - 15 * s**4 + 10 * s**3)
        d1 = (thp / tau) * (30 * s**4 - 60 * s**3 + 30 * s**2)
        d2 = (thp / tau**2) * (120 * s**3 - 180 * s**2 + 60 * s)
    if th.ndim == 0:
        return float(th), float(d1), float(d2)
    return th, d1, d2


def stirap_controls(schedule: PulseSchedule, t):
    """(g_ac, g_bc) = (g sin(theta), g cos(theta))."""
    if schedule.protocol != "stirap":
        raise ValueError("schedule protocol is not 'stirap'")
    g = schedule.peak_coupling
    th, _, _ = theta(schedule.profile, t)
    return g * np.sin(th), g * np.cos(th)


def satd_controls(schedule: PulseSchedule, t):
    """Superadiabatic couplings with the theta''/(g^2 + theta'^2) correction."""
    if schedule.protocol != "satd":
        raise ValueError("schedule protocol is not 'satd'")
    g = schedule.peak_coupling
    if g <= 0:
        raise ValueError("satd correction is undefined for g = 0")
    th, d1, d2 = theta(schedule.profile, t)
    corr = d2 / (g * g + d1 * d1)
    return g * (np.sin(th) + np.cos(th) * corr), g * (np.cos(th) - np.sin(th) * corr)


def controls(schedule: PulseSchedule, t):
    """Dispatch to the schedule's protocol."""
    if schedule.protocol == "stirap":
        return stirap_controls(schedule, t)
    return satd_controls(schedule, t)


def satd_dressing(g: float, theta_dot: float, theta_ddot: float) -> float:
    """Dressing drive amplitude h_x = -g theta'' / (g^2 + theta'^2)."""
    if g <= 0:
        raise ValueError("dressing amplitude needs g > 0")
    return -g * theta_ddot / (g * g + theta_dot * theta_dot)


def dressing_angle(g: float, theta_dot: float) -> float:
    """Dressing rotation angle mu with tan(mu) = -theta'/g."""
    if g <= 0:
        raise ValueError("dressing angle needs g > 0")
    return math.atan(-theta_dot / g)


def emit_waveform(schedule: PulseSchedule, sample_rate: float) -> np.ndarray:
    """Uniformly sampled (t, g_ac, g_bc) table including both endpoints.

    Row count is floor(tau_p * sample_rate) + 1; the last row is exactly
    t = tau_p.  A rate below 1/tau_p is rejected because it cannot
    represent both endpoints.
    """
    if sample_rate <= 0:
        raise ValueError("sample_rate must be positive")
    n = int(math.floor(schedule.tau_p * sample_rate))
    if n < 1:
        raise ValueError("sample_rate too low: fewer than two samples over the pulse")
    ts = np.linspace(0.0, schedule.tau_p, n + 1)
    g_ac, g_bc = controls(schedule, ts)
    return np.column_stack([ts, g_ac, g_bc])


def write_waveform_csv(schedule: PulseSchedule, sample_rate: float, path) -> None:
    """Write the sampled waveform with header t_ns,g_ac_MHz,g_bc_MHz.

    Times are in ns and couplings as g/2pi in MHz, the conventions used
    throughout the config layer.
    """
    table = emit_waveform(schedule, sample_rate)
    twopi = 2 * math.pi
    with open(path, "w") as fh:
        fh.write("t_ns,g_ac_MHz,g_bc_MHz\n")
        for t, ga, gb in table:
            fh.write(f"{t * 1e9:.17g},{ga / twopi / 1e6:.17g},{gb / twopi / 1e6:.17g}\n")
