"""Declarative parameter sweeps, parallel execution and persistence.

A sweep is described by a JSON-friendly config: fixed parameters, grid
axes (cartesian product, protocols outermost), an optional operation-time
rule, integrator tolerance and worker count.  Units in configs follow the
lab conventions: frequencies are value/2pi in MHz (keys *_MHz), times are
ns or us by suffix, Q and level counts dimensionless; null means
infinity for lifetimes and Q.

Each grid point runs on the vacuum + one-excitation block by default; a
deterministic 1-in-N subset is re-run on the full tensor-product space
and the error difference recorded (`cross_check_delta`).  Results are
returned in grid order regardless of execution order and persisted as one
CSV table plus a JSON sidecar holding the full config.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from ._version import __version__
from .analysis import (
    adiabatic_bell_floor,
    bell_target,
    fidelity_error,
    leakage_breakdown,
    stirap_leakage_estimate,
    transfer_target,
)
from .hilbert import basis_state
from .lindblad import IntegratorConfig, evolve, evolve_subspace
from .model import ModelParams, build_model
from .pulses import AngleProfile, PulseSchedule

TWO_PI = 2 * math.pi

GRID_KEYS = ("g_MHz", "tau_p_ns", "Qc", "T1_us", "T2phi_us", "fsr_MHz",
             "side_modes", "qubit_levels", "mode_levels", "sign_rule")
DEFAULT_FIXED = {
    "fsr_MHz": 100.0,
    "side_modes": 2,
    "qubit_levels": 2,
    "mode_levels": 2,
    "sign_rule": "alternating",
    "Qc": None,
    "T1_us": None,
    "T2phi_us": None,
    "f_center_GHz": 5.0,
}
THETA_BY_TARGET = {"transfer": math.pi / 2, "bell": math.pi / 4}
DEFAULT_PROFILE = {"stirap": "linear", "satd": "quintic"}
CROSS_CHECK_FAIL = 1e-6

WORKERS_ENV = "MMPASSAGE_WORKERS"


def _to_inf(x):
    return math.inf if x is None else float(x)


@dataclass(frozen=True)
class SweepSpec:
    """One declarative experiment: fixed values, grid axes, execution knobs."""

    target: str
    protocols: tuple[str, ...]
    grid: tuple[tuple[str, tuple], ...] = ()
    fixed: dict = field(default_factory=dict)
    tau_rule: str | None = None              # "4pi_over_g" or None
    tau_by_protocol: dict | None = None      # protocol -> tau_p in ns
    theta_p: float | None = None             # rad; default set by target
    tolerance: float = 1e-8
    workers: int | None = None
    cross_check_every: int = 20
    output: str | None = None

    def __post_init__(self):
        if self.target not in THETA_BY_TARGET:
            raise ValueError(f"unknown target {self.target!r}")
        if not self.protocols:
            raise ValueError("at least one protocol required")
        for key, values in self.grid:
            if key not in GRID_KEYS:
                raise ValueError(f"unknown grid axis {key!r}")
            if not len(tuple(values)):
                raise ValueError(f"grid axis {key!r} is empty")
        if self.tau_rule not in (None, "4pi_over_g"):
            raise ValueError(f"unknown tau rule {self.tau_rule!r}")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.cross_check_every < 0:
            raise ValueError("cross_check_every must be >= 0")

    def points(self) -> list[dict]:
        """Expand the cartesian grid into per-run parameter dicts, in order."""
        axes = [("protocol", self.protocols)] + [(k, tuple(v)) for k, v in self.grid]
        base = dict(DEFAULT_FIXED)
        base.update(self.fixed)
        out = []
        for combo in itertools.product(*(vals for _, vals in axes)):
            pt = dict(base)
            for (key, _), val in zip(axes, combo):
                pt[key] = val
            pt["target"] = self.target
            pt["theta_p"] = self.theta_p if self.theta_p is not None else THETA_BY_TARGET[self.target]
            pt.setdefault("profile", DEFAULT_PROFILE[pt["protocol"]])
            if self.tau_rule == "4pi_over_g":
                pt["tau_p_ns"] = 2.0 / (float(pt["g_MHz"]) * 1e6) * 1e9  # 4pi/g with g = 2pi f
            elif self.tau_by_protocol is not None:
                pt["tau_p_ns"] = float(self.tau_by_protocol[pt["protocol"]])
            if "g_MHz" not in pt or "tau_p_ns" not in pt:
                raise ValueError("each point needs g_MHz and tau_p_ns (grid, fixed or rule)")
            out.append(pt)
        return out

    def to_config(self) -> dict:
        return {
            "target": self.target,
            "protocols": list(self.protocols),
            "grid": {k: list(v) for k, v in self.grid},
            "fixed": dict(self.fixed),
            "tau_rule": self.tau_rule,
            "tau_by_protocol": dict(self.tau_by_protocol) if self.tau_by_protocol else None,
            "theta_p": self.theta_p,
            "tolerance": self.tolerance,
            "workers": self.workers,
            "cross_check_every": self.cross_check_every,
            "output": self.output,
        }

    @staticmethod
    def from_config(cfg: dict) -> "SweepSpec":
        protocols = cfg.get("protocols", cfg.get("protocol", []))
        if isinstance(protocols, str):
            protocols = [protocols]
        grid = tuple((k, tuple(v)) for k, v in cfg.get("grid", {}).items())
        return SweepSpec(
            target=cfg["target"],
            protocols=tuple(protocols),
            grid=grid,
            fixed=dict(cfg.get("fixed", {})),
            tau_rule=cfg.get("tau_rule"),
            tau_by_protocol=cfg.get("tau_by_protocol"),
            theta_p=cfg.get("theta_p"),
            tolerance=float(cfg.get("tolerance", 1e-8)),
            workers=cfg.get("workers"),
            cross_check_every=int(cfg.get("cross_check_every", 20)),
            output=cfg.get("output"),
        )


@dataclass(frozen=True)
class RunRecord:
    """Self-describing result of one simulation: inputs, error, diagnostics."""

    protocol: str
    target: str
    profile: str
    g_MHz: float
    tau_p_ns: float
    fsr_MHz: float
    side_modes: int
    qubit_levels: int
    mode_levels: int
    sign_rule: str
    Qc: float | None
    T1_us: float | None
    T2phi_us: float | None
    theta_p: float
    tolerance: float
    engine: str
    error: float
    pop_a: float
    pop_b: float
    mode_pops: tuple[tuple[int, float], ...]
    residual: float
    magnus_estimate: float | None
    bell_floor: float | None
    cross_check_delta: float | None
    steps: int
    rejected_steps: int
    rhs_evals: int
    wall_ms: float
    status: str
    fail_reason: str
    engine_version: str
    timestamp: str


def point_to_model_params(pt: dict) -> ModelParams:
    """Translate a config-unit point dict into physical ModelParams."""
    t1 = _to_inf(pt.get("T1_us")) * 1e-6
    t2 = _to_inf(pt.get("T2phi_us")) * 1e-6
    return ModelParams(
        fsr=TWO_PI * 1e6 * float(pt["fsr_MHz"]),
        side_modes=int(pt["side_modes"]),
        center_frequency=TWO_PI * 1e9 * float(pt.get("f_center_GHz", 5.0)),
        peak_coupling=TWO_PI * 1e6 * float(pt["g_MHz"]),
        T1_a=t1, T1_b=t1, T2phi_a=t2, T2phi_b=t2,
        Q_c=_to_inf(pt.get("Qc")),
        coupling_sign_rule=pt.get("sign_rule", "alternating"),
        qubit_levels=int(pt.get("qubit_levels", 2)),
        mode_levels=int(pt.get("mode_levels", 2)),
    )


def point_to_schedule(pt: dict) -> PulseSchedule:
    profile = AngleProfile(kind=pt["profile"], theta_p=float(pt["theta_p"]),
                           tau_p=float(pt["tau_p_ns"]) * 1e-9)
    return PulseSchedule(protocol=pt["protocol"], profile=profile,
                         peak_coupling=TWO_PI * 1e6 * float(pt["g_MHz"]))


_MODEL_CACHE: dict[ModelParams, object] = {}


def _cached_model(params: ModelParams):
    model = _MODEL_CACHE.get(params)
    if model is None:
        model = build_model(params)
        if len(_MODEL_CACHE) > 16:
            _MODEL_CACHE.clear()
        _MODEL_CACHE[params] = model
    return model


def simulate_point(pt: dict, tolerance: float, cross_check: bool = False,
                   full_space: bool = False) -> dict:
    """Run one grid point; returns the raw pieces of a RunRecord."""
    params = point_to_model_params(pt)
    schedule = point_to_schedule(pt)
    model = _cached_model(params)
    occ = [0] * model.space.n_subsystems
    occ[model.space.index_of("a")] = 1
    rho0 = basis_state(model.space, occ)
    config = IntegratorConfig(abs_tol=tolerance, rel_tol=tolerance)
    runner = evolve if full_space else evolve_subspace
    result = runner(rho0, model, schedule, config)
    target = transfer_target(model.space) if pt["target"] == "transfer" else bell_target(model.space)
    error = fidelity_error(result.final_state, target)
    breakdown = leakage_breakdown(result.final_state)

    cross_delta = None
    if cross_check and not full_space:
        full = evolve(rho0, model, schedule, config)
        cross_delta = abs(fidelity_error(full.final_state, target) - error)

    magnus = None
    if pt["protocol"] == "stirap" and pt["profile"] == "linear":
        magnus = stirap_leakage_estimate(schedule.profile, schedule.peak_coupling)
    floor = None
    if pt["target"] == "bell" and params.peak_coupling < params.fsr:
        floor = adiabatic_bell_floor(params.peak_coupling, params.fsr, float(pt["theta_p"]))

    d = result.diagnostics
    return {
        "error": error,
        "pop_a": breakdown.qubit_a,
        "pop_b": breakdown.qubit_b,
        "mode_pops": breakdown.mode_populations,
        "residual": breakdown.residual,
        "magnus_estimate": magnus,
        "bell_floor": floor,
        "cross_check_delta": cross_delta,
        "steps": d.steps,
        "rejected_steps": d.rejected_steps,
        "rhs_evals": d.rhs_evaluations,
        "wall_ms": d.wall_time_s * 1e3,
        "engine": "full" if full_space else "subspace",
    }


def _execute_point(args):
    """Worker entry point: returns (index, payload-or-error)."""
    index, pt, tolerance, cross_check = args
    try:
        payload = simulate_point(pt, tolerance, cross_check=cross_check)
        status, reason = "ok", ""
        if payload["cross_check_delta"] is not None and payload["cross_check_delta"] > CROSS_CHECK_FAIL:
            status, reason = "failed", (
                f"full-space cross-check disagrees by {payload['cross_check_delta']:.3e}")
    except Exception as exc:  # per-point failure must not sink the sweep
        payload = {
            "error": math.nan, "pop_a": math.nan, "pop_b": math.nan,
            "mode_pops": (), "residual": math.nan, "magnus_estimate": None,
            "bell_floor": None, "cross_check_delta": None, "steps": 0,
            "rejected_steps": 0, "rhs_evals": 0, "wall_ms": 0.0, "engine": "subspace",
        }
        status, reason = "failed", f"{type(exc).__name__}: {exc}"
    return index, pt, payload, status, reason


def _spec_seed(spec: SweepSpec) -> int:
    """Stable seed from the sweep definition (output/workers excluded)."""
    blob = json.dumps({k: v for k, v in spec.to_config().items()
                       if k not in ("output", "workers")}, sort_keys=True)
    return int.from_bytes(hashlib.sha256(blob.encode()).digest()[:4], "big")


def resolve_workers(spec: SweepSpec) -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    if spec.workers:
        return max(1, int(spec.workers))
    return max(1, min(4, os.cpu_count() or 1))


def run_sweep(spec: SweepSpec) -> list[RunRecord]:
    """Execute every grid point; output order always matches grid order."""
    points = spec.points()
    if not points:
        raise ValueError("sweep expands to zero points")
    check = np.zeros(len(points), dtype=bool)
    if spec.cross_check_every > 0:
        rng = np.random.default_rng(_spec_seed(spec))
        check = rng.random(len(points)) < 1.0 / spec.cross_check_every
    jobs = [(i, pt, spec.tolerance, bool(check[i])) for i, pt in enumerate(points)]
    workers = resolve_workers(spec)
    results: list = [None] * len(points)
    if workers == 1 or len(points) == 1:
        for job in jobs:
            out = _execute_point(job)
            results[out[0]] = out
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for out in pool.map(_execute_point, jobs, chunksize=1):
                results[out[0]] = out
    stamp = datetime.now(timezone.utc).isoformat()
    records = []
    for _, pt, payload, status, reason in results:
        records.append(RunRecord(
            protocol=pt["protocol"], target=pt["target"], profile=pt["profile"],
            g_MHz=float(pt["g_MHz"]), tau_p_ns=float(pt["tau_p_ns"]),
            fsr_MHz=float(pt["fsr_MHz"]), side_modes=int(pt["side_modes"]),
            qubit_levels=int(pt.get("qubit_levels", 2)), mode_levels=int(pt.get("mode_levels", 2)),
            sign_rule=pt.get("sign_rule", "alternating"),
            Qc=pt.get("Qc"), T1_us=pt.get("T1_us"), T2phi_us=pt.get("T2phi_us"),
            theta_p=float(pt["theta_p"]), tolerance=spec.tolerance,
            engine=payload["engine"], error=payload["error"],
            pop_a=payload["pop_a"], pop_b=payload["pop_b"],
            mode_pops=tuple(payload["mode_pops"]), residual=payload["residual"],
            magnus_estimate=payload["magnus_estimate"], bell_floor=payload["bell_floor"],
            cross_check_delta=payload["cross_check_delta"],
            steps=payload["steps"], rejected_steps=payload["rejected_steps"],
            rhs_evals=payload["rhs_evals"], wall_ms=payload["wall_ms"],
            status=status, fail_reason=reason,
            engine_version=__version__, timestamp=stamp,
        ))
    return records


def rerun_record(record: RunRecord) -> float:
    """Re-run a stored record standalone and return the fresh error."""
    pt = {
        "protocol": record.protocol, "target": record.target, "profile": record.profile,
        "g_MHz": record.g_MHz, "tau_p_ns": record.tau_p_ns, "fsr_MHz": record.fsr_MHz,
        "side_modes": record.side_modes, "qubit_levels": record.qubit_levels,
        "mode_levels": record.mode_levels, "sign_rule": record.sign_rule,
        "Qc": record.Qc, "T1_us": record.T1_us, "T2phi_us": record.T2phi_us,
        "theta_p": record.theta_p,
    }
    return simulate_point(pt, record.tolerance)["error"]


# ---------------------------------------------------------------------------
# persistence

_FMT = "{:.17g}"


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    v = float(value)
    if math.isinf(v):
        return "inf"
    if math.isnan(v):
        return "nan"
    return _FMT.format(v)


def records_to_csv(records: list[RunRecord], path) -> None:
    """One row per record, stable column order; mode columns sized to the sweep."""
    max_n = max((r.side_modes for r in records), default=0)
    offsets = list(range(-max_n, max_n + 1))
    head = ["protocol", "target", "profile", "g_MHz", "tau_p_ns", "fsr_MHz",
            "side_modes", "qubit_levels", "mode_levels", "sign_rule",
            "Qc", "T1_us", "T2phi_us", "theta_p", "tolerance", "engine", "error",
            "pop_a", "pop_b"] + [f"leak_m{n}" for n in offsets] + [
        "residual", "magnus_estimate", "bell_floor", "cross_check_delta",
        "steps", "rejected_steps", "rhs_evals", "status", "fail_reason",
        "engine_version", "wall_ms", "timestamp"]
    with open(path, "w") as fh:
        fh.write(",".join(head) + "\n")
        for r in records:
            pops = dict(r.mode_pops)
            row = [r.protocol, r.target, r.profile, _fmt(r.g_MHz), _fmt(r.tau_p_ns),
                   _fmt(r.fsr_MHz), _fmt(r.side_modes), _fmt(r.qubit_levels),
                   _fmt(r.mode_levels), r.sign_rule, _fmt(_to_inf(r.Qc)),
                   _fmt(_to_inf(r.T1_us)), _fmt(_to_inf(r.T2phi_us)), _fmt(r.theta_p),
                   _fmt(r.tolerance), r.engine, _fmt(r.error), _fmt(r.pop_a), _fmt(r.pop_b)]
            row += [_fmt(pops[n]) if n in pops else "" for n in offsets]
            row += [_fmt(r.residual), _fmt(r.magnus_estimate), _fmt(r.bell_floor),
                    _fmt(r.cross_check_delta), _fmt(r.steps), _fmt(r.rejected_steps),
                    _fmt(r.rhs_evals), r.status, r.fail_reason.replace(",", ";"),
                    r.engine_version, _fmt(r.wall_ms), r.timestamp]
            fh.write(",".join(row) + "\n")


def write_sweep_outputs(spec: SweepSpec, records: list[RunRecord], outdir) -> tuple[Path, Path]:
    """Persist one sweep: <outdir>/records.csv plus <outdir>/spec.json sidecar."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "records.csv"
    json_path = outdir / "spec.json"
    records_to_csv(records, csv_path)
    sidecar = {
        "spec": spec.to_config(),
        "engine_version": __version__,
        "n_records": len(records),
        "n_failed": sum(1 for r in records if r.status != "ok"),
        "created": datetime.now(timezone.utc).isoformat(),
    }
    json_path.write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    return csv_path, json_path


# ---------------------------------------------------------------------------
# convergence study

@dataclass(frozen=True)
class ConvergenceReport:
    records: tuple[RunRecord, ...]
    summary: dict

    def table(self) -> str:
        lines = [f"{'g_MHz':>6} {'modes':>6} {'levels':>7} {'error':>12}"]
        for r in self.records:
            lines.append(f"{r.g_MHz:>6g} {2 * r.side_modes + 1:>6d} "
                         f"{r.qubit_levels:>7d} {r.error:>12.5e}")
        lines.append("")
        for k, v in self.summary.items():
            lines.append(f"{k}: {v:.4g}")
        return "\n".join(lines)


def run_convergence(g_MHz_values=(3, 6, 9, 12, 15), fsr_MHz: float = 100.0,
                    Qc: float | None = 1e5, T1_us: float | None = 100.0,
                    tolerance: float = 1e-8, workers: int | None = None) -> ConvergenceReport:
    """Transfer error vs interconnect mode count (1/3/5) and qubit level count (2/3).

    Plain adiabatic protocol at the g tau_p = 4pi operating point, the
    standard truncation study: more retained modes matter increasingly at
    strong coupling, extra qubit levels not at all (the dynamics never
    leave the one-excitation block).
    """
    fixed = {"fsr_MHz": fsr_MHz, "Qc": Qc, "T1_us": T1_us}
    spec = SweepSpec(
        target="transfer", protocols=("stirap",),
        grid=(("qubit_levels", (2, 3)), ("side_modes", (0, 1, 2)),
              ("g_MHz", tuple(g_MHz_values))),
        fixed=fixed, tau_rule="4pi_over_g", tolerance=tolerance,
        workers=workers, cross_check_every=0,
    )
    records = run_sweep(spec)
    err = {(r.qubit_levels, r.side_modes, r.g_MHz): r.error for r in records}
    gs = tuple(float(g) for g in g_MHz_values)
    rel_1v5 = max(abs(err[(2, 0, g)] - err[(2, 2, g)]) / err[(2, 2, g)] for g in gs)
    rel_3v5 = max(abs(err[(2, 1, g)] - err[(2, 2, g)]) / err[(2, 2, g)] for g in gs)
    abs_levels = max(abs(err[(2, n, g)] - err[(3, n, g)]) for n in (0, 1, 2) for g in gs)
    return ConvergenceReport(
        records=tuple(records),
        summary={
            "max_rel_one_vs_five_modes": rel_1v5,
            "max_rel_three_vs_five_modes": rel_3v5,
            "max_abs_two_vs_three_levels": abs_levels,
        },
    )


# ---------------------------------------------------------------------------
# pinned sweep recipes for the standard result figures

def _logspace(lo_exp: float, hi_exp: float, n: int) -> tuple:
    return tuple(float(f"{v:.6g}") for v in np.logspace(lo_exp, hi_exp, n))


def _recipes() -> dict:
    g_scan = tuple(float(g) for g in range(1, 31))
    tau_fast = tuple(float(t) for t in range(30, 131, 2))
    tau_slow = tuple(float(t) for t in range(134, 434, 4))
    deph_times = (None, 20.0, 10.0, 5.0, 1.0)
    relax_times = (None, 100.0, 50.0, 20.0, 10.0)
    return {
        "fig2a": SweepSpec(
            target="transfer", protocols=("stirap",), grid=(("g_MHz", g_scan),),
            fixed={"Qc": 1e5, "T1_us": 100.0}, tau_rule="4pi_over_g"),
        "fig2b": SweepSpec(
            target="bell", protocols=("stirap",), grid=(("g_MHz", g_scan),),
            fixed={"Qc": 1e5, "T1_us": 100.0}, tau_rule="4pi_over_g"),
        "fig2c_transfer": SweepSpec(
            target="transfer", protocols=("stirap",), grid=(("Qc", _logspace(3, 6, 31)),),
            fixed={"g_MHz": 15.0, "T1_us": 100.0}, tau_rule="4pi_over_g"),
        "fig2c_bell": SweepSpec(
            target="bell", protocols=("stirap",), grid=(("Qc", _logspace(3, 6, 31)),),
            fixed={"g_MHz": 4.0, "T1_us": 100.0}, tau_rule="4pi_over_g"),
        "fig3a": SweepSpec(
            target="transfer", protocols=("stirap", "satd"),
            grid=(("side_modes", (0, 2)), ("tau_p_ns", tuple(float(t) for t in range(20, 201, 2)))),
            fixed={"g_MHz": 15.0}),
        "fig4a": SweepSpec(
            target="transfer", protocols=("stirap", "satd"),
            grid=(("g_MHz", (2.5, 5.0)), ("tau_p_ns", tau_fast + tau_slow)),
            fixed={"Qc": 1e5, "T1_us": 100.0, "T2phi_us": 10.0}),
        "fig4b": SweepSpec(
            target="transfer", protocols=("stirap", "satd"),
            grid=(("fsr_MHz", (100.0, 400.0)),
                  ("tau_p_ns", tuple(float(t) for t in range(20, 71, 2))
                   + tuple(float(t) for t in range(150, 501, 25)))),
            fixed={"g_MHz": 2.5, "Qc": 1e5, "T1_us": 100.0, "T2phi_us": 10.0}),
        "fig5": SweepSpec(
            target="transfer", protocols=("stirap", "satd"),
            grid=(("T2phi_us", deph_times), ("tau_p_ns", tuple(float(t) for t in range(30, 231, 4)))),
            fixed={"g_MHz": 15.0, "Qc": 1e5, "T1_us": 100.0}),
        "fig6": SweepSpec(
            target="bell", protocols=("stirap", "satd"),
            grid=(("side_modes", (0, 2)), ("tau_p_ns", tuple(float(t) for t in range(40, 401, 4)))),
            fixed={"g_MHz": 4.0}),
        "fig7": SweepSpec(
            target="bell", protocols=("stirap", "satd"),
            grid=(("T2phi_us", deph_times), ("tau_p_ns", tuple(float(t) for t in range(30, 301, 5)))),
            fixed={"g_MHz": 4.0, "Qc": 1e5, "T1_us": 100.0}),
        "fig8": SweepSpec(
            target="bell", protocols=("stirap", "satd"),
            grid=(("T1_us", relax_times), ("Qc", _logspace(3, 6, 25))),
            fixed={"g_MHz": 4.0, "T2phi_us": 10.0},
            tau_by_protocol={"stirap": 250.0, "satd": 51.5}),
        "st_relax": SweepSpec(
            target="transfer", protocols=("stirap", "satd"),
            grid=(("T1_us", relax_times), ("Qc", _logspace(3, 6, 25))),
            fixed={"g_MHz": 15.0, "T2phi_us": 10.0},
            tau_by_protocol={"stirap": 65.0, "satd": 44.0}),
        "fig9a": SweepSpec(
            target="transfer", protocols=("stirap",),
            grid=(("side_modes", (0, 1, 2)), ("g_MHz", tuple(float(g) for g in range(1, 16)))),
            fixed={"Qc": 1e5, "T1_us": 100.0}, tau_rule="4pi_over_g", cross_check_every=0),
        "fig9b": SweepSpec(
            target="transfer", protocols=("stirap",),
            grid=(("qubit_levels", (2, 3)), ("g_MHz", tuple(float(g) for g in range(1, 16)))),
            fixed={"Qc": 1e5, "T1_us": 100.0}, tau_rule="4pi_over_g", cross_check_every=0),
    }


def figure_names() -> tuple[str, ...]:
    return tuple(sorted(_recipes()))


def figure_recipes(name: str) -> SweepSpec:
    """Fully pinned SweepSpec for one of the standard result figures."""
    recipes = _recipes()
    if name not in recipes:
        raise KeyError(f"unknown figure recipe {name!r}; known: {', '.join(sorted(recipes))}")
    return recipes[name]
