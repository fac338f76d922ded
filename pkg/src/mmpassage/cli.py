"""Command-line front end: single runs, config-driven sweeps, pinned recipes.

Subcommands:
  simulate     one run, printed error + leakage breakdown
  sweep        grid sweep from a JSON config, CSV + sidecar outputs
  convergence  mode-count / qubit-level truncation study
  pulses       waveform table (t_ns, g_ac_MHz, g_bc_MHz) to CSV
  figures      run one of the pinned figure recipes by name

Frequencies on the command line are value/2pi in MHz, times in ns or us
per flag name.  Worker count may be overridden with MMPASSAGE_WORKERS.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from ._version import __version__
from .sweeps import (
    SweepSpec,
    figure_names,
    figure_recipes,
    point_to_model_params,
    point_to_schedule,
    run_convergence,
    run_sweep,
    simulate_point,
    write_sweep_outputs,
)
from .pulses import AngleProfile, PulseSchedule, write_waveform_csv

_ANGLES = {"pi/2": math.pi / 2, "pi/4": math.pi / 4}


def _parse_angle(text: str) -> float:
    if text in _ANGLES:
        return _ANGLES[text]
    return float(text)


def _opt_float(text: str) -> float | None:
    return None if text.lower() in ("inf", "none", "") else float(text)


def _add_point_args(p: argparse.ArgumentParser):
    p.add_argument("--protocol", choices=("stirap", "satd"), default="stirap")
    p.add_argument("--target", choices=("transfer", "bell"), default="transfer")
    p.add_argument("--g-mhz", type=float, required=True, help="peak coupling g/2pi in MHz")
    p.add_argument("--tau-ns", type=float, help="operation time in ns")
    p.add_argument("--four-pi", action="store_true",
                   help="set tau from the g*tau = 4pi rule instead of --tau-ns")
    p.add_argument("--fsr-mhz", type=float, default=100.0)
    p.add_argument("--side-modes", type=int, default=2)
    p.add_argument("--qc", type=_opt_float, default=None, help="mode quality factor (inf allowed)")
    p.add_argument("--t1-us", type=_opt_float, default=None)
    p.add_argument("--t2phi-us", type=_opt_float, default=None)
    p.add_argument("--qubit-levels", type=int, default=2)
    p.add_argument("--mode-levels", type=int, default=2)
    p.add_argument("--sign-rule", choices=("alternating", "uniform"), default="alternating")
    p.add_argument("--profile", choices=("linear", "quintic"),
                   help="mixing-angle profile (default: linear for stirap, quintic for satd)")
    p.add_argument("--theta-p", type=_parse_angle,
                   help="final mixing angle in rad, or 'pi/2'/'pi/4' (default set by target)")


def _point_from_args(args) -> dict:
    if args.four_pi:
        tau_ns = 2.0 / (args.g_mhz * 1e6) * 1e9
    elif args.tau_ns is not None:
        tau_ns = args.tau_ns
    else:
        raise SystemExit("either --tau-ns or --four-pi is required")
    pt = {
        "protocol": args.protocol, "target": args.target,
        "g_MHz": args.g_mhz, "tau_p_ns": tau_ns, "fsr_MHz": args.fsr_mhz,
        "side_modes": args.side_modes, "Qc": args.qc,
        "T1_us": args.t1_us, "T2phi_us": args.t2phi_us,
        "qubit_levels": args.qubit_levels, "mode_levels": args.mode_levels,
        "sign_rule": args.sign_rule,
        "profile": args.profile or ("linear" if args.protocol == "stirap" else "quintic"),
        "theta_p": args.theta_p if args.theta_p is not None
                   else (math.pi / 2 if args.target == "transfer" else math.pi / 4),
    }
    return pt


def _cmd_simulate(args) -> int:
    pt = _point_from_args(args)
    out = simulate_point(pt, tolerance=args.tol, full_space=args.full)
    print(f"protocol={pt['protocol']} target={pt['target']} "
          f"g/2pi={pt['g_MHz']} MHz tau_p={pt['tau_p_ns']:.4g} ns engine={out['engine']}")
    print(f"error E = {out['error']:.6e}")
    print(f"qubit populations: a={out['pop_a']:.6e}  b={out['pop_b']:.6e}")
    for n, pop in out["mode_pops"]:
        print(f"mode {n:+d} population: {pop:.6e}")
    print(f"residual (beyond one excitation): {out['residual']:.3e}")
    if out["magnus_estimate"] is not None:
        print(f"leading-order leakage estimate: {out['magnus_estimate']:.6e}")
    if out["bell_floor"] is not None:
        print(f"adiabatic bell floor: {out['bell_floor']:.6e}")
    print(f"steps={out['steps']} rejected={out['rejected_steps']} "
          f"rhs_evals={out['rhs_evals']} wall={out['wall_ms']:.1f} ms")
    if args.trajectory:
        _write_trajectory(pt, args)
    return 0


def _write_trajectory(pt: dict, args) -> None:
    import numpy as np
    from .hilbert import basis_state
    from .lindblad import IntegratorConfig, evolve, evolve_subspace
    from .model import build_model

    model = build_model(point_to_model_params(pt))
    schedule = point_to_schedule(pt)
    occ = [0] * model.space.n_subsystems
    occ[model.space.index_of("a")] = 1
    rho0 = basis_state(model.space, occ)
    times = np.linspace(0.0, schedule.tau_p, args.samples + 1)
    runner = evolve if args.full else evolve_subspace
    res = runner(rho0, model, schedule, IntegratorConfig(args.tol, args.tol), sample_times=times)
    with open(args.trajectory, "w") as fh:
        fh.write("t_ns," + ",".join(res.sampled.labels) + "\n")
        for t, row in zip(res.sampled.times, res.sampled.values):
            fh.write(f"{t * 1e9:.17g}," + ",".join(f"{v:.17g}" for v in row) + "\n")
    print(f"trajectory written to {args.trajectory}")


def _cmd_sweep(args) -> int:
    cfg = json.loads(Path(args.config).read_text())
    spec = SweepSpec.from_config(cfg)
    if args.tol is not None:
        spec = SweepSpec.from_config({**spec.to_config(), "tolerance": args.tol})
    if args.workers is not None:
        spec = SweepSpec.from_config({**spec.to_config(), "workers": args.workers})
    records = run_sweep(spec)
    outdir = args.output or spec.output or "results/sweep"
    csv_path, json_path = write_sweep_outputs(spec, records, outdir)
    failed = sum(1 for r in records if r.status != "ok")
    print(f"{len(records)} points -> {csv_path} (+ {json_path.name}); {failed} failed")
    return 1 if failed else 0


def _cmd_convergence(args) -> int:
    report = run_convergence(
        g_MHz_values=tuple(args.g_mhz), Qc=args.qc, T1_us=args.t1_us,
        tolerance=args.tol, workers=args.workers)
    print(report.table())
    if args.output:
        from .sweeps import records_to_csv
        Path(args.output).parent.mkdir(parents=True, exist_ok=True)
        records_to_csv(list(report.records), args.output)
        print(f"records written to {args.output}")
    return 0


def _cmd_pulses(args) -> int:
    profile = AngleProfile(
        kind=args.profile or ("linear" if args.protocol == "stirap" else "quintic"),
        theta_p=args.theta_p, tau_p=args.tau_ns * 1e-9)
    schedule = PulseSchedule(args.protocol, profile, 2 * math.pi * 1e6 * args.g_mhz)
    write_waveform_csv(schedule, sample_rate=1e9 / args.dt_ns, path=args.output)
    print(f"waveform written to {args.output}")
    return 0


def _cmd_figures(args) -> int:
    if args.list:
        print("\n".join(figure_names()))
        return 0
    if not args.name:
        raise SystemExit("figure name required (or --list)")
    spec = figure_recipes(args.name)
    cfg = spec.to_config()
    if args.tol is not None:
        cfg["tolerance"] = args.tol
    if args.workers is not None:
        cfg["workers"] = args.workers
    spec = SweepSpec.from_config(cfg)
    records = run_sweep(spec)
    outdir = args.output or f"results/{args.name}"
    csv_path, _ = write_sweep_outputs(spec, records, outdir)
    failed = sum(1 for r in records if r.status != "ok")
    print(f"{args.name}: {len(records)} points -> {csv_path}; {failed} failed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mmpassage", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=f"mmpassage {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("simulate", help="run one simulation and print the error")
    _add_point_args(ps)
    ps.add_argument("--tol", type=float, default=1e-10, help="integrator tolerance")
    ps.add_argument("--full", action="store_true", help="integrate the full space")
    ps.add_argument("--trajectory", help="CSV path for sampled populations")
    ps.add_argument("--samples", type=int, default=200, help="trajectory sample count")
    ps.set_defaults(func=_cmd_simulate)

    pw = sub.add_parser("sweep", help="run a grid sweep from a JSON config")
    pw.add_argument("--config", required=True)
    pw.add_argument("--output", help="output directory (default from config)")
    pw.add_argument("--tol", type=float, help="override integrator tolerance")
    pw.add_argument("--workers", type=int)
    pw.set_defaults(func=_cmd_sweep)

    pc = sub.add_parser("convergence", help="mode-count and qubit-level truncation study")
    pc.add_argument("--g-mhz", type=float, nargs="+", default=[3, 6, 9, 12, 15])
    pc.add_argument("--qc", type=_opt_float, default=1e5)
    pc.add_argument("--t1-us", type=_opt_float, default=100.0)
    pc.add_argument("--tol", type=float, default=1e-8)
    pc.add_argument("--workers", type=int)
    pc.add_argument("--output", help="optional CSV path")
    pc.set_defaults(func=_cmd_convergence)

    pp = sub.add_parser("pulses", help="emit a sampled waveform CSV")
    pp.add_argument("--protocol", choices=("stirap", "satd"), default="satd")
    pp.add_argument("--profile", choices=("linear", "quintic"))
    pp.add_argument("--theta-p", type=_parse_angle, default=math.pi / 2)
    pp.add_argument("--tau-ns", type=float, required=True)
    pp.add_argument("--g-mhz", type=float, required=True)
    pp.add_argument("--dt-ns", type=float, default=0.1, help="sample spacing")
    pp.add_argument("--output", required=True)
    pp.set_defaults(func=_cmd_pulses)

    pf = sub.add_parser("figures", help="run a pinned figure recipe")
    pf.add_argument("name", nargs="?", help="recipe name; see --list")
    pf.add_argument("--list", action="store_true", help="list recipe names")
    pf.add_argument("--output", help="output directory (default results/<name>)")
    pf.add_argument("--tol", type=float)
    pf.add_argument("--workers", type=int)
    pf.set_defaults(func=_cmd_figures)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
