"""Finding the optimal coupling under decay: a config-driven sweep.

With qubit relaxation and mode loss switched on there is a tradeoff:
strong coupling leaks into the neighboring modes, weak coupling makes the
operation slow and exposed to decay.  This demo runs a small grid sweep
(the same machinery the CLI `sweep` and `figures` commands use), persists
the CSV + sidecar, and reports the optimum for both operations.

Run:  python demos/05_dissipative_sweep.py
"""

from mmpassage import SweepSpec, run_sweep, write_sweep_outputs

for target, label in (("transfer", "state transfer"), ("bell", "bell state")):
    spec = SweepSpec(
        target=target,
        protocols=("stirap",),
        grid=(("g_MHz", tuple(float(g) for g in range(2, 26, 2))),),
        fixed={"Qc": 1e5, "T1_us": 100.0},
        tau_rule="4pi_over_g",   # lobe-minimum operation time at every g
        tolerance=1e-8,
        cross_check_every=0,
    )
    records = run_sweep(spec)
    csv_path, _ = write_sweep_outputs(spec, records, f"demo_sweep_{target}")
    best = min(records, key=lambda r: r.error)
    print(f"{label}: optimum g/2pi = {best.g_MHz:g} MHz "
          f"(E = {best.error:.2e}, tau_p = {best.tau_p_ns:.0f} ns) -> {csv_path}")

print("\nthe bell optimum sits at much weaker coupling: its error floor "
      "grows as (g/fsr)^2 while the transfer is floor-free")
