import json
import math

import pytest

from mmpassage.sweeps import (
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

TWO_PI = 2 * math.pi


def small_spec(**kw):
    defaults = dict(
        target="transfer",
        protocols=("stirap", "satd"),
        grid=(("g_MHz", (10.0, 15.0)),),
        fixed={"Qc": 1e5, "T1_us": 100.0, "side_modes": 1},
        tau_rule="4pi_over_g",
        tolerance=1e-8,
        workers=1,
        cross_check_every=0,
    )
    defaults.update(kw)
    return SweepSpec(**defaults)


def strip_volatile(csv_text: str) -> str:
    lines = csv_text.strip().splitlines()
    head = lines[0].split(",")
    drop = {head.index("wall_ms"), head.index("timestamp")}
    out = []
    for line in lines:
        cells = [c for i, c in enumerate(line.split(",")) if i not in drop]
        out.append(",".join(cells))
    return "\n".join(out)


def test_points_order_is_grid_order():
    spec = small_spec()
    pts = spec.points()
    assert [(p["protocol"], p["g_MHz"]) for p in pts] == [
        ("stirap", 10.0), ("stirap", 15.0), ("satd", 10.0), ("satd", 15.0)]
    # 4pi rule: tau_ns = 2/g_Hz in ns
    assert pts[0]["tau_p_ns"] == pytest.approx(200.0)
    assert pts[1]["tau_p_ns"] == pytest.approx(400.0 / 3)


def test_single_point_from_fixed_only():
    spec = SweepSpec(target="transfer", protocols=("stirap",),
                     fixed={"g_MHz": 15.0, "tau_p_ns": 133.33, "side_modes": 0},
                     workers=1, cross_check_every=0)
    records = run_sweep(spec)
    assert len(records) == 1
    assert records[0].error < 1e-3  # coherent single-mode lobe minimum


def test_records_match_direct_simulation():
    spec = small_spec()
    records = run_sweep(spec)
    assert all(r.status == "ok" for r in records)
    pt = spec.points()[1]
    direct = simulate_point(pt, spec.tolerance)
    assert records[1].error == pytest.approx(direct["error"], abs=1e-12)


def test_determinism_and_worker_invariance(tmp_path):
    spec1 = small_spec(workers=1)
    spec2 = small_spec(workers=2)
    rec1 = run_sweep(spec1)
    rec2 = run_sweep(spec2)
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    records_to_csv(rec1, p1)
    records_to_csv(rec2, p2)
    assert strip_volatile(p1.read_text()) == strip_volatile(p2.read_text())


def test_rerun_record_reproduces_error():
    records = run_sweep(small_spec())
    for r in records[:2]:
        assert abs(rerun_record(r) - r.error) < 1e-10


def test_failed_point_recorded_sweep_continues():
    spec = SweepSpec(target="transfer", protocols=("stirap",),
                     grid=(("tau_p_ns", (-5.0, 100.0)),),
                     fixed={"g_MHz": 15.0, "side_modes": 0},
                     workers=1, cross_check_every=0)
    records = run_sweep(spec)
    assert records[0].status == "failed"
    assert math.isnan(records[0].error)
    assert "tau_p" in records[0].fail_reason or "positive" in records[0].fail_reason
    assert records[1].status == "ok"


def test_cross_check_runs_and_agrees():
    spec = SweepSpec(target="transfer", protocols=("stirap",),
                     grid=(("g_MHz", (15.0,)),),
                     fixed={"Qc": 1e5, "T1_us": 100.0, "side_modes": 1},
                     tau_rule="4pi_over_g", workers=1, cross_check_every=1)
    records = run_sweep(spec)
    assert records[0].cross_check_delta is not None
    assert records[0].cross_check_delta < 1e-7
    assert records[0].status == "ok"


def test_magnus_and_floor_columns():
    spec = SweepSpec(target="bell", protocols=("stirap",),
                     grid=(("g_MHz", (4.0,)),),
                     fixed={"side_modes": 1}, tau_rule="4pi_over_g",
                     workers=1, cross_check_every=0)
    r = run_sweep(spec)[0]
    assert r.bell_floor == pytest.approx(3.2e-3)
    assert r.magnus_estimate is not None and r.magnus_estimate < 1e-10  # lobe time
    satd = SweepSpec(target="bell", protocols=("satd",),
                     grid=(("g_MHz", (4.0,)),),
                     fixed={"side_modes": 1, "tau_p_ns": 100.0},
                     workers=1, cross_check_every=0)
    assert run_sweep(satd)[0].magnus_estimate is None


def test_outputs_csv_and_sidecar(tmp_path):
    spec = small_spec()
    records = run_sweep(spec)
    csv_path, json_path = write_sweep_outputs(spec, records, tmp_path / "out")
    text = csv_path.read_text()
    head = text.splitlines()[0].split(",")
    assert head[0] == "protocol"
    assert "error" in head and "leak_m0" in head and "leak_m-1" in head
    assert len(text.strip().splitlines()) == len(records) + 1
    sidecar = json.loads(json_path.read_text())
    assert sidecar["n_records"] == len(records)
    assert sidecar["n_failed"] == 0
    assert SweepSpec.from_config(sidecar["spec"]).points() == spec.points()


def test_config_round_trip():
    spec = small_spec(theta_p=0.5, tau_rule=None,
                      fixed={"g_MHz": 5.0, "tau_p_ns": 50.0, "side_modes": 0})
    again = SweepSpec.from_config(spec.to_config())
    assert again == spec


def test_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(target="swap", protocols=("stirap",))
    with pytest.raises(ValueError):
        SweepSpec(target="transfer", protocols=())
    with pytest.raises(ValueError):
        small_spec(grid=(("g_GHz", (1.0,)),))
    with pytest.raises(ValueError):
        small_spec(tau_rule="pi_over_g")


def test_infinite_lifetimes_from_null_config():
    spec = SweepSpec.from_config({
        "target": "transfer", "protocols": ["stirap"],
        "fixed": {"g_MHz": 15.0, "tau_p_ns": 133.33, "side_modes": 0,
                  "Qc": None, "T1_us": None},
        "workers": 1, "cross_check_every": 0})
    r = run_sweep(spec)[0]
    assert r.Qc is None and r.T1_us is None
    assert r.error < 1e-3


def test_figure_recipes_known_names():
    names = figure_names()
    for expected in ("fig2a", "fig2b", "fig2c_transfer", "fig2c_bell", "fig3a",
                     "fig4a", "fig4b", "fig5", "fig6", "fig7", "fig8", "fig9a", "fig9b"):
        assert expected in names
    spec = figure_recipes("fig2a")
    assert spec.tau_rule == "4pi_over_g"
    assert dict(spec.grid)["g_MHz"][0] == 1.0
    fig6 = figure_recipes("fig6")
    assert fig6.target == "bell"
    assert fig6.fixed["g_MHz"] == 4.0
    assert "Qc" not in fig6.fixed  # dissipation off
    with pytest.raises(KeyError):
        figure_recipes("fig99")


def test_tau_by_protocol_spec():
    spec = figure_recipes("fig8")
    pts = spec.points()
    taus = {p["protocol"]: p["tau_p_ns"] for p in pts}
    assert taus == {"stirap": 250.0, "satd": 51.5}


def test_workers_env_override(monkeypatch):
    from mmpassage.sweeps import resolve_workers
    monkeypatch.setenv("MMPASSAGE_WORKERS", "3")
    assert resolve_workers(small_spec(workers=1)) == 3
    monkeypatch.delenv("MMPASSAGE_WORKERS")
    assert resolve_workers(small_spec(workers=1)) == 1


def test_convergence_report_smoke():
    report = run_convergence(g_MHz_values=(6.0,), tolerance=1e-8, workers=1)
    assert len(report.records) == 6  # 2 level counts x 3 mode counts x 1 g
    s = report.summary
    assert s["max_abs_two_vs_three_levels"] < 1e-6
    assert s["max_rel_three_vs_five_modes"] < 0.10
    assert "modes" in report.table()
