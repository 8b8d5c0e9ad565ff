"""Command-line front end: presets, runs, comparisons, data export.

Verbs:

* ``run``          one simulation, CSV per requested observable + JSON manifest
* ``compare``      several methods/resolutions against a reference, error table
* ``coefficients`` per-mode occupations |b_k|^2(t) of an eigenbasis run
* ``list-presets`` the built-in scenario table

Every run is described by a plain config dict (flags, preset, or JSON file;
file values override flags). The manifest written next to the CSVs embeds
the fully resolved config, so ``movingwall run --config <manifest>``
reproduces a run exactly; integration is fixed-step and deterministic, so
the CSVs come out bit-identical.

Output directory: --out flag, else the MOVINGWALL_OUTDIR environment
variable, else the working directory.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import math
import os
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import basis, exact, fdref, kernels, observables, spectral
from . import motion as motion_mod
from .errors import DomainError, IntegrationQualityError, MovingWallError, UsageError

KNOWN_OUTPUTS = ("norm", "mean_position", "mean_energy", "mean_energy_normalized", "density")
KNOWN_METHODS = ("spectral", "fd", "exact")
DENSITY_POINTS = 2001

_T_WALL_HITS = 1.0 / 16.0  # uniform a=-16 wall reaches the origin here
_T_COMPRESSION = _T_WALL_HITS - 1.0 / 1000.0


def _motion_cfg(kind: str, **params) -> dict:
    return {"kind": kind, "params": params}


PRESETS: dict[str, dict] = {
    # hard compression: wall sweeps from 1 down to 0.016 at constant speed
    "doescher-a16": {
        "motion": _motion_cfg("uniform", l0=1.0, a=-16.0),
        "method": "spectral",
        "k_max": 10,
        "initial": {"kind": "doescher", "j": 1},
        "t_max": _T_COMPRESSION,
        "dt": 3e-7,
        "n_samples": 1000,
        "outputs": ["norm", "density"],
    },
    "uniform-a16": {
        "motion": _motion_cfg("uniform", l0=1.0, a=-16.0),
        "method": "spectral",
        "k_max": 60,
        "initial": {"kind": "fojon", "j": 2},
        "t_max": _T_COMPRESSION,
        "dt": 3e-8,
        "n_samples": 1000,
        "outputs": ["norm", "density"],
    },
    "fojon-oscillating-w1": {
        "motion": _motion_cfg("oscillatory", l0=1.0, a=0.3, omega=1.0),
        "method": "spectral",
        "k_max": 20,
        "initial": {"kind": "fojon", "j": 2},
        "t_max": 3.0,
        "dt": 1e-4,
        "n_samples": 1000,
        "outputs": ["norm", "mean_energy_normalized", "mean_position"],
    },
    "fojon-oscillating-w10": {
        "motion": _motion_cfg("oscillatory", l0=1.0, a=0.3, omega=10.0),
        "method": "spectral",
        "k_max": 20,
        "initial": {"kind": "fojon", "j": 2},
        "t_max": 3.0,
        "dt": 1e-4,
        "n_samples": 1000,
        "outputs": ["norm", "mean_energy_normalized", "mean_position"],
    },
    "fojon-oscillating-w4pi2": {
        "motion": _motion_cfg("oscillatory", l0=1.0, a=0.3, omega=4.0 * math.pi**2),
        "method": "spectral",
        "k_max": 60,
        "initial": {"kind": "fojon", "j": 2},
        "t_max": 3.0,
        "dt": 1e-5,
        "n_samples": 1000,
        "outputs": ["norm", "mean_energy_normalized", "mean_position", "density"],
    },
    "sudden-b10": {
        "motion": _motion_cfg("sudden", a=2.0, b=10.0),
        "method": "spectral",
        "k_max": 40,
        "initial": {"kind": "fojon", "j": 2},
        "t_max": 5.0,
        "dt": 1e-5,
        "n_samples": 1000,
        "outputs": ["norm", "mean_position"],
    },
}

_MOTION_PARAM_NAMES = {
    "uniform": ("l0", "a"),
    "oscillatory": ("l0", "a", "omega"),
    "sudden": ("a", "b"),
}


def build_motion(cfg: dict) -> motion_mod.WallMotion:
    """WallMotion from its config dict {'kind': ..., 'params': {...}}."""
    try:
        kind = cfg["kind"]
        params = cfg["params"]
    except (KeyError, TypeError):
        raise UsageError(f"motion config needs 'kind' and 'params', got {cfg!r}") from None
    names = _MOTION_PARAM_NAMES.get(kind)
    if names is None:
        raise UsageError(f"unknown motion kind {kind!r}")
    if set(params) != set(names):
        raise UsageError(f"{kind} motion needs parameters {names}, got {tuple(params)}")
    args = [float(params[n]) for n in names]
    if kind == "uniform":
        return motion_mod.uniform(*args)
    if kind == "oscillatory":
        return motion_mod.oscillatory(*args)
    return motion_mod.sudden_expansion(*args)


def _validate_config(cfg: dict) -> dict:
    cfg = dict(cfg)
    known = {
        "label", "motion", "method", "k_max", "n_grid", "initial",
        "t_max", "dt", "n_samples", "outputs",
    }
    unknown = set(cfg) - known
    if unknown:
        raise UsageError(f"unknown config fields: {sorted(unknown)}")
    for req in ("motion", "method", "initial", "t_max", "dt"):
        if req not in cfg:
            raise UsageError(f"config is missing required field {req!r}")
    if cfg["method"] not in KNOWN_METHODS:
        raise UsageError(f"method must be one of {KNOWN_METHODS}, got {cfg['method']!r}")
    if cfg["method"] == "spectral" and int(cfg.get("k_max", 0)) < 1:
        raise UsageError("spectral method needs a positive k_max")
    if cfg["method"] == "fd" and int(cfg.get("n_grid", 0)) < 3:
        raise UsageError("fd method needs n_grid of at least 3")
    init = cfg["initial"]
    if not isinstance(init, dict) or init.get("kind") not in ("doescher", "fojon"):
        raise UsageError(f"initial must be {{'kind': 'doescher'|'fojon', 'j': int}}, got {init!r}")
    if int(init.get("j", 0)) < 1:
        raise UsageError("initial mode index j must be a positive integer")
    cfg.setdefault("n_samples", 1000)
    cfg.setdefault("outputs", ["norm"])
    bad = [o for o in cfg["outputs"] if o not in KNOWN_OUTPUTS]
    if bad:
        raise UsageError(f"unknown outputs {bad}; known: {list(KNOWN_OUTPUTS)}")
    cfg.setdefault("label", "run")
    return cfg


def _initial_alpha(init: dict, m: motion_mod.WallMotion) -> float:
    if init["kind"] == "doescher":
        return 0.0
    return basis.alpha_from_motion(m)


def _initial_psi0(init: dict, m: motion_mod.WallMotion):
    """Initial wavefunction on physical x for the grid method."""
    j = int(init["j"])
    l0 = float(m.length(0.0))
    alpha = _initial_alpha(init, m)

    def psi0(xs):
        base = basis.eigenfunction(j, xs, l0)
        if alpha == 0.0:
            return base.astype(complex) if hasattr(base, "astype") else complex(base)
        return base * np.exp(1j * alpha * np.asarray(xs) ** 2 / (l0 * l0))

    return psi0


@dataclass
class RunResult:
    """In-memory product of one run; the CLI serializes it afterward."""

    config: dict
    motion: motion_mod.WallMotion
    trajectory: object  # SpectralTrajectory | GridTrajectory | ExactUniformSolution
    times: np.ndarray
    series: dict
    density_snapshot: tuple | None
    captured_initial_norm: float
    final_norm_drift: float
    max_norm_drift: float
    wall_time_s: float


def _exact_series(sol: exact.ExactUniformSolution, times: np.ndarray, name: str):
    ls = sol.l0 + sol.a * times
    if name == "norm":
        return np.ones_like(times)
    if name == "mean_position":
        return ls / 2.0
    if name in ("mean_energy", "mean_energy_normalized"):
        # <H> = n^2 pi^2/ell^2 + (a^2/4)(1/3 - 1/(2 n^2 pi^2)): the quadratic
        # phase contributes a constant kinetic term
        n2p2 = (sol.n * math.pi) ** 2
        vals = n2p2 / ls**2 + (sol.a**2 / 4.0) * (1.0 / 3.0 - 1.0 / (2.0 * n2p2))
        if name == "mean_energy_normalized":
            vals = vals / vals[0]
        return vals
    raise UsageError(f"output {name!r} not available for the exact method")


def run_config(cfg: dict) -> RunResult:
    """Execute one run described by a config dict."""
    cfg = _validate_config(cfg)
    m = build_motion(cfg["motion"])
    t_max = float(cfg["t_max"])
    dt = float(cfg["dt"])
    n_samples = int(cfg["n_samples"])
    init = cfg["initial"]
    j = int(init["j"])
    method = cfg["method"]

    t0 = time.perf_counter()
    density_snapshot = None
    series: dict[str, observables.TimeSeries] = {}

    if method == "spectral":
        k_max = int(cfg["k_max"])
        alpha = _initial_alpha(init, m)
        state0 = basis.decompose_initial(j, alpha, k_max)
        traj = spectral.evolve(state0, m, t_max, dt, n_samples=n_samples)
        times = traj.times
        captured = state0.captured_norm
        norms = traj.norms()
        final_drift = float(abs(norms[-1] / norms[0] - 1.0))
        max_drift = traj.max_norm_drift
        for name in cfg["outputs"]:
            if name == "density":
                xs, vals = observables.density(traj.state(len(traj) - 1), m, DENSITY_POINTS)
                density_snapshot = (xs, vals)
            elif name == "norm":
                series[name] = observables.TimeSeries("norm", times, norms)
            elif name == "mean_position":
                series[name] = observables.mean_position_series(traj)
            elif name == "mean_energy":
                series[name] = observables.mean_energy_series(traj)
            elif name == "mean_energy_normalized":
                series[name] = observables.mean_energy_series(traj, normalized=True)
    elif method == "fd":
        n_grid = int(cfg["n_grid"])
        psi0 = _initial_psi0(init, m)
        traj = fdref.fd_evolve(psi0, m, n_grid, t_max, dt, n_samples=n_samples)
        times = traj.times
        first = observables.norm(traj.state(0), m)
        captured = first
        final = observables.norm(traj.state(len(traj) - 1), m)
        final_drift = float(abs(final / first - 1.0))
        max_drift = traj.max_norm_drift
        for name in cfg["outputs"]:
            if name == "density":
                xs, vals = observables.density(traj.state(len(traj) - 1), m, DENSITY_POINTS)
                density_snapshot = (xs, vals)
            elif name == "norm":
                series[name] = observables.norm_series(traj)
            elif name == "mean_position":
                series[name] = observables.mean_position_series(traj)
            elif name == "mean_energy":
                series[name] = observables.mean_energy_series(traj)
            elif name == "mean_energy_normalized":
                series[name] = observables.mean_energy_series(traj, normalized=True)
    else:  # exact
        if m.kind != motion_mod.UNIFORM:
            raise UsageError("the exact method needs uniform wall motion")
        if init["kind"] == "doescher" and float(m.velocity(0.0)) != 0.0:
            raise UsageError(
                "the exact solution for a moving wall starts from the phased "
                "initial state; use initial kind 'fojon'"
            )
        m.validate(t_max)
        sol = exact.ExactUniformSolution.from_motion(j, m)
        traj = sol
        times = np.linspace(0.0, t_max, n_samples)
        captured = 1.0
        final_drift = 0.0
        max_drift = 0.0
        for name in cfg["outputs"]:
            if name == "density":
                l_end = sol.length(t_max)
                xs = np.linspace(0.0, l_end, DENSITY_POINTS)
                density_snapshot = (xs, sol.density(xs, t_max))
            else:
                series[name] = observables.TimeSeries(name, times, _exact_series(sol, times, name))

    wall = time.perf_counter() - t0
    return RunResult(
        config=cfg,
        motion=m,
        trajectory=traj,
        times=times,
        series=series,
        density_snapshot=density_snapshot,
        captured_initial_norm=float(captured),
        final_norm_drift=final_drift,
        max_norm_drift=max_drift,
        wall_time_s=wall,
    )


def final_sampler(result: RunResult):
    """Callable psi(x) of the run's final state, for cross-method errors."""
    cfg = result.config
    if cfg["method"] == "spectral":
        traj = result.trajectory
        st = traj.state(len(traj) - 1)
        return lambda xs: spectral.reconstruct(st, result.motion, xs)
    if cfg["method"] == "fd":
        traj = result.trajectory
        return fdref.wavefunction_sampler(traj.state(len(traj) - 1), result.motion)
    sol = result.trajectory
    t_max = float(cfg["t_max"])
    return lambda xs: sol.psi(xs, t_max)


# ---------------------------------------------------------------------------
# serialization

def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _write_csv(path: str, header: list[str], columns: list[np.ndarray]) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*columns):
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_run(result: RunResult, out_dir: str) -> dict:
    """Serialize a RunResult: one CSV per observable plus a JSON manifest."""
    os.makedirs(out_dir, exist_ok=True)
    label = result.config["label"]
    written: dict[str, str] = {}
    for name, ts in result.series.items():
        fname = f"{label}_{name}.csv"
        _write_csv(os.path.join(out_dir, fname), ["t", name], [ts.times, ts.values])
        written[name] = fname
    if result.density_snapshot is not None:
        xs, vals = result.density_snapshot
        fname = f"{label}_density.csv"
        _write_csv(os.path.join(out_dir, fname), ["x", "density"], [xs, vals])
        written["density"] = fname

    manifest = {
        "config": result.config,
        "backend": kernels.BACKEND,
        "captured_initial_norm": result.captured_initial_norm,
        "final_norm_drift": result.final_norm_drift,
        "max_norm_drift": result.max_norm_drift,
        "wall_time_s": result.wall_time_s,
        "outputs": written,
        "notes": {
            "mean_energy_fd": "grid central differences, normalized by the state's own norm",
            "densities": "snapshot at the final sample time",
        },
    }
    mpath = os.path.join(out_dir, f"{label}_manifest.json")
    with open(mpath, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    manifest["manifest_path"] = mpath
    return manifest


def compare_runs(scenario: dict, runs: list[dict], reference: dict, out_dir: str, label: str = "compare") -> str:
    """Run methods against a reference, write the error table, return its path.

    ``scenario`` holds the shared fields (motion, initial, t_max, n_samples);
    each entry of ``runs`` and ``reference`` adds method, resolution and dt.
    The error column is the x-averaged squared wavefunction difference at
    t_max; the ODE-count column is k_max for the eigenbasis method and N-1
    for the grid method, 0 for exact.
    """
    shared = {k: scenario[k] for k in ("motion", "initial", "t_max") if k in scenario}
    if len(shared) != 3:
        raise UsageError("compare scenario needs motion, initial and t_max")
    n_samples = int(scenario.get("n_samples", 1000))

    def to_config(spec: dict, tag: str) -> dict:
        cfg = {
            "label": f"{label}_{tag}",
            "method": spec.get("method"),
            "t_max": shared["t_max"],
            "dt": spec.get("dt"),
            "n_samples": n_samples,
            "outputs": [],
            "motion": shared["motion"],
            "initial": shared["initial"],
        }
        if cfg["dt"] is None:
            raise UsageError(f"compare spec {spec!r} is missing dt")
        method = spec.get("method")
        if method in ("spectral", "fd"):
            if "resolution" not in spec:
                raise UsageError(f"compare spec {spec!r} is missing resolution")
            cfg["k_max" if method == "spectral" else "n_grid"] = int(spec["resolution"])
        elif method != "exact":
            raise UsageError(f"compare spec {spec!r} has no valid method")
        return _validate_config(cfg)

    ref_cfg = to_config(reference, "reference")
    run_cfgs = [
        to_config(spec, f"{spec.get('method', 'x')}{spec.get('resolution', '')}")
        for spec in runs
    ]

    with concurrent.futures.ThreadPoolExecutor(
        max_workers=min(len(run_cfgs) + 1, os.cpu_count() or 1)
    ) as pool:
        ref_future = pool.submit(run_config, ref_cfg)
        futures = [pool.submit(run_config, cfg) for cfg in run_cfgs]
        ref_result = ref_future.result()
        results = [f.result() for f in futures]

    m = ref_result.motion
    t_max = float(shared["t_max"])
    ref_sampler = final_sampler(ref_result)
    rows = []
    for spec, res in zip(runs, results):
        err = observables.average_error(final_sampler(res), ref_sampler, t_max, m)
        method = res.config["method"]
        if method == "spectral":
            resolution = res.config["k_max"]
            n_odes = resolution
        elif method == "fd":
            resolution = res.config["n_grid"]
            n_odes = resolution - 1
        else:
            resolution = 0
            n_odes = 0
        rows.append((method, resolution, n_odes, err, res.final_norm_drift))

    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{label}.csv")
    with open(path, "w") as fh:
        fh.write("method,resolution,n_complex_odes,average_error,final_norm_drift\n")
        for method, resolution, n_odes, err, drift in rows:
            fh.write(f"{method},{resolution},{n_odes},{_fmt(err)},{_fmt(drift)}\n")
    return path


def coefficients_run(cfg: dict, modes: list[int], out_dir: str) -> str:
    """Write per-mode occupations |b_k|^2(t); spectral method only."""
    cfg = _validate_config(cfg)
    if cfg["method"] != "spectral":
        raise UsageError("coefficients are defined for the spectral method only")
    for k in modes:
        if not 1 <= k <= int(cfg["k_max"]):
            raise UsageError(f"mode {k} outside [1, k_max={cfg['k_max']}]")
    cfg = dict(cfg, outputs=[])
    result = run_config(cfg)
    ts = observables.occupation_series(result.trajectory, modes)
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{cfg['label']}_coefficients.csv")
    header = ["t"] + [f"mode_{k}" for k in modes]
    cols = [ts.times] + [ts.values[:, i] for i in range(len(modes))]
    _write_csv(path, header, cols)
    return path


# ---------------------------------------------------------------------------
# argument parsing

def _parse_motion_flag(text: str) -> dict:
    try:
        kind, rest = text.split(":", 1)
        values = [float(v) for v in rest.split(",")]
    except ValueError:
        raise UsageError(f"motion flag must look like kind:p1,p2[,p3], got {text!r}") from None
    names = _MOTION_PARAM_NAMES.get(kind)
    if names is None or len(values) != len(names):
        raise UsageError(
            f"motion flag {text!r}: expected one of "
            + ", ".join(f"{k}:{','.join(n)}" for k, n in _MOTION_PARAM_NAMES.items())
        )
    return _motion_cfg(kind, **dict(zip(names, values)))


def _parse_initial_flag(text: str) -> dict:
    try:
        kind, j = text.split(":", 1)
        j = int(j)
    except ValueError:
        raise UsageError(f"initial flag must look like doescher:1 or fojon:2, got {text!r}") from None
    return {"kind": kind, "j": j}


def _config_from_args(args) -> dict:
    cfg: dict = {}
    if args.preset:
        if args.preset not in PRESETS:
            raise UsageError(f"unknown preset {args.preset!r}; see list-presets")
        cfg = json.loads(json.dumps(PRESETS[args.preset]))  # deep copy
        cfg["label"] = args.preset
    if args.motion:
        cfg["motion"] = _parse_motion_flag(args.motion)
    if args.initial:
        cfg["initial"] = _parse_initial_flag(args.initial)
    if args.method:
        cfg["method"] = args.method
    if args.k_max is not None:
        cfg["k_max"] = args.k_max
    if getattr(args, "n_grid", None) is not None:
        cfg["n_grid"] = args.n_grid
    if args.t_max is not None:
        cfg["t_max"] = args.t_max
    if args.dt is not None:
        cfg["dt"] = args.dt
    if args.n_samples is not None:
        cfg["n_samples"] = args.n_samples
    if getattr(args, "outputs", None):
        cfg["outputs"] = args.outputs.split(",")
    if args.label:
        cfg["label"] = args.label
    if args.config:
        with open(args.config) as fh:
            loaded = json.load(fh)
        if "config" in loaded and isinstance(loaded["config"], dict):
            loaded = loaded["config"]  # accept a manifest as config
        cfg.update(loaded)
    return cfg


def _out_dir(args) -> str:
    if args.out:
        return args.out
    return os.environ.get("MOVINGWALL_OUTDIR", ".")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--preset", help="start from a named preset (see list-presets)")
    p.add_argument("--config", help="JSON file whose fields override the flags")
    p.add_argument("--motion", help="kind:params, e.g. uniform:1,-16 or oscillatory:1,0.3,39.478")
    p.add_argument("--initial", help="kind:j, e.g. doescher:1 or fojon:2")
    p.add_argument("--method", choices=KNOWN_METHODS)
    p.add_argument("--k-max", dest="k_max", type=int, help="mode cutoff for the spectral method")
    p.add_argument("--t-max", dest="t_max", type=float)
    p.add_argument("--dt", type=float)
    p.add_argument("--n-samples", dest="n_samples", type=int)
    p.add_argument("--label", help="output file prefix")
    p.add_argument("--out", help="output directory (default: $MOVINGWALL_OUTDIR or .)")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="movingwall",
        description="Schrödinger dynamics in a box with a moving wall",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p_run = sub.add_parser("run", help="execute one simulation and export its observables")
    _add_common(p_run)
    p_run.add_argument("--n-grid", dest="n_grid", type=int, help="grid intervals for the fd method")
    p_run.add_argument("--outputs", help="comma list of " + ",".join(KNOWN_OUTPUTS))

    p_cmp = sub.add_parser("compare", help="error table of several runs against a reference")
    _add_common(p_cmp)
    p_cmp.add_argument("--spectral", help="comma list of k_max values to run")
    p_cmp.add_argument("--fd", help="comma list of grid sizes to run")
    p_cmp.add_argument("--reference", help="exact | spectral:K | fd:N (default exact)")
    p_cmp.add_argument("--spectral-dt", dest="spectral_dt", type=float,
                       help="dt override for the spectral runs")
    p_cmp.add_argument("--fd-dt", dest="fd_dt", type=float, help="dt override for the fd runs")
    p_cmp.add_argument("--reference-dt", dest="reference_dt", type=float)

    p_coef = sub.add_parser("coefficients", help="per-mode occupations of a spectral run")
    _add_common(p_coef)
    p_coef.add_argument("--modes", required=True, help="comma list of mode indices")

    sub.add_parser("list-presets", help="show the built-in scenarios")
    return ap


def _cmd_run(args) -> int:
    cfg = _config_from_args(args)
    result = run_config(cfg)
    manifest = write_run(result, _out_dir(args))
    print(manifest["manifest_path"])
    return 0


def _cmd_compare(args) -> int:
    cfg = _config_from_args(args)
    file_cfg: dict = {}
    if args.config:
        with open(args.config) as fh:
            file_cfg = json.load(fh)

    scenario = {
        k: cfg[k] for k in ("motion", "initial", "t_max", "n_samples") if k in cfg
    }
    scenario.update(file_cfg.get("scenario", {}))

    runs: list[dict] = list(file_cfg.get("runs", []))
    base_dt = cfg.get("dt")
    if not runs:
        for text, method, dt_override in (
            (args.spectral, "spectral", args.spectral_dt),
            (args.fd, "fd", args.fd_dt),
        ):
            if not text:
                continue
            for tok in text.split(","):
                runs.append({
                    "method": method,
                    "resolution": int(tok),
                    "dt": dt_override if dt_override is not None else base_dt,
                })
    if not runs:
        raise UsageError("compare needs at least one run (--spectral/--fd or a config file)")

    reference = file_cfg.get("reference")
    if reference is None:
        text = args.reference or "exact"
        if text == "exact":
            reference = {"method": "exact", "resolution": 0}
        else:
            try:
                meth, res = text.split(":", 1)
                reference = {"method": meth, "resolution": int(res)}
            except ValueError:
                raise UsageError(f"reference must be exact, spectral:K or fd:N, got {text!r}") from None
        reference["dt"] = args.reference_dt if args.reference_dt is not None else base_dt
        if reference["method"] == "exact":
            reference["dt"] = reference.get("dt") or 1.0  # unused by the closed form
    label = cfg.get("label", "compare")
    path = compare_runs(scenario, runs, reference, _out_dir(args), label=label)
    print(path)
    return 0


def _cmd_coefficients(args) -> int:
    cfg = _config_from_args(args)
    cfg.setdefault("method", "spectral")
    try:
        modes = [int(tok) for tok in args.modes.split(",")]
    except ValueError:
        raise UsageError(f"--modes must be a comma list of integers, got {args.modes!r}") from None
    path = coefficients_run(cfg, modes, _out_dir(args))
    print(path)
    return 0


def _cmd_list_presets() -> int:
    for name, cfg in PRESETS.items():
        mo = cfg["motion"]
        params = ", ".join(f"{k}={v:g}" for k, v in mo["params"].items())
        init = cfg["initial"]
        print(
            f"{name}: {mo['kind']}({params}), init {init['kind']} j={init['j']}, "
            f"k_max={cfg['k_max']}, t_max={cfg['t_max']:g}, dt={cfg['dt']:g}"
        )
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.verb == "run":
            return _cmd_run(args)
        if args.verb == "compare":
            return _cmd_compare(args)
        if args.verb == "coefficients":
            return _cmd_coefficients(args)
        return _cmd_list_presets()
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except IntegrationQualityError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except MovingWallError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
