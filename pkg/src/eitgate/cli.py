"""Command-line front end.

Subcommands cover the main workflows: "simulate" integrates the
collective five-level gate and writes a time-series table plus a summary,
"scan" repeats that over one swept parameter, "groupvel" reports
propagation speed and cell geometry, "ladder" runs the three-level
comparison model, "perturbative" prints the analytic cross-phase, and
"fringes" tabulates the interferometer coincidence patterns. All
configuration comes from one flat JSON file; every key has a default and
unknown keys are rejected. File outputs are written atomically with LF
newlines and 17 significant digits so identical inputs give identical
bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import dynamics, groupvel, interferometer, ladder, observables, perturbative
from .groupvel import OpticalConstants
from .ladder import LadderParams
from .mscheme import GAMMA_SI_DEFAULT, MSchemeParams

DEFAULTS: dict = {
    # medium and drive, units of γ
    "n_atoms": 1.0,
    "g_p": 0.0,
    "g_t": 0.0,
    "omega1": 0.0,
    "omega4": 0.0,
    "delta2": 0.0,
    "delta3": 0.0,
    "eps12": 0.0,
    "eps34": 0.0,
    "gamma_21": 1.0 / 3.0,
    "gamma_23": 1.0 / 3.0,
    "gamma_25": 1.0 / 3.0,
    "gamma_41": 1.0 / 3.0,
    "gamma_43": 1.0 / 3.0,
    "gamma_45": 1.0 / 3.0,
    "deph_1": 1e-3,
    "deph_2": 1e-3,
    "deph_4": 1e-3,
    "deph_5": 1e-3,
    "gamma_si": GAMMA_SI_DEFAULT,
    # integration and readout
    "t_max": 1.0,
    "n_samples": 201,
    "method": "exponential",
    "rel_tol": 1e-8,
    "abs_tol": 1e-12,
    "dephasing_mode": "lindblad",
    "mc_samples": 2000,
    "seed": 42,
    # input superposition amplitudes (real or [re, im])
    "c00": 0.5,
    "c01": 0.5,
    "c10": 0.5,
    "c11": 0.5,
    # SI constants and transition data
    "c": 299792458.0,
    "hbar": 1.054571817e-34,
    "epsilon0": 8.8541878128e-12,
    "omega_p": 2.0 * math.pi * 377.228e12,
    "omega_t": 2.0 * math.pi * 384.225e12,
    "mu_p": 2.5e-29,
    "mu_t": 2.5e-29,
    # susceptibility probing
    "probe_rabi_classical": 1e-3,
    "fd_step": 1e-3,
    "avg_grid": 200,
    # ladder comparison model
    "delta_p": 0.0,
    "delta_t": 0.0,
    "ladder_gamma21": 1.0,
    "ladder_gamma32": 1.0,
    "n_max": 3,
    "ladder_convention": "as-printed",
}

_STRING_KEYS = {
    "method": ("exponential", "adaptive-rk"),
    "dephasing_mode": ("lindblad", "excluded"),
    "ladder_convention": ("as-printed", "absorptive"),
}
_INT_KEYS = {"n_samples", "mc_samples", "seed", "avg_grid", "n_max"}
_AMPLITUDE_KEYS = ("c00", "c01", "c10", "c11")


def load_config(path: str | None) -> dict:
    """Defaults overlaid with the JSON file; unknown keys are fatal."""
    cfg = dict(DEFAULTS)
    if path is None:
        return cfg
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config must be a JSON object")
    for key, value in data.items():
        if key not in DEFAULTS:
            raise ValueError(f"unknown config key {key!r}")
        if key in _STRING_KEYS:
            if value not in _STRING_KEYS[key]:
                raise ValueError(
                    f"config key {key!r} must be one of {_STRING_KEYS[key]}"
                )
        elif key in _AMPLITUDE_KEYS:
            _amplitude_value(key, value)
        elif key in _INT_KEYS:
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"config key {key!r} must be an integer")
        else:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValueError(f"config key {key!r} must be a number")
        cfg[key] = value
    return cfg


def _amplitude_value(key: str, value) -> complex:
    if isinstance(value, bool):
        raise ValueError(f"config key {key!r} must be a number or [re, im]")
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        return complex(value[0], value[1])
    raise ValueError(f"config key {key!r} must be a number or [re, im]")


def amplitudes_from_config(cfg: dict) -> np.ndarray:
    return np.array([_amplitude_value(k, cfg[k]) for k in _AMPLITUDE_KEYS])


def params_from_config(cfg: dict) -> MSchemeParams:
    return MSchemeParams(
        N_a=float(cfg["n_atoms"]),
        g_p=float(cfg["g_p"]),
        g_t=float(cfg["g_t"]),
        Omega1=float(cfg["omega1"]),
        Omega4=float(cfg["omega4"]),
        delta2=float(cfg["delta2"]),
        delta3=float(cfg["delta3"]),
        eps12=float(cfg["eps12"]),
        eps34=float(cfg["eps34"]),
        gamma21=float(cfg["gamma_21"]),
        gamma23=float(cfg["gamma_23"]),
        gamma25=float(cfg["gamma_25"]),
        gamma41=float(cfg["gamma_41"]),
        gamma43=float(cfg["gamma_43"]),
        gamma45=float(cfg["gamma_45"]),
        gamma_deph_1=float(cfg["deph_1"]),
        gamma_deph_2=float(cfg["deph_2"]),
        gamma_deph_4=float(cfg["deph_4"]),
        gamma_deph_5=float(cfg["deph_5"]),
        gamma_SI=float(cfg["gamma_si"]),
    )


def ladder_params_from_config(cfg: dict) -> LadderParams:
    return LadderParams(
        N_a=float(cfg["n_atoms"]),
        g_p=float(cfg["g_p"]),
        g_t=float(cfg["g_t"]),
        delta_p=float(cfg["delta_p"]),
        delta_t=float(cfg["delta_t"]),
        gamma21=float(cfg["ladder_gamma21"]),
        gamma32=float(cfg["ladder_gamma32"]),
        n_max=int(cfg["n_max"]),
        convention=cfg["ladder_convention"],
    )


def constants_from_config(cfg: dict) -> OpticalConstants:
    return OpticalConstants(
        c=float(cfg["c"]),
        hbar=float(cfg["hbar"]),
        epsilon0=float(cfg["epsilon0"]),
        omega_p=float(cfg["omega_p"]),
        omega_t=float(cfg["omega_t"]),
        mu_p=float(cfg["mu_p"]),
        mu_t=float(cfg["mu_t"]),
    )


def _times_from_config(cfg: dict) -> np.ndarray:
    if cfg["t_max"] <= 0:
        raise ValueError("t_max must be positive")
    if cfg["n_samples"] < 2:
        raise ValueError("n_samples must be at least 2")
    return np.linspace(0.0, float(cfg["t_max"]), int(cfg["n_samples"]))


def _engine_kwargs(cfg: dict) -> dict:
    return {
        "method": cfg["method"],
        "rel_tol": float(cfg["rel_tol"]),
        "abs_tol": float(cfg["abs_tol"]),
    }


def _metrics_from_blocks(lam_all, cond_lam_all, cond_traces, phases, cfg):
    """Per-time fidelities against the instantaneous ideal phase gate."""
    T = lam_all.shape[0]
    fid = np.empty(T)
    cond_fid = np.empty(T)
    p_success = np.empty(T)
    for m in range(T):
        U = observables.ideal_phase_unitary(phases[m])
        fid[m] = observables.average_fidelity_from_blocks(lam_all[m], U)
        r = observables.conditional_fidelity_from_blocks(
            cond_lam_all[m],
            cond_traces[m],
            U,
            mc_samples=int(cfg["mc_samples"]),
            seed=int(cfg["seed"]),
        )
        cond_fid[m] = r.fidelity
        p_success[m] = r.p_success
    return fid, cond_fid, p_success


def run_gate_analysis(cfg: dict) -> dict:
    """Phases, fidelities and populations of the five-level gate."""
    params = params_from_config(cfg)
    times = _times_from_config(cfg)
    amps = amplitudes_from_config(cfg)
    kw = _engine_kwargs(cfg)
    gt = dynamics.evolve_gate_inputs(params, times, amps, **kw)
    cond = dynamics.evolve_gate_inputs(
        params,
        times,
        amps,
        conditional=True,
        dephasing_mode=cfg["dephasing_mode"],
        **kw,
    )
    super_traj = gt.superposition
    fields = observables.reduce_to_fields(super_traj)
    phases = observables.extract_phases(fields, gt.amplitudes)
    cps = observables.conditional_phase_shift(phases)
    lam_all = observables.qubit_block(observables.reduce_to_fields(gt.unit_inputs))
    cond_lam_all = observables.qubit_block(observables.reduce_to_fields(cond.unit_inputs))
    cond_traces = np.einsum("tkaa->tk", cond.unit_inputs)
    fid, cond_fid, p_success = _metrics_from_blocks(
        lam_all, cond_lam_all, cond_traces, phases, cfg
    )
    return {
        "times": times,
        "phases": phases,
        "cps": cps,
        "fidelity": fid,
        "cond_fidelity": cond_fid,
        "p_success": p_success,
        "populations": observables.populations(super_traj),
        "pop_names": observables.population_names(),
    }


def run_ladder_analysis(cfg: dict) -> dict:
    """Same metrics for the three-level comparison model."""
    params = ladder_params_from_config(cfg)
    times = _times_from_config(cfg)
    amps = amplitudes_from_config(cfg)
    kw = _engine_kwargs(cfg)
    gt = ladder.evolve_ladder_gate(params, times, amps, **kw)
    cond = ladder.evolve_ladder_gate(params, times, amps, conditional=True, **kw)
    super_traj = gt.superposition
    ladder.check_truncation(super_traj, params.n_max)
    photons = ladder.reduce_to_photons(super_traj, params.n_max)
    qb = ladder.photon_qubit_block(photons, params.n_max)
    phases = observables.phases_from_coherences(qb[:, 1:4, 0], gt.amplitudes)
    cps = observables.conditional_phase_shift(phases)
    lam_all = ladder.photon_qubit_block(
        ladder.reduce_to_photons(gt.unit_inputs, params.n_max), params.n_max
    )
    cond_lam_all = ladder.photon_qubit_block(
        ladder.reduce_to_photons(cond.unit_inputs, params.n_max), params.n_max
    )
    cond_traces = np.einsum("tkaa->tk", cond.unit_inputs)
    fid, cond_fid, p_success = _metrics_from_blocks(
        lam_all, cond_lam_all, cond_traces, phases, cfg
    )
    P = params.n_max + 1
    pop_names = tuple(
        f"{atom}_{n_p}_{n_t}"
        for atom in ladder.LADDER_ATOM_LABELS
        for n_p in range(P)
        for n_t in range(P)
    )
    return {
        "times": times,
        "phases": phases,
        "cps": cps,
        "fidelity": fid,
        "cond_fidelity": cond_fid,
        "p_success": p_success,
        "populations": observables.populations(super_traj),
        "pop_names": pop_names,
    }


def pi_crossing_time(times: np.ndarray, cps: np.ndarray) -> float | None:
    """First time |cps| reaches π, linearly interpolated; None if never."""
    a = np.abs(np.asarray(cps))
    hits = np.nonzero(a >= math.pi)[0]
    if hits.size == 0:
        return None
    k = int(hits[0])
    if k == 0:
        return float(times[0])
    t0, t1 = times[k - 1], times[k]
    a0, a1 = a[k - 1], a[k]
    return float(t0 + (math.pi - a0) * (t1 - t0) / (a1 - a0))


def _fmt(x: float) -> str:
    return f"{float(x):.16e}"


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _write_timeseries(outdir: Path, res: dict) -> None:
    header = ["time", "phi01", "phi10", "phi11", "cps", "fidelity", "cond_fidelity",
              "p_success"] + [f"pop_{n}" for n in res["pop_names"]]
    lines = [",".join(header)]
    for m in range(res["times"].size):
        row = [
            res["times"][m],
            res["phases"][m, 0],
            res["phases"][m, 1],
            res["phases"][m, 2],
            res["cps"][m],
            res["fidelity"][m],
            res["cond_fidelity"][m],
            res["p_success"][m],
        ] + list(res["populations"][m])
        lines.append(",".join(_fmt(v) for v in row))
    _atomic_write(outdir / "timeseries.csv", "\n".join(lines) + "\n")


def _values_at(res: dict, t: float) -> dict:
    tt = res["times"]
    return {
        "time": float(t),
        "phi01": float(np.interp(t, tt, res["phases"][:, 0])),
        "phi10": float(np.interp(t, tt, res["phases"][:, 1])),
        "phi11": float(np.interp(t, tt, res["phases"][:, 2])),
        "cps": float(np.interp(t, tt, res["cps"])),
        "fidelity": float(np.interp(t, tt, res["fidelity"])),
        "cond_fidelity": float(np.interp(t, tt, res["cond_fidelity"])),
        "p_success": float(np.interp(t, tt, res["p_success"])),
    }


def _write_summary(outdir: Path, cfg: dict, res: dict, derived: dict) -> None:
    t_pi = pi_crossing_time(res["times"], res["cps"])
    summary = {
        "config": cfg,
        "derived": derived,
        "at_t_max": _values_at(res, float(res["times"][-1])),
        "pi_crossing": t_pi,
        "at_pi_crossing": None if t_pi is None else _values_at(res, t_pi),
    }
    _atomic_write(outdir / "summary.json", json.dumps(summary, indent=2, sort_keys=True) + "\n")


def _outdir(args) -> Path:
    out = Path(getattr(args, "out", None) or ".")
    out.mkdir(parents=True, exist_ok=True)
    return out


def _config_with_overrides(args) -> dict:
    cfg = load_config(getattr(args, "config", None))
    seed = getattr(args, "seed", None)
    if seed is not None:
        cfg["seed"] = seed
    return cfg


def cmd_simulate(args) -> int:
    cfg = _config_with_overrides(args)
    res = run_gate_analysis(cfg)
    outdir = _outdir(args)
    params = params_from_config(cfg)
    derived = {"delta1": params.delta1, "delta4": params.delta4}
    _write_timeseries(outdir, res)
    _write_summary(outdir, cfg, res, derived)
    return 0


def cmd_ladder(args) -> int:
    cfg = _config_with_overrides(args)
    res = run_ladder_analysis(cfg)
    outdir = _outdir(args)
    derived = {"ladder_dim": ladder.ladder_dim(int(cfg["n_max"]))}
    _write_timeseries(outdir, res)
    _write_summary(outdir, cfg, res, derived)
    return 0


def cmd_scan(args) -> int:
    cfg = _config_with_overrides(args)
    if args.param not in DEFAULTS:
        raise ValueError(f"unknown scan parameter {args.param!r}")
    if args.param in _STRING_KEYS or args.param in _AMPLITUDE_KEYS:
        raise ValueError(f"scan parameter {args.param!r} is not numeric")
    if args.steps < 1:
        raise ValueError("steps must be at least 1")
    values = np.linspace(args.from_, args.to, args.steps)
    lines = ["value,pi_time,fidelity,cond_fidelity,error"]
    for value in values:
        cfg_i = dict(cfg)
        cfg_i[args.param] = int(round(value)) if args.param in _INT_KEYS else float(value)
        pi_s = fid_s = cond_s = ""
        err = ""
        try:
            res = run_gate_analysis(cfg_i)
            t_pi = pi_crossing_time(res["times"], res["cps"])
            if t_pi is not None:
                pi_s = _fmt(t_pi)
                fid_s = _fmt(np.interp(t_pi, res["times"], res["fidelity"]))
                cond_s = _fmt(np.interp(t_pi, res["times"], res["cond_fidelity"]))
        except Exception as exc:  # keep scanning, record the failure
            err = str(exc).replace(",", ";").replace("\n", " ")
        lines.append(f"{_fmt(value)},{pi_s},{fid_s},{cond_s},{err}")
    _atomic_write(_outdir(args) / "scan.csv", "\n".join(lines) + "\n")
    return 0


def cmd_groupvel(args) -> int:
    cfg = _config_with_overrides(args)
    params = params_from_config(cfg)
    constants = constants_from_config(cfg)
    common = {
        "fd_step": float(cfg["fd_step"]),
        "probe_rabi_classical": float(cfg["probe_rabi_classical"]),
        "constants": constants,
    }
    v_steady = groupvel.group_velocity_steady(params, **common)
    v_transient = groupvel.group_velocity_transient(
        params,
        float(cfg["t_max"]),
        avg_grid=int(cfg["avg_grid"]),
        method=cfg["method"],
        rel_tol=float(cfg["rel_tol"]),
        abs_tol=float(cfg["abs_tol"]),
        **common,
    )
    geom = groupvel.cell_geometry(params, v_transient, float(cfg["t_max"]), constants)
    out = {
        "v_g_steady": v_steady,
        "v_g_transient": v_transient,
        "L": geom.length,
        "V": geom.volume,
        "d": geom.diameter,
        "density": geom.density,
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    if args.out is not None:
        offsets = np.linspace(-1.0, 1.0, 201)
        lines = ["offset,chi_real,chi_imag"]
        for off in offsets:
            chi = groupvel.steady_susceptibility(
                params,
                float(off),
                probe_rabi_classical=float(cfg["probe_rabi_classical"]),
                constants=constants,
            )
            lines.append(f"{_fmt(off)},{_fmt(chi.real)},{_fmt(chi.imag)}")
        _atomic_write(_outdir(args) / "chi.csv", "\n".join(lines) + "\n")
    return 0


def cmd_perturbative(args) -> int:
    cfg = _config_with_overrides(args)
    params = params_from_config(cfg)
    t = float(cfg["t_max"])
    lam_p, lam_t, lam_pt = perturbative.phase_rates(params)
    out = {
        "closed_form": perturbative.closed_form_phase(params, t),
        "eigenvalue": perturbative.eigenvalue_phase(params, t),
        "lambda_p": lam_p,
        "lambda_t": lam_t,
        "lambda_pt": lam_pt,
        "t": t,
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


_FRINGE_KEYS = ("cps", "phi10", "phi00", "phi_plus0")


def load_phase_table(path: str) -> dict:
    """Flat JSON phase table in radians; unknown keys are fatal."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("phase table must be a JSON object")
    table = {k: 0.0 for k in _FRINGE_KEYS}
    for key, value in data.items():
        if key not in table:
            raise ValueError(f"unknown phase key {key!r}")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"phase key {key!r} must be a number")
        table[key] = float(value)
    return table


def cmd_fringes(args) -> int:
    table = load_phase_table(args.phases)
    cps = table["cps"]
    phi10 = table["phi10"]
    phi00 = table["phi00"]
    phi_plus0 = table["phi_plus0"]
    Phi = np.linspace(0.0, 4.0 * math.pi, 256, endpoint=False)
    p1, p2 = interferometer.fock_coincidences(Phi, cps, phi10, phi00, phi_plus0)
    lines = ["Phi,P_RB1,P_RB2"]
    for m in range(Phi.size):
        lines.append(f"{_fmt(Phi[m])},{_fmt(p1[m])},{_fmt(p2[m])}")
    _atomic_write(_outdir(args) / "fringes.csv", "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eitgate",
        description="Simulate and analyze the two-photon phase gate",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, out=True, seed=True):
        p.add_argument("--config", help="JSON config file (flat keys)")
        if out:
            p.add_argument("--out", help="output directory (default: current)")
        if seed:
            p.add_argument("--seed", type=int, help="override the config seed")

    p = sub.add_parser("simulate", help="integrate the five-level gate")
    add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("scan", help="sweep one numeric config key")
    add_common(p)
    p.add_argument("--param", required=True, help="config key to sweep")
    p.add_argument("--from", dest="from_", type=float, required=True)
    p.add_argument("--to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("groupvel", help="group velocity and cell geometry")
    add_common(p, seed=False)
    p.set_defaults(func=cmd_groupvel)

    p = sub.add_parser("ladder", help="three-level comparison model")
    add_common(p)
    p.set_defaults(func=cmd_ladder)

    p = sub.add_parser("perturbative", help="analytic cross-phase estimates")
    add_common(p, out=False, seed=False)
    p.set_defaults(func=cmd_perturbative)

    p = sub.add_parser("fringes", help="interferometer coincidence patterns")
    p.add_argument(
        "--phases",
        required=True,
        help="JSON phase table (keys cps, phi10, phi00, phi_plus0; radians)",
    )
    p.add_argument("--out", help="output directory (default: current)")
    p.set_defaults(func=cmd_fringes)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
