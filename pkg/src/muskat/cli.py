"""Command-line front end: thresholds, profile, curve, simulate, verify.

All numeric output is written with 17 significant digits so that re-running
a command reproduces byte-identical files.  Exit codes: 0 success, 2 usage,
3 regime error, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, functionals, fvm, profiles
from .numerics import NumericsError
from .params import FluidParams, classify_regime, thresholds
from .profiles import InvalidZetaError, RegimeError

_FMT = "%.17g"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REGIME = 3
EXIT_NUMERICAL = 4


def _fmt(v: float) -> str:
    return _FMT % v


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _out_dir(args) -> Path:
    root = args.out_dir or os.environ.get("MUSKAT_OUT_DIR") or "."
    d = Path(root)
    d.mkdir(parents=True, exist_ok=True)
    return d


def _write_manifest(out: Path, command: str, argv: list[str], outputs: list[Path],
                    t0: float, extra: dict | None = None) -> Path:
    manifest = {
        "command": command,
        "argv": argv,
        "version": __version__,
        "outputs": [str(p) for p in outputs],
        "wall_time_s": time.time() - t0,
    }
    if extra:
        manifest.update(extra)
    path = out / f"manifest_{command}.json"
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def _params_from_args(args) -> FluidParams:
    # argparse already rejects non-positive flags; this guards direct calls
    return FluidParams(R=args.R, R_mu=getattr(args, "R_mu", 1.0), eta=args.eta)


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def cmd_thresholds(args) -> int:
    if args.R <= 0 or args.eta <= 0:
        return _usage_error("--R and --eta must be positive")
    p = FluidParams(R=args.R, R_mu=1.0, eta=args.eta)
    th = thresholds(p)
    payload = {
        "R": p.R,
        "eta": p.eta,
        "r_m": th.r_m,
        "r_minus": th.r_minus,
        "r0": th.r0,
        "r_plus": th.r_plus,
        "r_M": th.r_M,
        "regime_boundaries": {
            "unique_even": [th.r_minus, th.r_plus],
            "disconnected_endpoints": [[th.r_m, th.r_minus], [th.r_plus, th.r_M]],
            "connected_endpoints": [[0.0, th.r_m], [th.r_M, None]],
        },
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_profile(args) -> int:
    t0 = time.time()
    p = _params_from_args(args)
    out = _out_dir(args)
    if args.kind == "even":
        pp = profiles.even_profile(p)
    elif args.kind == "connected":
        pp = profiles.connected_profile(p, side=args.side)
    elif args.kind == "curve-endpoint":
        pp = profiles.boundary_disconnected_profile(p, side=args.side).profile
    else:
        return _usage_error(f"unknown kind {args.kind!r}")

    stem = f"profile_{args.kind}_R{args.R:g}_Rmu{args.R_mu:g}_eta{args.eta:g}"
    json_path = out / f"{stem}.json"
    with open(json_path, "w") as fh:
        json.dump(profiles.profile_to_dict(pp), fh, indent=2)
        fh.write("\n")
    csv_path = out / f"{stem}.csv"
    _write_csv(csv_path, ["x", "F", "G", "eta2F_plus_G"],
               profiles.sample_profile(pp, n=args.n_samples))

    rep = functionals.evaluate(pp, p)
    params_dict = {"R": p.R, "R_mu": p.R_mu, "eta": p.eta}
    print(json.dumps({
        "label": pp.label,
        "support_F": [list(iv) for iv in pp.support_F],
        "support_G": [list(iv) for iv in pp.support_G],
        "n_components_F": len(pp.support_F),
        "n_components_G": len(pp.support_G),
        "energy": rep.energy,
        "rescaled_energy": rep.rescaled_energy,
        "M1": rep.m1,
        "M2": rep.m2,
        "entropy": rep.entropy,
        "steady_residual": profiles.steady_residual(pp),
    }, indent=2))
    _write_manifest(out, "profile", sys.argv[1:], [json_path, csv_path], t0,
                    extra={"params": params_dict})
    return EXIT_OK


def cmd_curve(args) -> int:
    t0 = time.time()
    p = _params_from_args(args)
    out = _out_dir(args)
    curve = profiles.continue_curve(p, n_points=args.n_points)
    energies = functionals.energy_along_curve(curve)

    es = np.array([e for _, e in energies])
    d = np.diff(es)
    sign_changes = int(np.sum(np.sign(d[:-1]) != np.sign(d[1:])))
    i_min = int(np.argmin(es))
    if sign_changes > 1 or abs(energies[i_min][0]) > 1e-12:
        raise NumericsError("curve energy is not unimodal with minimum at ell = 0")

    stem = f"curve_R{args.R:g}_Rmu{args.R_mu:g}_eta{args.eta:g}"
    csv_path = out / f"{stem}.csv"
    header = ["ell", "gamma1", "beta1", "alpha1", "alpha", "beta", "gamma", "E_star"]
    rows = [[cp.ell, *cp.zeta, e] for cp, (_, e) in zip(curve, energies)]
    _write_csv(csv_path, header, rows)

    fn_path = out / f"{stem}_functionals.csv"
    fn_rows = []
    for cp in curve:
        rep = functionals.evaluate(cp.profile, p)
        fn_rows.append([cp.ell, rep.energy, rep.rescaled_energy, rep.m1, rep.m2,
                        rep.entropy])
    _write_csv(fn_path, ["ell", "E", "E_star", "M1", "M2", "H"], fn_rows)

    kind = profiles.curve_endpoint_kind(p)
    report = {
        "n_points": len(curve),
        "ell_minus": curve[0].ell,
        "ell_plus": curve[-1].ell,
        "endpoint_kind": kind,
        "E_star_min": float(es[i_min]),
        "E_star_min_at_ell": energies[i_min][0],
        "endpoints": {
            "lower": {"zeta": list(curve[0].zeta), "label": kind},
            "upper": {"zeta": list(curve[-1].zeta), "label": kind},
        },
    }
    json_path = out / f"{stem}_endpoints.json"
    with open(json_path, "w") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")
    print(json.dumps(report, indent=2))
    _write_manifest(out, "curve", sys.argv[1:], [csv_path, fn_path, json_path], t0,
                    extra={"params": {"R": p.R, "R_mu": p.R_mu, "eta": p.eta}})
    return EXIT_OK


def _bump(center: float, halfwidth: float):
    c, a = center, halfwidth
    return lambda x: np.maximum(0.0, 0.75 / a * (1.0 - ((np.asarray(x) - c) / a) ** 2))


def _initial_from_config(cfg: dict, p: FluidParams, grid: fvm.Grid) -> fvm.SimState:
    spec = cfg.get("initial", {"kind": "even-profile"})
    kind = spec.get("kind", "even-profile")
    if kind == "even-profile":
        return fvm.init_state(profiles.even_profile(p), grid)
    if kind == "bumps":
        f = _bump(spec.get("center_f", 0.0), spec.get("halfwidth_f", 2.0))
        g = _bump(spec.get("center_g", 0.0), spec.get("halfwidth_g", 2.0))
        return fvm.init_state((f, g), grid, renormalize=True)
    raise ValueError(f"unknown initial-condition kind {kind!r}")


def cmd_simulate(args) -> int:
    t0 = time.time()
    cfg_path = Path(args.config)
    try:
        cfg = json.loads(cfg_path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        return _usage_error(f"cannot read config {cfg_path}: {exc}")
    out = _out_dir(args)

    p = FluidParams(R=cfg["R"], R_mu=cfg["R_mu"], eta=cfg["eta"])
    grid = fvm.Grid(n_cells=cfg.get("n_cells", 400),
                    x_left=cfg.get("x_left", -5.0),
                    x_right=cfg.get("x_right", 5.0))
    reference = None
    if cfg.get("reference", "even-profile") == "even-profile":
        reference = profiles.even_profile(p)
    sim_cfg = fvm.SimConfig(grid=grid, params=p,
                            t_end=cfg["t_end"], dt=cfg.get("dt", 1e-5),
                            cfl_check=cfg.get("cfl_check", True),
                            record_every=cfg.get("record_every", 1000),
                            reference=reference)
    state = _initial_from_config(cfg, p, grid)
    rep = fvm.run(sim_cfg, state)

    outputs = []
    traj_path = out / "trajectory.csv"
    cols = ["t", "mass_f", "mass_g", "M1", "M2", "E", "E_star", "H", "I",
            "n_components_f", "n_components_g", "l2_dist"]
    rows = np.column_stack([rep.times] + [rep.data[c] for c in cols[1:]])
    _write_csv(traj_path, cols, rows)
    outputs.append(traj_path)

    snap_every = cfg.get("snapshot_every_records", max(1, len(rep.states) // 8))
    x = grid.centers
    e2 = p.eta**2
    for idx in range(0, len(rep.states), snap_every):
        s = rep.states[idx]
        path = out / f"snapshot_t{s.t:.6f}.csv"
        _write_csv(path, ["x_i", "f_i", "g_i", "eta2f_plus_g"],
                   np.column_stack([x, s.f, s.g, e2 * s.f + s.g]))
        outputs.append(path)

    digest = hashlib.sha256(cfg_path.read_bytes()).hexdigest()
    _write_manifest(out, "simulate", sys.argv[1:], outputs, t0,
                    extra={"config_sha256": digest, "config": cfg,
                           "params": {"R": p.R, "R_mu": p.R_mu, "eta": p.eta}})
    ncf = rep.data["n_components_f"]
    summary = {
        "t_end": rep.times[-1],
        "mass_f_drift": float(np.max(np.abs(rep.data["mass_f"] - rep.data["mass_f"][0]))),
        "rupture_f": bool(np.any(ncf > ncf[0])),
        "first_f_split_t": float(rep.times[np.argmax(ncf > ncf[0])]) if np.any(ncf > ncf[0]) else None,
        "final_l2_dist": float(rep.data["l2_dist"][-1]),
    }
    print(json.dumps(summary, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    p = _params_from_args(args)
    th = thresholds(p)
    regime = classify_regime(p)
    checks: dict[str, bool] = {}

    def check(name: str, fn) -> None:
        try:
            checks[name] = bool(fn())
        except Exception as exc:  # report, never crash the battery
            print(f"  [{name}] raised {type(exc).__name__}: {exc}", file=sys.stderr)
            checks[name] = False

    check("threshold-ordering",
          lambda: th.r_m < th.r_minus < th.r0 < th.r_plus < th.r_M)

    def even_checks():
        pp = profiles.even_profile(p)
        rep = functionals.evaluate(pp, p)
        return (abs(pp.F.mass() - 1) < 1e-10 and abs(pp.G.mass() - 1) < 1e-10
                and profiles.steady_residual(pp) < 1e-9
                and abs(rep.m1) < 1e-10
                and abs(rep.m2 - 2 * rep.rescaled_energy) < 1e-9
                and abs(rep.rescaled_energy - 1.5 * rep.energy) < 1e-9)

    check("even-profile", even_checks)

    def dual_checks():
        pp = profiles.even_profile(p)
        dd = profiles.dual_transform(profiles.dual_transform(pp))
        return all(
            abs(a - b) < 1e-12
            for q1, q2 in ((pp.F, dd.F), (pp.G, dd.G))
            for pc, qc in zip(q1.pieces, q2.pieces)
            for a, b in zip(pc, qc))

    check("duality-involution", dual_checks)

    from .params import ContinuumClass
    if regime.continuum is not ContinuumClass.UNIQUE_EVEN:
        def curve_checks():
            curve = profiles.continue_curve(p, n_points=21)
            energies = functionals.energy_along_curve(curve)
            es = np.array([e for _, e in energies])
            d = np.diff(es)
            ok_shape = int(np.sum(np.sign(d[:-1]) != np.sign(d[1:]))) <= 1
            ok_min = abs(energies[int(np.argmin(es))][0]) < 1e-12
            return ok_shape and ok_min

        check("curve-energy-unimodal", curve_checks)
        if regime.continuum is ContinuumClass.CONNECTED_ENDPOINTS:
            check("connected-profile",
                  lambda: profiles.steady_residual(profiles.connected_profile(p)) < 1e-9)
        else:
            check("boundary-profile",
                  lambda: profiles.steady_residual(
                      profiles.boundary_disconnected_profile(p).profile) < 1e-9)

    ok = all(checks.values())
    for name, passed in checks.items():
        print(f"{'PASS' if passed else 'FAIL'}  {name}")
    print(json.dumps({"params": {"R": p.R, "R_mu": p.R_mu, "eta": p.eta},
                      "regime": {"even_case": regime.even_case.name,
                                 "continuum": regime.continuum.value},
                      "all_passed": ok}, indent=2))
    return EXIT_OK if ok else EXIT_NUMERICAL


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------


def _positive(value: str) -> float:
    x = float(value)
    if not (math.isfinite(x) and x > 0):
        raise argparse.ArgumentTypeError(f"{value!r} is not a positive number")
    return x


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="muskat",
                                 description="Self-similar profiles and upwind "
                                             "finite-volume runs for the two-layer "
                                             "thin-film system")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    th = sub.add_parser("thresholds", help="print the five critical viscosity ratios")
    th.add_argument("--R", type=_positive, required=True)
    th.add_argument("--eta", type=_positive, required=True)
    th.set_defaults(func=cmd_thresholds)

    pr = sub.add_parser("profile", help="construct one steady profile")
    pr.add_argument("--R", type=_positive, required=True)
    pr.add_argument("--R-mu", dest="R_mu", type=_positive, required=True)
    pr.add_argument("--eta", type=_positive, required=True)
    pr.add_argument("--kind", choices=["even", "connected", "curve-endpoint"],
                    default="even")
    pr.add_argument("--side", choices=["left", "right"], default="right")
    pr.add_argument("-n", "--n-samples", type=int, default=1001)
    pr.add_argument("--out-dir", default=None)
    pr.set_defaults(func=cmd_profile)

    cv = sub.add_parser("curve", help="trace the continuation curve of steady states")
    cv.add_argument("--R", type=_positive, required=True)
    cv.add_argument("--R-mu", dest="R_mu", type=_positive, required=True)
    cv.add_argument("--eta", type=_positive, required=True)
    cv.add_argument("-n", "--n-points", type=int, default=101)
    cv.add_argument("--out-dir", default=None)
    cv.set_defaults(func=cmd_curve)

    sim = sub.add_parser("simulate", help="run the upwind finite-volume scheme")
    sim.add_argument("--config", required=True)
    sim.add_argument("--out-dir", default=None)
    sim.set_defaults(func=cmd_simulate)

    vf = sub.add_parser("verify", help="run the invariant battery for one triple")
    vf.add_argument("--R", type=_positive, required=True)
    vf.add_argument("--R-mu", dest="R_mu", type=_positive, required=True)
    vf.add_argument("--eta", type=_positive, required=True)
    vf.set_defaults(func=cmd_verify)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors already
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except (RegimeError, InvalidZetaError) as exc:
        print(f"regime error: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except (NumericsError, fvm.CflViolationError, fvm.NegativeCellError,
            functionals.MismatchError, RuntimeError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
