"""``skidsim`` command line.

Exit codes: 0 ok, 1 check failure, 2 validation error, 3 singular state.
Speeds are m/s (``--v``) or km/h (``--v-kmh``); angles are degrees.
"""
import argparse
import json
import math
import os
import sys

import numpy as np

from . import tables
from .config import load_config, param_invariants
from .diagnostics import run_checks
from .errors import InvalidParams, SingularError, SkidModelError
from .grip import Burckhardt
from .model import skid_breakdown
from .simulator import TRAJECTORY_COLUMNS, SimConfig, simulate
from .stability import StabilityVerdict, stability_envelope
from .sweep import VARIABLES, SweepSpec, preset, run_sweep

KMH = 3.6
PRESETS = tuple(f"fig2{c}" for c in "abcdef")

EXIT_OK, EXIT_CHECK, EXIT_INVALID, EXIT_SINGULAR = 0, 1, 2, 3


def _state_flags(p):
    g = p.add_argument_group("state (defaults from the config 'state' block)")
    speed = g.add_mutually_exclusive_group()
    speed.add_argument("--v", type=float, help="longitudinal speed [m/s]")
    speed.add_argument("--v-kmh", type=float, help="longitudinal speed [km/h]")
    g.add_argument("--omega", type=float, help="yaw rate [rad/s]")
    g.add_argument("--delta", type=float, help="front slip angle [deg]")
    g.add_argument("--gamma", type=float, help="rear reaction angle [deg]")
    g.add_argument("--sx", type=float, help="drive-wheel relative slip [-]")
    g.add_argument("--phi", type=float, help="grip coefficient, overrides the config")


def build_parser():
    parser = argparse.ArgumentParser(prog="skidsim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="JSON run configuration")
        return p

    p = command("eval", "evaluate the yaw acceleration at one state")
    _state_flags(p)

    p = command("sweep", "tabulate eps_z over a parameter grid")
    p.add_argument("--preset", choices=PRESETS)
    p.add_argument("--x-var", choices=VARIABLES)
    p.add_argument("--x-lo", type=float)
    p.add_argument("--x-hi", type=float)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--series-var", choices=VARIABLES)
    p.add_argument("--series", help="comma separated series values (slip angles in deg)")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--plot", action="store_true", help="also write a gnuplot script")
    _state_flags(p)

    p = command("vstab", "self-stabilisation speed over a range of slip angles")
    p.add_argument("--omega", type=float, default=0.1, help="yaw rate [rad/s]")
    p.add_argument("--delta-min", type=float, default=0.0, help="[deg]")
    p.add_argument("--delta-max", type=float, default=8.0, help="[deg]")
    p.add_argument("--delta-step", type=float, default=0.5, help="[deg]")
    p.add_argument("--gamma", type=float, default=0.0, help="[deg]")
    p.add_argument("--phi", type=float)
    p.add_argument("--v-lo", type=float, default=0.1, help="bracket start [m/s]")
    p.add_argument("--v-hi", type=float, default=100.0, help="bracket end [m/s]")
    p.add_argument("-o", "--output", help="envelope CSV (default: stdout)")

    p = command("simulate", "integrate the skid over time")
    _state_flags(p)
    p.add_argument("--dt", type=float, default=1e-3, help="[s]")
    p.add_argument("--t-end", type=float, default=1.0, help="[s]")
    p.add_argument("--record-every", type=int, default=1)
    p.add_argument("--no-stop", action="store_true", help="keep going past a yaw-rate zero crossing")
    p.add_argument("-o", "--output", required=True)

    p = command("check", "run model self-consistency diagnostics")
    p.add_argument("--n", type=int, default=2000, help="random states in the oracle grid")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _load(args, require_invariants=True):
    config = load_config(args.config)
    env = config.environment
    if getattr(args, "phi", None) is not None:
        env = env.with_phi(args.phi)
    if require_invariants:
        bad = [c for c in param_invariants(config.vehicle, env) if not c.ok]
        if bad:
            raise InvalidParams(f"parameter invariant '{bad[0].name}' violated: {bad[0].detail}",
                                bad[0].symbol)
    return config, env


def _state(args, config):
    v = args.v if args.v is not None else (args.v_kmh / KMH if args.v_kmh is not None else None)
    return config.motion_state(
        v_x1=v,
        omega_z=args.omega,
        delta_1=math.radians(args.delta) if args.delta is not None else None,
        gamma_b=math.radians(args.gamma) if args.gamma is not None else None,
        s_x=args.sx,
    )


def _json_safe(d):
    return {k: (None if isinstance(v, float) and not math.isfinite(v) else v) for k, v in d.items()}


def cmd_eval(args, out):
    config, env = _load(args)
    state = _state(args, config)
    derived = skid_breakdown(state, config.vehicle, env)
    verdict = StabilityVerdict(derived.eps_z, derived.damping)
    fields = derived.as_dict()
    out.write(f"state: v_x1={state.v_x1:g} m/s ({state.v_x1 * KMH:g} km/h) "
              f"omega_z={state.omega_z:g} rad/s delta_1={math.degrees(state.delta_1):g} deg "
              f"gamma_b={math.degrees(state.gamma_b):g} deg phi={env.phi:g}\n")
    units = {"eps_z": "rad/s^2", "theta_c": "rad", "a_c_n": "m/s^2", "a_c_t": "m/s^2",
             "ax_body": "m/s^2", "ay_body": "m/s^2", "p_w_x1": "N", "p_w_y1": "N", "p_j": "N",
             "r_z2": "N", "r_b": "N", "omega_factor": "m", "r_delta1": "N"}
    for key, unit in units.items():
        out.write(f"  {key:<13} = {tables.fmt(fields[key]):>24} {unit}\n")
    out.write(f"  damping       = {'yes' if verdict.damping else 'no'}\n")
    for note in derived.notes:
        out.write(f"  warning: {note}\n")
    record = {"state": {"v_x1": state.v_x1, "omega_z": state.omega_z, "delta_1": state.delta_1,
                        "gamma_b": state.gamma_b, "s_x": state.s_x, "phi": env.phi},
              "derived": _json_safe(fields), "damping": verdict.damping}
    out.write(json.dumps(record, sort_keys=True) + "\n")
    return EXIT_OK


def _parse_series(var, text):
    values = [float(v) for v in text.split(",") if v.strip()]
    return tuple(math.radians(v) for v in values) if var == "delta_1" else tuple(values)


def cmd_sweep(args, out):
    config, env = _load(args)
    if args.preset:
        spec = preset(args.preset, params=config.vehicle, env=env, grip=config.grip)
    else:
        if args.x_var is None or args.x_lo is None or args.x_hi is None:
            raise InvalidParams("give --preset or --x-var with --x-lo and --x-hi", "x_var")
        lo, hi = args.x_lo, args.x_hi
        if args.x_var == "delta_1":
            lo, hi = math.radians(lo), math.radians(hi)
        series = ()
        if args.series_var:
            if not args.series:
                raise InvalidParams("--series-var needs --series", "series_var")
            series = _parse_series(args.series_var, args.series)
        uses_slip = "s_x" in (args.x_var, args.series_var)
        spec = SweepSpec(x_var=args.x_var, x_range=(lo, hi, args.n), base_state=_state(args, config),
                         params=config.vehicle, env=env, series_var=args.series_var,
                         series_values=series,
                         grip=(config.grip or Burckhardt()) if uses_slip else None)
    table = run_sweep(spec)
    tables.write_csv(args.output, table.headers, tables.sweep_rows(table))
    if args.plot:
        script = os.path.splitext(args.output)[0] + ".gp"
        with open(script, "w", newline="") as fh:
            fh.write(tables.gnuplot_script(os.path.basename(args.output), table.headers,
                                           spec.name or spec.x_var))
    if table.errors:
        sys.stderr.write(f"note: {len(table.errors)} singular cell(s) written as nan\n")
    out.write(f"wrote {args.output}: {table.values.shape[0]} rows x {len(table.headers)} columns\n")
    return EXIT_OK


def cmd_vstab(args, out):
    config, env = _load(args)
    if args.delta_step <= 0 or args.delta_max < args.delta_min:
        raise InvalidParams("need delta-step > 0 and delta-max >= delta-min", "delta_1")
    n = int(round((args.delta_max - args.delta_min) / args.delta_step)) + 1
    deltas_deg = np.linspace(args.delta_min, args.delta_max, n)
    envelope = stability_envelope(config.vehicle, env, args.omega, np.radians(deltas_deg),
                                  gamma_b=math.radians(args.gamma), bracket=(args.v_lo, args.v_hi))
    rows = []
    for d, row in zip(deltas_deg, envelope.rows):
        if row.error is not None:
            rows.append([d, None, "singular", False])
        else:
            v = row.v_stab
            rows.append([d, None if v is None else v * KMH, row.result.status.value,
                         row.result.multi_root])
    text = tables.render_csv(["delta_deg", "v_stab_kmh", "status", "multi_root"], rows)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    best = envelope.max_v_stab()
    summary = "none" if best is None else f"{best * KMH:.6g} km/h ({best:.6g} m/s)"
    out.write(f"max V_stab = {summary} at omega_z={args.omega:g} rad/s over {n} slip angles; "
              f"monotone={'yes' if envelope.monotone else 'no'}\n")
    return EXIT_OK


def cmd_simulate(args, out):
    config, env = _load(args)
    state = _state(args, config)
    sim = SimConfig(dt=args.dt, t_end=args.t_end, stop_on_damped=not args.no_stop,
                    record_every=args.record_every)
    result = simulate(state, config.vehicle, env, sim)
    rows = [[getattr(r, c) for c in TRAJECTORY_COLUMNS] for r in result.rows]
    tables.write_csv(args.output, TRAJECTORY_COLUMNS, rows)
    m = result.final.motion
    line = (f"termination={result.reason.value} t_final={tables.fmt(result.t_final)} "
            f"t_cross={tables.fmt(result.t_cross)} omega_z={tables.fmt(m.omega_z)} "
            f"v_x1={tables.fmt(m.v_x1)} rows={len(result.rows)}")
    if result.message:
        line += f" reason_detail=\"{result.message}\""
    out.write(line + "\n")
    return EXIT_OK


def cmd_check(args, out):
    config, _ = _load(args, require_invariants=False)
    checks = run_checks(config, n=args.n, seed=args.seed)
    for c in checks:
        out.write(f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}\n")
    failed = [c.name for c in checks if not c.ok]
    out.write(f"{len(checks) - len(failed)}/{len(checks)} checks passed"
              + (f"; failed: {', '.join(failed)}" if failed else "") + "\n")
    return EXIT_CHECK if failed else EXIT_OK


COMMANDS = {"eval": cmd_eval, "sweep": cmd_sweep, "vstab": cmd_vstab,
            "simulate": cmd_simulate, "check": cmd_check}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except SingularError as exc:
        sys.stderr.write(f"singular state ({exc.symbol or type(exc).__name__}): {exc}\n")
        return EXIT_SINGULAR
    except SkidModelError as exc:
        symbol = f" ({exc.symbol})" if exc.symbol else ""
        sys.stderr.write(f"validation error{symbol}: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
