"""Command line front end.

Five subcommands: compute a single shift, sweep it over distance, emit
the two standard figure CSVs, and run the validation suite.  Output is
plain CSV with `#`-prefixed metadata lines, written to --out or stdout.
Float cells use repr, the shortest round-trip form, so a fixed
configuration produces byte-identical files.

Exit codes: 0 success, 1 argument or configuration errors, 2 a model
for which the shift is ill-defined (damped Drude), 3 validation
failures.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__, analysis
from .errors import IllDefinedModelError, MasshiftError
from .materials import model_from_params, model_param_names
from .shift import energy_shift
from .types import Coupling, Geometry, MomentumMoments

__all__ = ["RunConfig", "main", "entry_point"]

_MODEL_CHOICES = ("mirror", "nondisp", "plasma", "lorentz", "damped_drude")
_CONFIG_KEYS = frozenset({
    "model", "n", "omega_p", "omega_t", "gamma", "d", "p2_par", "p2_perp",
    "e2", "mass", "tol", "out", "grid",
})
_DEFAULT_GRIDS = {
    "sweep": "0.1:10:50:log",
    "figure1": "1e-2:1e2:200:log",
    "figure2": "0.05:50:200:log",
}
_ROW_HEADER = ("model", "params", "d", "g_par", "g_perp", "ratio_par",
               "ratio_perp", "delta_e", "method", "est_error")


class _ParseError(Exception):
    """Argument or config-file problem; rendered as exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ParseError(message)


@dataclass(frozen=True, eq=False)
class RunConfig:
    """Everything a subcommand needs, after merging flags and config file."""

    command: str
    model_name: str | None
    model_params: dict
    d: float
    moments: MomentumMoments
    coupling: Coupling
    tol: float
    tol_explicit: bool
    out: str | None
    grid: np.ndarray | None
    grid_spec: str | None
    omega_t_d: float

    def __post_init__(self):
        if not 0.0 < self.tol <= 1e-3:
            raise ValueError(f"tol must lie in (0, 1e-3], got {self.tol}")
        if not self.d > 0.0:
            raise ValueError(f"d must be positive, got {self.d}")


def _read_config(path):
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, val = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key = key.strip().replace("-", "_")
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = val.strip()
    return values


def _parse_grid(text):
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise ValueError(f"grid must be min:max:count[:log], got {text!r}")
    lo, hi = float(parts[0]), float(parts[1])
    count = int(parts[2])
    scale = parts[3] if len(parts) == 4 else "lin"
    if scale not in ("lin", "log"):
        raise ValueError(f"grid scale must be lin or log, got {scale!r}")
    if count < 2:
        raise ValueError(f"grid needs at least 2 points, got {count}")
    if not lo < hi:
        raise ValueError(f"grid needs min < max, got {lo} and {hi}")
    if scale == "log":
        if lo <= 0.0:
            raise ValueError("log grid endpoints must be positive")
        return np.logspace(math.log10(lo), math.log10(hi), count)
    return np.linspace(lo, hi, count)


def _config_from_args(args):
    file_vals = _read_config(args.config) if args.config else {}

    def pick(name, cast=float, default=None):
        flag = getattr(args, name)
        if flag is not None:
            return flag
        if name in file_vals:
            return cast(file_vals[name])
        return default

    params = {}
    for key in ("n", "omega_p", "omega_t", "gamma"):
        val = pick(key)
        if val is not None:
            params[key] = val
    model_name = pick("model", cast=str)
    if args.command in ("compute", "sweep") and model_name is not None:
        # fail fast on a missing or extraneous parameter, before any output
        model_from_params(model_name, params)
    grid_spec = pick("grid", cast=str, default=_DEFAULT_GRIDS.get(args.command))
    return RunConfig(
        command=args.command,
        model_name=model_name,
        model_params=params,
        d=pick("d", default=1.0),
        moments=MomentumMoments(p2_par=pick("p2_par", default=1.0),
                                p2_perp=pick("p2_perp", default=1.0)),
        coupling=Coupling(e2=pick("e2", default=1.0),
                          mass=pick("mass", default=1.0)),
        tol=pick("tol", default=1e-10),
        tol_explicit=args.tol is not None or "tol" in file_vals,
        out=pick("out", cast=str),
        grid=_parse_grid(grid_spec) if grid_spec is not None else None,
        grid_spec=grid_spec,
        omega_t_d=params.get("omega_t", 0.2),
    )


def _fmt(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _write_csv(out, meta, header, rows):
    lines = [f"# {m}" for m in meta]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params_text(cfg):
    order = model_param_names(cfg.model_name)
    if not order:
        return "-"
    return ";".join(f"{k}={_fmt(float(cfg.model_params[k]))}" for k in order)


def _meta(cfg, extra=()):
    lines = [f"masshift {__version__}", f"command: {cfg.command}"]
    lines.extend(extra)
    return lines


def _shift_row(cfg, d):
    model = model_from_params(cfg.model_name, cfg.model_params)
    res = energy_shift(model, Geometry(d=d), moments=cfg.moments,
                       coupling=cfg.coupling, tol=cfg.tol)
    return [cfg.model_name, _params_text(cfg), d, res.g_par, res.g_perp,
            res.ratio_par, res.ratio_perp, res.delta_e, res.method,
            res.est_error]


def cmd_compute(cfg):
    if cfg.model_name is None:
        raise ValueError("compute needs --model")
    extra = (f"model: {cfg.model_name}", f"params: {_params_text(cfg)}",
             f"tol: {_fmt(cfg.tol)}")
    _write_csv(cfg.out, _meta(cfg, extra), _ROW_HEADER, [_shift_row(cfg, cfg.d)])
    return 0


def cmd_sweep(cfg):
    if cfg.model_name is None:
        raise ValueError("sweep needs --model")
    # Rows could be computed in any order; they are emitted in grid order.
    rows = [_shift_row(cfg, float(d)) for d in cfg.grid]
    extra = (f"model: {cfg.model_name}", f"params: {_params_text(cfg)}",
             f"tol: {_fmt(cfg.tol)}", f"grid: d over {cfg.grid_spec}")
    _write_csv(cfg.out, _meta(cfg, extra), _ROW_HEADER, rows)
    return 0


def cmd_figure1(cfg):
    """Shift-over-mirror ratios against static susceptibility."""
    curve = analysis.ratio_curve_chi0(cfg.omega_t_d, cfg.grid)
    header = ("chi0", "r_perfect", "r_nondisp_perp", "r_nondisp_par",
              "r_lorentz_perp", "r_lorentz_par")
    rows = [[c, 1.0, ndperp, ndpar, lzperp, lzpar]
            for c, ndperp, ndpar, lzperp, lzpar
            in zip(curve.chi0, curve.nondisp_perp, curve.nondisp_par,
                   curve.lorentz_perp, curve.lorentz_par)]
    extra = (f"omega_t_d: {_fmt(cfg.omega_t_d)}",
             f"grid: chi0 over {cfg.grid_spec}")
    _write_csv(cfg.out, _meta(cfg, extra), header, rows)
    return 0


def cmd_figure2(cfg):
    """Shift-over-mirror ratios against omega_p * d, plasma and resonant."""
    wtd_values = (0.2, 0.4, 0.6)
    grid = cfg.grid
    p_par, p_perp = analysis.plasma_mirror_ratios(grid, tol=cfg.tol)
    lz = {wtd: analysis.lorentz_mirror_ratios_vs_omega_p(grid, wtd)
          for wtd in wtd_values}
    header = (["omega_p_d", "r_plasma_perp"]
              + [f"r_lorentz_perp_{w}" for w in wtd_values]
              + ["r_plasma_par"]
              + [f"r_lorentz_par_{w}" for w in wtd_values])
    rows = []
    for i, wpd in enumerate(grid):
        rows.append([wpd, p_perp[i]]
                    + [lz[w][1][i] for w in wtd_values]
                    + [p_par[i]]
                    + [lz[w][0][i] for w in wtd_values])
    extra = (f"omega_t_d values: {'; '.join(str(w) for w in wtd_values)}",
             f"tol: {_fmt(cfg.tol)}", f"grid: omega_p_d over {cfg.grid_spec}")
    _write_csv(cfg.out, _meta(cfg, extra), header, rows)
    return 0


def cmd_validate(cfg):
    from . import validation
    results = validation.run_all(quad_tol=cfg.tol if cfg.tol_explicit else None)
    n_pass = sum(1 for r in results if r.passed)
    overall = f"overall: {'PASS' if n_pass == len(results) else 'FAIL'} " \
              f"({n_pass}/{len(results)} criteria)"
    header = ("index", "name", "status", "measured", "limit", "seconds", "error")
    rows = [[r.index, r.name, "PASS" if r.passed else "FAIL", r.measured,
             r.limit, f"{r.seconds:.2f}", r.error] for r in results]
    _write_csv(cfg.out, _meta(cfg, (overall,)), header, rows)
    if cfg.out:
        print(overall)
    return 0 if n_pass == len(results) else 3


_DISPATCH = {
    "compute": cmd_compute,
    "sweep": cmd_sweep,
    "figure1": cmd_figure1,
    "figure2": cmd_figure2,
    "validate": cmd_validate,
}


def _build_parser():
    parser = _Parser(
        prog="masshift",
        description="Electron self-energy shift near dielectric and "
                    "conducting half-spaces.")
    common = _Parser(add_help=False)
    common.add_argument("--model", choices=_MODEL_CHOICES,
                        help="surface model")
    common.add_argument("--n", type=float, help="refractive index (nondisp)")
    common.add_argument("--omega-p", type=float,
                        help="plasma frequency (plasma, lorentz, damped_drude)")
    common.add_argument("--omega-t", type=float,
                        help="resonance frequency (lorentz); for figure1 this "
                             "is the dimensionless omega_t*d, default 0.2")
    common.add_argument("--gamma", type=float, help="collision rate (damped_drude)")
    common.add_argument("--d", type=float, help="distance to the surface, default 1")
    common.add_argument("--p2-par", type=float,
                        help="in-plane squared-momentum expectation, default 1")
    common.add_argument("--p2-perp", type=float,
                        help="normal squared-momentum expectation, default 1")
    common.add_argument("--e2", type=float, help="squared charge, default 1")
    common.add_argument("--mass", type=float, help="electron mass, default 1")
    common.add_argument("--tol", type=float,
                        help="relative tolerance in (0, 1e-3], default 1e-10")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--grid", help="grid as min:max:count[:log]")
    common.add_argument("--config", help="key=value file; flags override it")

    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)
    sub.add_parser("compute", parents=[common],
                   help="one shift evaluation as a CSV row")
    sub.add_parser("sweep", parents=[common],
                   help="shift evaluations over a distance grid")
    sub.add_parser("figure1", parents=[common],
                   help="ratio-versus-susceptibility CSV")
    sub.add_parser("figure2", parents=[common],
                   help="ratio-versus-plasma-frequency CSV")
    sub.add_parser("validate", parents=[common],
                   help="run the acceptance checks")
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        cfg = _config_from_args(args)
        return _DISPATCH[args.command](cfg)
    except IllDefinedModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (_ParseError, ValueError, OSError, MasshiftError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point():
    sys.exit(main())
