"""Command-line front end: scenario configs in, CSV/JSON out.

Subcommands:
  forward         risk-measure curve over an LVR grid (CSV)
  invert          implied decline distribution from a target EL curve (CSV)
  simulate        seeded Monte Carlo estimators (JSON)
  example-curves  the built-in capped power-law EL curve (CSV)

Configs are JSON read from a file path argument ('-' for stdin).  Flags
override the corresponding config fields.  Numbers are printed with 12
significant digits and output is byte-deterministic for a fixed config and
seed.  Exit codes: 0 success, 2 config error, 3 numeric/sampling error.
"""

from __future__ import annotations

import json
import math
import sys

import click
import numpy as np

from . import distributions, el_curves
from .errors import ConfigError, DegenerateInversionError, MvdRiskError
from .inversion import InversionConfig, implied_pd_curve, invert_el_to_pm
from .measures import LoanContext, QuadratureConfig, risk_curve
from .simulation import SimulationConfig, simulate


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _load_config(source: str) -> dict:
    try:
        if source == "-":
            raw = sys.stdin.read()
        else:
            with open(source, "r", encoding="utf-8") as fh:
                raw = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {source!r}: {exc}") from exc
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ConfigError("config root must be a JSON object")
    return obj


def _number(obj: dict, key: str, where: str, default=None):
    if key not in obj or obj[key] is None:
        if default is not None:
            return default
        raise ConfigError(f"{where}.{key} is required")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key} must be a number, got {value!r}")
    return float(value)


def _integer(obj: dict, key: str, where: str, default=None):
    if key not in obj or obj[key] is None:
        if default is not None:
            return default
        raise ConfigError(f"{where}.{key} is required")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}.{key} must be an integer, got {value!r}")
    return value


def _section(cfg: dict, key: str) -> dict:
    value = cfg.get(key, {})
    if not isinstance(value, dict):
        raise ConfigError(f"{key} must be an object, got {value!r}")
    return value


def _parse_json_flag(text: str, name: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"--{name} is not valid JSON: {exc}") from exc


def _grid_from_config(cfg: dict, start, stop, step) -> np.ndarray:
    section = _section(cfg, "lvr_grid")
    start = start if start is not None else _number(section, "start", "lvr_grid")
    stop = stop if stop is not None else _number(section, "stop", "lvr_grid")
    step = step if step is not None else _number(section, "step", "lvr_grid")
    if step <= 0.0:
        raise ConfigError(f"lvr_grid.step must be > 0, got {step}")
    if start <= 0.0:
        raise ConfigError(f"lvr_grid.start must be > 0, got {start}")
    if stop < start:
        return np.empty(0)
    ratio = (stop - start) / step
    n = int(math.floor(ratio + 1e-9 * max(1.0, abs(ratio)))) + 1
    return start + np.arange(n) * step


def _guard(body) -> None:
    try:
        body()
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(2)
    except MvdRiskError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)


@click.group()
def main():
    """Expected-loss curves for asset-backed loans, from decline distributions.

    CONFIG arguments take a JSON file path, or '-' to read the config from
    standard input.  Command-line flags take precedence over the
    corresponding config fields.
    """


@main.command()
@click.argument("config_src", metavar="CONFIG")
@click.option("--p-a", type=float, default=None, help="Override config p_a.")
@click.option("--lgd-min", type=float, default=None, help="Override config lgd_min.")
@click.option("--quad-step", type=float, default=None,
              help="Override config quadrature_step.")
@click.option("--grid-start", type=float, default=None, help="Override lvr_grid.start.")
@click.option("--grid-stop", type=float, default=None, help="Override lvr_grid.stop.")
@click.option("--grid-step", type=float, default=None, help="Override lvr_grid.step.")
@click.option("--distribution", "dist_json", default=None,
              help="Override config distribution (JSON).")
def forward(config_src, p_a, lgd_min, quad_step, grid_start, grid_stop,
            grid_step, dist_json):
    """Emit lvr,el,lgd_a,pd_l,lgd_l rows for a distribution over an LVR grid."""

    def body():
        cfg = _load_config(config_src)
        dist_obj = (_parse_json_flag(dist_json, "distribution")
                    if dist_json is not None else cfg.get("distribution"))
        dist = distributions.from_config(dist_obj)
        try:
            ctx = LoanContext(
                p_a if p_a is not None else _number(cfg, "p_a", "config"),
                lgd_min if lgd_min is not None else _number(cfg, "lgd_min", "config", 0.0),
            )
            quad = QuadratureConfig(
                quad_step if quad_step is not None
                else _number(cfg, "quadrature_step", "config", 1e-4)
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        grid = _grid_from_config(cfg, grid_start, grid_stop, grid_step)
        curve = risk_curve(grid, dist, ctx, quad) if grid.size else None

        click.echo("lvr,el,lgd_a,pd_l,lgd_l")
        if curve is not None:
            for i in range(grid.size):
                click.echo(",".join(_fmt(v) for v in (
                    curve.lvr[i], curve.el[i], curve.lgd_a[i],
                    curve.pd_l[i], curve.lgd_l[i],
                )))

    _guard(body)


@main.command()
@click.argument("config_src", metavar="CONFIG")
@click.option("--step", type=float, default=None, help="Override inversion.step.")
@click.option("--p-a", type=float, default=None, help="Override inversion.p_a.")
@click.option("--max-lvr", type=float, default=None, help="Override inversion.max_lvr.")
@click.option("--el-curve", "curve_json", default=None,
              help="Override config el_curve (JSON).")
def invert(config_src, step, p_a, max_lvr, curve_json):
    """Emit m_mid,mass,density strips implied by a target EL curve.

    m_mid is the representative decline of each strip, density is mass/step.
    Negative masses are diagnostic output, not an error; their count goes to
    standard error.
    """

    def body():
        cfg = _load_config(config_src)
        curve_obj = (_parse_json_flag(curve_json, "el-curve")
                     if curve_json is not None else cfg.get("el_curve"))
        curve = el_curves.curve_from_config(curve_obj)
        section = _section(cfg, "inversion")
        try:
            inv_cfg = InversionConfig(
                step if step is not None else _number(section, "step", "inversion", 0.01),
                p_a if p_a is not None else _number(section, "p_a", "inversion", 0.10),
                max_lvr if max_lvr is not None
                else _number(section, "max_lvr", "inversion", 1.80),
            )
        except (ValueError, DegenerateInversionError) as exc:
            # a degenerate inversion setup typed into the config is a config
            # problem, not a numeric failure during computation
            raise ConfigError(str(exc)) from exc
        pm = invert_el_to_pm(curve, inv_cfg)

        click.echo("m_mid,mass,density")
        nodes = pm.nodes()
        for i in range(pm.masses.size):
            mass = pm.masses[i]
            click.echo(f"{_fmt(nodes[i])},{_fmt(mass)},{_fmt(mass / pm.step)}")
        negative = int(np.sum(pm.masses < 0.0))
        click.echo(f"negative-mass strips: {negative} of {pm.masses.size}", err=True)

    _guard(body)


@main.command("simulate")
@click.argument("config_src", metavar="CONFIG")
@click.option("--n-trials", type=int, default=None, help="Override simulation.n_trials.")
@click.option("--seed", type=int, default=None, help="Override simulation.seed.")
@click.option("--lvr", type=float, default=None, help="Override simulation.lvr.")
@click.option("--p-a", type=float, default=None, help="Override config p_a.")
@click.option("--distribution", "dist_json", default=None,
              help="Override config distribution (JSON).")
def simulate_cmd(config_src, n_trials, seed, lvr, p_a, dist_json):
    """Run the Monte Carlo estimators and emit the result as JSON."""

    def body():
        cfg = _load_config(config_src)
        dist_obj = (_parse_json_flag(dist_json, "distribution")
                    if dist_json is not None else cfg.get("distribution"))
        dist = distributions.from_config(dist_obj)
        section = _section(cfg, "simulation")
        try:
            sim_cfg = SimulationConfig(
                n_trials=n_trials if n_trials is not None
                else _integer(section, "n_trials", "simulation"),
                seed=seed if seed is not None else _integer(section, "seed", "simulation"),
                lvr=lvr if lvr is not None else _number(section, "lvr", "simulation"),
                dist=dist,
                p_a=p_a if p_a is not None else _number(cfg, "p_a", "config"),
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        result = simulate(sim_cfg)
        record = {
            key: (float(_fmt(value)) if isinstance(value, float) else value)
            for key, value in result.to_json_dict().items()
        }
        click.echo(json.dumps(record, indent=2))

    _guard(body)


@main.command("example-curves")
def example_curves():
    """Emit the built-in capped power-law EL curve over LVR 0.01 to 1.80."""

    def body():
        curve = el_curves.ParametricElCurve(0.015, 20.0, 0.40, 1.0)
        grid = (np.arange(180) + 1) * 0.01
        values = el_curves.eval_el(curve, grid)
        click.echo("lvr,el")
        for lvr, el in zip(grid, values):
            click.echo(f"{_fmt(lvr)},{_fmt(el)}")

    _guard(body)


if __name__ == "__main__":
    main()
