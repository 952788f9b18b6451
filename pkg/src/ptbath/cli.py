"""``ptbath`` command line: thermalize, collide, otto, figures.

Exit codes: 0 success, 1 invalid parameters, 2 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from .collision import (
    CollisionConfig,
    max_covariance_error,
    naive_angle,
    richardson_order,
    simulate,
)
from .gaussian import displace, thermal_state
from .otto import OttoCycleSpec, critical_epsilon, sweep_epsilon
from .reservoir import PTReservoirSpec
from .svgplot import Panel, Series, render_svg
from .thermalization import run_trajectory

log = logging.getLogger("ptbath")

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2
COMMANDS = ("thermalize", "collide", "otto", "figures")
DEFAULT_EPSILONS = (0.0, 0.5, 1.0)

THERMALIZE_HEADER = [
    "t", "gamma_t", "epsilon", "heat", "coherence", "entropy", "entropy_production", "energy",
]
COLLIDE_HEADER = ["t", "epsilon", "max_sigma_err", "d_err"]
OTTO_HEADER = ["epsilon", "w_net", "q2", "q4", "regime", "figure_of_merit", "epsilon_c"]


class InvalidParameters(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad input; 2 is reserved for I/O here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    output_dir: Path = Path(".")
    precision: int = 12
    svg: bool = True

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidParameters(f"unknown command {self.command!r}")
        if int(self.precision) != self.precision or self.precision < 1:
            raise InvalidParameters(f"precision must be a positive integer, got {self.precision}")

    def __getitem__(self, key: str) -> Any:
        return self.parameters[key]


def fmt(x: Any, precision: int) -> str:
    """Locale-independent significant-digit formatting."""
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    x = float(x)
    if x == 0.0:
        return "0"
    return f"{x:.{precision}g}"


def _write_csv(path: Path, header: Sequence[str], rows, precision: int, trailer: Sequence[str] = ()):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v, precision) for v in row])
        for line in trailer:
            fh.write(line + "\n")


def _write_text(path: Path, text: str):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(text)


# -- parameter handling -------------------------------------------------------

def _physics_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("reservoir / thermalization")
    g.add_argument("--beta", type=float, default=0.2, help="reservoir inverse temperature")
    g.add_argument("--omega", type=float, default=1.0, help="mode frequency")
    g.add_argument("--gamma", type=float, default=0.1, help="decay rate")
    g.add_argument("--epsilon", type=float, action="append", default=None,
                   help="PT parameter; repeat for several curves")
    g.add_argument("--nbar", type=float, default=2.0, help="initial thermal occupation")
    g.add_argument("--q0", type=float, default=1.0)
    g.add_argument("--p0", type=float, default=1.0)
    g.add_argument("--t-max", type=float, default=100.0)
    g.add_argument("--points", type=int, default=201)
    g = p.add_argument_group("collisional model")
    g.add_argument("--dt", type=float, default=1.0, help="collision duration")
    g.add_argument("--steps", type=int, default=None,
                   help="number of collisions (default: round(t_max / dt))")
    g = p.add_argument_group("Otto cycle")
    g.add_argument("--omega-i", type=float, default=1.0)
    g.add_argument("--omega-f", type=float, default=2.0)
    g.add_argument("--beta-cold", type=float, default=4.0)
    g.add_argument("--beta-hot", type=float, default=1.0)
    g.add_argument("--eps-min", type=float, default=0.0)
    g.add_argument("--eps-max", type=float, default=2.0)
    g.add_argument("--eps-steps", type=int, default=41)
    g = p.add_argument_group("output")
    g.add_argument("--out", type=Path, default=Path("."), help="output directory")
    g.add_argument("--precision", type=int, default=12, help="significant digits in CSV")
    g.add_argument("--svg", action=argparse.BooleanOptionalAction, default=True)
    g.add_argument("--config", type=Path, default=None, help="key = value file; flags win")
    g.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ptbath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "thermalize": "closed-form thermalization against the PT reservoir",
        "collide": "collisional model vs closed form",
        "otto": "Otto cycle sweep over epsilon",
        "figures": "write fig3.svg and fig5.svg plus their CSVs",
    }
    for name in COMMANDS:
        _physics_flags(sub.add_parser(name, help=helps[name]))
    return parser


def read_config_file(path: Path) -> dict[str, str]:
    """Flat ``key = value`` file; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidParameters(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lstrip("-").replace("-", "_")] = value
    return out


def _apply_config(sub: argparse.ArgumentParser, entries: dict[str, str]):
    actions = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, value in entries.items():
        if key not in actions or key in ("config", "help"):
            raise InvalidParameters(f"unknown config key {key!r}")
        act = actions[key]
        try:
            if isinstance(act, argparse.BooleanOptionalAction):
                defaults[key] = value.lower() in ("1", "true", "yes", "on")
            elif act.type is not None:
                defaults[key] = act.type(value)
            else:
                defaults[key] = value
        except ValueError as exc:
            raise InvalidParameters(f"bad value for {key!r}: {value!r}") from exc
    sub.set_defaults(**defaults)


def parse_run_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config is not None:
        try:
            entries = read_config_file(args.config)
        except OSError as exc:
            raise InvalidParameters(f"cannot read config {args.config}: {exc}") from exc
        # append-actions would extend a list default, so epsilon is merged by hand
        eps_text = entries.pop("epsilon", None)
        sub = parser._subparsers._group_actions[0].choices[args.command]
        _apply_config(sub, entries)
        args = parser.parse_args(argv)
        if eps_text is not None and args.epsilon is None:
            try:
                args.epsilon = [float(v) for v in eps_text.replace(",", " ").split()]
            except ValueError as exc:
                raise InvalidParameters(f"bad value for 'epsilon': {eps_text!r}") from exc
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "out", "precision", "svg", "config", "verbose")}
    cfg = RunConfig(args.command, params, args.out, args.precision, args.svg)
    validate(cfg)
    return cfg


def _epsilons(cfg: RunConfig) -> list[float]:
    return list(cfg["epsilon"]) if cfg["epsilon"] else list(DEFAULT_EPSILONS)


def _otto_grid(cfg: RunConfig) -> list[float]:
    if cfg["epsilon"]:
        return sorted(set(cfg["epsilon"]))
    n = cfg["eps_steps"]
    if n < 1:
        raise InvalidParameters("--eps-steps must be >= 1")
    if n == 1:
        return [cfg["eps_min"]]
    return np.linspace(cfg["eps_min"], cfg["eps_max"], n).tolist()


def _n_steps(cfg: RunConfig) -> int:
    if cfg["steps"] is not None:
        return cfg["steps"]
    return int(round(cfg["t_max"] / cfg["dt"]))


def validate(cfg: RunConfig):
    """Build every spec object the command needs so bad input fails before any work."""
    try:
        for eps in _epsilons(cfg):
            PTReservoirSpec(cfg["beta"], cfg["omega"], eps, cfg["gamma"])
        thermal_state(cfg["nbar"])
        if not all(math.isfinite(cfg[k]) for k in ("q0", "p0")):
            raise InvalidParameters("q0/p0 must be finite")
        if cfg.command in ("thermalize", "figures"):
            if not cfg["t_max"] > 0 or cfg["points"] < 2:
                raise InvalidParameters("need --t-max > 0 and --points >= 2")
        if cfg.command == "collide":
            CollisionConfig(cfg["dt"], _n_steps(cfg))
        if cfg.command in ("otto", "figures"):
            grid = _otto_grid(cfg)
            if cfg["eps_max"] < cfg["eps_min"]:
                raise InvalidParameters("--eps-max must be >= --eps-min")
            for eps in grid:
                OttoCycleSpec(cfg["omega_i"], cfg["omega_f"], cfg["beta_cold"], cfg["beta_hot"], eps)
    except InvalidParameters:
        raise
    except ValueError as exc:
        raise InvalidParameters(str(exc)) from exc


def _initial_state(cfg: RunConfig):
    return displace(thermal_state(cfg["nbar"]), cfg["q0"], cfg["p0"])


# -- commands -------------------------------------------------------------------

def thermalize_runs(cfg: RunConfig):
    initial = _initial_state(cfg)
    runs = []
    for eps in _epsilons(cfg):
        spec = PTReservoirSpec(cfg["beta"], cfg["omega"], eps, cfg["gamma"])
        runs.append((spec, run_trajectory(initial, spec, cfg["t_max"], cfg["points"])))
    return runs


def _thermalize_rows(runs):
    for spec, tr in runs:
        for k, t in enumerate(tr.times):
            yield (t, spec.gamma * t, spec.epsilon, tr.heat[k], tr.coherence[k],
                   tr.entropy[k], tr.entropy_production[k], tr.energy[k])


def fig3_svg(runs) -> str:
    panels = [
        Panel("a) heat exchanged", "gamma t", "<Q> / hbar omega", name="heat"),
        Panel("b) coherence", "gamma t", "C (nats)", name="coherence"),
        Panel("c) entropy production", "gamma t", "<Sigma> (nats)", name="entropy_production"),
    ]
    for spec, tr in runs:
        gt = (spec.gamma * tr.times).tolist()
        label = f"epsilon = {spec.epsilon:g}"
        key = f"eps={spec.epsilon:g}"
        panels[0].series.append(Series(label, gt, tr.heat.tolist(), key))
        panels[1].series.append(Series(label, gt, tr.coherence.tolist(), key))
        panels[2].series.append(Series(label, gt, tr.entropy_production.tolist(), key))
    return render_svg(panels)


def cmd_thermalize(cfg: RunConfig) -> list[Path]:
    runs = thermalize_runs(cfg)
    out = [cfg.output_dir / "thermalize.csv"]
    _write_csv(out[0], THERMALIZE_HEADER, _thermalize_rows(runs), cfg.precision)
    if cfg.svg:
        out.append(cfg.output_dir / "fig3.svg")
        _write_text(out[-1], fig3_svg(runs))
    return out


def cmd_collide(cfg: RunConfig) -> list[Path]:
    initial = _initial_state(cfg)
    n = _n_steps(cfg)
    rows = []
    eps_list = _epsilons(cfg)
    for eps in eps_list:
        spec = PTReservoirSpec(cfg["beta"], cfg["omega"], eps, cfg["gamma"])
        tr = simulate(initial, spec, CollisionConfig(cfg["dt"], n))
        sig_err, d_err = max_covariance_error(tr, initial, spec)
        rows.extend(zip(tr.times, [eps] * len(tr), sig_err, d_err))

    spec = PTReservoirSpec(cfg["beta"], cfg["omega"], eps_list[0], cfg["gamma"])
    finals = []
    for k in range(3):
        dt = cfg["dt"] / 2**k
        tr = simulate(initial, spec, CollisionConfig(dt, n * 2**k, naive_angle))
        finals.append(tr.states[-1].sigma[0, 0])
    order = richardson_order(finals)
    log.info("naive-rule convergence order: %.4f", order)
    path = cfg.output_dir / "collide.csv"
    _write_csv(path, COLLIDE_HEADER, rows, cfg.precision,
               trailer=[f"# naive_rule_order,{fmt(order, cfg.precision)}"])
    return [path]


def otto_results(cfg: RunConfig):
    base = OttoCycleSpec(cfg["omega_i"], cfg["omega_f"], cfg["beta_cold"], cfg["beta_hot"])
    return base, sweep_epsilon(base, _otto_grid(cfg))


def fig5_svg(base: OttoCycleSpec, results) -> str:
    eps = [r.epsilon for r in results]
    eps_c = critical_epsilon(base)
    panel = Panel(
        "Otto cycle vs PT parameter", "epsilon", "energy / hbar omega_i", name="otto",
        vline=eps_c, vline_label=f"epsilon_c = {eps_c:.4f}" if eps_c is not None else "",
    )
    panel.series.append(Series("W_net", eps, [r.w_net for r in results], "w_net"))
    panel.series.append(Series("Q_2 (hot)", eps, [r.q2 for r in results], "q2"))
    panel.series.append(Series("Q_4 (cold)", eps, [r.q4 for r in results], "q4"))
    return render_svg([panel])


def cmd_otto(cfg: RunConfig) -> list[Path]:
    base, results = otto_results(cfg)
    eps_c = critical_epsilon(base)
    rows = [(r.epsilon, r.w_net, r.q2, r.q4, r.regime.value, r.figure_of_merit, eps_c)
            for r in results]
    out = [cfg.output_dir / "otto.csv"]
    _write_csv(out[0], OTTO_HEADER, rows, cfg.precision)
    if cfg.svg:
        out.append(cfg.output_dir / "fig5.svg")
        _write_text(out[-1], fig5_svg(base, results))
    return out


def cmd_figures(cfg: RunConfig) -> list[Path]:
    cfg.svg = True
    return cmd_thermalize(cfg) + cmd_otto(cfg)


DISPATCH = {
    "thermalize": cmd_thermalize,
    "collide": cmd_collide,
    "otto": cmd_otto,
    "figures": cmd_figures,
}


def run(cfg: RunConfig) -> list[Path]:
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    return DISPATCH[cfg.command](cfg)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    if "-v" in argv or "--verbose" in argv:
        log.setLevel(logging.INFO)
    try:
        cfg = parse_run_config(argv)
    except InvalidParameters as exc:
        print(f"ptbath: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        paths = run(cfg)
    except OSError as exc:
        print(f"ptbath: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    for p in paths:
        print(p)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
