"""
Command-line front end.

    qwppm {walk,ppm,limit,spectral,figure2} [--config PATH] [--t INT]
          [--beta FLOAT] [--coin SPEC] [--seed INT] [--out DIR]
          [--quad-points INT]

Settings are resolved as flags > config file > defaults.  The config file
is a JSON object with the keys of ``ExperimentConfig``.  Coin specs on the
command line are one of

    hadamard
    dirac:EPS
    params:R,PHI,PSI,DELTA
    entries:A,B,C,D          (Python complex literals, e.g. 0.6+0.8j)

Exit status: 0 success, 2 configuration error, 3 numeric tolerance
failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any

import numpy as np

from . import io as qio
from .coin import CoinError, CoinOperator, CoinParams, coin_from_params, dirac_coin, hadamard, make_coin, params_of
from .limitlaws import limit_law_for, normal_cdf, scaled_empirical_cdf, scaling_exponent, ks_distance, sigma_squared
from .ppm import (
    RNG_ALGORITHM,
    block_distribution,
    moments,
    ppm_distribution,
    sample_trajectories,
    schedule_from,
    variance,
)
from .spectral import block_char_fn, char_fn_from_distribution, sigma_squared_quadrature
from .walk import NORM_TOL, mixed_coin_distribution

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

MODES = ("walk", "ppm", "limit", "spectral", "figure2")

SIGMA2_TOL = 1e-9
CHARFN_TOL = 1e-8
CHARFN_BLOCK = 8
CHARFN_GRID = 64
MC_SAMPLES = 10_000


class ConfigError(Exception):
    pass


class NumericFailure(Exception):
    pass


# --------------------------------------------------------------------------
# config
# --------------------------------------------------------------------------


def parse_coin_spec(spec) -> dict[str, Any]:
    """Normalize a string or JSON coin spec to its canonical dict form."""
    if isinstance(spec, dict):
        if set(spec) == {"name"} and spec["name"] == "hadamard":
            return {"name": "hadamard"}
        if set(spec) == {"dirac"}:
            return {"dirac": float(spec["dirac"])}
        if set(spec) == {"params"}:
            p = spec["params"]
            return {"params": {k: float(p[k]) for k in ("r", "phi", "psi", "delta")}}
        if set(spec) == {"entries"}:
            entries = spec["entries"]
            if len(entries) != 4:
                raise ConfigError("coin entries must list exactly a, b, c, d")
            return {"entries": [[float(re), float(im)] for re, im in entries]}
        raise ConfigError(f"unrecognized coin spec {spec!r}")
    if not isinstance(spec, str):
        raise ConfigError(f"unrecognized coin spec {spec!r}")
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "hadamard" and not rest:
            return {"name": "hadamard"}
        if kind == "dirac":
            return {"dirac": float(rest)}
        if kind == "params":
            vals = [float(v) for v in rest.split(",")]
            if len(vals) != 4:
                raise ConfigError("params: needs r,phi,psi,delta")
            return {"params": dict(zip(("r", "phi", "psi", "delta"), vals))}
        if kind == "entries":
            vals = [complex(v.strip()) for v in rest.split(",")]
            if len(vals) != 4:
                raise ConfigError("entries: needs a,b,c,d")
            return {"entries": [[v.real, v.imag] for v in vals]}
    except ValueError as exc:
        raise ConfigError(f"bad coin spec {spec!r}: {exc}") from None
    raise ConfigError(f"unrecognized coin spec {spec!r}")


def build_coin(spec: dict[str, Any]) -> CoinOperator:
    try:
        if "name" in spec:
            return hadamard()
        if "dirac" in spec:
            return dirac_coin(spec["dirac"])
        if "params" in spec:
            return coin_from_params(CoinParams(**spec["params"]))
        return make_coin(*(complex(re, im) for re, im in spec["entries"]))
    except CoinError as exc:
        raise ConfigError(f"invalid coin: {exc}") from None


@dataclass
class ExperimentConfig:
    mode: str
    coin: dict[str, Any] = field(default_factory=lambda: {"name": "hadamard"})
    t_target: int = 100
    beta: float = 0.5
    out: str = "qwppm_out"
    quad_points: int = 2048
    seed: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        self.coin = parse_coin_spec(self.coin)
        if isinstance(self.t_target, bool) or not isinstance(self.t_target, int) or self.t_target < 1:
            raise ConfigError(f"t_target must be a positive integer, got {self.t_target!r}")
        self.beta = float(self.beta)
        if not 0.0 <= self.beta <= 1.0:
            raise ConfigError(f"beta must lie in [0, 1], got {self.beta!r}")
        if not isinstance(self.quad_points, int) or self.quad_points < 16:
            raise ConfigError(f"quad_points must be an integer >= 16, got {self.quad_points!r}")
        if self.seed is not None and not isinstance(self.seed, int):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ExperimentConfig:
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        try:
            return cls(**data)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None


def resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    data: dict[str, Any] = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {args.config} is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        if data.get("mode", args.mode) != args.mode:
            raise ConfigError(f"config mode {data['mode']!r} conflicts with subcommand {args.mode!r}")
    data["mode"] = args.mode
    overrides = {
        "t_target": args.t,
        "beta": args.beta,
        "coin": args.coin,
        "seed": args.seed,
        "out": args.out,
        "quad_points": args.quad_points,
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig.from_dict(data)


# --------------------------------------------------------------------------
# runners
# --------------------------------------------------------------------------


def _fmt_beta(beta: float) -> str:
    return f"{beta:g}"


def run_walk(cfg: ExperimentConfig) -> dict[str, Any]:
    coin = build_coin(cfg.coin)
    p = mixed_coin_distribution(coin, cfg.t_target)
    defect = abs(float(p.mass.sum()) - 1.0)
    if defect > NORM_TOL:
        raise NumericFailure(f"norm defect {defect:.3e} exceeds {NORM_TOL:g}")
    out = Path(cfg.out)
    qio.write_distribution(out / f"walk_t{cfg.t_target}.csv", p)
    report = qio.make_report(
        "walk",
        t=cfg.t_target,
        coin=cfg.coin,
        mean=moments(p, 1),
        variance=variance(p),
        norm_defect=defect,
    )
    qio.write_report(out / f"walk_t{cfg.t_target}.json", report)
    print(f"mean={report['mean']:.17g} variance={report['variance']:.17g} norm_defect={defect:.3e}")
    return report


def run_ppm(cfg: ExperimentConfig) -> dict[str, Any]:
    coin = build_coin(cfg.coin)
    sched = schedule_from(cfg.t_target, cfg.beta)
    p = ppm_distribution(coin, sched)
    var = variance(p)
    stem = f"ppm_t{cfg.t_target}_beta{_fmt_beta(cfg.beta)}"
    out = Path(cfg.out)
    qio.write_distribution(out / f"{stem}.csv", p)
    extra: dict[str, Any] = {}
    if cfg.seed is not None:
        draws = sample_trajectories(coin, sched, MC_SAMPLES, cfg.seed)
        extra = {"seed": cfg.seed, "rng": RNG_ALGORITHM, "mc_samples": MC_SAMPLES, "mc_mean": float(draws.mean())}
    report = qio.make_report(
        "ppm",
        coin=cfg.coin,
        beta=cfg.beta,
        t_target=cfg.t_target,
        d=sched.d,
        M=sched.M,
        realized_t=sched.t,
        variance=var,
        variance_scaled=var / sched.t ** (1.0 + cfg.beta),
        **extra,
    )
    qio.write_report(out / f"{stem}.json", report)
    print(f"d={sched.d} M={sched.M} realized_t={sched.t} variance={var:.17g}")
    return report


def limit_fit(coin: CoinOperator, t_target: int, beta: float) -> dict[str, Any]:
    """Fit statistics of the scaled finite-t law against its predicted limit."""
    sched = schedule_from(t_target, beta)
    theta = scaling_exponent(beta).theta
    law = limit_law_for(beta, coin.a_mag)
    p = ppm_distribution(coin, sched)
    ks = ks_distance(scaled_empirical_cdf(p, sched.t, theta), law)
    var_scaled = variance(p) / sched.t ** (1.0 + beta)
    fit = {
        "beta": beta,
        "theta": theta,
        "t": sched.t,
        "d": sched.d,
        "M": sched.M,
        "law_tag": law.tag.value,
        "ks_distance": ks,
        "variance_scaled": var_scaled,
        "variance_ratio": var_scaled / law.variance,
    }
    if law.r is not None:
        fit["r"] = law.r
    else:
        fit["sigma2"] = law.variance
    return fit


def run_limit(cfg: ExperimentConfig) -> dict[str, Any]:
    coin = build_coin(cfg.coin)
    if not 0.0 < coin.a_mag < 1.0:
        raise ConfigError("limit laws need 0 < |a| < 1")
    report = qio.make_report("limit", coin=cfg.coin, **limit_fit(coin, cfg.t_target, cfg.beta))
    qio.write_report(Path(cfg.out) / f"limit_t{cfg.t_target}_beta{_fmt_beta(cfg.beta)}.json", report)
    print(
        f"law={report['law_tag']} theta={report['theta']:g} t={report['t']} "
        f"ks={report['ks_distance']:.6g} variance_ratio={report['variance_ratio']:.6g}"
    )
    return report


def charfn_residual(coin: CoinOperator, d: int = CHARFN_BLOCK, n_xi: int = CHARFN_GRID, n_points: int = 1024) -> float:
    """max over a xi grid in [-pi, pi] of |block_char_fn - char fn of the simulated block law|."""
    block = block_distribution(coin, d)
    xis = np.linspace(-math.pi, math.pi, n_xi)
    direct = char_fn_from_distribution(block, xis)
    n_points = max(n_points, 2 * d + 2)
    spectral = np.array([block_char_fn(coin, d, xi, n_points) for xi in xis])
    return float(np.max(np.abs(spectral - direct)))


def run_spectral(cfg: ExperimentConfig) -> dict[str, Any]:
    coin = build_coin(cfg.coin)
    params = params_of(coin)
    closed = sigma_squared(params.r)
    quad = sigma_squared_quadrature(coin, cfg.quad_points)
    residual = charfn_residual(coin)
    report = qio.make_report(
        "spectral",
        coin=cfg.coin,
        coin_params=asdict(params),
        sigma2_closed=closed,
        sigma2_quadrature=quad,
        sigma2_difference=quad - closed,
        quad_points=cfg.quad_points,
        charfn_block=CHARFN_BLOCK,
        max_charfn_residual=residual,
    )
    qio.write_report(Path(cfg.out) / "spectral.json", report)
    print(f"sigma2_closed={closed:.17g} sigma2_quadrature={quad:.17g} max_charfn_residual={residual:.3e}")
    if abs(quad - closed) > SIGMA2_TOL:
        raise NumericFailure(f"|sigma2_quad - sigma2_closed| = {abs(quad - closed):.3e} > {SIGMA2_TOL:g}")
    if residual > CHARFN_TOL:
        raise NumericFailure(f"characteristic-function residual {residual:.3e} > {CHARFN_TOL:g}")
    return report


FIGURE2_BETAS = (0.0, 0.5, 1.0)


def figure2_data(coin: CoinOperator, t: int = 100) -> dict[str, Any]:
    """The three t-step laws (beta = 0, 0.5, 1) and their summary statistics."""
    dists, variances, schedules = {}, {}, {}
    for beta in FIGURE2_BETAS:
        sched = schedule_from(t, beta)
        p = ppm_distribution(coin, sched)
        dists[beta], variances[beta], schedules[beta] = p, variance(p), sched
    quantum = dists[1.0]
    peak = int(quantum.positions[np.argmax(quantum.mass)])
    mid = dists[0.5]
    mean, var = moments(mid, 1), variances[0.5]
    ks_fit = ks_distance(scaled_empirical_cdf(mid, 1, 1.0), lambda x: normal_cdf(x, mean, var))
    ordering = variances[0.0] < variances[0.5] < variances[1.0]
    return {
        "dists": dists,
        "summary": {
            "t": t,
            "schedules": {_fmt_beta(b): {"d": s.d, "M": s.M, "realized_t": s.t} for b, s in schedules.items()},
            "variances": {_fmt_beta(b): v for b, v in variances.items()},
            "variance_ordering_ok": ordering,
            "quantum_peak_abs_x": abs(peak),
            "crossover_ks_best_fit_normal": ks_fit,
        },
    }


def run_figure2(cfg: ExperimentConfig) -> dict[str, Any]:
    coin = build_coin(cfg.coin)
    data = figure2_data(coin, cfg.t_target)
    out = Path(cfg.out)
    for beta, p in data["dists"].items():
        qio.write_distribution(out / f"figure2_beta{_fmt_beta(beta)}.csv", p)
    report = qio.make_report("figure2", coin=cfg.coin, **data["summary"])
    qio.write_report(out / "figure2_summary.json", report)
    v = report["variances"]
    print(f"Var(beta=0)={v['0']:.6g} Var(beta=0.5)={v['0.5']:.6g} Var(beta=1)={v['1']:.6g}")
    if not report["variance_ordering_ok"]:
        raise NumericFailure("variance ordering Var(0) < Var(0.5) < Var(1) violated")
    return report


RUNNERS = {
    "walk": run_walk,
    "ppm": run_ppm,
    "limit": run_limit,
    "spectral": run_spectral,
    "figure2": run_figure2,
}


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON config file")
    common.add_argument("--t", type=int, help="target number of steps")
    common.add_argument("--beta", type=float, help="time-scale exponent in [0, 1]")
    common.add_argument("--coin", metavar="SPEC", help="coin spec (see module help)")
    common.add_argument("--seed", type=int, help="Monte Carlo seed (ppm mode)")
    common.add_argument("--out", metavar="DIR", help="output directory")
    common.add_argument("--quad-points", type=int, dest="quad_points", help="k-quadrature size")

    parser = argparse.ArgumentParser(
        prog="qwppm",
        description="Quantum walk with periodic position measurement.",
        epilog="Exit status: 0 ok, 2 config error, 3 numeric tolerance failure, 4 I/O error.",
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    helps = {
        "walk": "mixed-coin walk distribution at t steps",
        "ppm": "distribution with a position measurement every d ~ t^beta steps",
        "limit": "compare the scaled distribution with its limit law",
        "spectral": "sigma^2 by k-quadrature and characteristic-function check",
        "figure2": "t = 100 distributions for beta = 0, 0.5, 1",
    }
    for mode in MODES:
        sub.add_parser(mode, parents=[common], help=helps[mode])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        RUNNERS[cfg.mode](cfg)
    except ConfigError as exc:
        print(f"qwppm: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericFailure as exc:
        print(f"qwppm: numeric tolerance failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"qwppm: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
