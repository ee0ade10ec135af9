"""Command-line front end: one subcommand per computation plus CSV sweeps.

Exit codes: 0 on success, 2 on input errors (including argparse failures),
3 on numerical failures (SingularSystem, NoConvergence, IllConditionedFit),
with the failure named on stderr.  All numbers are printed with 17
significant digits so doubles round-trip exactly.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import asymptotics, finite, line, quadrature, spheres
from .errors import (
    IllConditionedFit,
    MagnitudeError,
    NoConvergence,
    SingularSystem,
)

#: Environment variable overriding the default tolerance of every subcommand.
TOL_ENV_VAR = "MAGNITUDE_DEFAULT_TOL"

CSV_HEADER = ("space", "param_name", "param_value", "method", "magnitude", "error_estimate")

_SPACES = ("finite-file", "interval", "cantor", "circle", "sphere-intrinsic", "sphere-subspace")
_PARAM_NAMES = {
    "finite-file": "scale",
    "interval": "length",
    "cantor": "length",
    "circle": "circumference",
    "sphere-intrinsic": "radius",
    "sphere-subspace": "radius",
}


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _default_tol(fallback: float) -> float:
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None:
        return fallback
    try:
        tol = float(raw)
    except ValueError:
        raise ValueError(f"{TOL_ENV_VAR}={raw!r} is not a number") from None
    if not tol > 0.0:
        raise ValueError(f"{TOL_ENV_VAR} must be positive, got {tol}")
    return tol


def _quad_config(tol: float | None) -> quadrature.QuadratureConfig:
    if tol is None:
        tol = _default_tol(quadrature.DEFAULT_CONFIG.rel_tol)
    return quadrature.QuadratureConfig(rel_tol=tol)


def _solver_tol(tol: float | None) -> float:
    return _default_tol(finite.DEFAULT_TOL) if tol is None else tol


def _cmd_finite(args) -> int:
    X = finite.read_distance_matrix(args.matrix)
    w = finite.weighting(X, _solver_tol(args.tol))
    print(f"{_fmt(w.w.sum())},{_fmt(w.rcond)}")
    return 0


def _cmd_interval(args) -> int:
    if args.approx is None:
        _, measure = line.interval_weight_measure(args.length)
        value = line.measure_total_mass(measure)
    else:
        space, _ = line.interval_weight_measure(args.length)
        X = line.finite_approx_line(space, args.approx)
        value = finite.magnitude_finite(X, _solver_tol(args.tol))
    print(_fmt(value))
    return 0


def _cmd_cantor(args) -> int:
    if args.iterative:
        if args.depth is None:
            raise ValueError("--iterative requires --depth")
        value = line.cantor_magnitude_iterative(args.length, args.depth)
    else:
        value = line.cantor_magnitude_series(args.length, _solver_tol(args.tol))
    print(_fmt(value))
    return 0


def _cmd_circle(args) -> int:
    if args.points is None:
        value = quadrature.circle_magnitude_closed(args.circumference)
    else:
        X = finite.circle_points(args.circumference, args.points)
        value = finite.magnitude_homogeneous_finite(X, tol=1e-8)
    print(_fmt(value))
    return 0


def _cmd_sphere(args) -> int:
    n, R = args.dim, args.radius
    if args.metric == "intrinsic":
        if args.method == "closed":
            value = spheres.sphere_magnitude_closed(n, R)
        else:
            value = quadrature.sphere_magnitude_quadrature(n, R, _quad_config(args.tol))
    else:
        if args.method == "closed":
            if n != 2:
                raise ValueError(
                    "closed form for the subspace metric exists only for --dim 2; "
                    "use --method quadrature"
                )
            value = quadrature.subspace_sphere2_closed(R)
        else:
            value = quadrature.subspace_sphere_magnitude_quadrature(n, R, _quad_config(args.tol))
    print(_fmt(value))
    return 0


def _geometric_grid(tmin: float, tmax: float) -> list[float]:
    if not 0.0 < tmin < tmax:
        raise ValueError(f"need 0 < tmin < tmax, got tmin={tmin}, tmax={tmax}")
    grid = [tmin]
    while grid[-1] * 2.0 <= tmax * (1.0 + 1e-12):
        grid.append(grid[-1] * 2.0)
    return grid


def _cmd_asymptotics(args) -> int:
    n = args.dim
    grid = _geometric_grid(args.tmin, args.tmax)
    writer = csv.writer(sys.stdout)
    writer.writerow(("power", "extracted", "predicted", "spread"))
    if args.metric == "intrinsic":
        if len(grid) < 4:
            raise ValueError(
                f"need a doubling grid of at least 4 points between tmin and tmax, got {grid}"
            )
        if not 1 <= args.orders <= 3:
            raise ValueError("--orders must be 1, 2, or 3 for the intrinsic metric")
        extracted = asymptotics.extract_parity_expansion(
            lambda t: spheres.sphere_magnitude_closed(n, t), n, grid
        )
        predicted = asymptotics.predicted_expansion_intrinsic_sphere(n)
        for (power, coeff), spread in list(zip(extracted.terms, extracted.spreads))[: args.orders]:
            writer.writerow((power, _fmt(coeff), _fmt(predicted.coefficient(power)), _fmt(spread)))
    else:
        if len(grid) < 3:
            raise ValueError(
                f"need a doubling grid of at least 3 points between tmin and tmax, got {grid}"
            )
        if not 1 <= args.orders <= 2:
            raise ValueError("--orders must be 1 or 2 for the subspace metric")
        cfg = _quad_config(args.tol)
        lead = spheres.sigma(n) / (math.factorial(n) * spheres.omega(n))
        ratio = asymptotics.extract_coefficients(
            lambda R: quadrature.subspace_sphere_magnitude_quadrature(n, R, cfg) / (lead * R**n),
            0, 2, 1, grid,
        )
        writer.writerow((0, _fmt(ratio.coefficient(0)), _fmt(1.0), _fmt(ratio.spreads[0])))
        if args.orders == 2:
            coeff, spread = asymptotics.extract_subspace_relative_correction(n, grid, cfg)
            predicted = asymptotics.predicted_relative_correction_subspace(n)
            writer.writerow((-2, _fmt(coeff), _fmt(predicted), _fmt(spread)))
    return 0


def _cmd_tube_check(args) -> int:
    direct, formula = spheres.tube_volume_check(args.dim, args.radius, args.epsilon)
    rel = abs(direct - formula) / abs(direct)
    print(f"{_fmt(direct)},{_fmt(formula)},{_fmt(rel)}")
    return 0


@dataclass(frozen=True)
class SweepSpec:
    """One-parameter sweep: space kind, grid, and evaluation method."""

    space: str
    param_name: str
    start: float
    stop: float
    points: int
    scale: str  # "linear" | "geometric"
    method: str  # "closed" | "quadrature" | "finite-N"
    dim: int | None = None
    matrix: str | None = None
    tol: float | None = None

    def grid(self) -> np.ndarray:
        if self.scale == "linear":
            return np.linspace(self.start, self.stop, self.points)
        return np.geomspace(self.start, self.stop, self.points)


def parse_sweep_spec(path) -> SweepSpec:
    """Parse the flat key=value sweep file."""
    fields: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            if "=" not in text:
                raise ValueError(f"{path}: line {lineno}: expected key=value, got {text!r}")
            key, _, value = text.partition("=")
            key = key.strip()
            if key in fields:
                raise ValueError(f"{path}: line {lineno}: duplicate key {key!r}")
            fields[key] = value.strip()

    known = {"space", "method", "start", "stop", "points", "scale", "dim", "matrix", "tol"}
    for key in fields:
        if key not in known:
            raise ValueError(f"{path}: unknown key {key!r}")
    for key in ("space", "method", "start", "stop", "points"):
        if key not in fields:
            raise ValueError(f"{path}: missing required key {key!r}")

    space = fields["space"]
    if space not in _SPACES:
        raise ValueError(f"{path}: space must be one of {', '.join(_SPACES)}; got {space!r}")
    method = fields["method"]
    if not (method in ("closed", "quadrature") or _finite_method_n(method) is not None):
        raise ValueError(
            f"{path}: method must be closed, quadrature, or finite-N; got {method!r}"
        )
    try:
        start = float(fields["start"])
        stop = float(fields["stop"])
        points = int(fields["points"])
    except ValueError:
        raise ValueError(f"{path}: start/stop must be numbers and points an integer") from None
    if not start < stop:
        raise ValueError(f"{path}: need start < stop, got {start} >= {stop}")
    if points < 2:
        raise ValueError(f"{path}: need points >= 2, got {points}")
    scale = fields.get("scale", "linear")
    if scale not in ("linear", "geometric"):
        raise ValueError(f"{path}: scale must be linear or geometric, got {scale!r}")
    if scale == "geometric" and not start > 0.0:
        raise ValueError(f"{path}: geometric grids need start > 0, got {start}")

    dim = None
    if space in ("sphere-intrinsic", "sphere-subspace"):
        if "dim" not in fields:
            raise ValueError(f"{path}: sphere sweeps need dim=<int>")
        dim = int(fields["dim"])
    matrix = None
    if space == "finite-file":
        if "matrix" not in fields:
            raise ValueError(f"{path}: finite-file sweeps need matrix=<path>")
        matrix = fields["matrix"]
    tol = float(fields["tol"]) if "tol" in fields else None

    spec = SweepSpec(
        space=space,
        param_name=_PARAM_NAMES[space],
        start=start,
        stop=stop,
        points=points,
        scale=scale,
        method=method,
        dim=dim,
        matrix=matrix,
        tol=tol,
    )
    _validate_method_for_space(spec)
    return spec


def _finite_method_n(method: str) -> int | None:
    if method.startswith("finite-"):
        try:
            n = int(method[len("finite-"):])
        except ValueError:
            return None
        return n if n >= 2 else None
    return None


def _validate_method_for_space(spec: SweepSpec):
    finite_n = _finite_method_n(spec.method)
    ok = {
        "finite-file": spec.method == "closed",  # re-solving the scaled input file
        "interval": spec.method == "closed" or finite_n is not None,
        "cantor": spec.method == "closed" or finite_n is not None,
        "circle": spec.method == "closed" or finite_n is not None,
        "sphere-intrinsic": spec.method in ("closed", "quadrature"),
        "sphere-subspace": spec.method == "quadrature"
        or (spec.method == "closed" and spec.dim == 2),
    }[spec.space]
    if not ok:
        raise ValueError(f"method {spec.method!r} is not valid for space {spec.space!r}")


def _sweep_row(spec: SweepSpec, value: float, loaded) -> tuple[float, float]:
    """Magnitude and error estimate at one grid value."""
    finite_n = _finite_method_n(spec.method)
    solver_tol = _solver_tol(spec.tol)
    if spec.space == "finite-file":
        w = finite.weighting(finite.scale(loaded, value), solver_tol)
        return float(w.w.sum()), w.residual_norm / w.rcond
    if spec.space == "interval":
        if finite_n is not None:
            space, _ = line.interval_weight_measure(value)
            w = finite.weighting(line.finite_approx_line(space, finite_n), solver_tol)
            return float(w.w.sum()), w.residual_norm / w.rcond
        _, measure = line.interval_weight_measure(value)
        return line.measure_total_mass(measure), 0.0
    if spec.space == "cantor":
        if finite_n is not None:
            # The integer selects the construction depth of the carrier.
            X = line.finite_approx_line(line.cantor_level_set(value, finite_n), 2)
            w = finite.weighting(X, solver_tol)
            return float(w.w.sum()), w.residual_norm / w.rcond
        return line.cantor_magnitude_series(value, solver_tol), solver_tol
    if spec.space == "circle":
        if finite_n is not None:
            X = finite.circle_points(value, finite_n)
            return finite.magnitude_homogeneous_finite(X, tol=1e-8), 0.0
        return quadrature.circle_magnitude_closed(value), 0.0
    cfg = _quad_config(spec.tol)
    if spec.space == "sphere-intrinsic":
        if spec.method == "closed":
            return spheres.sphere_magnitude_closed(spec.dim, value), 0.0
        mag = quadrature.sphere_magnitude_quadrature(spec.dim, value, cfg)
        return mag, 2.0 * cfg.rel_tol * abs(mag)
    if spec.method == "closed":
        return quadrature.subspace_sphere2_closed(value), 0.0
    mag = quadrature.subspace_sphere_magnitude_quadrature(spec.dim, value, cfg)
    return mag, 2.0 * cfg.rel_tol * abs(mag)


def _cmd_sweep(args) -> int:
    spec = parse_sweep_spec(args.spec)
    loaded = finite.read_distance_matrix(spec.matrix) if spec.matrix is not None else None
    rows = []
    for value in spec.grid():
        value = float(value)
        mag, err = _sweep_row(spec, value, loaded)
        rows.append((spec.space, spec.param_name, _fmt(value), spec.method, _fmt(mag), _fmt(err)))
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        writer.writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magnitude",
        description="Magnitude of metric spaces: finite solves, line subsets, circles and spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("finite", help="magnitude of a distance-matrix CSV file")
    p.add_argument("--matrix", required=True, help="square distance-matrix CSV")
    p.add_argument("--tol", type=float, default=None, help="solver tolerance (default 1e-10)")
    p.set_defaults(func=_cmd_finite)

    p = sub.add_parser("interval", help="magnitude 1 + L/2 of a closed interval")
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--approx", type=int, default=None, metavar="N",
                   help="solve an N-point uniform finite approximation instead")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("cantor", help="magnitude of the middle-thirds set")
    p.add_argument("--length", type=float, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--series", action="store_true", help="tail-bounded series sum")
    mode.add_argument("--iterative", action="store_true", help="finite removal depth")
    p.add_argument("--tol", type=float, default=None, help="series truncation bound")
    p.add_argument("--depth", type=int, default=None, help="removal rounds for --iterative")
    p.set_defaults(func=_cmd_cantor)

    p = sub.add_parser("circle", help="magnitude of a circle of given circumference")
    p.add_argument("--circumference", type=float, required=True)
    p.add_argument("--points", type=int, default=None, metavar="N",
                   help="use N evenly spaced points instead of the closed form")
    p.set_defaults(func=_cmd_circle)

    p = sub.add_parser("sphere", help="magnitude of the n-sphere of radius R")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--metric", choices=("intrinsic", "subspace"), default="intrinsic")
    p.add_argument("--method", choices=("closed", "quadrature"), default="closed")
    p.add_argument("--tol", type=float, default=None, help="quadrature relative tolerance")
    p.set_defaults(func=_cmd_sphere)

    p = sub.add_parser("asymptotics", help="extracted vs predicted expansion coefficients")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--metric", choices=("intrinsic", "subspace"), default="intrinsic")
    p.add_argument("--orders", type=int, required=True)
    p.add_argument("--tmin", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=_cmd_asymptotics)

    p = sub.add_parser("tube-check", help="both sides of the tube-volume identity")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.set_defaults(func=_cmd_tube_check)

    p = sub.add_parser("sweep", help="evaluate a parameter sweep into a CSV file")
    p.add_argument("--spec", required=True, help="key=value sweep description file")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_sweep)

    return parser


def run(argv) -> int:
    """Parse argv (without the program name) and execute; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.func(args)
    except (SingularSystem, NoConvergence, IllConditionedFit) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (MagnitudeError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
