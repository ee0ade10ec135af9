"""Adaptive quadrature and homogeneous-space magnitude quotients.

The magnitude of a homogeneous space with an invariant measure is the ratio
of the total measure to the integral of exp(-d(x, y)) against it.  For the
n-sphere with the geodesic metric this reduces to a quotient of the 1-D
integrals

    K_n = int_0^pi sin^{n-1}(r) dr,
    I_n = int_0^pi exp(-r R) sin^{n-1}(r) dr,

and for the chord (ambient Euclidean) metric to a similar quotient with
exp(-2 R sin(theta/2)).  The integrands are analytic on [0, pi], so a
fixed-order Gauss-Legendre panel rule with uniform bisection and an error
estimate from successive refinements converges very quickly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._numeric import one_minus_one_plus_x_exp_neg, x_over_one_minus_exp_neg
from .errors import NoConvergence, NonpositiveLength
from .spheres import sigma

#: Decay rate at which the integration domain is pre-split near zero.
_SPLIT_RATE = 50.0
#: The split point is min(b, _SPLIT_SCALE / R).
_SPLIT_SCALE = 30.0


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerance and refinement policy for smooth 1-D integrals."""

    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    panel_order: int = 15
    max_refinements: int = 20

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if not self.abs_tol > 0.0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.panel_order < 4:
            raise ValueError(f"panel_order must be >= 4, got {self.panel_order}")
        if self.max_refinements < 1:
            raise ValueError(f"max_refinements must be >= 1, got {self.max_refinements}")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error_estimate: float
    refinements_used: int


@lru_cache(maxsize=None)
def _gauss_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _panel_sum(f, a: float, b: float, panels: int, order: int) -> float:
    nodes, weights = _gauss_rule(order)
    edges = np.linspace(a, b, panels + 1)
    half = (b - a) / (2.0 * panels)
    centers = 0.5 * (edges[:-1] + edges[1:])
    x = centers[:, None] + half * nodes[None, :]
    vals = np.asarray(f(x), dtype=float)
    return float(half * (vals @ weights).sum())


def integrate_adaptive(
    f, a: float, b: float, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> IntegralResult:
    """Integrate a smooth vectorized function over [a, b].

    The panel count doubles until two successive refinements agree to
    max(rel_tol * |value|, abs_tol); the difference is the error estimate.

    Parameters
    ----------
    f : callable
        Maps a numpy array of abscissae to integrand values of the same
        shape.
    a, b : float
        Integration bounds, a <= b.
    cfg : QuadratureConfig

    Raises
    ------
    NoConvergence
        If the estimate is still above tolerance after max_refinements
        bisections.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("integration bounds must be finite")
    if a > b:
        raise ValueError(f"need a <= b, got a={a}, b={b}")
    if a == b:
        return IntegralResult(0.0, 0.0, 0)
    prev = _panel_sum(f, a, b, 1, cfg.panel_order)
    for k in range(1, cfg.max_refinements + 1):
        cur = _panel_sum(f, a, b, 2**k, cfg.panel_order)
        err = abs(cur - prev)
        if err <= max(cfg.rel_tol * abs(cur), cfg.abs_tol):
            return IntegralResult(cur, err, k)
        prev = cur
    raise NoConvergence(
        f"integral estimate did not converge after {cfg.max_refinements} "
        f"refinements (last error estimate {err:.3e})"
    )


def _integrate_decaying(f, b: float, rate: float, cfg: QuadratureConfig) -> IntegralResult:
    """Integrate f over [0, b] when it decays like exp(-rate * x).

    For large rates the mass concentrates near 0, so the domain is split at
    min(b, 30/rate) before refinement; this keeps the panel counts small.
    """
    if rate < _SPLIT_RATE:
        return integrate_adaptive(f, 0.0, b, cfg)
    cut = min(b, _SPLIT_SCALE / rate)
    head = integrate_adaptive(f, 0.0, cut, cfg)
    tail = integrate_adaptive(f, cut, b, cfg)
    return IntegralResult(
        head.value + tail.value,
        head.error_estimate + tail.error_estimate,
        max(head.refinements_used, tail.refinements_used),
    )


def K_integral(n: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Numerator integral int_0^pi sin^{n-1}(r) dr, n >= 1."""
    n = int(n)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return integrate_adaptive(lambda r: np.sin(r) ** (n - 1), 0.0, math.pi, cfg).value


def I_integral(n: int, R: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Denominator integral int_0^pi exp(-r R) sin^{n-1}(r) dr, n >= 1, R > 0."""
    n = int(n)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not R > 0.0:
        raise ValueError(f"need R > 0, got {R}")
    f = lambda r: np.exp(-r * R) * np.sin(r) ** (n - 1)
    return _integrate_decaying(f, math.pi, R, cfg).value


def sphere_magnitude_quadrature(
    n: int, R: float, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> float:
    """Magnitude of the n-sphere of radius R (geodesic metric) by quadrature."""
    return K_integral(n, cfg) / I_integral(n, R, cfg)


def recurrence_residuals(
    n: int, R: float, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> tuple[float, float]:
    """Residuals of the two induction identities linking n and n+2.

    Returns ((n+1) K_{n+2} - n K_n, (n+1)((R/(n+1))^2 + 1) I_{n+2} - n I_n),
    all four integrals computed by quadrature.
    """
    kn = K_integral(n, cfg)
    kn2 = K_integral(n + 2, cfg)
    iname = I_integral(n, R, cfg)
    in2 = I_integral(n + 2, R, cfg)
    k_res = (n + 1) * kn2 - n * kn
    i_res = (n + 1) * ((R / (n + 1)) ** 2 + 1.0) * in2 - n * iname
    return k_res, i_res


def circle_magnitude_closed(circumference: float) -> float:
    """Magnitude of the circle of a given circumference.

    The invariant-measure quotient evaluates to l / (2 (1 - e^{-l/2})); the
    small-l regime goes through a series branch to avoid cancellation.
    """
    if not circumference > 0.0 or not math.isfinite(circumference):
        raise NonpositiveLength(
            f"circumference must be positive, got {circumference}"
        )
    return x_over_one_minus_exp_neg(0.5 * circumference)


def subspace_sphere2_closed(R: float) -> float:
    """Magnitude of the 2-sphere of radius R with the chord metric.

    Closed form 2 R^2 / (1 - e^{-2R} (1 + 2R)), with a series branch for
    the denominator at small R.
    """
    if not R > 0.0:
        raise ValueError(f"need R > 0, got {R}")
    return 2.0 * R * R / one_minus_one_plus_x_exp_neg(2.0 * R)


def subspace_sphere_magnitude_quadrature(
    n: int, R: float, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> float:
    """Magnitude of the n-sphere of radius R with the chord metric.

    Evaluates Vol(S^n_R) / (sigma_{n-1} R^n J) with
    J = int_0^pi exp(-2 R sin(theta/2)) sin^{n-1}(theta) dtheta,
    which simplifies to sigma_n / (sigma_{n-1} J).
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not R > 0.0:
        raise ValueError(f"need R > 0, got {R}")
    f = lambda t: np.exp(-2.0 * R * np.sin(0.5 * t)) * np.sin(t) ** (n - 1)
    j = _integrate_decaying(f, math.pi, R, cfg).value
    return sigma(n) / (sigma(n - 1) * j)
