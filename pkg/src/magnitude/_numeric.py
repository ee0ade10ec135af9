"""Numerically careful scalar helpers shared across modules.

All of these guard against catastrophic cancellation near zero by switching
to a short series branch; the crossover thresholds are chosen so that the
truncation error of the series sits far below double-precision roundoff.
"""

import math

# Below this the series branches are used for expressions of the form
# x / (1 - e^{-x}) and 1 - (1+x) e^{-x}.
SERIES_CUTOFF = 1e-4


def x_over_one_minus_exp_neg(x: float) -> float:
    """x / (1 - e^{-x}) with the removable singularity at 0 filled in."""
    if x == 0.0:
        return 1.0
    if abs(x) < SERIES_CUTOFF:
        # 1 + x/2 + x^2/12 - x^4/720 + ...; next term ~ x^6/30240
        return 1.0 + x / 2.0 + x * x / 12.0 - x**4 / 720.0
    return x / -math.expm1(-x)


def one_minus_one_plus_x_exp_neg(x: float) -> float:
    """1 - (1+x) e^{-x}, accurate for small x.

    Series: sum_{k>=2} (-1)^k (k-1) x^k / k! = x^2/2 - x^3/3 + x^4/8 - ...
    """
    if abs(x) < SERIES_CUTOFF:
        return x * x * (0.5 + x * (-1.0 / 3.0 + x * (0.125 + x * (-1.0 / 30.0 + x / 144.0))))
    return -math.expm1(-x) - x * math.exp(-x)


def tanh_minus_x(x: float) -> float:
    """tanh(x) - x without cancellation for small x."""
    if x == 0.0:
        return 0.0
    if abs(x) < 0.1:
        x2 = x * x
        # odd series of tanh past the linear term; |next term| <~ x^13 * 4e-3
        return x * x2 * (
            -1.0 / 3.0
            + x2 * (2.0 / 15.0 + x2 * (-17.0 / 315.0 + x2 * (62.0 / 2835.0 - x2 * 1382.0 / 155925.0)))
        )
    return math.tanh(x) - x


def tanh_over_x(x: float) -> float:
    """tanh(x)/x with the limit value 1 at x = 0."""
    if x == 0.0:
        return 1.0
    if abs(x) < 0.1:
        return 1.0 + tanh_minus_x(x) / x
    return math.tanh(x) / x
