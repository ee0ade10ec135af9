"""Magnitude of metric spaces.

Magnitude assigns an "effective number of points" to a metric space: for a
finite space it is the sum of the weights solving sum_x exp(-d(x, y)) w_x = 1
at every point y, and for an infinite space the total mass of a signed
measure satisfying the same equation.  This package computes it along three
routes and cross-checks them:

- dense weight-equation solves for finite spaces (`finite`);
- exact atom-plus-density weight measures for closed subsets of the line:
  intervals, sets with holes removed, middle-thirds sets (`line`);
- invariant-measure quotients for circles and n-spheres under both the
  geodesic and the chord metric, as closed forms and by adaptive quadrature
  (`spheres`, `quadrature`), with large-scale asymptotics extracted and
  compared against the volume / total-scalar-curvature / Euler
  characteristic predictions (`asymptotics`).
"""

from .asymptotics import (
    AsymptoticExpansion,
    GermExpansion,
    extract_coefficients,
    extract_parity_expansion,
    extract_subspace_relative_correction,
    predicted_expansion_intrinsic_sphere,
    predicted_relative_correction_intrinsic,
    predicted_relative_correction_subspace,
    surface_asymptotics_residual,
    watson_partial_sum,
)
from .errors import (
    EpsilonTooLarge,
    HypothesisViolated,
    IllConditionedFit,
    IndexOutOfRange,
    MagnitudeError,
    NoConvergence,
    NonpositiveLength,
    NonpositiveScale,
    NotContained,
    NotHomogeneous,
    PointOutsideCarrier,
    SingularSystem,
    TooFewPoints,
)
from .finite import (
    DEFAULT_TOL,
    FiniteMetricSpace,
    Weighting,
    circle_points,
    is_homogeneous_rows,
    magnitude_finite,
    magnitude_homogeneous_finite,
    read_distance_matrix,
    read_point_cloud,
    scale,
    similarity_matrix,
    weighting,
)
from .line import (
    LineSubset,
    LineWeightMeasure,
    cantor_level_measure,
    cantor_level_set,
    cantor_magnitude_iterative,
    cantor_magnitude_series,
    carrier_probe_points,
    finite_approx_line,
    interval_weight_measure,
    measure_total_mass,
    remove_open_interval,
    weight_equation_residual,
)
from .quadrature import (
    DEFAULT_CONFIG,
    IntegralResult,
    I_integral,
    K_integral,
    QuadratureConfig,
    circle_magnitude_closed,
    integrate_adaptive,
    recurrence_residuals,
    sphere_magnitude_quadrature,
    subspace_sphere2_closed,
    subspace_sphere_magnitude_quadrature,
)
from .spheres import (
    P_polynomial,
    SpherePolynomial,
    geodesic_sphere_expansion_check,
    intrinsic_volume_sphere,
    leading_and_subleading_check,
    omega,
    penguin_valuation_sphere,
    recurrence_step_check,
    scalar_curvature_sphere,
    sigma,
    sphere_magnitude_closed,
    tsc_sphere,
    tube_volume_check,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticExpansion",
    "DEFAULT_CONFIG",
    "DEFAULT_TOL",
    "EpsilonTooLarge",
    "FiniteMetricSpace",
    "GermExpansion",
    "HypothesisViolated",
    "IllConditionedFit",
    "IndexOutOfRange",
    "IntegralResult",
    "I_integral",
    "K_integral",
    "LineSubset",
    "LineWeightMeasure",
    "MagnitudeError",
    "NoConvergence",
    "NonpositiveLength",
    "NonpositiveScale",
    "NotContained",
    "NotHomogeneous",
    "P_polynomial",
    "PointOutsideCarrier",
    "QuadratureConfig",
    "SingularSystem",
    "SpherePolynomial",
    "TooFewPoints",
    "Weighting",
    "cantor_level_measure",
    "cantor_level_set",
    "cantor_magnitude_iterative",
    "cantor_magnitude_series",
    "carrier_probe_points",
    "circle_magnitude_closed",
    "circle_points",
    "extract_coefficients",
    "extract_parity_expansion",
    "extract_subspace_relative_correction",
    "finite_approx_line",
    "geodesic_sphere_expansion_check",
    "integrate_adaptive",
    "interval_weight_measure",
    "intrinsic_volume_sphere",
    "is_homogeneous_rows",
    "leading_and_subleading_check",
    "magnitude_finite",
    "magnitude_homogeneous_finite",
    "measure_total_mass",
    "omega",
    "penguin_valuation_sphere",
    "predicted_expansion_intrinsic_sphere",
    "predicted_relative_correction_intrinsic",
    "predicted_relative_correction_subspace",
    "read_distance_matrix",
    "read_point_cloud",
    "recurrence_residuals",
    "recurrence_step_check",
    "remove_open_interval",
    "scalar_curvature_sphere",
    "scale",
    "sigma",
    "similarity_matrix",
    "sphere_magnitude_closed",
    "sphere_magnitude_quadrature",
    "subspace_sphere2_closed",
    "subspace_sphere_magnitude_quadrature",
    "surface_asymptotics_residual",
    "tsc_sphere",
    "tube_volume_check",
    "watson_partial_sum",
    "weight_equation_residual",
    "weighting",
]
