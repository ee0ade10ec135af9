"""Finite metric spaces and their magnitude via the weight equation.

A finite metric space is held as a dense symmetric distance matrix d.  Its
similarity matrix Z has entries exp(-d[i, j]); a weighting is a vector w
with Z w = 1 (all-ones right-hand side) and the magnitude is sum(w).  The
solver is LU with partial pivoting plus a reciprocal-condition estimate,
because Z may be indefinite for an arbitrary finite metric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import get_lapack_funcs

from .errors import NonpositiveScale, NotHomogeneous, SingularSystem

#: Default solver tolerance: residual bound and reciprocal-condition floor.
DEFAULT_TOL = 1e-10

#: Points closer than this are merged when building spaces from coordinates.
MERGE_TOL = 1e-12


class FiniteMetricSpace:
    """Immutable finite metric space backed by a dense distance matrix.

    Parameters
    ----------
    distances : array_like, shape (n, n)
        Symmetric nonnegative matrix with zero diagonal and strictly
        positive off-diagonal entries.
    labels : sequence of str, optional
        Point identifiers, kept only for reporting.
    check_triangle : bool
        Verify the triangle inequality on construction.  This is O(n^3);
        internal constructors that build provably metric data disable it.
    """

    __slots__ = ("d", "labels")

    def __init__(self, distances, labels=None, check_triangle=True):
        d = np.array(distances, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValueError(f"distance matrix must be square, got shape {d.shape}")
        n = d.shape[0]
        if n == 0:
            raise ValueError("a metric space needs at least one point")
        if not np.all(np.isfinite(d)):
            i, j = map(int, np.argwhere(~np.isfinite(d))[0])
            raise ValueError(f"non-finite distance at row {i}, column {j}")
        diag = d.diagonal()
        if np.any(diag != 0.0):
            i = int(np.nonzero(diag)[0][0])
            raise ValueError(f"nonzero diagonal entry at row {i}")
        if not np.array_equal(d, d.T):
            i, j = map(int, np.argwhere(d != d.T)[0])
            raise ValueError(f"asymmetric distances at row {i}, column {j}")
        offdiag = ~np.eye(n, dtype=bool)
        if np.any(d[offdiag] <= 0.0):
            i, j = map(int, np.argwhere((d <= 0.0) & offdiag)[0])
            raise ValueError(f"nonpositive distance between distinct points {i} and {j}")
        if check_triangle:
            _check_triangle(d)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ValueError(f"got {len(labels)} labels for {n} points")
        d.setflags(write=False)
        self.d = d
        self.labels = labels

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __repr__(self):
        return f"FiniteMetricSpace(n={self.n})"


def _check_triangle(d):
    # One row at a time keeps memory O(n^2).  The slack absorbs roundoff in
    # distances that sit exactly on the equality case (collinear points).
    n = d.shape[0]
    slack = 1e-12 * (1.0 + float(d.max()))
    for j in range(n):
        bound = d[:, j][:, None] + d[j, :][None, :] + slack
        bad = d > bound
        if bad.any():
            i, k = map(int, np.argwhere(bad)[0])
            raise ValueError(
                f"triangle inequality violated: d[{i},{k}] > d[{i},{j}] + d[{j},{k}]"
            )


@dataclass(frozen=True)
class Weighting:
    """Solution of the weight equation Z w = 1.

    residual_norm is the max-norm of Z w - 1 and rcond the reciprocal
    condition estimate of Z in the 1-norm.
    """

    w: np.ndarray
    residual_norm: float
    rcond: float


def similarity_matrix(X: FiniteMetricSpace) -> np.ndarray:
    """Matrix of exp(-d(i, j)): symmetric with unit diagonal."""
    return np.exp(-X.d)


def weighting(X: FiniteMetricSpace, tol: float = DEFAULT_TOL) -> Weighting:
    """Solve the weight equation for X.

    Raises
    ------
    SingularSystem
        If the similarity matrix has a zero pivot, its reciprocal condition
        estimate falls below tol, or the residual cannot be brought below
        tol by one step of iterative refinement.
    """
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    Z = similarity_matrix(X)
    anorm = float(np.linalg.norm(Z, 1))
    getrf, gecon, getrs = get_lapack_funcs(("getrf", "gecon", "getrs"), (Z,))
    lu, piv, info = getrf(Z, overwrite_a=False)
    if info > 0:
        raise SingularSystem("similarity matrix is exactly singular (zero pivot)")
    if info < 0:
        raise RuntimeError(f"LAPACK getrf failed with info={info}")
    rcond, info = gecon(lu, anorm, norm="1")
    rcond = float(rcond)
    if rcond < tol:
        raise SingularSystem(
            f"reciprocal condition estimate {rcond:.3e} below tol {tol:.3e}"
        )
    ones = np.ones(X.n)
    w, info = getrs(lu, piv, ones)
    residual = Z @ w - 1.0
    rnorm = float(np.abs(residual).max())
    if rnorm > tol:
        corr, info = getrs(lu, piv, residual)
        w = w - corr
        rnorm = float(np.abs(Z @ w - 1.0).max())
        if rnorm > tol:
            raise SingularSystem(
                f"weight-equation residual {rnorm:.3e} exceeds tol {tol:.3e}"
            )
    w.setflags(write=False)
    return Weighting(w=w, residual_norm=rnorm, rcond=rcond)


def magnitude_finite(X: FiniteMetricSpace, tol: float = DEFAULT_TOL) -> float:
    """Magnitude of X: the sum of the weights."""
    return float(weighting(X, tol).w.sum())


def scale(X: FiniteMetricSpace, t: float) -> FiniteMetricSpace:
    """Return X with all distances multiplied by t > 0."""
    if not (t > 0.0) or not np.isfinite(t):
        raise NonpositiveScale(f"scale factor must be positive and finite, got {t}")
    # Scaling preserves all metric axioms; skip the O(n^3) recheck.
    return FiniteMetricSpace(X.d * float(t), labels=X.labels, check_triangle=False)


def is_homogeneous_rows(X: FiniteMetricSpace, tol: float = DEFAULT_TOL) -> bool:
    """Necessary condition for homogeneity: equal similarity row sums."""
    sums = similarity_matrix(X).sum(axis=1)
    return bool(sums.max() - sums.min() <= tol)


def magnitude_homogeneous_finite(X: FiniteMetricSpace, tol: float = DEFAULT_TOL) -> float:
    """Magnitude of a homogeneous finite space: n / (similarity row sum).

    Raises NotHomogeneous when the row sums differ by more than tol.
    """
    sums = similarity_matrix(X).sum(axis=1)
    spread = float(sums.max() - sums.min())
    if spread > tol:
        raise NotHomogeneous(
            f"similarity row sums spread {spread:.3e} exceeds tol {tol:.3e}"
        )
    return X.n / float(sums[0])


def circle_points(circumference: float, n: int) -> FiniteMetricSpace:
    """n evenly spaced points on a circle, with arc-length distances."""
    if not circumference > 0.0:
        raise NonpositiveScale(f"circumference must be positive, got {circumference}")
    if n < 1:
        raise ValueError(f"need at least one point, got {n}")
    idx = np.arange(n)
    k = np.abs(idx[:, None] - idx[None, :])
    steps = np.minimum(k, n - k)
    return FiniteMetricSpace(steps * (circumference / n), check_triangle=False)


def read_distance_matrix(path) -> FiniteMetricSpace:
    """Load a distance matrix from CSV: one row per line, comma-separated.

    Validation errors name the offending row and column (1-based).
    """
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            entries = []
            for col, tok in enumerate(line.split(","), start=1):
                try:
                    entries.append(float(tok))
                except ValueError:
                    raise ValueError(
                        f"{path}: row {lineno}, column {col}: not a number: {tok.strip()!r}"
                    ) from None
            rows.append((lineno, entries))
    if not rows:
        raise ValueError(f"{path}: no data rows")
    n = len(rows)
    for lineno, entries in rows:
        if len(entries) != n:
            raise ValueError(
                f"{path}: row {lineno}: expected {n} columns, got {len(entries)}"
            )
    return FiniteMetricSpace([entries for _, entries in rows])


def read_point_cloud(path) -> FiniteMetricSpace:
    """Load a Euclidean point cloud from CSV: one point per line."""
    pts = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            coords = []
            for col, tok in enumerate(line.split(","), start=1):
                try:
                    coords.append(float(tok))
                except ValueError:
                    raise ValueError(
                        f"{path}: row {lineno}, column {col}: not a number: {tok.strip()!r}"
                    ) from None
            pts.append((lineno, coords))
    if not pts:
        raise ValueError(f"{path}: no data rows")
    dim = len(pts[0][1])
    for lineno, coords in pts:
        if len(coords) != dim:
            raise ValueError(
                f"{path}: row {lineno}: expected {dim} coordinates, got {len(coords)}"
            )
    arr = np.array([coords for _, coords in pts])
    diff = arr[:, None, :] - arr[None, :, :]
    d = np.sqrt((diff * diff).sum(axis=2))
    np.fill_diagonal(d, 0.0)
    return FiniteMetricSpace(d)
