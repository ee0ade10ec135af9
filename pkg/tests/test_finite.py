"""Tests for finite metric spaces and the weight-equation solver."""

import math

import numpy as np
import pytest

from magnitude import (
    FiniteMetricSpace,
    NonpositiveScale,
    NotHomogeneous,
    SingularSystem,
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


def equilateral(n, d=1.0):
    m = np.full((n, n), d)
    np.fill_diagonal(m, 0.0)
    return FiniteMetricSpace(m)


def random_euclidean(n, dim=3, seed=0):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1.0, 1.0, size=(n, dim))
    diff = pts[:, None, :] - pts[None, :, :]
    d = np.sqrt((diff * diff).sum(axis=2))
    np.fill_diagonal(d, 0.0)
    return FiniteMetricSpace(d)


class TestConstruction:
    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError, match="square"):
            FiniteMetricSpace([[0.0, 1.0]])

    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(ValueError, match="diagonal"):
            FiniteMetricSpace([[0.1, 1.0], [1.0, 0.0]])

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="row 0, column 1"):
            FiniteMetricSpace([[0.0, 1.0], [2.0, 0.0]])

    def test_rejects_duplicate_points(self):
        with pytest.raises(ValueError, match="distinct points"):
            FiniteMetricSpace([[0.0, 0.0], [0.0, 0.0]])

    def test_rejects_triangle_violation(self):
        d = [[0.0, 1.0, 3.0], [1.0, 0.0, 1.0], [3.0, 1.0, 0.0]]
        with pytest.raises(ValueError, match="triangle"):
            FiniteMetricSpace(d)
        # the same matrix passes with the check disabled
        FiniteMetricSpace(d, check_triangle=False)

    def test_collinear_points_pass_triangle_check(self):
        xs = np.array([0.0, 0.1, 0.30000000000000004, 0.7, 1.1])
        d = np.abs(xs[:, None] - xs[None, :])
        FiniteMetricSpace(d)  # equality case must not trip on roundoff

    def test_labels_checked(self):
        with pytest.raises(ValueError, match="labels"):
            FiniteMetricSpace([[0.0, 1.0], [1.0, 0.0]], labels=["a"])


class TestSimilarity:
    def test_one_point(self):
        X = FiniteMetricSpace([[0.0]])
        assert similarity_matrix(X).tolist() == [[1.0]]

    def test_two_points_log2(self):
        X = FiniteMetricSpace([[0.0, math.log(2)], [math.log(2), 0.0]])
        Z = similarity_matrix(X)
        assert Z[0, 1] == pytest.approx(0.5, abs=1e-15)
        assert Z[0, 0] == 1.0 and Z[1, 1] == 1.0

    def test_equilateral(self):
        Z = similarity_matrix(equilateral(3))
        off = Z[~np.eye(3, dtype=bool)]
        assert np.allclose(off, math.exp(-1.0), atol=0, rtol=1e-15)


class TestWeighting:
    def test_one_point(self):
        w = weighting(FiniteMetricSpace([[0.0]]))
        assert w.w.tolist() == [1.0]
        assert w.rcond == 1.0

    def test_two_points_closed_form(self):
        # hand solve of [[1, q], [q, 1]] w = 1: w_i = 1/(1+q)
        t = 1.3
        X = FiniteMetricSpace([[0.0, t], [t, 0.0]])
        w = weighting(X)
        expected = 1.0 / (1.0 + math.exp(-t))
        assert np.allclose(w.w, expected, rtol=1e-14)
        assert w.residual_norm <= 1e-10

    def test_equilateral_closed_form(self):
        w = weighting(equilateral(3))
        assert np.allclose(w.w, 1.0 / (1.0 + 2.0 * math.exp(-1.0)), rtol=1e-14)

    def test_singular_raises(self):
        X = FiniteMetricSpace([[0.0, 1e-13], [1e-13, 0.0]])
        with pytest.raises(SingularSystem):
            weighting(X)

    def test_bad_tol_rejected(self):
        with pytest.raises(ValueError):
            weighting(equilateral(3), tol=0.0)


class TestMagnitude:
    def test_one_point(self):
        assert magnitude_finite(FiniteMetricSpace([[0.0]])) == 1.0

    def test_two_points_at_pi_r(self):
        # two points a distance pi R apart: 2 / (1 + e^{-pi R})
        for R in (0.3, 1.0, 2.5):
            d = math.pi * R
            X = FiniteMetricSpace([[0.0, d], [d, 0.0]])
            expected = 2.0 / (1.0 + math.exp(-math.pi * R))
            assert magnitude_finite(X) == pytest.approx(expected, rel=1e-13)

    def test_equilateral_triple(self):
        # symmetric 3x3 solve: 3 / (1 + 2 e^{-1}) = 1.7283506542974874
        assert magnitude_finite(equilateral(3)) == pytest.approx(
            1.7283506542974874, rel=1e-13
        )

    def test_permutation_invariance(self):
        X = random_euclidean(24, seed=3)
        rng = np.random.default_rng(4)
        perm = rng.permutation(24)
        Y = FiniteMetricSpace(X.d[np.ix_(perm, perm)], check_triangle=False)
        assert magnitude_finite(Y) == pytest.approx(magnitude_finite(X), abs=1e-9)

    def test_weighting_sum_independent_of_ordering(self):
        # reversing the point order perturbs the pivoting; the sum must hold
        X = random_euclidean(30, seed=9)
        Y = FiniteMetricSpace(X.d[::-1, ::-1], check_triangle=False)
        tol = 1e-10
        a = magnitude_finite(X, tol)
        b = magnitude_finite(Y, tol)
        assert abs(a - b) <= 10 * tol


class TestScale:
    def test_identity(self):
        X = equilateral(3)
        assert np.array_equal(scale(X, 1.0).d, X.d)

    def test_two_points_times_three(self):
        X = FiniteMetricSpace([[0.0, 1.0], [1.0, 0.0]])
        assert scale(X, 3.0).d[0, 1] == 3.0

    def test_nonpositive_rejected(self):
        X = equilateral(2)
        for t in (0.0, -1.0, float("nan")):
            with pytest.raises(NonpositiveScale):
                scale(X, t)

    def test_composition_exact_for_dyadic_factors(self):
        # multiplying by powers of two is exact in binary floating point,
        # so the two orders agree bitwise
        X = random_euclidean(8, seed=1)
        a = scale(X, 2.0 * 0.5)
        b = scale(scale(X, 0.5), 2.0)
        assert np.array_equal(a.d, b.d)

    def test_composition_near_exact_generally(self):
        X = random_euclidean(8, seed=2)
        a = scale(X, 0.3 * 0.7)
        b = scale(scale(X, 0.7), 0.3)
        assert np.allclose(a.d, b.d, rtol=1e-15, atol=0)

    def test_large_scale_tends_to_point_count(self):
        X = random_euclidean(12, seed=5)
        t = 60.0 / X.d[X.d > 0].min()  # min distance beyond 50
        m = magnitude_finite(scale(X, t))
        assert abs(m - 12.0) < 1e-9

    def test_labels_preserved(self):
        X = FiniteMetricSpace([[0.0, 1.0], [1.0, 0.0]], labels=("a", "b"))
        assert scale(X, 2.0).labels == ("a", "b")


class TestHomogeneous:
    def test_equilateral_is_homogeneous(self):
        assert is_homogeneous_rows(equilateral(3))

    def test_single_point_is_homogeneous(self):
        assert is_homogeneous_rows(FiniteMetricSpace([[0.0]]))

    def test_collinear_is_not(self):
        xs = np.array([0.0, 1.0, 3.0])
        d = np.abs(xs[:, None] - xs[None, :])
        X = FiniteMetricSpace(d)
        assert not is_homogeneous_rows(X)
        with pytest.raises(NotHomogeneous):
            magnitude_homogeneous_finite(X)

    def test_two_points_any_distance(self):
        X = FiniteMetricSpace([[0.0, 2.0], [2.0, 0.0]])
        assert magnitude_homogeneous_finite(X) == pytest.approx(
            2.0 / (1.0 + math.exp(-2.0)), rel=1e-15
        )

    def test_agrees_with_solver_within_ten_tol(self):
        X = circle_points(7.0, 48)
        tol = 1e-10
        a = magnitude_homogeneous_finite(X, tol)
        b = magnitude_finite(X, tol)
        assert abs(a - b) <= 10 * tol

    def test_circle_points_converge_to_closed_form(self):
        # N / (row sum) tends to the continuum value l / (2 (1 - e^{-l/2}))
        ell = 2.0 * math.pi
        closed = ell / (2.0 * (1.0 - math.exp(-ell / 2.0)))
        prev_gap = None
        for n in (16, 64, 256):
            m = magnitude_homogeneous_finite(circle_points(ell, n))
            gap = abs(m - closed)
            if prev_gap is not None:
                assert gap < prev_gap
            prev_gap = gap
        assert prev_gap < 1e-3


class TestIO:
    def test_distance_matrix_roundtrip(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0,1\n1,0\n")
        X = read_distance_matrix(p)
        assert X.n == 2
        assert magnitude_finite(X) == pytest.approx(2.0 / (1.0 + math.exp(-1.0)), rel=1e-14)

    def test_distance_matrix_bad_token_names_row_and_column(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0,1\n1,zap\n")
        with pytest.raises(ValueError, match="row 2, column 2"):
            read_distance_matrix(p)

    def test_distance_matrix_ragged_row_named(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0,1\n1,0,2\n")
        with pytest.raises(ValueError, match="row 2"):
            read_distance_matrix(p)

    def test_distance_matrix_nonsquare(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0,1,2\n1,0,1\n")
        with pytest.raises(ValueError, match="row 1"):
            read_distance_matrix(p)

    def test_point_cloud_345(self, tmp_path):
        p = tmp_path / "pts.csv"
        p.write_text("0,0\n3,0\n3,4\n")
        X = read_point_cloud(p)
        assert X.d[0, 1] == 3.0
        assert X.d[1, 2] == 4.0
        assert X.d[0, 2] == 5.0

    def test_point_cloud_ragged(self, tmp_path):
        p = tmp_path / "pts.csv"
        p.write_text("0,0\n1\n")
        with pytest.raises(ValueError, match="row 2"):
            read_point_cloud(p)

    def test_point_cloud_duplicate_points_rejected(self, tmp_path):
        p = tmp_path / "pts.csv"
        p.write_text("0,0\n1,1\n0,0\n")
        with pytest.raises(ValueError, match="distinct points"):
            read_point_cloud(p)

    def test_empty_file(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("")
        with pytest.raises(ValueError, match="no data"):
            read_distance_matrix(p)
