# coding=utf-8
"""Property tests of depth, the median and the breakdown point."""
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from tukey_fsbp.depth import (
    lambda_star,
    max_depth_region,
    tukey_depth,
    tukey_median,
)
from tukey_fsbp.fsbp import fsbp_theorem1
from tukey_fsbp.geometry import PointSet
from tukey_fsbp.tests.utils import (
    affine_maps,
    apply_affine,
    oracle_depth,
    planar_samples,
    seeded_point,
    seeded_sample,
)

POINTS = st.tuples(st.integers(-14, 14), st.integers(-14, 14))
"""Integer query points around the drawn samples."""


class DepthPropertyTestCase(unittest.TestCase):
    """Depth agrees with its definition on arbitrary planar samples."""

    @settings(max_examples=60, deadline=None)
    @given(planar_samples(), POINTS)
    def test_oracle(self, X, x):  # pylint:disable=invalid-name
        """The count lies in ``[0, n]`` and matches the angular sweep."""
        count = tukey_depth(x, X).count
        self.assertGreaterEqual(count, 0)
        self.assertLessEqual(count, X.n)
        self.assertEqual(count, oracle_depth(x, X))

    @settings(max_examples=40, deadline=None)
    @given(planar_samples(), POINTS, affine_maps())
    def test_affine_invariance(self, X, x, affine):  # pylint:disable=invalid-name
        """Invertible affine maps preserve depth."""
        matrix, shift = affine
        Y = PointSet([apply_affine(matrix, shift, p) for p in X])  # pylint:disable=invalid-name
        self.assertEqual(
            tukey_depth(x, X),
            tukey_depth(apply_affine(matrix, shift, x), Y),
        )

    @settings(max_examples=40, deadline=None)
    @given(planar_samples())
    def test_sample_points(self, X):  # pylint:disable=invalid-name
        """Every sample point has depth at least one."""
        for point in X:
            self.assertGreaterEqual(tukey_depth(point, X).count, 1)

    @settings(max_examples=40, deadline=None)
    @given(planar_samples(), POINTS)
    def test_copy_adds_one(self, X, x):  # pylint:disable=invalid-name
        """A copy of ``x`` raises its depth count by exactly one."""
        before = tukey_depth(x, X).count
        self.assertEqual(tukey_depth(x, X.extended([x])).count, before + 1)


class MedianPropertyTestCase(unittest.TestCase):
    """The median is a deepest point."""

    @settings(max_examples=30, deadline=None)
    @given(planar_samples())
    def test_median_depth(self, X):  # pylint:disable=invalid-name
        """The median attains the level of the deepest region."""
        region = max_depth_region(X)
        self.assertEqual(tukey_depth(tukey_median(X), X), region.level)
        for vertex in region.vertices:
            self.assertEqual(tukey_depth(vertex, X), region.level)

    @settings(max_examples=30, deadline=None)
    @given(planar_samples(), affine_maps())
    def test_affine_equivariance(self, X, affine):  # pylint:disable=invalid-name
        """The deepest region and the median move with the sample."""
        matrix, shift = affine
        Y = PointSet([apply_affine(matrix, shift, p) for p in X])  # pylint:disable=invalid-name
        region, image = max_depth_region(X), max_depth_region(Y)
        self.assertEqual(region.level, image.level)
        self.assertEqual(
            {apply_affine(matrix, shift, v) for v in region.vertices},
            set(image.vertices),
        )
        self.assertEqual(
            apply_affine(matrix, shift, tukey_median(X)), tukey_median(Y)
        )


class PlanarBreakdownPropertyTestCase(unittest.TestCase):
    """The planar breakdown point depends on ``n`` alone."""

    @settings(max_examples=30, deadline=None)
    @given(planar_samples(min_n=4))
    def test_closed_form(self, X):  # pylint:disable=invalid-name
        """``epsilon = ceil(n/2) / (n + ceil(n/2))`` within its bounds."""
        half = -(-X.n // 2)
        certificate = fsbp_theorem1(X)
        self.assertEqual(certificate.epsilon, Fraction(half, X.n + half))
        self.assertLessEqual(certificate.prop1_lower, certificate.epsilon)
        self.assertLessEqual(certificate.epsilon, certificate.prop1_upper)


class SpatialAffinePropertyTestCase(unittest.TestCase):
    """Invertible affine maps of space preserve depth and breakdown."""

    @settings(max_examples=8, deadline=None)
    @given(st.integers(0, 200), affine_maps(dimension=3))
    def test_affine_invariance(self, seed, affine):
        """Depth, the maximum depth and ``epsilon`` survive the map."""
        matrix, shift = affine
        X = seeded_sample(seed, 5, 3, bound=6)  # pylint:disable=invalid-name
        Y = PointSet([apply_affine(matrix, shift, p) for p in X])  # pylint:disable=invalid-name
        x = seeded_point(seed + 1000, 3, bound=2)  # pylint:disable=invalid-name
        self.assertEqual(
            tukey_depth(x, X),
            tukey_depth(apply_affine(matrix, shift, x), Y),
        )
        self.assertEqual(lambda_star(X), lambda_star(Y))
        self.assertEqual(fsbp_theorem1(X).epsilon, fsbp_theorem1(Y).epsilon)
