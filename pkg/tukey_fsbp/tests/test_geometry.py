# coding=utf-8
"""Tests for :mod:`tukey_fsbp.geometry`."""
import unittest
from fractions import Fraction
from itertools import combinations

from tukey_fsbp.exceptions import (
    DegenerateSubset,
    DimensionError,
    EmptySample,
    SampleTooSmall,
    UnsupportedDimension,
)
from tukey_fsbp.geometry import (
    Direction,
    HullPosition,
    PointSet,
    affine_rank,
    cell_representatives,
    complement_basis,
    convex_hull,
    dot,
    hull_contains,
    hyperplane_normals,
    is_general_position,
    is_generic,
    lift,
    line_hull_intersection,
    null_space,
    pick_generic_direction,
    planar_hull,
    primitive,
    project,
    sign_canonical,
    solve,
    to_fraction,
)
from tukey_fsbp.tests.utils import (
    PENTAGON,
    SQUARE,
    TETRAHEDRON,
    TRIANGLE,
    brute_force_contains,
    orthogonal_direction,
    seeded_point,
    seeded_sample,
)


class ToFractionTestCase(unittest.TestCase):
    """Test :func:`tukey_fsbp.geometry.to_fraction`."""

    def test_exact_inputs(self):
        """Integers, fractions and rational strings convert exactly."""
        for value, expected in (
                (3, Fraction(3)),
                ('1/3', Fraction(1, 3)),
                ('0.25', Fraction(1, 4)),
                (Fraction(2, 6), Fraction(1, 3))):
            with self.subTest(value=value):
                self.assertEqual(to_fraction(value), expected)

    def test_float_refused(self):
        """A binary float raises a ``TypeError`` naming the remedy."""
        with self.assertRaises(TypeError) as context:
            to_fraction(0.1)
        self.assertIn('1/10', str(context.exception))

    def test_bool_refused(self):
        """Booleans are not coordinates."""
        with self.assertRaises(TypeError):
            to_fraction(True)


class LinearAlgebraTestCase(unittest.TestCase):
    """Test the exact linear algebra helpers."""

    def test_primitive_keeps_orientation(self):
        """Denominators and common factors go, the sign stays."""
        self.assertEqual(primitive((Fraction(-1, 2), Fraction(1, 3))), (-3, 2))
        self.assertEqual(sign_canonical((Fraction(-1, 2), 1)), (1, -2))

    def test_null_space(self):
        """The null space is orthogonal to every row."""
        rows = [(1, 2, 3)]
        basis = null_space(rows, 3)
        self.assertEqual(len(basis), 2)
        for vector in basis:
            self.assertEqual(dot(vector, rows[0]), 0)

    def test_solve(self):
        """Regular systems are solved, singular ones give ``None``."""
        self.assertEqual(solve([[2, 0], [0, 4]], [1, 1]), (Fraction(1, 2), Fraction(1, 4)))
        self.assertIsNone(solve([[1, 1], [2, 2]], [1, 2]))

    def test_affine_rank(self):
        """Collinear points have affine rank one."""
        self.assertEqual(affine_rank([(0, 0), (1, 1), (2, 2)]), 1)
        self.assertEqual(affine_rank(TRIANGLE.points), 2)


class PointSetTestCase(unittest.TestCase):
    """Test :class:`tukey_fsbp.geometry.PointSet`."""

    def test_shape(self):
        """``n`` and ``d`` describe the sample."""
        self.assertEqual((SQUARE.n, SQUARE.d), (4, 2))

    def test_empty(self):
        """An empty sample is refused."""
        with self.assertRaises(EmptySample):
            PointSet([])

    def test_ragged(self):
        """Rows of different lengths are refused."""
        with self.assertRaises(DimensionError):
            PointSet([(0, 0), (1,)])

    def test_extended(self):
        """Extending appends copies and leaves the original alone."""
        extended = TRIANGLE.extended([(5, 5)] * 2)
        self.assertEqual(extended.n, 5)
        self.assertEqual(TRIANGLE.n, 3)
        self.assertEqual(extended[-1], (5, 5))


class GeneralPositionTestCase(unittest.TestCase):
    """Test :func:`tukey_fsbp.geometry.is_general_position`."""

    def test_examples(self):
        """Collinear triples break general position in the plane."""
        self.assertTrue(is_general_position(SQUARE))
        self.assertFalse(is_general_position(PointSet(((0, 0), (1, 1), (2, 2)))))
        self.assertTrue(is_general_position(TETRAHEDRON))
        self.assertFalse(is_general_position(
            PointSet(((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)))
        ))

    def test_small_samples(self):
        """Samples with ``n <= d`` need affinely independent points."""
        self.assertTrue(is_general_position(PointSet(((0, 0), (1, 0)))))
        self.assertFalse(is_general_position(PointSet(((0, 0), (0, 0)))))


class HyperplaneNormalsTestCase(unittest.TestCase):
    """Test :func:`tukey_fsbp.geometry.hyperplane_normals`."""

    def test_triangle(self):
        """Normals follow the lexicographic order of the subsets."""
        self.assertEqual(
            [normal.key() for normal in hyperplane_normals(TRIANGLE)],
            [(0, 1), (1, 0), (1, 1)],
        )

    def test_orthogonal(self):
        """Each normal is orthogonal to the differences of its subset."""
        X = seeded_sample(3, 5, 3)  # pylint:disable=invalid-name
        normals = hyperplane_normals(X)
        for normal, subset in zip(normals, combinations(X.points, 3)):
            with self.subTest(subset=subset):
                values = {normal.dot(p) for p in subset}
                self.assertEqual(len(values), 1)

    def test_errors(self):
        """Too few points or a degenerate subset raise."""
        with self.assertRaises(SampleTooSmall):
            hyperplane_normals(PointSet(((0, 0, 0), (1, 0, 0))))
        with self.assertRaises(DegenerateSubset):
            hyperplane_normals(PointSet(((0, 0), (0, 0), (1, 0))))


class GenericDirectionTestCase(unittest.TestCase):
    """Test generic directions, complement bases and projections."""

    @classmethod
    def setUpClass(cls):
        """Draw a sample in three dimensions."""
        cls.X = seeded_sample(11, 6, 3)  # pylint:disable=invalid-name
        cls.normals = hyperplane_normals(cls.X)

    def test_generic(self):
        """The chosen direction is orthogonal to no normal."""
        for seed in range(5):
            with self.subTest(seed=seed):
                direction = pick_generic_direction(self.X, seed=seed)
                self.assertTrue(is_generic(direction, self.normals))

    def test_deterministic(self):
        """The same seed gives the same direction."""
        self.assertEqual(
            pick_generic_direction(self.X, seed=4).coords,
            pick_generic_direction(self.X, seed=4).coords,
        )

    def test_triangle_seed_one(self):
        """A generic direction for the triangle has no zero dot product."""
        direction = pick_generic_direction(TRIANGLE, seed=1)
        for normal in hyperplane_normals(TRIANGLE):
            self.assertNotEqual(direction.dot(normal.coords), 0)

    def test_complement_basis(self):
        """Basis columns are orthogonal to the direction and independent."""
        direction = pick_generic_direction(self.X)
        for pivot in ('first', 'last'):
            with self.subTest(pivot=pivot):
                basis = complement_basis(direction, pivot)
                self.assertEqual(len(basis.columns), 2)
                for column in basis.columns:
                    self.assertEqual(direction.dot(column), 0)
                self.assertEqual(len(null_space(basis.columns, 3)), 1)

    def test_generic_projection(self):
        """Projecting along a generic direction keeps general position."""
        direction = pick_generic_direction(self.X)
        projected = project(self.X, complement_basis(direction))
        self.assertEqual(projected.d, 2)
        self.assertTrue(is_general_position(projected))

    def test_non_generic_projection(self):
        """Projecting along a hyperplane loses general position."""
        X = seeded_sample(5, 4, 2)  # pylint:disable=invalid-name
        normal = hyperplane_normals(X)[0]
        direction = Direction(orthogonal_direction(normal))
        projected = project(X, complement_basis(direction))
        self.assertFalse(is_general_position(projected))

    def test_lift(self):
        """Lifting inverts the coordinates on the complement."""
        direction = pick_generic_direction(self.X)
        basis = complement_basis(direction)
        coordinates = (Fraction(1, 3), Fraction(-2))
        point = lift(coordinates, basis)
        self.assertEqual(direction.dot(point), 0)
        self.assertEqual(basis.coordinates(point), coordinates)

    def test_project_errors(self):
        """One-dimensional samples and foreign bases are refused."""
        with self.assertRaises(UnsupportedDimension):
            project(PointSet(((1,), (2,))), complement_basis(Direction((1, 1))))
        with self.assertRaises(DimensionError):
            project(self.X, complement_basis(Direction((1, 1))))


class ConvexHullTestCase(unittest.TestCase):
    """Test :func:`tukey_fsbp.geometry.convex_hull` and its queries."""

    def test_square(self):
        """A square has four facets and four vertices."""
        hull = convex_hull(SQUARE)
        self.assertEqual(hull.affine_dimension, 2)
        self.assertEqual(len(hull.facets), 4)
        self.assertEqual(len(hull.vertices), 4)

    def test_tetrahedron(self):
        """A tetrahedron has four facets."""
        hull = convex_hull(TETRAHEDRON)
        self.assertEqual(len(hull.facets), 4)
        self.assertEqual(len(hull.vertices), 4)

    def test_positions(self):
        """Interior, boundary and outside points are told apart."""
        hull = convex_hull(SQUARE)
        self.assertIs(
            hull_contains(hull, (Fraction(1, 2), Fraction(1, 2))),
            HullPosition.INTERIOR,
        )
        self.assertIs(hull_contains(hull, (1, Fraction(1, 3))), HullPosition.BOUNDARY)
        self.assertIs(hull_contains(hull, (2, 0)), HullPosition.OUTSIDE)

    def test_lower_dimensional(self):
        """A segment in the plane keeps affine dimension one."""
        hull = convex_hull(PointSet(((0, 0), (2, 2))))
        self.assertEqual(hull.affine_dimension, 1)
        self.assertIs(hull_contains(hull, (1, 1)), HullPosition.BOUNDARY)
        self.assertIs(hull_contains(hull, (1, 0)), HullPosition.OUTSIDE)

    def test_brute_force(self):
        """Containment agrees with a search over simplices."""
        for X in (PENTAGON, seeded_sample(2, 6, 3)):  # pylint:disable=invalid-name
            hull = convex_hull(X)
            for seed in range(30):
                point = seeded_point(seed, X.d, bound=4)
                with self.subTest(d=X.d, point=point):
                    self.assertEqual(
                        hull_contains(hull, point) is not HullPosition.OUTSIDE,
                        brute_force_contains(X, point),
                    )

    def test_line_intersection(self):
        """A line through the square meets its boundary twice."""
        hull = convex_hull(SQUARE)
        points = line_hull_intersection(hull, (0, Fraction(1, 2)), (1, 0))
        self.assertEqual(points, [(0, Fraction(1, 2)), (1, Fraction(1, 2))])
        self.assertEqual(line_hull_intersection(hull, (0, 2), (1, 0)), [])

    def test_line_through_vertex(self):
        """A line touching one vertex reports it once."""
        hull = convex_hull(SQUARE)
        self.assertEqual(
            line_hull_intersection(hull, (1, 1), (1, -1)), [(1, 1)]
        )

    def test_planar_hull(self):
        """The planar hull runs counter-clockwise from the smallest point."""
        points = SQUARE.points + ((Fraction(1, 2), 0),)
        self.assertEqual(planar_hull(points), [(0, 0), (1, 0), (1, 1), (0, 1)])


class CellRepresentativesTestCase(unittest.TestCase):
    """Test :func:`tukey_fsbp.geometry.cell_representatives`."""

    def test_planar_lines(self):
        """``k`` distinct lines cut the circle into ``2k`` arcs."""
        vectors = [(1, 0), (0, 1), (1, 1), (2, 2)]
        cells = cell_representatives(vectors, 2)
        self.assertEqual(len(cells), 6)
        self.assertEqual(len(cell_representatives(vectors, 2, antipodal=True)), 3)
        for cell in cells:
            for vector in vectors:
                self.assertNotEqual(dot(cell.direction, vector), 0)

    def test_spatial_planes(self):
        """Three planes in general position cut the sphere into eight faces."""
        vectors = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        self.assertEqual(len(cell_representatives(vectors, 3)), 8)
        self.assertEqual(
            len(cell_representatives(vectors, 3, antipodal=True)), 4
        )

    def test_four_planes(self):
        """Four planes in general position give fourteen faces."""
        vectors = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
        self.assertEqual(len(cell_representatives(vectors, 3)), 14)

    def test_unsupported(self):
        """Only dimensions up to three are enumerated."""
        with self.assertRaises(UnsupportedDimension):
            cell_representatives([(1, 0, 0, 0)], 4)
