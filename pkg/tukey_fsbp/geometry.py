# coding=utf-8
"""Exact rational geometry used by the depth and breakdown computations.

Every predicate in this module (signs, ranks, containment) is decided with
:class:`fractions.Fraction` arithmetic. Nothing here accepts a tolerance.
"""
import logging
from collections import namedtuple
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key, reduce
from itertools import combinations
from math import gcd

import numpy as np

from tukey_fsbp import constants
from tukey_fsbp.exceptions import (
    DegenerateSubset,
    DimensionError,
    EmptySample,
    ExhaustedCandidates,
    SampleTooSmall,
    UnsupportedDimension,
)

logger = logging.getLogger(__name__)  # pylint:disable=invalid-name


def to_fraction(value):
    """Convert ``value`` to a :class:`fractions.Fraction` without rounding.

    Integers, fractions and strings such as ``'3/4'`` or ``'0.25'`` are
    accepted. Binary floats are refused, because their decimal rendering is
    rarely what the caller meant.

    :raises: ``TypeError`` if ``value`` is a float or a boolean.
    :raises: ``ValueError`` if ``value`` is a string that is not a rational.
    """
    if isinstance(value, (bool, float)):
        raise TypeError(
            'Refusing the binary float {!r}. Pass the coordinate as a string '
            'such as "0.1" or "1/10" to keep it exact.'.format(value)
        )
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


# Vector helpers. Vectors are tuples of Fractions (or ints).


def dot(left, right):
    """Return the inner product of two vectors."""
    return sum((a * b for a, b in zip(left, right)), Fraction(0))


def add(left, right):
    """Return ``left + right``."""
    return tuple(a + b for a, b in zip(left, right))


def sub(left, right):
    """Return ``left - right``."""
    return tuple(a - b for a, b in zip(left, right))


def scale(vector, factor):
    """Return ``factor * vector``."""
    return tuple(factor * a for a in vector)


def neg(vector):
    """Return ``-vector``."""
    return tuple(-a for a in vector)


def cross(left, right):
    """Return the cross product of two 3-vectors."""
    return (
        left[1] * right[2] - left[2] * right[1],
        left[2] * right[0] - left[0] * right[2],
        left[0] * right[1] - left[1] * right[0],
    )


def det2(left, right):
    """Return the determinant of the 2x2 matrix with columns ``left, right``.

    It is positive when ``right`` lies counter-clockwise of ``left``.
    """
    return left[0] * right[1] - left[1] * right[0]


def rot90(vector):
    """Rotate a 2-vector a quarter turn counter-clockwise."""
    return (-vector[1], vector[0])


def squared_distance(left, right):
    """Return the squared Euclidean distance between two points."""
    difference = sub(left, right)
    return dot(difference, difference)


def sign(value):
    """Return -1, 0 or 1."""
    return (value > 0) - (value < 0)


def primitive(vector):
    """Return the integer vector positively proportional to ``vector``.

    Denominators are cleared and the gcd is divided out. The orientation is
    kept, so ``primitive(v)`` and ``primitive(-v)`` differ.
    """
    fractions_ = [Fraction(c) for c in vector]
    common = reduce(
        lambda acc, f: acc * f.denominator // gcd(acc, f.denominator),
        fractions_,
        1,
    )
    integers = [int(f * common) for f in fractions_]
    divisor = reduce(gcd, (abs(i) for i in integers), 0)
    if divisor == 0:
        return tuple(integers)
    return tuple(i // divisor for i in integers)


def sign_canonical(vector):
    """Return the primitive vector of ``vector`` or ``-vector``.

    The representative chosen has its first nonzero coordinate positive.
    """
    key = primitive(vector)
    for coordinate in key:
        if coordinate:
            return key if coordinate > 0 else tuple(-i for i in key)
    return key


def _row_reduce(rows, dimension):
    """Bring ``rows`` to reduced row echelon form.

    :returns: A tuple ``(matrix, pivots)`` of the reduced non-zero rows and
        their pivot columns.
    """
    matrix = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    rank_ = 0
    for column in range(dimension):
        if rank_ == len(matrix):
            break
        pivot = next(
            (i for i in range(rank_, len(matrix)) if matrix[i][column]),
            None,
        )
        if pivot is None:
            continue
        matrix[rank_], matrix[pivot] = matrix[pivot], matrix[rank_]
        lead = matrix[rank_][column]
        matrix[rank_] = [v / lead for v in matrix[rank_]]
        for i, row in enumerate(matrix):
            if i != rank_ and row[column]:
                factor = row[column]
                matrix[i] = [
                    a - factor * b for a, b in zip(row, matrix[rank_])
                ]
        pivots.append(column)
        rank_ += 1
    return matrix[:rank_], pivots


def rank(rows, dimension=None):
    """Return the rank of a list of vectors."""
    rows = list(rows)
    if not rows:
        return 0
    if dimension is None:
        dimension = len(rows[0])
    return len(_row_reduce(rows, dimension)[1])


def null_space(rows, dimension):
    """Return a basis of the vectors orthogonal to every row.

    The basis is built from the reduced row echelon form: each free column
    contributes one vector with a 1 in that column.
    """
    matrix, pivots = _row_reduce(rows, dimension)
    basis = []
    for free in range(dimension):
        if free in pivots:
            continue
        vector = [Fraction(0)] * dimension
        vector[free] = Fraction(1)
        for row, pivot in zip(matrix, pivots):
            vector[pivot] = -row[free]
        basis.append(tuple(vector))
    return basis


def solve(matrix, rhs):
    """Solve the square system ``matrix · x = rhs``.

    :returns: The unique solution, or ``None`` if ``matrix`` is singular.
    """
    size = len(matrix)
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    reduced, pivots = _row_reduce(augmented, size + 1)
    if pivots[:size] != list(range(size)) or len(pivots) != size:
        return None
    return tuple(row[size] for row in reduced)


def affine_rank(points):
    """Return the dimension of the affine hull of ``points``."""
    points = list(points)
    if len(points) < 2:
        return 0
    return rank([sub(p, points[0]) for p in points[1:]])


class PointSet():
    """An immutable sample of ``n`` points in ``d`` dimensions.

    Coordinates are stored as :class:`fractions.Fraction`. Repeated points are
    allowed; general position is checked separately by
    :func:`is_general_position`.

    :param rows: An iterable of coordinate sequences.
    :raises tukey_fsbp.exceptions.EmptySample: If ``rows`` is empty.
    :raises tukey_fsbp.exceptions.DimensionError: If rows disagree on their
        length or have no coordinates.
    """

    __slots__ = ('points',)

    def __init__(self, rows):
        """Convert and check every coordinate."""
        points = tuple(tuple(to_fraction(c) for c in row) for row in rows)
        if not points:
            raise EmptySample('A point set needs at least one point.')
        dimension = len(points[0])
        if dimension < 1:
            raise DimensionError('Points need at least one coordinate.')
        for index, point in enumerate(points):
            if len(point) != dimension:
                raise DimensionError(
                    'Point {} has {} coordinates, expected {}.'
                    .format(index, len(point), dimension)
                )
        self.points = points

    @property
    def n(self):  # pylint:disable=invalid-name
        """Return the number of points."""
        return len(self.points)

    @property
    def d(self):  # pylint:disable=invalid-name
        """Return the dimension."""
        return len(self.points[0])

    def extended(self, extra):
        """Return a new set holding these points followed by ``extra``."""
        return PointSet(self.points + tuple(tuple(p) for p in extra))

    def __len__(self):
        """Return the number of points."""
        return len(self.points)

    def __iter__(self):
        """Iterate over the points."""
        return iter(self.points)

    def __getitem__(self, index):
        """Return one point."""
        return self.points[index]

    def __eq__(self, other):
        """Compare coordinates exactly and in order."""
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        """Hash the coordinates."""
        return hash(self.points)

    def __repr__(self):
        """Show the size of the set."""
        return 'PointSet(n={}, d={})'.format(self.n, self.d)


class Direction():
    """A nonzero direction, meaningful up to positive scaling.

    Two directions compare equal when they agree after sign-canonical scaling,
    so ``u`` and ``-u`` are equal as hyperplane normals. Code that cares about
    orientation reads :attr:`coords` or :meth:`oriented_key`.

    :param coords: The coordinates. At least one must be nonzero.
    """

    __slots__ = ('coords',)

    def __init__(self, coords):
        """Store the coordinates as fractions."""
        coords = tuple(to_fraction(c) for c in coords)
        if not any(coords):
            raise ValueError('A direction needs a nonzero coordinate.')
        self.coords = coords

    @property
    def d(self):  # pylint:disable=invalid-name
        """Return the dimension."""
        return len(self.coords)

    def key(self):
        """Return the sign-canonical primitive integer coordinates."""
        return sign_canonical(self.coords)

    def oriented_key(self):
        """Return the primitive integer coordinates, orientation kept."""
        return primitive(self.coords)

    def canonical(self):
        """Return the sign-canonical representative of this direction."""
        return Direction(self.key())

    def dot(self, vector):
        """Return the inner product with ``vector``."""
        return dot(self.coords, vector)

    def __neg__(self):
        """Return the opposite direction."""
        return Direction(neg(self.coords))

    def __eq__(self, other):
        """Compare sign-canonical forms."""
        return isinstance(other, Direction) and self.key() == other.key()

    def __hash__(self):
        """Hash the sign-canonical form."""
        return hash(self.key())

    def __repr__(self):
        """Show the coordinates."""
        return 'Direction({})'.format(
            ', '.join(str(c) for c in self.coords)
        )


class ComplementBasis(namedtuple('ComplementBasis', 'direction columns')):
    """``d - 1`` independent vectors exactly orthogonal to ``direction``.

    The columns play the role of an orthonormal basis of the complement;
    depth is affine invariant, so orthogonality and independence suffice.
    """

    __slots__ = ()

    def coordinates(self, point):
        """Return the coordinates of ``point`` in this basis."""
        return tuple(dot(column, point) for column in self.columns)


Facet = namedtuple('Facet', 'normal offset')
"""A supporting inequality ``normal · x <= offset`` of a hull.

``normal`` is a :class:`Direction` pointing outwards.
"""


class ConvexHull(namedtuple(
        'ConvexHull', 'points affine_dimension equalities facets vertices')):
    """The convex hull of a :class:`PointSet` in at most three dimensions.

    ``equalities`` pin down the affine hull when it is lower dimensional;
    ``facets`` are the supporting inequalities within the affine hull and
    ``vertices`` holds indices into ``points``.
    """

    __slots__ = ()

    @property
    def dimension(self):
        """Return the ambient dimension."""
        return self.points.d


class HullPosition(Enum):
    """Where a point lies relative to a convex hull."""

    INTERIOR = 'Interior'
    BOUNDARY = 'Boundary'
    OUTSIDE = 'Outside'


def is_general_position(X):  # pylint:disable=invalid-name
    """Tell whether no hyperplane holds more than ``d`` points of ``X``.

    Samples with ``n <= d`` are in general position when their points are
    affinely independent.
    """
    points = X.points
    if X.n <= X.d:
        return affine_rank(points) == X.n - 1
    return all(
        affine_rank(subset) == X.d
        for subset in combinations(points, X.d + 1)
    )


def _normal_through(points):
    """Return the sign-canonical normal of the hyperplane through ``points``."""
    base = points[0]
    basis = null_space([sub(p, base) for p in points[1:]], len(base))
    if len(basis) != 1:
        raise DegenerateSubset(
            'The points {} are affinely dependent.'.format(points)
        )
    return Direction(basis[0]).canonical()


def hyperplane_normals(X):  # pylint:disable=invalid-name
    """Return the normals of the hyperplanes through every ``d``-subset.

    Subsets are visited in lexicographic order of their indices; the ``j``-th
    normal belongs to the ``j``-th subset.

    :raises tukey_fsbp.exceptions.SampleTooSmall: If ``n < d``.
    :raises tukey_fsbp.exceptions.DegenerateSubset: If a subset is affinely
        dependent.
    """
    if X.n < X.d:
        raise SampleTooSmall(
            'Need at least {} points for hyperplane normals, got {}.'
            .format(X.d, X.n)
        )
    normals = [
        _normal_through(subset) for subset in combinations(X.points, X.d)
    ]
    logger.debug('Computed %s hyperplane normals.', len(normals))
    return normals


def is_generic(direction, normals):
    """Tell whether ``direction`` is orthogonal to none of ``normals``."""
    return all(direction.dot(normal.coords) != 0 for normal in normals)


def pick_generic_direction(X, seed=constants.DEFAULT_SEED, normals=None,
                           attempts=constants.GENERIC_DIRECTION_ATTEMPTS):
    """Return a seeded direction orthogonal to no hyperplane normal of ``X``.

    Candidates are integer vectors drawn from
    :func:`numpy.random.default_rng`, so a fixed seed always yields the same
    direction.

    :param X: A :class:`PointSet`.
    :param seed: The seed of the generator.
    :param normals: Precomputed :func:`hyperplane_normals`, if any.
    :param attempts: How many candidates to try.
    :raises tukey_fsbp.exceptions.ExhaustedCandidates: If every candidate
        hits a normal.
    """
    if X.d == 1:
        return Direction((1,))
    if normals is None:
        normals = hyperplane_normals(X)
    rng = np.random.default_rng(seed)
    bound = constants.GENERIC_COORDINATE_BOUND
    for attempt in range(attempts):
        coords = [
            int(c) for c in rng.integers(-bound, bound, size=X.d, endpoint=True)
        ]
        if not any(coords):
            continue
        direction = Direction(coords)
        if is_generic(direction, normals):
            logger.debug('Generic direction found after %s draws.', attempt + 1)
            return direction
    raise ExhaustedCandidates(
        'No generic direction among {} seeded candidates (seed {}).'
        .format(attempts, seed)
    )


def complement_basis(direction, pivot='first'):
    """Return a basis of the complement of ``direction``.

    With ``p`` the pivot coordinate of ``u``, the basis vector for ``i != p``
    is ``e_i·u_p − e_p·u_i``.

    :param direction: A :class:`Direction`.
    :param pivot: ``'first'`` or ``'last'``: which nonzero coordinate of the
        direction serves as the pivot.
    """
    coords = direction.coords
    nonzero = [i for i, c in enumerate(coords) if c]
    if pivot == 'first':
        index = nonzero[0]
    elif pivot == 'last':
        index = nonzero[-1]
    else:
        raise ValueError('Unknown pivot {!r}.'.format(pivot))
    columns = []
    for i in range(len(coords)):
        if i == index:
            continue
        column = [Fraction(0)] * len(coords)
        column[i] = coords[index]
        column[index] = -coords[i]
        columns.append(tuple(column))
    return ComplementBasis(direction, tuple(columns))


def project(X, basis):  # pylint:disable=invalid-name
    """Return the coordinates of every point of ``X`` in ``basis``.

    :raises tukey_fsbp.exceptions.DimensionError: If the basis belongs to
        another dimension.
    :raises tukey_fsbp.exceptions.UnsupportedDimension: If ``X`` is
        one-dimensional, which would leave nothing to project onto.
    """
    if X.d < 2:
        raise UnsupportedDimension('Projection needs d >= 2.')
    if len(basis.columns) != X.d - 1 or basis.direction.d != X.d:
        raise DimensionError(
            'A basis of dimension {} cannot project points of dimension {}.'
            .format(basis.direction.d, X.d)
        )
    return PointSet(basis.coordinates(point) for point in X)


def lift(coordinates, basis):
    """Return the point of the complement having ``coordinates`` in ``basis``.

    This inverts :meth:`ComplementBasis.coordinates` on the complement: with
    ``B`` the column matrix, the result is ``B (BᵀB)⁻¹ coordinates``.
    """
    columns = basis.columns
    gram = [[dot(a, b) for b in columns] for a in columns]
    weights = solve(gram, coordinates)
    point = tuple(Fraction(0) for _ in basis.direction.coords)
    for weight, column in zip(weights, columns):
        point = add(point, scale(column, weight))
    return point


def convex_hull(X):  # pylint:disable=invalid-name
    """Return the exact convex hull of ``X`` for ``d <= 3``.

    Lower-dimensional hulls keep their affine dimension; their affine hull is
    described by ``equalities`` and their facets live inside it.

    :raises tukey_fsbp.exceptions.UnsupportedDimension: If ``d >= 4``.
    """
    if X.d > constants.MAX_EXACT_DIMENSION:
        raise UnsupportedDimension(
            'Convex hulls are only computed for d <= {}, got d = {}.'
            .format(constants.MAX_EXACT_DIMENSION, X.d)
        )
    points = X.points
    base = points[0]
    spanning = []
    for point in points[1:]:
        candidate = spanning + [sub(point, base)]
        if rank(candidate, X.d) == len(candidate):
            spanning = candidate
    dimension = len(spanning)
    equalities = tuple(
        Facet(Direction(normal), dot(normal, base))
        for normal in null_space(spanning, X.d)
    )

    facets = {}
    if dimension:
        for subset in combinations(range(X.n), dimension):
            facet = _supporting_facet(points, subset, spanning)
            if facet is not None:
                key = (facet.normal.oriented_key(), facet.offset)
                facets.setdefault(key, facet)
    facets = tuple(facets[key] for key in sorted(facets))

    vertices = []
    seen = set()
    for index, point in enumerate(points):
        if point in seen:
            continue
        seen.add(point)
        tight = [f.normal.coords for f in facets if dot(f.normal.coords, point)
                 == f.offset]
        if rank(tight, X.d) == dimension:
            vertices.append(index)
    logger.debug(
        'Hull of %s points: dimension %s, %s facets, %s vertices.',
        X.n, dimension, len(facets), len(vertices),
    )
    return ConvexHull(X, dimension, equalities, facets, tuple(vertices))


def _supporting_facet(points, subset, spanning):
    """Return the facet through ``subset`` if it supports ``points``.

    The normal is sought inside the span of ``spanning`` and must be
    orthogonal to the differences of the subset points.
    """
    first = points[subset[0]]
    constraints = [
        [dot(sub(points[i], first), b) for b in spanning] for i in subset[1:]
    ]
    weights = null_space(constraints, len(spanning))
    if len(weights) != 1:
        return None
    normal = tuple(Fraction(0) for _ in first)
    for weight, vector in zip(weights[0], spanning):
        normal = add(normal, scale(vector, weight))
    normal = primitive(normal)
    offset = dot(normal, first)
    values = [dot(normal, p) for p in points]
    if all(v <= offset for v in values):
        return Facet(Direction(normal), offset)
    if all(v >= offset for v in values):
        return Facet(Direction(neg(normal)), -offset)
    return None


def hull_contains(hull, point):
    """Classify ``point`` as inside, on the boundary of, or outside ``hull``.

    :returns: A :class:`HullPosition`.
    """
    if len(point) != hull.dimension:
        raise DimensionError(
            'Point of dimension {} tested against a hull of dimension {}.'
            .format(len(point), hull.dimension)
        )
    for equality in hull.equalities:
        if dot(equality.normal.coords, point) != equality.offset:
            return HullPosition.OUTSIDE
    on_boundary = hull.affine_dimension < hull.dimension
    for facet in hull.facets:
        value = dot(facet.normal.coords, point)
        if value > facet.offset:
            return HullPosition.OUTSIDE
        if value == facet.offset:
            on_boundary = True
    return HullPosition.BOUNDARY if on_boundary else HullPosition.INTERIOR


def line_hull_parameters(hull, base, direction):
    """Return the interval of ``δ`` with ``base + δ·direction`` in ``hull``.

    :returns: A pair ``(low, high)``, or ``None`` when the line misses.
    """
    coords = direction.coords if isinstance(direction, Direction) else direction
    low = high = None
    for equality in hull.equalities:
        rate = dot(equality.normal.coords, coords)
        slack = equality.offset - dot(equality.normal.coords, base)
        if rate == 0:
            if slack != 0:
                return None
            continue
        value = slack / rate
        low = value if low is None else max(low, value)
        high = value if high is None else min(high, value)
    for facet in hull.facets:
        rate = dot(facet.normal.coords, coords)
        slack = facet.offset - dot(facet.normal.coords, base)
        if rate > 0:
            value = slack / rate
            high = value if high is None else min(high, value)
        elif rate < 0:
            value = slack / rate
            low = value if low is None else max(low, value)
        elif slack < 0:
            return None
    if low is None or high is None or low > high:
        return None
    return low, high


def line_hull_intersection(hull, base, direction):
    """Return where the line ``base + δ·direction`` meets the hull boundary.

    :returns: A list of zero, one or two points ordered by ``δ``.
    """
    interval = line_hull_parameters(hull, base, direction)
    if interval is None:
        return []
    coords = direction.coords if isinstance(direction, Direction) else direction
    low, high = interval
    points = [add(base, scale(coords, low))]
    if high != low:
        points.append(add(base, scale(coords, high)))
    return points


def planar_hull(points):
    """Return the extreme points of planar ``points`` counter-clockwise.

    The list starts at the lexicographically smallest point and skips
    collinear points. One or two distinct points come back sorted.
    """
    ordered = sorted(set(tuple(p) for p in points))
    if len(ordered) <= 2:
        return ordered

    def chain(sequence):
        result = []
        for point in sequence:
            while (len(result) >= 2 and
                   det2(sub(result[-1], result[-2]),
                        sub(point, result[-2])) <= 0):
                result.pop()
            result.append(point)
        return result

    return chain(ordered)[:-1] + chain(reversed(ordered))[:-1]


def angular_sort(vectors, orient, reference):
    """Sort vectors of a plane by angle, counter-clockwise from ``reference``.

    :param vectors: The vectors to sort.
    :param orient: A function of two vectors, positive when the second lies
        counter-clockwise of the first within the plane.
    :param reference: A vector of the plane where the sweep starts.
    """
    def half(vector):
        turn = orient(reference, vector)
        if turn > 0 or (turn == 0 and dot(reference, vector) > 0):
            return 0
        return 1

    def compare(left, right):
        halves = half(left) - half(right)
        if halves:
            return halves
        return -sign(orient(left, right))

    return sorted(vectors, key=cmp_to_key(compare))


def sector_directions(rays, orient, turn):
    """Return one direction strictly inside each sector between sorted rays.

    :param rays: Distinct rays sorted by :func:`angular_sort`, closed under
        negation.
    :param orient: As for :func:`angular_sort`.
    :param turn: A function rotating a ray a quarter turn counter-clockwise.
    :returns: A list of ``(direction, left_ray_index, right_ray_index)``.
    """
    sectors = []
    for index, ray in enumerate(rays):
        following = (index + 1) % len(rays)
        nxt = rays[following]
        if orient(ray, nxt) > 0:
            sectors.append((add(ray, nxt), index, following))
        else:
            sectors.append((turn(ray), index, following))
    return sectors


CellSample = namedtuple('CellSample', 'direction bounding')
"""One direction strictly inside a cell of a central arrangement.

``bounding`` holds the indices of the arrangement vectors whose great
circles bound the sector the direction was taken from.
"""


def _rays(vectors, make_ray):
    """Return the distinct rays ``±make_ray(v)`` with their source indices."""
    rays = {}
    for index, vector in enumerate(vectors):
        ray = make_ray(vector)
        if not any(ray):
            continue
        for oriented in (ray, neg(ray)):
            rays.setdefault(primitive(oriented), index)
    return [(key, index) for key, index in rays.items()]


def cell_representatives(vectors, dimension, antipodal=False):
    """Return one direction inside every open cell of an arrangement.

    The arrangement consists of the hyperplanes ``{u: u·v = 0}`` for the
    given ``vectors``; every returned direction has a nonzero inner product
    with each of them. Directions are unique by their sign vector.

    :param vectors: Nonzero vectors of the given dimension.
    :param dimension: 1, 2 or 3.
    :param antipodal: Skip cells that are the negation of a returned one.
    :returns: A list of :class:`CellSample` in a deterministic order.
    """
    vectors = [tuple(v) for v in vectors]
    if dimension == 1:
        samples = [CellSample((Fraction(1),), ())]
        if not antipodal:
            samples.append(CellSample((Fraction(-1),), ()))
        return samples
    if dimension == 2:
        samples = _planar_cells(vectors)
    elif dimension == 3:
        samples = _spatial_cells(vectors, antipodal)
    else:
        raise UnsupportedDimension(
            'Arrangement cells are enumerated for d <= 3, got d = {}.'
            .format(dimension)
        )
    unique = {}
    for sample in samples:
        signs = tuple(sign(dot(sample.direction, v)) for v in vectors)
        if 0 in signs:
            continue
        if antipodal and tuple(-s for s in signs) in unique:
            continue
        unique.setdefault(signs, sample)
    logger.debug(
        'Arrangement of %s vectors in dimension %s has %s sampled cells.',
        len(vectors), dimension, len(unique),
    )
    return [unique[signs] for signs in sorted(unique)]


def _planar_cells(vectors):
    """Sample the open arcs cut out of the circle by ``u·v = 0``."""
    rays = _rays(vectors, rot90)
    if not rays:
        return [CellSample((Fraction(1), Fraction(0)), ())]
    ordered = angular_sort([r for r, _ in rays], det2, rays[0][0])
    source = dict(rays)
    return [
        CellSample(primitive(direction), (source[ordered[i]], source[ordered[j]]))
        for direction, i, j in sector_directions(ordered, det2, rot90)
    ]


def _spatial_cells(vectors, antipodal):
    """Sample the open faces cut out of the sphere by ``u·v = 0``."""
    if not vectors:
        return [CellSample((Fraction(1), Fraction(0), Fraction(0)), ())]
    vertices = {}
    for (i, left), (j, right) in combinations(enumerate(vectors), 2):
        corner = cross(left, right)
        if not any(corner):
            continue
        orientations = (corner,) if antipodal else (corner, neg(corner))
        for oriented in orientations:
            vertices.setdefault(primitive(oriented), (i, j))
    if not vertices:
        # Every plane contains the same line; the planes cut two hemispheres.
        first = vectors[0]
        return [CellSample(first, (0,)), CellSample(neg(first), (0,))]
    samples = []
    for corner in sorted(vertices):
        samples.extend(_cells_around(corner, vectors))
    return samples


def _cells_around(corner, vectors):
    """Sample the faces of the sphere arrangement incident to ``corner``."""
    through = [i for i, v in enumerate(vectors) if dot(v, corner) == 0]
    rays = _rays([vectors[i] for i in through], lambda v: cross(corner, v))
    source = {ray: through[index] for ray, index in rays}
    ordered = angular_sort(
        [r for r, _ in rays],
        lambda a, b: dot(corner, cross(a, b)),
        rays[0][0],
    )
    excluded = set(through)
    others = [v for i, v in enumerate(vectors) if i not in excluded]
    samples = []
    for step, i, j in sector_directions(
            ordered,
            lambda a, b: dot(corner, cross(a, b)),
            lambda a: cross(corner, a)):
        bounds = [abs(dot(corner, v)) / (abs(dot(step, v)) + 1) for v in others]
        factor = min(bounds) / 2 if bounds else Fraction(1)
        direction = add(corner, scale(step, factor))
        samples.append(CellSample(
            primitive(direction), (source[ordered[i]], source[ordered[j]])
        ))
    return samples
