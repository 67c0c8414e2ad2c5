# coding=utf-8
"""Exact Tukey halfspace depth, its maximizers and the angular variant.

Depth is reported as an integer count over the sample size, see
:class:`DepthValue`. Exact depth is available for ``d <= 3``; depth regions
and the Tukey median are built for ``d <= 2``, which is all the breakdown
machinery ever needs because it works in projected spaces.
"""
import logging
from collections import namedtuple
from fractions import Fraction
from functools import total_ordering
from itertools import combinations

from tukey_fsbp import constants
from tukey_fsbp.exceptions import (
    DimensionError,
    NotInGeneralPosition,
    SampleTooSmall,
    UnsupportedDimension,
)
from tukey_fsbp.geometry import (
    Direction,
    add,
    cell_representatives,
    complement_basis,
    cross,
    det2,
    dot,
    is_general_position,
    neg,
    null_space,
    planar_hull,
    primitive,
    rot90,
    scale,
    sign,
    sign_canonical,
    solve,
    sub,
    to_fraction,
)

logger = logging.getLogger(__name__)  # pylint:disable=invalid-name


@total_ordering
class DepthValue():
    """A depth ``count / total``, kept as a pair of integers.

    Values with different totals compare by cross-multiplication; the string
    form is the unreduced ``'count/total'``.
    """

    __slots__ = ('count', 'total')

    def __init__(self, count, total):
        """Check ``0 <= count <= total`` and ``total >= 1``."""
        if total < 1 or not 0 <= count <= total:
            raise ValueError(
                'Invalid depth {}/{}.'.format(count, total)
            )
        self.count = count
        self.total = total

    @property
    def fraction(self):
        """Return the depth as a reduced :class:`fractions.Fraction`."""
        return Fraction(self.count, self.total)

    def __eq__(self, other):
        """Compare by cross-multiplication."""
        if not isinstance(other, DepthValue):
            return NotImplemented
        return self.count * other.total == other.count * self.total

    def __lt__(self, other):
        """Compare by cross-multiplication."""
        if not isinstance(other, DepthValue):
            return NotImplemented
        return self.count * other.total < other.count * self.total

    def __hash__(self):
        """Hash the reduced fraction."""
        return hash(self.fraction)

    def __str__(self):
        """Return ``'count/total'``."""
        return '{}/{}'.format(self.count, self.total)

    def __repr__(self):
        """Return a readable representation."""
        return 'DepthValue({}, {})'.format(self.count, self.total)


DepthWitness = namedtuple(
    'DepthWitness',
    'direction count boundary_indices below_indices open_cell',
)
"""A direction whose closed halfspace at ``x`` realizes ``count``.

``count`` is the number of sample points strictly below ``x`` along
``direction`` plus the number equal to ``x``; the latter are the
``boundary_indices``. ``open_cell`` is true when ``direction`` lies inside an
open cell of the residual arrangement, so every nearby direction has the same
count.
"""

OptimalFace = namedtuple('OptimalFace', 'direction generators')
"""A connected piece of the optimal direction set of a point.

``generators`` is ``None`` for a single direction. For an open cell it holds
the residuals flipped to the side of ``direction``; the cell is then every
direction having a positive inner product with each generator.
"""

DepthRegion = namedtuple('DepthRegion', 'level affine_dimension vertices')
"""The set of points of maximum depth.

``vertices`` are its extreme points: one point, the two ends of a segment in
lexicographic order, or a polygon listed counter-clockwise from its
lexicographically smallest vertex.
"""


def as_point(x, dimension):
    """Convert ``x`` to a tuple of fractions of the given dimension.

    :raises tukey_fsbp.exceptions.DimensionError: On a dimension mismatch.
    """
    point = tuple(to_fraction(c) for c in x)
    if len(point) != dimension:
        raise DimensionError(
            'Point of dimension {} used with a sample of dimension {}.'
            .format(len(point), dimension)
        )
    return point


def _residuals(point, X):  # pylint:disable=invalid-name
    """Split ``X`` into points equal to ``point`` and nonzero residuals.

    :returns: ``(equal_indices, [(index, X_i - point), ...])``.
    """
    equal, residuals = [], []
    for index, sample in enumerate(X):
        residual = sub(sample, point)
        if any(residual):
            residuals.append((index, residual))
        else:
            equal.append(index)
    return equal, residuals


def _vertex_directions(vectors, dimension):
    """Return normals to every independent ``(dimension - 1)``-subset."""
    found = {}
    for subset in combinations(vectors, dimension - 1):
        basis = null_space(subset, dimension)
        if len(basis) == 1:
            found.setdefault(sign_canonical(basis[0]), None)
    if not found:
        # The vectors span less than a hyperplane; any normal of that span
        # has every vector on its boundary.
        basis = null_space(vectors, dimension)
        found[sign_canonical(basis[0])] = None
    return sorted(found)


def _min_open_count(vectors, dimension):
    """Return the least number of ``vectors`` in an open halfspace ``u·v < 0``.

    The minimum runs over directions ``u`` orthogonal to none of the
    vectors. Vectors lying on a candidate boundary are resolved one dimension
    lower within that boundary.
    """
    if not vectors:
        return 0
    if dimension == 1:
        positive = sum(1 for v in vectors if v[0] > 0)
        return min(positive, len(vectors) - positive)
    best = None
    for normal in _vertex_directions(vectors, dimension):
        for candidate in (normal, neg(normal)):
            below, boundary = 0, []
            for vector in vectors:
                value = dot(candidate, vector)
                if value < 0:
                    below += 1
                elif value == 0:
                    boundary.append(vector)
            if best is not None and below >= best:
                continue
            if boundary:
                basis = complement_basis(Direction(candidate))
                below += _min_open_count(
                    [basis.coordinates(v) for v in boundary], dimension - 1
                )
            if best is None or below < best:
                best = below
    return best


def _check_exact_dimension(dimension):
    if dimension > constants.MAX_EXACT_DIMENSION:
        raise UnsupportedDimension(
            'Exact depth is computed for d <= {}, got d = {}.'
            .format(constants.MAX_EXACT_DIMENSION, dimension)
        )


def tukey_depth(x, X):  # pylint:disable=invalid-name
    """Return the exact halfspace depth of ``x`` in ``X``.

    This is the least number of sample points in a closed halfspace whose
    boundary passes through ``x``.

    :param x: A point of the same dimension as ``X``.
    :param X: A :class:`tukey_fsbp.geometry.PointSet`.
    :returns: A :class:`DepthValue` over ``X.n``.
    :raises tukey_fsbp.exceptions.UnsupportedDimension: If ``d >= 4``.
    """
    _check_exact_dimension(X.d)
    point = as_point(x, X.d)
    equal, residuals = _residuals(point, X)
    count = len(equal) + _min_open_count([r for _, r in residuals], X.d)
    return DepthValue(count, X.n)


def closed_count(direction, x, X):  # pylint:disable=invalid-name
    """Return ``#{i: u·X_i <= u·x}`` for the direction ``u``."""
    threshold = dot(direction, x)
    return sum(1 for sample in X if dot(direction, sample) <= threshold)


def _cell_witnesses(point, X):  # pylint:disable=invalid-name
    """Return a witness for every open cell of the residual arrangement."""
    equal, residuals = _residuals(point, X)
    vectors = [r for _, r in residuals]
    witnesses = []
    for sample in cell_representatives(vectors, X.d):
        below = tuple(
            index for index, residual in residuals
            if dot(sample.direction, residual) < 0
        )
        witnesses.append(DepthWitness(
            Direction(sample.direction),
            len(equal) + len(below),
            tuple(equal),
            below,
            True,
        ))
    return witnesses


def optimal_directions(x, X):  # pylint:disable=invalid-name
    """Return a witness for every open cell of optimal directions at ``x``.

    Cells are those of the arrangement of hyperplanes orthogonal to the
    residuals ``X_i - x``; one representative direction is returned per cell
    whose count equals the depth.
    """
    _check_exact_dimension(X.d)
    point = as_point(x, X.d)
    depth = tukey_depth(point, X)
    witnesses = [
        w for w in _cell_witnesses(point, X) if w.count == depth.count
    ]
    logger.debug('%s optimal cells at %s.', len(witnesses), point)
    return witnesses


def optimal_faces(x, X):  # pylint:disable=invalid-name
    """Return every piece of the optimal direction set of ``x`` for ``d <= 2``.

    Besides the open cells of :func:`optimal_directions`, the rays separating
    cells are included when their closed count equals the depth.

    :returns: A list of :class:`OptimalFace`.
    """
    if X.d > 2:
        raise UnsupportedDimension(
            'Optimal faces are built for d <= 2, got d = {}.'.format(X.d)
        )
    point = as_point(x, X.d)
    depth = tukey_depth(point, X).count
    faces = []
    if X.d == 1:
        for direction in ((Fraction(1),), (Fraction(-1),)):
            if closed_count(direction, point, X) == depth:
                faces.append(OptimalFace(direction, None))
        return faces
    _, residuals = _residuals(point, X)
    for witness in _cell_witnesses(point, X):
        if witness.count != depth:
            continue
        direction = witness.direction.coords
        generators = tuple(
            scale(r, sign(dot(direction, r))) for _, r in residuals
        )
        faces.append(OptimalFace(direction, generators))
    rays = {}
    for _, residual in residuals:
        normal = primitive(rot90(residual))
        for oriented in (normal, neg(normal)):
            rays.setdefault(oriented, None)
    for ray in sorted(rays):
        if closed_count(ray, point, X) == depth:
            faces.append(OptimalFace(ray, None))
    return faces


def in_planar_cone(vector, generators, inner):
    """Tell whether ``vector`` is a nonnegative combination of ``generators``.

    All generators must have a positive inner product with ``inner``.
    """
    if not any(vector):
        return True
    if not generators:
        return False
    clockwise = counter = generators[0]
    for generator in generators[1:]:
        if det2(clockwise, generator) < 0:
            clockwise = generator
        if det2(counter, generator) > 0:
            counter = generator
    return (
        det2(clockwise, vector) >= 0 and
        det2(vector, counter) >= 0 and
        dot(inner, vector) > 0
    )


def face_points_past(face, x, z):
    """Tell whether some direction ``u`` of ``face`` has ``u·x < u·z``."""
    if face.generators is None:
        return dot(face.direction, x) < dot(face.direction, z)
    return not in_planar_cone(sub(x, z), face.generators, face.direction)


# Depth regions in the plane.


def _critical_directions(points):
    """Return the directions whose halfplanes cut out every depth region.

    These are both orientations of each normal to a line through two
    distinct points, plus one direction inside each arc between them.
    """
    distinct = sorted(set(points))
    differences = [sub(b, a) for a, b in combinations(distinct, 2)]
    directions = {}
    for difference in differences:
        normal = primitive(rot90(difference))
        directions.setdefault(normal, None)
        directions.setdefault(neg(normal), None)
    for sample in cell_representatives(differences, 2):
        directions.setdefault(sample.direction, None)
    return sorted(directions)


def _level_halfplanes(points):
    """Pair each critical direction with the sorted projections of ``points``."""
    return [
        (direction, sorted(dot(direction, p) for p in points))
        for direction in _critical_directions(points)
    ]


def _dedupe_cycle(polygon):
    """Drop repeated consecutive vertices of a closed polygon."""
    result = []
    for vertex in polygon:
        if not result or result[-1] != vertex:
            result.append(vertex)
    while len(result) > 1 and result[0] == result[-1]:
        result.pop()
    return result


def _clip(polygon, normal, offset):
    """Keep the part of a convex polygon where ``normal·x >= offset``."""
    result = []
    for index, current in enumerate(polygon):
        following = polygon[(index + 1) % len(polygon)]
        here = dot(normal, current) - offset
        there = dot(normal, following) - offset
        if here >= 0:
            result.append(current)
        if (here > 0 > there) or (here < 0 < there):
            step = here / (here - there)
            result.append(add(current, scale(sub(following, current), step)))
    return _dedupe_cycle(result)


def _level_polygon(halfplanes, level, polygon):
    """Clip ``polygon`` to the points of depth at least ``level``."""
    for direction, values in halfplanes:
        polygon = _clip(polygon, direction, values[level - 1])
        if not polygon:
            return []
    return polygon


def deepest_level(points, start=None):
    """Return the highest depth level reached inside a convex polygon.

    :param points: The planar sample, repetitions allowed.
    :param start: A convex polygon to search in, by default the sample hull.
    :returns: ``(level, polygon)`` with ``polygon`` the part of ``start``
        at that level, or ``(0, [])`` if ``start`` misses the sample hull.
    """
    points = list(points)
    distinct = sorted(set(points))
    polygon = planar_hull(distinct) if start is None else list(start)
    if len(distinct) == 1:
        inside = distinct[0] in polygon
        return (len(points), [distinct[0]]) if inside else (0, [])
    halfplanes = _level_halfplanes(points)
    level = max(1, -(-len(points) // 3)) if start is None else 1
    region = _level_polygon(halfplanes, level, polygon)
    while not region and level > 1:
        level -= 1
        region = _level_polygon(halfplanes, level, polygon)
    if not region:
        return 0, []
    while level < len(points):
        following = _level_polygon(halfplanes, level + 1, polygon)
        if not following:
            break
        level, region = level + 1, following
    return level, region


def depth_region(X):  # pylint:disable=invalid-name
    """Return the maximum-depth region of a sample in one or two dimensions.

    Unlike :func:`max_depth_region` this accepts repeated and degenerate
    samples, such as contaminated ones.
    """
    if X.d == 1:
        values = sorted(p[0] for p in X)
        count = len(values)
        level = max(
            k for k in range(1, count + 1) if values[k - 1] <= values[count - k]
        )
        low, high = values[level - 1], values[count - level]
        vertices = ((low,),) if low == high else ((low,), (high,))
        return DepthRegion(
            DepthValue(level, count), len(vertices) - 1, vertices
        )
    if X.d != 2:
        raise UnsupportedDimension(
            'Depth regions are built for d <= 2, got d = {}.'.format(X.d)
        )
    level, polygon = deepest_level(X.points)
    vertices = tuple(planar_hull(polygon))
    return DepthRegion(
        DepthValue(level, X.n), min(len(vertices) - 1, 2), vertices
    )


def _check_region_input(X):  # pylint:disable=invalid-name
    if X.d > 2:
        raise UnsupportedDimension(
            'Depth regions are built for d <= 2, got d = {}.'.format(X.d)
        )
    if X.n < X.d + 1:
        raise SampleTooSmall(
            'A depth region needs at least {} points, got {}.'
            .format(X.d + 1, X.n)
        )
    if not is_general_position(X):
        raise NotInGeneralPosition(
            'The sample {!r} is not in general position.'.format(X)
        )


def max_depth_region(X):  # pylint:disable=invalid-name
    """Return the set ``M(X)`` of points of maximum depth.

    :raises tukey_fsbp.exceptions.UnsupportedDimension: If ``d >= 3``.
    :raises tukey_fsbp.exceptions.SampleTooSmall: If ``n <= d``.
    :raises tukey_fsbp.exceptions.NotInGeneralPosition: If the sample is
        degenerate.
    """
    _check_region_input(X)
    region = depth_region(X)
    logger.debug(
        'Maximum depth %s reached on a region of dimension %s.',
        region.level, region.affine_dimension,
    )
    return region


def region_centroid(region):
    """Return the centroid of a :class:`DepthRegion`."""
    vertices = region.vertices
    if len(vertices) == 1:
        return vertices[0]
    if len(vertices) == 2:
        return scale(add(*vertices), Fraction(1, 2))
    anchor = vertices[0]
    total = Fraction(0)
    weighted = tuple(Fraction(0) for _ in anchor)
    for second, third in zip(vertices[1:], vertices[2:]):
        weight = det2(sub(second, anchor), sub(third, anchor))
        total += weight
        weighted = add(weighted, scale(add(add(anchor, second), third), weight))
    return scale(weighted, 1 / (3 * total))


def tukey_median(X):  # pylint:disable=invalid-name
    """Return the Tukey median: the centroid of :func:`max_depth_region`."""
    return region_centroid(max_depth_region(X))


def candidate_vertices(X):  # pylint:disable=invalid-name
    """Return the sample points and the vertices of its hyperplane arrangement.

    The hyperplanes pass through ``d`` distinct sample points; a vertex is
    the common point of ``d`` of them with independent normals.
    """
    distinct = sorted(set(X.points))
    if X.d == 1:
        return distinct
    planes = {}
    for subset in combinations(distinct, X.d):
        basis = null_space([sub(p, subset[0]) for p in subset[1:]], X.d)
        if len(basis) == 1:
            normal = sign_canonical(basis[0])
            planes.setdefault((normal, dot(normal, subset[0])), None)
    planes = sorted(planes)
    points = set(distinct)
    for group in combinations(planes, X.d):
        solution = solve(
            [normal for normal, _ in group], [offset for _, offset in group]
        )
        if solution is not None:
            points.add(solution)
    logger.debug(
        '%s planes give %s candidate vertices.', len(planes), len(points)
    )
    return sorted(points)


def lambda_star(X):  # pylint:disable=invalid-name
    """Return the maximum depth over all points, for ``d <= 3``."""
    if X.d <= 2:
        return depth_region(X).level
    _check_exact_dimension(X.d)
    return max(tukey_depth(p, X) for p in candidate_vertices(X))


# Angular depth.


def _check_sphere_points(W):  # pylint:disable=invalid-name
    if W.d not in (2, 3):
        raise UnsupportedDimension(
            'Angular depth is computed for d in (2, 3), got d = {}.'
            .format(W.d)
        )
    if any(not any(w) for w in W):
        raise NotInGeneralPosition('Sphere points must be nonzero vectors.')


def angular_depth(direction, W):  # pylint:disable=invalid-name
    """Return the angular depth of the axis ``direction`` among ``W``.

    This is the least number of vectors ``W_i`` with ``v·W_i <= 0`` over the
    directions ``v`` orthogonal to the axis.
    """
    _check_sphere_points(W)
    basis = complement_basis(direction)
    reduced = [basis.coordinates(w) for w in W]
    nonzero = [r for r in reduced if any(r)]
    count = len(reduced) - len(nonzero) + _min_open_count(nonzero, W.d - 1)
    return DepthValue(count, W.n)


def _axis_candidates(W):  # pylint:disable=invalid-name
    """Return ``(direction, generic)`` pairs covering every angular-depth value.

    Angular depth only changes where the axis crosses a plane spanned by two
    vectors of ``W`` (a line through one vector in the plane). One direction
    per open cell of those crossings is generic; the crossing vertices are
    the rest.
    """
    if W.d == 2:
        arrangement = [rot90(w) for w in W]
        vertices = {sign_canonical(w): None for w in W}
    else:
        arrangement = {}
        for left, right in combinations(W.points, 2):
            normal = cross(left, right)
            if any(normal):
                arrangement.setdefault(sign_canonical(normal), None)
        arrangement = sorted(arrangement)
        vertices = {}
        for left, right in combinations(arrangement, 2):
            corner = cross(left, right)
            if any(corner):
                vertices.setdefault(sign_canonical(corner), None)
    candidates = [
        (sample.direction, True)
        for sample in cell_representatives(arrangement, W.d, antipodal=True)
    ]
    candidates.extend((vertex, False) for vertex in sorted(vertices))
    return candidates


def angular_median(W):  # pylint:disable=invalid-name
    """Return an axis of maximum angular depth among the vectors ``W``.

    Ties prefer generic axes, then the lexicographically smallest
    sign-canonical coordinates.
    """
    _check_sphere_points(W)
    if not is_general_position(W):
        raise NotInGeneralPosition(
            'The sphere points {!r} are degenerate.'.format(W)
        )
    best = None
    for coords, generic in _axis_candidates(W):
        direction = Direction(coords)
        value = angular_depth(direction, W)
        key = (-value.count, 0 if generic else 1, direction.key())
        if best is None or key < best[0]:
            best = (key, direction)
    logger.debug('Angular median %s found.', best[1])
    return best[1].canonical()
