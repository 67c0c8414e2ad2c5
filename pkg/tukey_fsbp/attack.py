# coding=utf-8
"""Contaminate a sample until its Tukey median breaks down, and check it.

The attack adds ``m`` copies of one point ``y`` on the line through the
lift of an escape point ``x0``, parallel to the direction ``u0`` whose
projection has the least maximum depth ``k``. With ``m = k`` copies ``y``
becomes a deepest point and drags the median out of the sample hull; with
fewer copies a point of the hull stays deeper than ``y``.
"""
import logging
from collections import namedtuple
from enum import Enum
from fractions import Fraction
from itertools import combinations

from tukey_fsbp import constants
from tukey_fsbp.depth import (
    DepthValue,
    as_point,
    candidate_vertices,
    closed_count,
    deepest_level,
    depth_region,
    face_points_past,
    in_planar_cone,
    optimal_faces,
    region_centroid,
    tukey_depth,
)
from tukey_fsbp.exceptions import (
    DimensionError,
    InexactCertificate,
    InvalidPlan,
    Lemma3Unverified,
    NoBreakdownWithinBudget,
    NotInGeneralPosition,
    UnsupportedDimension,
)
from tukey_fsbp.fsbp import Method, fsbp_theorem1
from tukey_fsbp.geometry import (
    HullPosition,
    add,
    complement_basis,
    convex_hull,
    det2,
    dot,
    hull_contains,
    is_general_position,
    lift,
    line_hull_intersection,
    neg,
    planar_hull,
    project,
    rot90,
    scale,
    squared_distance,
    sub,
    to_fraction,
)

logger = logging.getLogger(__name__)  # pylint:disable=invalid-name


class Scenario(Enum):
    """How an escape point was found."""

    UNIVARIATE = 'Univariate'
    DIM0 = 'Dim0'
    LOW_DIM = 'LowDim'
    FULL_DIM_ITERATIVE = 'FullDimIterative'
    SEARCH_VERIFIED = 'SearchVerified'


Lemma3Point = namedtuple(
    'Lemma3Point',
    'point scenario verified iterations region normal_certificate',
)
"""A deepest point that every other point can escape from.

For each other verified point ``x`` some optimal direction ``u`` of ``x``
has ``u·x < u·point``. ``verified`` records that this was checked on the
candidate grid of the region and on exterior points. ``normal_certificate``
is set for segment regions only: it tells whether tilting the supporting
line certified the same property.
"""

DominanceAnalysis = namedtuple(
    'DominanceAnalysis', 'z candidates a_indices b_indices b_tilde_indices'
)
"""The split of candidate points by whether they can escape from ``z``.

``a_indices`` index the candidates with an optimal direction pointing
strictly past ``z``; ``b_indices`` the others, which always include ``z``
itself. ``b_tilde_indices`` drops ``z`` from ``b_indices``.
"""

DominanceReport = namedtuple(
    'DominanceReport',
    'z1 b_tilde witnesses_ahead optimal_sets_nested dominated_sets_nested',
)
"""The structure of the dominated candidates of an interior deepest point.

``witnesses_ahead``: every optimal direction ``u`` of ``z1`` has
``u·z >= u·z1`` on the dominated candidates ``z``. ``optimal_sets_nested``:
the optimal directions of each dominated candidate are optimal at ``z1``.
``dominated_sets_nested``: the candidates dominated by each dominated
candidate are themselves dominated by ``z1``, and ``z1`` is not among them.
"""

ContaminationPlan = namedtuple(
    'ContaminationPlan',
    'u0 x0_projected base direction y magnitude magnitudes m certificate',
)
"""Where to put ``m`` copies of a contaminating point.

``y = base + magnitude · direction`` where ``base`` lifts the escape point
``x0_projected`` and ``direction`` is ``u0``. ``magnitudes`` are the two
offsets at which the attack is evaluated.
"""

AttackOutcome = namedtuple(
    'AttackOutcome',
    'm magnitudes depth_y sup_inside lambda_star region_dimension '
    'y_is_deepest medians median_exact outside displacements broke_down',
)
"""The effect of a contamination plan, one entry per magnitude.

``sup_inside`` is the highest contaminated depth count inside the sample
hull. ``medians`` are exact contaminated medians in the plane and ``None``
in space, where ``outside`` is certified instead. ``displacements`` are
squared distances to the clean median in the plane, and certified lower
bounds of the excess beyond the hull along ``u0`` in space.
"""

LowerBoundTrace = namedtuple(
    'LowerBoundTrace',
    'm k z depth_z required exterior_sup median_inside holds',
)
"""The depth of the hull point ``z`` that keeps ``m < k`` copies harmless."""


def _midpoint(first, second):
    return scale(add(first, second), Fraction(1, 2))


def region_candidates(region, level=0):
    """Return a finite grid of points of a depth region.

    Level 0 holds the vertices, the centroid and the edge midpoints; each
    further level halves the grid.
    """
    vertices = list(region.vertices)
    if len(vertices) == 1:
        return vertices
    if len(vertices) == 2:
        start, end = vertices
        steps = 2 ** (level + 1)
        return sorted({
            add(start, scale(sub(end, start), Fraction(i, steps)))
            for i in range(steps + 1)
        })
    centre = region_centroid(region)
    triangles = [
        (centre, vertex, vertices[(i + 1) % len(vertices)])
        for i, vertex in enumerate(vertices)
    ]
    points = set(vertices)
    points.add(centre)
    points.update(_midpoint(b, c) for _, b, c in triangles)
    for _ in range(level):
        refined = []
        for a, b, c in triangles:  # pylint:disable=invalid-name
            ab, bc, ca = _midpoint(a, b), _midpoint(b, c), _midpoint(c, a)
            points.update((ab, bc, ca))
            refined.extend(
                ((a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca))
            )
        triangles = refined
    return sorted(points)


def exterior_points(X):  # pylint:disable=invalid-name
    """Return points outside the hull of a sample in one or two dimensions.

    Each hull vertex is reflected through the mean of the hull vertices.
    """
    if X.d == 1:
        values = sorted(p[0] for p in X)
        return [(values[0] - 1,), (values[-1] + 1,)]
    hull = planar_hull(X.points)
    centre = scale(
        tuple(sum(c) for c in zip(*hull)), Fraction(1, len(hull))
    )
    return [add(vertex, sub(vertex, centre)) for vertex in hull]


def _escapes_from(faces, x, z):
    """Tell whether ``x`` can escape from ``z`` along an optimal direction."""
    if x == z:
        return False
    return any(face_points_past(face, x, z) for face in faces)


def _faces(points, X):  # pylint:disable=invalid-name
    return {point: optimal_faces(point, X) for point in points}


def dominance_sets(z, X, candidates, faces=None):  # pylint:disable=invalid-name
    """Split ``candidates`` by whether they can escape from ``z``.

    A candidate ``x`` can escape when some optimal direction ``u`` of ``x``
    has ``u·x < u·z``.

    :param z: The base point.
    :param X: A sample in one or two dimensions.
    :param candidates: Points of the maximum-depth region.
    :param faces: Optional precomputed optimal faces keyed by candidate.
    :returns: A :class:`DominanceAnalysis`.
    """
    z = as_point(z, X.d)
    candidates = tuple(as_point(c, X.d) for c in candidates)
    faces = {} if faces is None else faces
    escaping, dominated = [], []
    for index, candidate in enumerate(candidates):
        candidate_faces = faces.get(candidate)
        if candidate_faces is None:
            candidate_faces = optimal_faces(candidate, X)
        if _escapes_from(candidate_faces, candidate, z):
            escaping.append(index)
        else:
            dominated.append(index)
    return DominanceAnalysis(
        z,
        candidates,
        tuple(escaping),
        tuple(dominated),
        tuple(i for i in dominated if candidates[i] != z),
    )


def _verify(point, pool, faces):
    return all(
        _escapes_from(faces[x], x, point) for x in pool if x != point
    )


def _gap(direction, x, z):
    """Return the signed squared reach of ``x`` beyond ``z`` along a direction.

    Scaling the direction leaves the value unchanged.
    """
    reach = dot(direction, sub(x, z))
    return reach * abs(reach) / dot(direction, direction)


def _ascend(start, candidates, X, faces, max_iter):  # pylint:disable=invalid-name
    """Walk through dominated candidates, furthest along a witness first.

    :returns: ``(point, iterations)``.
    """
    current = start
    visited = {current}
    for iteration in range(max_iter):
        analysis = dominance_sets(current, X, candidates, faces)
        if not analysis.b_tilde_indices:
            return current, iteration
        directions = [face.direction for face in faces[current]]
        best = None
        for index in analysis.b_tilde_indices:
            candidate = analysis.candidates[index]
            reach = max(_gap(v, candidate, current) for v in directions)
            key = (-reach, candidate)
            if best is None or key < best:
                best = key
        following = best[1]
        if following in visited:
            return current, iteration
        visited.add(following)
        current = following
    return current, max_iter


def _tilt(normal, tilt, x, X):  # pylint:disable=invalid-name
    """Tilt ``normal`` by ``tilt`` so that no point changes side at ``x``."""
    ratios = []
    for sample in X:
        offset = dot(normal, sub(sample, x))
        if offset:
            ratios.append(abs(offset) / (abs(dot(tilt, sub(sample, x))) + 1))
    factor = min(ratios) / 2 if ratios else Fraction(1)
    return sub(normal, scale(tilt, factor))


def _tilted_normal_certificate(X, region, point, candidates):  # pylint:disable=invalid-name
    """Certify a segment region's escape point by tilting its support line.

    The segment lies on a line through two sample points. Tilting that
    line's normal along the segment, towards the side of a candidate, must
    keep the depth count of the candidate while putting ``point`` strictly
    above it.
    """
    start, end = region.vertices
    support = None
    for first, second in combinations(X.points, 2):
        along = sub(second, first)
        if (det2(along, sub(start, first)) == 0 and
                det2(along, sub(end, first)) == 0):
            support = (first, second)
            break
    if support is None:
        return False
    first, second = support
    normal = rot90(sub(second, first))
    tilts = (sub(first, second), sub(second, first))
    level = region.level.count
    for candidate in candidates:
        if candidate == point:
            continue
        certified = False
        for oriented in (normal, neg(normal)):
            for tilt in tilts:
                if dot(tilt, point) >= dot(tilt, candidate):
                    continue
                tilted = _tilt(oriented, tilt, candidate, X)
                if (closed_count(tilted, candidate, X) == level and
                        dot(tilted, candidate) < dot(tilted, point)):
                    certified = True
        if not certified:
            return False
    return True


def lemma3_point(X_projected, max_iter=constants.LEMMA3_MAX_ITER,  # pylint:disable=invalid-name
                 grid_levels=constants.LEMMA3_GRID_LEVELS):
    """Find a deepest point that every other point can escape from.

    For a single deepest point that point is returned. A deepest segment
    returns its midpoint. A deepest polygon starts at its centroid and walks
    through dominated grid points; the grid is refined until the result
    verifies, and as a last resort every grid point is tried.

    :param X_projected: A sample in general position in one or two
        dimensions.
    :returns: A :class:`Lemma3Point`.
    :raises tukey_fsbp.exceptions.Lemma3Unverified: If no grid point passes
        the check.
    """
    X = X_projected  # pylint:disable=invalid-name
    if X.d > 2:
        raise UnsupportedDimension(
            'Escape points are found for d <= 2, got d = {}.'.format(X.d)
        )
    if not is_general_position(X):
        raise NotInGeneralPosition(
            'The sample {!r} is not in general position.'.format(X)
        )
    region = depth_region(X)
    outside = exterior_points(X)
    centre = region_centroid(region)
    if region.affine_dimension == 0:
        scenario = Scenario.DIM0
    elif X.d == 1:
        scenario = Scenario.UNIVARIATE
    elif region.affine_dimension == 1:
        scenario = Scenario.LOW_DIM
    else:
        scenario = Scenario.FULL_DIM_ITERATIVE

    if scenario is not Scenario.FULL_DIM_ITERATIVE:
        candidates = region_candidates(region, grid_levels)
        faces = _faces(candidates + outside, X)
        verified = _verify(centre, candidates + outside, faces)
        certificate = None
        if scenario is Scenario.LOW_DIM:
            certificate = _tilted_normal_certificate(
                X, region, centre, candidates
            )
        if verified:
            return Lemma3Point(centre, scenario, True, 0, region, certificate)
        logger.warning('The centre %s did not verify.', centre)
    else:
        for level in range(grid_levels + 1):
            candidates = region_candidates(region, level)
            faces = _faces(candidates + outside, X)
            point, iterations = _ascend(
                centre, candidates, X, faces, max_iter
            )
            logger.debug(
                'Grid level %s: ascent stopped after %s steps.',
                level, iterations,
            )
            if _verify(point, candidates + outside, faces):
                return Lemma3Point(
                    point, scenario, True, iterations, region, None
                )
    for point in candidates:
        if _verify(point, candidates + outside, faces):
            logger.warning(
                'Escape point %s found by exhaustive search.', point
            )
            return Lemma3Point(
                point, Scenario.SEARCH_VERIFIED, True, 0, region, None
            )
    raise Lemma3Unverified(
        'No point of the {}-point grid of the deepest region verified.'
        .format(len(candidates))
    )


def dominance_checks(X_projected, z1=None, level=1):  # pylint:disable=invalid-name
    """Check how the dominated candidates of an interior point nest.

    :param X_projected: A planar sample in general position whose deepest
        region is a polygon.
    :param z1: An interior point of that polygon, by default its centroid.
    :param level: The grid level of the candidate set.
    :returns: A :class:`DominanceReport`.
    """
    X = X_projected  # pylint:disable=invalid-name
    if X.d != 2 or not is_general_position(X):
        raise NotInGeneralPosition(
            'Dominance checks need a planar sample in general position.'
        )
    region = depth_region(X)
    if region.affine_dimension != 2:
        raise DimensionError(
            'Dominance checks need a deepest polygon, got dimension {}.'
            .format(region.affine_dimension)
        )
    z1 = region_centroid(region) if z1 is None else as_point(z1, 2)
    candidates = sorted(set(region_candidates(region, level)) | {z1})
    faces = _faces(candidates, X)
    analysis = dominance_sets(z1, X, candidates, faces)
    dominated = [candidates[i] for i in analysis.b_tilde_indices]

    ahead = True
    for face in faces[z1]:
        for z in dominated:  # pylint:disable=invalid-name
            if face.generators is None:
                ahead = ahead and dot(face.direction, z) >= dot(face.direction, z1)
            else:
                ahead = ahead and in_planar_cone(
                    sub(z, z1), face.generators, face.direction
                )
    nested = all(
        closed_count(face.direction, z1, X) == region.level.count
        for z in dominated for face in faces[z]
    )
    inner = set(dominated)
    contained = True
    for z in dominated:  # pylint:disable=invalid-name
        own = dominance_sets(z, X, candidates, faces)
        if not {candidates[i] for i in own.b_indices} <= inner:
            contained = False
    return DominanceReport(z1, tuple(dominated), ahead, nested, contained)


def _escape_threshold(X, direction):  # pylint:disable=invalid-name
    """Return the offset along ``direction`` beyond which ``y`` escapes.

    If ``y`` lies beyond it, any convex set containing ``y`` and points of the
    sample hull has its centroid outside the hull.
    """
    values = [dot(direction, p) for p in X]
    low, high = min(values), max(values)
    return low + (X.d + 1) * (high - low)


def point_on_line(plan, magnitude):
    """Return ``base + magnitude · direction`` for a plan."""
    return add(plan.base, scale(plan.direction, magnitude))


def build_attack(X, magnitude=constants.DEFAULT_MAGNITUDE, m=0,  # pylint:disable=invalid-name
                 certificate=None, seed=constants.DEFAULT_SEED):
    """Plan ``m`` copies of a contaminating point for ``X``.

    The escape point of the projection along ``u0`` is lifted back and moved
    along ``u0``. Starting at ``magnitude`` the offset doubles until the point
    leaves the hull beyond the escape threshold, then doubles once more.

    :param X: A sample in general position in two or three dimensions.
    :param magnitude: The initial positive offset.
    :param m: The number of copies.
    :param certificate: A precomputed :class:`tukey_fsbp.fsbp.FsbpCertificate`.
    :param seed: Seeds the certificate when none is given.
    :returns: A :class:`ContaminationPlan`.
    :raises tukey_fsbp.exceptions.InexactCertificate: If only an upper bound
        of the breakdown count is known.
    """
    if X.d not in (2, 3):
        raise UnsupportedDimension(
            'Attacks are built for d in (2, 3), got d = {}.'.format(X.d)
        )
    if m < 0:
        raise InvalidPlan('The number of copies must be >= 0, got {}.'.format(m))
    magnitude = to_fraction(magnitude)
    if magnitude <= 0:
        raise InvalidPlan(
            'The magnitude must be positive, got {}.'.format(magnitude)
        )
    if certificate is None:
        certificate = fsbp_theorem1(X, seed=seed)
    if certificate.method is Method.RANDOMIZED_UPPER_BOUND:
        raise InexactCertificate(
            'An attack needs an exact breakdown certificate.'
        )
    u0 = certificate.u0.coords  # pylint:disable=invalid-name
    basis = complement_basis(certificate.u0)
    escape = lemma3_point(project(X, basis))
    base = lift(escape.point, basis)
    hull = convex_hull(X)
    threshold = _escape_threshold(X, u0)
    y = add(base, scale(u0, magnitude))  # pylint:disable=invalid-name
    while (hull_contains(hull, y) is not HullPosition.OUTSIDE or
           dot(u0, y) <= threshold):
        magnitude *= 2
        y = add(base, scale(u0, magnitude))  # pylint:disable=invalid-name
    magnitude *= 2
    y = add(base, scale(u0, magnitude))  # pylint:disable=invalid-name
    logger.info('Contaminating point %s at magnitude %s.', y, magnitude)
    return ContaminationPlan(
        certificate.u0, escape, base, u0, y, magnitude,
        (magnitude, 2 * magnitude), m, certificate,
    )


def _check_plan(X, plan):  # pylint:disable=invalid-name
    basis = complement_basis(plan.u0)
    if basis.coordinates(plan.y) != tuple(plan.x0_projected.point):
        raise InvalidPlan(
            'The point {} does not project onto the escape point {}.'
            .format(plan.y, plan.x0_projected.point)
        )
    if hull_contains(convex_hull(X), plan.y) is not HullPosition.OUTSIDE:
        raise InvalidPlan(
            'The point {} is not outside the sample hull.'.format(plan.y)
        )


def _sup_inside(X, Z, hull):  # pylint:disable=invalid-name
    """Return the highest depth in ``Z`` over the hull of ``X``."""
    if X.d == 2:
        start = [X[i] for i in hull.vertices]
        return deepest_level(Z.points, start=planar_hull(start))[0]
    return max(
        tukey_depth(point, Z).count
        for point in candidate_vertices(Z)
        if hull_contains(hull, point) is not HullPosition.OUTSIDE
    )


def run_attack(X, plan):  # pylint:disable=invalid-name
    """Contaminate ``X`` according to ``plan`` and judge the median.

    The attack broke the median down when, at both magnitudes, ``y`` is a
    deepest point, the contaminated median lies outside the sample hull, and
    its displacement grows with the magnitude.

    :returns: An :class:`AttackOutcome`.
    :raises tukey_fsbp.exceptions.InvalidPlan: If ``y`` does not project onto
        the escape point or lies inside the hull.
    """
    _check_plan(X, plan)
    hull = convex_hull(X)
    values = [dot(plan.direction, p) for p in X]
    low, high = min(values), max(values)
    if X.d == 2:
        reference = region_centroid(depth_region(X))
    depths, sups, levels, dimensions = [], [], [], []
    deepest, medians, outside, displacements = [], [], [], []
    for magnitude in plan.magnitudes:
        y = point_on_line(plan, magnitude)  # pylint:disable=invalid-name
        Z = X.extended([y] * plan.m)  # pylint:disable=invalid-name
        depth_y = tukey_depth(y, Z)
        sup = _sup_inside(X, Z, hull)
        depths.append(depth_y)
        sups.append(sup)
        levels.append(DepthValue(max(sup, plan.m), Z.n))
        deepest.append(plan.m > 0 and depth_y.count >= sup)
        if X.d == 2:
            region = depth_region(Z)
            median = region_centroid(region)
            dimensions.append(region.affine_dimension)
            medians.append(median)
            outside.append(
                hull_contains(hull, median) is HullPosition.OUTSIDE
            )
            displacements.append(squared_distance(median, reference))
        else:
            dimensions.append(None)
            medians.append(None)
            if deepest[-1]:
                # Any convex set holding y and hull points has its centroid
                # at least this far along u0.
                reach = low + (dot(plan.direction, y) - low) / (X.d + 1)
                outside.append(reach > high)
                displacements.append(reach - high)
            else:
                outside.append(False)
                displacements.append(Fraction(0))
    broke_down = (
        all(deepest) and all(outside) and
        all(a < b for a, b in zip(displacements, displacements[1:]))
    )
    logger.info(
        'Attack with m = %s: y deepest %s, broke down %s.',
        plan.m, deepest, broke_down,
    )
    return AttackOutcome(
        plan.m, plan.magnitudes, tuple(depths), tuple(sups), tuple(levels),
        tuple(dimensions), all(deepest), tuple(medians), X.d == 2,
        tuple(outside), tuple(displacements), broke_down,
    )


def lower_bound_trace(X, m, plan):  # pylint:disable=invalid-name
    """Check that ``m`` copies of ``y`` leave a hull point deep enough.

    ``z`` is the point where the attack line leaves the hull towards ``y``.
    Its contaminated depth count must reach ``min(k, m + 1)``; for ``m < k``
    it must also exceed ``m``, the highest depth outside the hull, so the
    contaminated median stays in the hull.

    :returns: A :class:`LowerBoundTrace`.
    """
    hull = convex_hull(X)
    k = plan.certificate.lambda_star_min.count  # pylint:disable=invalid-name
    required = min(k, m + 1)
    crossings = line_hull_intersection(hull, plan.base, plan.direction)
    if not crossings:
        return LowerBoundTrace(m, k, None, None, required, m, None, False)
    z = crossings[-1]  # pylint:disable=invalid-name
    Z = X.extended([plan.y] * m)  # pylint:disable=invalid-name
    depth_z = tukey_depth(z, Z)
    holds = depth_z.count >= required
    median_inside = None
    if m <= k - 1:
        if X.d == 2:
            median = region_centroid(depth_region(Z))
            median_inside = (
                hull_contains(hull, median) is not HullPosition.OUTSIDE
            )
        else:
            median_inside = depth_z.count > m
        holds = holds and depth_z.count > m and median_inside
    return LowerBoundTrace(
        m, k, z, depth_z, required, m, median_inside, holds
    )


def verify_lower_bound(X, m, plan):  # pylint:disable=invalid-name
    """Tell whether :func:`lower_bound_trace` holds."""
    return lower_bound_trace(X, m, plan).holds


def empirical_fsbp(X, max_m=constants.DEFAULT_MAX_M,  # pylint:disable=invalid-name
                   magnitude=constants.DEFAULT_MAGNITUDE,
                   seed=constants.DEFAULT_SEED, certificate=None):
    """Return the least number of copies that breaks the median down.

    :raises tukey_fsbp.exceptions.NoBreakdownWithinBudget: If no ``m`` up to
        ``max_m`` breaks it.
    """
    if certificate is None:
        certificate = fsbp_theorem1(X, seed=seed)
    plan = build_attack(X, magnitude=magnitude, certificate=certificate)
    for m in range(1, max_m + 1):  # pylint:disable=invalid-name
        outcome = run_attack(X, plan._replace(m=m))
        if outcome.broke_down:
            logger.info('The median broke down with %s copies.', m)
            return m
    raise NoBreakdownWithinBudget(
        'No breakdown with up to {} copies; the certificate predicts {}.'
        .format(max_m, certificate.lambda_star_min.count)
    )
