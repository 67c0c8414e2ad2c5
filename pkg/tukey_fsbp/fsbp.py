# coding=utf-8
"""The finite sample breakdown point of the Tukey median.

Adding ``m`` points breaks the median down exactly when ``m`` reaches ``k``,
the least maximum depth of the sample projected along a generic direction.
The breakdown point is then ``k / (n + k)``. This module finds ``k`` together
with a direction attaining it, and the bounds it must lie between.
"""
import logging
from collections import namedtuple
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from tukey_fsbp import constants
from tukey_fsbp.depth import DepthValue, depth_region, lambda_star
from tukey_fsbp.exceptions import (
    ExhaustedCandidates,
    NotInGeneralPosition,
    SampleTooSmall,
    UnsupportedDimension,
)
from tukey_fsbp.geometry import (
    Direction,
    PointSet,
    cell_representatives,
    complement_basis,
    dot,
    hyperplane_normals,
    is_general_position,
    is_generic,
    pick_generic_direction,
    project,
)

logger = logging.getLogger(__name__)  # pylint:disable=invalid-name


class Method(Enum):
    """How the least projected maximum depth was obtained."""

    CLOSED_FORM_D2 = 'ClosedFormD2'
    ARRANGEMENT_D3 = 'ArrangementD3'
    RANDOMIZED_UPPER_BOUND = 'RandomizedUpperBound'


ProjectedMinimum = namedtuple(
    'ProjectedMinimum', 'u0 lambda_star_min method'
)
"""The least projected maximum depth and a generic direction attaining it."""

FsbpCertificate = namedtuple(
    'FsbpCertificate',
    'n d u0 lambda_star_min epsilon method prop1_lower prop1_upper '
    'singleton_case',
)
"""The breakdown point of a sample with everything needed to check it.

``epsilon`` is ``k / (n + k)`` with ``k = lambda_star_min.count``. When
``method`` is :attr:`Method.RANDOMIZED_UPPER_BOUND`, ``k`` and ``epsilon``
are upper estimates.
"""

SphereFragmentSample = namedtuple(
    'SphereFragmentSample', 'representative normals lambda_at_rep singleton'
)
"""A direction inside one fragment of the direction sphere.

``normals`` are the hyperplane normals whose great circles bound the sector
the representative was taken from, ``lambda_at_rep`` the maximum depth of
the sample projected along it, and ``singleton`` tells whether that maximum
is reached at a single point.
"""

Proposition1Bounds = namedtuple(
    'Proposition1Bounds', 'lower upper singleton_case'
)
"""Bounds on the breakdown point depending only on ``n``, ``d`` and shape."""


def _check_sample(X):  # pylint:disable=invalid-name
    if X.d < 2:
        raise UnsupportedDimension(
            'Breakdown points are computed for d >= 2, got d = {}.'
            .format(X.d)
        )
    if X.n < X.d + 1:
        raise SampleTooSmall(
            'Need at least {} points in dimension {}, got {}.'
            .format(X.d + 1, X.d, X.n)
        )
    if not is_general_position(X):
        raise NotInGeneralPosition(
            'The sample {!r} is not in general position.'.format(X)
        )


def projected_sample(X, direction):  # pylint:disable=invalid-name
    """Return ``X`` projected onto the complement of ``direction``."""
    return project(X, complement_basis(direction))


def lambda_star_projected(X, direction):  # pylint:disable=invalid-name
    """Return the maximum depth of ``X`` projected along ``direction``.

    :raises tukey_fsbp.exceptions.UnsupportedDimension: Unless
        ``2 <= d <= 4``.
    """
    if X.d < 2 or X.d - 1 > constants.MAX_EXACT_DIMENSION:
        raise UnsupportedDimension(
            'Projected maximum depth is exact for 2 <= d <= {}, got d = {}.'
            .format(constants.MAX_EXACT_DIMENSION + 1, X.d)
        )
    return lambda_star(projected_sample(X, direction))


@lru_cache(maxsize=64)
def survey_fragments(X):  # pylint:disable=invalid-name
    """Sample every fragment of the direction sphere once.

    The great circles orthogonal to the hyperplane normals of ``X`` cut the
    sphere into fragments on which the projected maximum depth is constant.
    A fragment and its antipode give mirror-image projections, so only one
    of each pair is returned.

    :param X: A sample in general position with ``d`` in ``(2, 3)``.
    :returns: A tuple of :class:`SphereFragmentSample`.
    """
    _check_sample(X)
    if X.d > 3:
        raise UnsupportedDimension(
            'Fragments are enumerated for d <= 3, got d = {}.'.format(X.d)
        )
    normals = hyperplane_normals(X)
    cells = cell_representatives(
        [normal.coords for normal in normals], X.d, antipodal=True
    )
    samples = []
    for cell in cells:
        direction = Direction(cell.direction)
        region = depth_region(projected_sample(X, direction))
        samples.append(SphereFragmentSample(
            direction,
            tuple(normals[index] for index in cell.bounding),
            region.level,
            region.affine_dimension == 0,
        ))
    logger.debug(
        '%s normals cut the sphere into %s fragment pairs.',
        len(normals), len(samples),
    )
    return tuple(samples)


def _generic_directions(X, seed, count):  # pylint:disable=invalid-name
    """Yield ``count`` seeded generic directions for ``X``."""
    normals = hyperplane_normals(X)
    rng = np.random.default_rng(seed)
    bound = constants.GENERIC_COORDINATE_BOUND
    found = 0
    for _ in range(count * constants.GENERIC_DIRECTION_ATTEMPTS):
        coords = [
            int(c) for c in rng.integers(-bound, bound, size=X.d, endpoint=True)
        ]
        if not any(coords):
            continue
        direction = Direction(coords)
        if is_generic(direction, normals):
            yield direction
            found += 1
            if found == count:
                return
    raise ExhaustedCandidates(
        'Only {} of {} generic directions found (seed {}).'
        .format(found, count, seed)
    )


def randomized_min_projected_lambda(X, seed=constants.DEFAULT_SEED,
                                    samples=constants.RANDOMIZED_SAMPLES):
    """Bound the least projected maximum depth from above by sampling.

    For each seeded generic direction ``u``, every pair of complement basis
    vectors gives a planar image of the projected sample. A planar image
    never has a lower maximum depth than the projected sample, so the least
    value seen bounds the true minimum from above.

    :returns: A :class:`ProjectedMinimum` flagged
        :attr:`Method.RANDOMIZED_UPPER_BOUND`.
    """
    _check_sample(X)
    if X.d < 3:
        raise UnsupportedDimension(
            'The randomized bound needs d >= 3, got d = {}.'.format(X.d)
        )
    best = None
    for direction in _generic_directions(X, seed, samples):
        basis = complement_basis(direction)
        for first, second in combinations(basis.columns, 2):
            image = PointSet((dot(first, p), dot(second, p)) for p in X)
            count = depth_region(image).level.count
            key = (count, direction.oriented_key())
            if best is None or key < best[0]:
                best = (key, direction)
    (count, _), direction = best
    logger.warning(
        'Only an upper bound %s/%s is available in dimension %s.',
        count, X.n, X.d,
    )
    return ProjectedMinimum(
        direction, DepthValue(count, X.n), Method.RANDOMIZED_UPPER_BOUND
    )


def min_projected_lambda(X, seed=constants.DEFAULT_SEED,
                         samples=constants.RANDOMIZED_SAMPLES):
    """Return the least maximum depth over generic projections of ``X``.

    In the plane every generic projection has ``ceil(n / 2)`` as maximum
    depth. In space every fragment of the direction sphere is visited. In
    higher dimensions only a sampled upper bound is returned.

    :raises tukey_fsbp.exceptions.NotInGeneralPosition: If ``X`` is
        degenerate.
    :raises tukey_fsbp.exceptions.SampleTooSmall: If ``n <= d``.
    """
    _check_sample(X)
    if X.d == 2:
        direction = pick_generic_direction(X, seed=seed)
        return ProjectedMinimum(
            direction, DepthValue(-(-X.n // 2), X.n), Method.CLOSED_FORM_D2
        )
    if X.d == 3:
        fragment = min(
            survey_fragments(X),
            key=lambda f: (
                f.lambda_at_rep.count, f.representative.oriented_key()
            ),
        )
        return ProjectedMinimum(
            fragment.representative,
            fragment.lambda_at_rep,
            Method.ARRANGEMENT_D3,
        )
    return randomized_min_projected_lambda(X, seed=seed, samples=samples)


def _singleton_case(X, seed):  # pylint:disable=invalid-name
    """Tell whether some generic projection has a single deepest point."""
    if X.d == 2:
        direction = pick_generic_direction(X, seed=seed)
        region = depth_region(projected_sample(X, direction))
        return region.affine_dimension == 0
    if X.d == 3:
        return any(f.singleton for f in survey_fragments(X))
    return None


def proposition1_bounds(X, seed=constants.DEFAULT_SEED):  # pylint:disable=invalid-name
    """Return the bounds the breakdown point of ``X`` must lie between.

    The lower bound is ``c / (n + c)`` with ``c = ceil(n / d)``. The upper
    bound is ``s / (n + s)`` with ``s = floor((n - d + 3) / 2)`` when some
    generic projection has a single deepest point and
    ``s = floor((n - d + 2) / 2)`` otherwise. For ``d >= 4`` that case is
    not decided, ``singleton_case`` is ``None`` and the larger bound is used.

    :returns: A :class:`Proposition1Bounds`.
    """
    _check_sample(X)
    n, d = X.n, X.d  # pylint:disable=invalid-name
    low = -(-n // d)
    singleton = _singleton_case(X, seed)
    if singleton is False:
        high = (n - d + 2) // 2
    else:
        high = (n - d + 3) // 2
    return Proposition1Bounds(
        Fraction(low, n + low), Fraction(high, n + high), singleton
    )


def fsbp_theorem1(X, seed=constants.DEFAULT_SEED,
                  samples=constants.RANDOMIZED_SAMPLES):  # pylint:disable=invalid-name
    """Return the breakdown point of the Tukey median on ``X``.

    :param X: A sample in general position with ``n >= d + 1``.
    :param seed: Seeds every random choice.
    :param samples: How many directions the ``d >= 4`` search draws.
    :returns: A :class:`FsbpCertificate`.
    """
    minimum = min_projected_lambda(X, seed=seed, samples=samples)
    bounds = proposition1_bounds(X, seed=seed)
    count = minimum.lambda_star_min.count
    certificate = FsbpCertificate(
        X.n,
        X.d,
        minimum.u0,
        minimum.lambda_star_min,
        Fraction(count, X.n + count),
        minimum.method,
        bounds.lower,
        bounds.upper,
        bounds.singleton_case,
    )
    logger.info(
        'Breakdown point %s (k = %s, %s) for n = %s, d = %s.',
        certificate.epsilon, count, minimum.method.value, X.n, X.d,
    )
    return certificate
