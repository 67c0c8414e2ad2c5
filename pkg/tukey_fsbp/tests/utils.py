# coding=utf-8
"""Oracles, fixtures and strategies shared by the tests.

The oracles share no code with the engine beyond :class:`PointSet`: depth is
recomputed by an angular sweep in the plane and by nested subset enumeration
in space, hull membership by Carathéodory simplices.
"""
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations

import numpy as np
from hypothesis import assume
from hypothesis import strategies as st

from tukey_fsbp.geometry import PointSet, is_general_position

TRIANGLE = PointSet(((0, 0), (1, 0), (0, 1)))
"""The unit corner triangle: its whole interior has depth ``1/3``."""

SQUARE = PointSet(((0, 0), (1, 0), (0, 1), (1, 1)))
"""The unit square: its centre alone has depth ``2/4``."""

PENTAGON = PointSet(((0, 10), (10, 3), (6, -8), (-6, -8), (-10, 3)))
"""A convex pentagon whose deepest region is the inner pentagon."""

LINE_4 = PointSet(((1,), (2,), (3,), (4,)))
"""Four points on a line: the deepest region is ``[2, 3]``."""

LINE_5 = PointSet(((1,), (2,), (3,), (4,), (5,)))
"""Five points on a line: the deepest point is ``3``."""

TETRAHEDRON = PointSet(((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
"""The unit corner simplex."""


def _vector(point, origin):
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(point, origin))


def _inner(left, right):
    return sum(a * b for a, b in zip(left, right))


def _cross(left, right):
    return (
        left[1] * right[2] - left[2] * right[1],
        left[2] * right[0] - left[0] * right[2],
        left[0] * right[1] - left[1] * right[0],
    )


def _half(vector):
    """Return 0 for angles in ``[0, pi)`` and 1 for ``[pi, 2 pi)``."""
    return 0 if vector[1] > 0 or (vector[1] == 0 and vector[0] > 0) else 1


def _by_angle(left, right):
    if _half(left) != _half(right):
        return _half(left) - _half(right)
    turn = left[0] * right[1] - left[1] * right[0]
    return -1 if turn > 0 else (1 if turn < 0 else 0)


def _planar_open_minimum(vectors):
    """Return the least ``#{w·v < 0}`` over directions ``w`` missing every ``v``."""
    if not vectors:
        return 0
    rays = []
    for x, y in vectors:  # pylint:disable=invalid-name
        rays.extend(((-y, x), (y, -x)))
    rays = sorted(rays, key=cmp_to_key(_by_angle))
    distinct = [rays[0]]
    for ray in rays[1:]:
        if _by_angle(distinct[-1], ray) != 0:
            distinct.append(ray)
    best = len(vectors)
    for index, start in enumerate(distinct):
        end = distinct[(index + 1) % len(distinct)]
        turn = start[0] * end[1] - start[1] * end[0]
        if turn > 0:
            middle = (start[0] + end[0], start[1] + end[1])
        else:
            middle = (-start[1], start[0])
        best = min(best, sum(1 for v in vectors if _inner(middle, v) < 0))
    return best


def sweep_depth(x, X):  # pylint:disable=invalid-name
    """Return the depth count of ``x`` in ``X`` for ``d <= 2`` by a sweep."""
    residuals = [_vector(p, x) for p in X]
    equal = sum(1 for r in residuals if not any(r))
    nonzero = [r for r in residuals if any(r)]
    if X.d == 1:
        above = sum(1 for r in nonzero if r[0] > 0)
        return equal + min(above, len(nonzero) - above)
    return equal + _planar_open_minimum(nonzero)


def _in_plane(vectors, normal):
    """Express vectors orthogonal to ``normal`` in a basis of that plane."""
    first = next(
        _cross(normal, axis)
        for axis in ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        if any(_cross(normal, axis))
    )
    second = _cross(normal, first)
    return [(_inner(first, v), _inner(second, v)) for v in vectors]


def subset_depth(x, X):  # pylint:disable=invalid-name
    """Return the depth count of ``x`` in a three-dimensional ``X``.

    Every plane spanned by two residuals is tried on both sides; residuals
    inside the plane are resolved by the planar sweep.
    """
    residuals = [_vector(p, x) for p in X]
    equal = sum(1 for r in residuals if not any(r))
    nonzero = [r for r in residuals if any(r)]
    normals = [
        _cross(a, b) for a, b in combinations(nonzero, 2) if any(_cross(a, b))
    ]
    if not normals:
        if not nonzero:
            return equal
        axis = nonzero[0]
        above = sum(1 for r in nonzero if _inner(axis, r) > 0)
        return equal + min(above, len(nonzero) - above)
    best = len(nonzero)
    for normal in normals:
        inside = [r for r in nonzero if _inner(normal, r) == 0]
        below = sum(1 for r in nonzero if _inner(normal, r) < 0)
        above = len(nonzero) - below - len(inside)
        rest = _planar_open_minimum(_in_plane(inside, normal))
        best = min(best, below + rest, above + rest)
    return equal + best


def oracle_depth(x, X):  # pylint:disable=invalid-name
    """Dispatch to :func:`sweep_depth` or :func:`subset_depth`."""
    if X.d <= 2:
        return sweep_depth(x, X)
    return subset_depth(x, X)


def _det(rows):
    """Return the determinant of a square matrix of fractions."""
    rows = [[Fraction(v) for v in r] for r in rows]
    size = len(rows)
    result = Fraction(1)
    for column in range(size):
        pivot = next((r for r in range(column, size) if rows[r][column]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != column:
            rows[column], rows[pivot] = rows[pivot], rows[column]
            result = -result
        result *= rows[column][column]
        for row in range(column + 1, size):
            factor = rows[row][column] / rows[column][column]
            rows[row] = [a - factor * b for a, b in zip(rows[row], rows[column])]
    return result


def in_simplex(point, corners):
    """Tell whether ``point`` lies in the closed full-dimensional simplex."""
    base = corners[0]
    edges = [_vector(c, base) for c in corners[1:]]
    volume = _det(edges)
    if volume == 0:
        return False
    offset = _vector(point, base)
    weights = []
    for index in range(len(edges)):
        replaced = list(edges)
        replaced[index] = offset
        weights.append(_det(replaced) / volume)
    return all(w >= 0 for w in weights) and sum(weights) <= 1


def brute_force_contains(X, point):  # pylint:disable=invalid-name
    """Tell whether ``point`` lies in the hull of a full-dimensional ``X``."""
    return any(
        in_simplex(point, corners)
        for corners in combinations(X.points, X.d + 1)
    )


def planar_candidates(X):  # pylint:disable=invalid-name
    """Return sample points and crossings of lines through sample pairs."""
    lines = []
    for first, second in combinations(X.points, 2):
        normal = (second[1] - first[1], first[0] - second[0])
        lines.append((normal, _inner(normal, first)))
    points = set(X.points)
    for (a, p), (b, q) in combinations(lines, 2):  # pylint:disable=invalid-name
        det = a[0] * b[1] - a[1] * b[0]
        if det:
            points.add((
                Fraction(p * b[1] - q * a[1]) / det,
                Fraction(a[0] * q - b[0] * p) / det,
            ))
    return sorted(points)


def oracle_lambda_star(X):  # pylint:disable=invalid-name
    """Return the maximum depth count of a planar sample by enumeration."""
    return max(sweep_depth(p, X) for p in planar_candidates(X))


def seeded_sample(seed, n, d, bound=20):  # pylint:disable=invalid-name
    """Return a seeded integer sample in general position."""
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < n:
        candidate = tuple(
            int(c) for c in rng.integers(-bound, bound, size=d, endpoint=True)
        )
        trial = PointSet(points + [candidate])
        if is_general_position(trial):
            points.append(candidate)
    return PointSet(points)


def seeded_point(seed, d, bound=20):  # pylint:disable=invalid-name
    """Return a seeded rational point."""
    rng = np.random.default_rng(seed)
    return tuple(
        Fraction(int(a), int(b))
        for a, b in zip(
            rng.integers(-bound * 3, bound * 3, size=d, endpoint=True),
            rng.integers(1, 3, size=d, endpoint=True),
        )
    )


def orthogonal_direction(normal):
    """Return a nonzero integer vector orthogonal to ``normal``."""
    coords = normal.coords
    index = next(i for i, c in enumerate(coords) if c)
    other = (index + 1) % len(coords)
    vector = [0] * len(coords)
    vector[other] = coords[index]
    vector[index] = -coords[other]
    return tuple(vector)


def apply_affine(matrix, shift, point):
    """Return ``matrix · point + shift``."""
    return tuple(
        sum(Fraction(a) * b for a, b in zip(row, point)) + s
        for row, s in zip(matrix, shift)
    )


@st.composite
def planar_samples(draw, min_n=3, max_n=7, bound=12):
    """Draw integer planar samples in general position."""
    points = draw(st.lists(
        st.tuples(
            st.integers(-bound, bound), st.integers(-bound, bound)
        ),
        min_size=min_n,
        max_size=max_n,
        unique=True,
    ))
    X = PointSet(points)  # pylint:disable=invalid-name
    assume(is_general_position(X))
    return X


@st.composite
def affine_maps(draw, dimension=2, bound=4):
    """Draw an invertible integer matrix and an integer shift."""
    matrix = draw(st.lists(
        st.lists(
            st.integers(-bound, bound), min_size=dimension, max_size=dimension
        ),
        min_size=dimension,
        max_size=dimension,
    ))
    assume(_det(matrix) != 0)
    shift = draw(st.lists(
        st.integers(-bound, bound), min_size=dimension, max_size=dimension
    ))
    return matrix, shift
