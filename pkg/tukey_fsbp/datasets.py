# coding=utf-8
"""Read, write and generate samples.

Samples are read from CSV (one point per row) or from JSON documents matching
:data:`tukey_fsbp.constants.DATASET_SCHEMA`. Coordinates stay exact: strings
such as ``"1/3"`` or ``"0.25"`` become :class:`fractions.Fraction` and binary
floats are refused.
"""
import csv
import io
import json
import logging
import os
from itertools import combinations

import numpy as np
from jsonschema import ValidationError, validate

from tukey_fsbp import constants
from tukey_fsbp.exceptions import (
    DimensionMismatch,
    InvalidGenerator,
    ParseError,
)
from tukey_fsbp.geometry import (
    PointSet,
    affine_rank,
    is_general_position,
    to_fraction,
)

logger = logging.getLogger(__name__)  # pylint:disable=invalid-name


class _FloatLiteral(str):
    """A JSON number literal with a fraction part or an exponent."""


def format_rational(value):
    """Return ``value`` as ``'p/q'``, always with a denominator."""
    value = to_fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)


def _coordinate(value, row, column):
    """Convert one cell to a fraction or raise :class:`ParseError`."""
    if isinstance(value, _FloatLiteral):
        raise ParseError(
            'The JSON number {} is a binary float. Quote it, as in "{}", to '
            'read it exactly'.format(value, value),
            row,
            column,
        )
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(
            'Unsupported coordinate {!r}'.format(value), row, column
        )
    try:
        return to_fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ParseError(
            'The coordinate {!r} is not a rational number'.format(value),
            row,
            column,
        )


def _points(rows, dimension=None):
    """Convert raw rows to a :class:`PointSet`, checking their lengths."""
    points = []
    for row_index, row in enumerate(rows):
        if dimension is None:
            dimension = len(row)
        if len(row) != dimension:
            raise DimensionMismatch(
                'Expected {} coordinates, found {}'.format(dimension, len(row)),
                row_index,
                min(len(row), dimension),
            )
        points.append([
            _coordinate(value, row_index, column)
            for column, value in enumerate(row)
        ])
    if not points:
        raise ParseError('The dataset holds no points.')
    if dimension < 1:
        raise ParseError('The points of the dataset have no coordinates.')
    return PointSet(points)


def _parse_json(text):
    try:
        document = json.loads(text, parse_float=_FloatLiteral)
    except ValueError as err:
        raise ParseError('Invalid JSON: {}'.format(err))
    try:
        validate(document, constants.DATASET_SCHEMA)
    except ValidationError as err:
        raise ParseError('Invalid dataset: {}'.format(err.message))
    return _points(document['points'], document.get('d'))


def _parse_csv(text):
    rows = [
        [cell.strip() for cell in row]
        for row in csv.reader(io.StringIO(text))
        if row and not row[0].lstrip().startswith('#')
        and any(cell.strip() for cell in row)
    ]
    return _points(rows)


def parse_dataset(path_or_text):
    """Read a sample from a file path or from CSV or JSON text.

    :param path_or_text: The path of an existing file, or the text itself.
        Text starting with ``{`` is read as JSON, anything else as CSV.
    :returns: A :class:`tukey_fsbp.geometry.PointSet`.
    :raises tukey_fsbp.exceptions.ParseError: If a cell is not a rational,
        with the offending row and column, or if a single word names no
        file.
    :raises tukey_fsbp.exceptions.DimensionMismatch: If rows have different
        lengths.
    """
    text = path_or_text
    if '\n' not in path_or_text:
        if os.path.isfile(path_or_text):
            with open(path_or_text) as handle:
                text = handle.read()
        elif ',' not in text and not text.lstrip().startswith('{'):
            raise ParseError('No such file: {}'.format(path_or_text))
    if text.lstrip().startswith('{'):
        X = _parse_json(text)  # pylint:disable=invalid-name
    else:
        X = _parse_csv(text)  # pylint:disable=invalid-name
    logger.debug('Parsed %r.', X)
    return X


def parse_point(text, dimension):
    """Read a point written as comma-separated rationals, like ``1/2,3``.

    :raises tukey_fsbp.exceptions.DimensionMismatch: If the point does not
        have ``dimension`` coordinates.
    """
    cells = [cell.strip() for cell in text.split(',')]
    if len(cells) != dimension:
        raise DimensionMismatch(
            'The point {!r} has {} coordinates, the sample {}.'
            .format(text, len(cells), dimension),
            0,
            min(len(cells), dimension),
        )
    return tuple(_coordinate(cell, 0, i) for i, cell in enumerate(cells))


def dataset_document(X):  # pylint:disable=invalid-name
    """Return ``X`` as a JSON-ready dataset with exact ``'p/q'`` strings."""
    return {
        'd': X.d,
        'points': [[format_rational(c) for c in point] for point in X],
    }


def _keeps_general_position(points, candidate, dimension):
    """Tell whether adding ``candidate`` keeps ``points`` in general position.

    Only the subsets containing the candidate are checked.
    """
    extended = points + [candidate]
    if len(extended) <= dimension + 1:
        return affine_rank(extended) == len(extended) - 1
    return all(
        affine_rank(list(subset) + [candidate]) == dimension
        for subset in combinations(points, dimension)
    )


def _random_igp(n, d, rng):  # pylint:disable=invalid-name
    bound = constants.RANDOM_COORDINATE_BOUND
    points = []
    for _ in range(n * constants.GENERIC_DIRECTION_ATTEMPTS):
        candidate = tuple(
            int(c) for c in rng.integers(-bound, bound, size=d, endpoint=True)
        )
        if _keeps_general_position(points, candidate, d):
            points.append(candidate)
            if len(points) == n:
                return PointSet(points)
    raise InvalidGenerator(
        'Could not place {} points in general position in dimension {}.'
        .format(n, d)
    )


def _nested_simplices(rng):
    base = constants.NESTED_SIMPLICES_XY
    for _ in range(constants.GENERIC_DIRECTION_ATTEMPTS):
        heights = rng.integers(
            1, constants.NESTED_HEIGHT_BOUND, size=len(base), endpoint=True
        )
        X = PointSet(  # pylint:disable=invalid-name
            (x, y, int(z)) for (x, y), z in zip(base, heights)
        )
        if is_general_position(X):
            return X
    raise InvalidGenerator('Could not lift the nested triangles generically.')


def gen_dataset(kind, n=None, d=None, seed=constants.DEFAULT_SEED):  # pylint:disable=invalid-name
    """Generate a sample.

    ``random_igp`` draws seeded integer points, rejecting any that would break
    general position. ``tetrahedron_d3`` is the unit corner simplex, every
    generic projection of which has maximum depth 2. ``nested_simplices_d3``
    lifts two nested triangles with seeded heights, so that its projection
    along the third axis keeps the triangles nested.

    :param kind: One of :data:`tukey_fsbp.constants.GENERATOR_KINDS`.
    :param n: The number of points. Fixed samples accept ``None`` or their
        own size.
    :param d: The dimension, with the same convention.
    :param seed: Seeds :func:`numpy.random.default_rng`.
    :raises tukey_fsbp.exceptions.InvalidGenerator: On an unknown kind or
        parameters it cannot honour.
    """
    if kind not in constants.GENERATOR_KINDS:
        raise InvalidGenerator(
            'Unknown generator {!r}; expected one of {}.'
            .format(kind, ', '.join(constants.GENERATOR_KINDS))
        )
    rng = np.random.default_rng(seed)
    if kind == 'random_igp':
        if n is None or d is None or n < 1 or d < 1:
            raise InvalidGenerator(
                'random_igp needs n >= 1 and d >= 1, got n = {}, d = {}.'
                .format(n, d)
            )
        return _random_igp(n, d, rng)
    shape = constants.GENERATOR_SHAPES[kind]
    if (n is not None and n != shape[0]) or (d is not None and d != shape[1]):
        raise InvalidGenerator(
            '{} always has n = {} and d = {}, got n = {}, d = {}.'
            .format(kind, shape[0], shape[1], n, d)
        )
    if kind == 'tetrahedron_d3':
        return PointSet(((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
    return _nested_simplices(rng)
