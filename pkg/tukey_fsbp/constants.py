# coding=utf-8
"""Values usable by multiple modules."""
from types import MappingProxyType  # used to form an immutable dictionary


DISTRIBUTION = 'tukey-fsbp'
"""The name this tool is installed under."""

DEFAULT_SEED = 0
"""The seed used when no seed is given.

Every random choice made by this package flows from a single
:func:`numpy.random.default_rng` generator seeded with an explicit integer, so
identical inputs always produce identical certificates and reports.
"""

MAX_EXACT_DIMENSION = 3
"""The largest dimension for which depth is computed exactly."""

GENERIC_DIRECTION_ATTEMPTS = 1000
"""How many seeded candidates :func:`tukey_fsbp.geometry.pick_generic_direction`
draws before giving up."""

GENERIC_COORDINATE_BOUND = 97
"""Candidate directions have integer coordinates in ``[-bound, bound]``."""

LEMMA3_MAX_ITER = 64
"""The iteration cap of the witness-gap ascent towards an escape point."""

LEMMA3_GRID_LEVELS = 3
"""How many times the candidate grid of a depth region may be halved."""

DEFAULT_MAGNITUDE = 1
"""The initial offset of the contaminating point along its line."""

DEFAULT_MAX_M = 16
"""The largest number of contaminating copies tried by default."""

RANDOMIZED_SAMPLES = 32
"""How many seeded directions the randomized search evaluates for ``d >= 4``."""

SWEEP_N = 6
"""The sample size of the epsilon-versus-dimension plot sweep."""

SWEEP_DIMENSIONS = (2, 3)
"""The dimensions visited by the epsilon-versus-dimension plot sweep."""

VERIFY_MAGNITUDES = ('1', '2', '5', '10')
"""The magnitudes at which ``verify`` checks the depth lower bound."""

VERIFY_SUITE = (
    ('random_igp', 5, 2),
    ('random_igp', 7, 2),
    ('tetrahedron_d3', None, None),
)
"""The ``(kind, n, d)`` generators ``verify`` runs when given no dataset."""

PLOT_MAGNITUDE_STEPS = 4
"""How many doubling magnitudes the displacement plot series visits."""

GENERATOR_KINDS = ('random_igp', 'tetrahedron_d3', 'nested_simplices_d3')
"""The dataset generators understood by :func:`tukey_fsbp.datasets.gen_dataset`."""

GENERATOR_SHAPES = MappingProxyType({
    'tetrahedron_d3': (4, 3),
    'nested_simplices_d3': (6, 3),
})
"""The fixed ``(n, d)`` of the generators that build a particular sample."""

NESTED_SIMPLICES_XY = (
    (0, 0), (12, 0), (0, 12),
    (3, 3), (6, 3), (3, 6),
)
"""Two nested triangles in general position.

The ``nested_simplices_d3`` sample lifts them to three dimensions with seeded
heights, so that its projection along the third axis is this planar set.
"""

NESTED_HEIGHT_BOUND = 9
"""Heights of the ``nested_simplices_d3`` points are integers in ``[1, bound]``."""

RANDOM_COORDINATE_BOUND = 100
"""Coordinates of ``random_igp`` points are integers in ``[-bound, bound]``."""

COMMANDS = ('depth', 'median', 'fsbp', 'attack', 'verify', 'gen')
"""The sub-commands of the command line interface."""

EXIT_OK = 0
"""Exit code of a successful run."""

EXIT_VERIFICATION_FAILED = 1
"""Exit code of a run whose checks failed or whose computation raised."""

EXIT_USAGE = 2
"""Exit code of a usage or parse error."""

RATIONAL_SCHEMA = {
    'type': 'object',
    'properties': {
        'exact': {'type': 'string', 'pattern': r'^-?\d+/\d+$'},
        'decimal': {'type': 'number'},
    },
    'required': ['exact', 'decimal'],
}
"""A JSON schema for one rendered rational."""

DATASET_SCHEMA = {
    '$schema': 'http://json-schema.org/schema#',
    'title': 'Tukey FSBP dataset',
    'type': 'object',
    'properties': {
        'd': {'type': 'integer', 'minimum': 1},
        'points': {
            'type': 'array',
            'items': {
                'type': 'array',
                'items': {'type': ['string', 'integer', 'number']},
            },
        },
    },
    'required': ['points'],
}
"""A JSON schema for datasets.

Coordinates are strings such as ``"1/3"`` or ``"0.25"``, or JSON integers.
JSON floats pass the schema but are refused when parsed.
"""

REPORT_SCHEMA = {
    '$schema': 'http://json-schema.org/schema#',
    'title': 'Tukey FSBP report',
    'description': 'The JSON document emitted by every sub-command.',
    'type': 'object',
    'properties': {
        'command': {'type': 'string', 'enum': list(COMMANDS)},
        'config': {'type': 'object'},
        'dataset': {
            'type': ['object', 'null'],
            'properties': {
                'n': {'type': 'integer', 'minimum': 1},
                'd': {'type': 'integer', 'minimum': 1},
                'general_position': {'type': 'boolean'},
            },
            'required': ['n', 'd', 'general_position'],
        },
        'payload': {'type': 'object'},
        'version': {'type': ['string', 'null']},
        'timing': {
            'type': 'object',
            'properties': {'seconds': {'type': 'number'}},
        },
    },
    'required': ['command', 'config', 'dataset', 'payload'],
    'definitions': {'rational': RATIONAL_SCHEMA},
}
"""A JSON schema describing the report written by the command line interface.

Rationals are rendered as ``{"exact": "p/q", "decimal": float}`` objects; the
payload is command specific and validated in the test suite. ``dataset`` is
``null`` when ``verify`` runs its built-in suite. ``version`` is ``null``
when running from a source checkout that was never installed.
"""