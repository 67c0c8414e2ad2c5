# coding=utf-8
"""Render results as JSON-ready structures.

Rationals become ``{"exact": "p/q", "decimal": float}`` objects and depths
the unreduced string ``"k/N"``. Rendering is deterministic: the same results
always give byte-identical JSON.
"""
import json
from importlib import metadata

from jsonschema import validate
from packaging.version import Version

from tukey_fsbp import constants
from tukey_fsbp.datasets import format_rational
from tukey_fsbp.depth import region_centroid


def rational(value):
    """Render one rational."""
    return {'exact': format_rational(value), 'decimal': float(value)}


def point(coordinates):
    """Render a point."""
    return [rational(c) for c in coordinates]


def depth(value):
    """Render a :class:`tukey_fsbp.depth.DepthValue`."""
    return str(value)


def region(value):
    """Render a :class:`tukey_fsbp.depth.DepthRegion` with its centroid."""
    return {
        'level': depth(value.level),
        'affine_dimension': value.affine_dimension,
        'vertices': [point(v) for v in value.vertices],
        'centroid': point(region_centroid(value)),
    }


def certificate(value):
    """Render a :class:`tukey_fsbp.fsbp.FsbpCertificate`."""
    return {
        'n': value.n,
        'd': value.d,
        'k': value.lambda_star_min.count,
        'lambda_star_min': depth(value.lambda_star_min),
        'epsilon': rational(value.epsilon),
        'u0': point(value.u0.coords),
        'method': value.method.value,
        'prop1': {
            'lower': rational(value.prop1_lower),
            'upper': rational(value.prop1_upper),
            'singleton_case': value.singleton_case,
        },
    }


def escape_point(value):
    """Render a :class:`tukey_fsbp.attack.Lemma3Point`."""
    return {
        'point': point(value.point),
        'scenario': value.scenario.value,
        'verified': value.verified,
        'iterations': value.iterations,
        'normal_certificate': value.normal_certificate,
    }


def plan(value):
    """Render a :class:`tukey_fsbp.attack.ContaminationPlan`."""
    return {
        'u0': point(value.u0.coords),
        'x0': escape_point(value.x0_projected),
        'base': point(value.base),
        'y': point(value.y),
        'm': value.m,
        'magnitudes': [rational(m) for m in value.magnitudes],
    }


def outcome(value):
    """Render a :class:`tukey_fsbp.attack.AttackOutcome`."""
    return {
        'm': value.m,
        'magnitudes': [rational(m) for m in value.magnitudes],
        'depth_y': [depth(d) for d in value.depth_y],
        'sup_inside': list(value.sup_inside),
        'lambda_star': [depth(d) for d in value.lambda_star],
        'region_dimension': list(value.region_dimension),
        'y_is_deepest': value.y_is_deepest,
        'medians': [
            None if m is None else point(m) for m in value.medians
        ],
        'median_exact': value.median_exact,
        'outside': list(value.outside),
        'displacements': [rational(d) for d in value.displacements],
        'broke_down': value.broke_down,
    }


def trace(value):
    """Render a :class:`tukey_fsbp.attack.LowerBoundTrace`."""
    return {
        'm': value.m,
        'k': value.k,
        'z': None if value.z is None else point(value.z),
        'depth_z': None if value.depth_z is None else depth(value.depth_z),
        'required': value.required,
        'exterior_sup': value.exterior_sup,
        'median_inside': value.median_inside,
        'holds': value.holds,
    }


def tool_version():
    """Return the installed version of this tool, or ``None``.

    The version is normalized through :class:`packaging.version.Version`.
    Running from a source checkout that was never installed gives ``None``.
    """
    try:
        return str(Version(metadata.version(constants.DISTRIBUTION)))
    except metadata.PackageNotFoundError:
        return None


def dumps(document):
    """Serialize a report or dataset document deterministically."""
    return json.dumps(document, indent=2, sort_keys=True) + '\n'


def check(report):
    """Validate a report against :data:`tukey_fsbp.constants.REPORT_SCHEMA`.

    :raises jsonschema.ValidationError: If the report does not match.
    """
    validate(report, constants.REPORT_SCHEMA)
    return report
