"""Localizations of linear quivers, loose Legendrian cells and front diagrams.

Morphism sets are written as in the command-line tool: ``"0->2,1->3"``.
"""

import json

from . import _core
from ._core import (
    CapacityError,
    CompositionError,
    DomainError,
    ModelViolation,
    ResolutionError,
    bump_chi,
    count_representations,
    front_svg,
    is_closed,
    localize_dot,
    selftest,
)

__all__ = [
    "CapacityError",
    "CompositionError",
    "DomainError",
    "ModelViolation",
    "ResolutionError",
    "bump_chi",
    "census",
    "closure",
    "count_representations",
    "front_svg",
    "is_closed",
    "localize",
    "localize_dot",
    "loose_report",
    "oracle",
    "selftest",
    "validate_report",
]


def closure(n, w):
    """2-out-of-6 closure of the puncture set ``w`` on A_{n+2}."""
    return json.loads(_core.closure_json(n, w))["closure"]


def localize(n, w, composition=False):
    return json.loads(_core.localize_json(n, w, composition))


def oracle(n, w, kind="reps", prime=2, dmax=2):
    return json.loads(_core.oracle_json(n, w, kind, prime, dmax))


def loose_report(n, w=None, flags=None):
    """Loose-cell report from a puncture set or from flag-file text."""
    if (w is None) == (flags is None):
        raise ValueError("pass exactly one of w and flags")
    if flags is not None:
        return json.loads(_core.loose_report_flags(n, flags))
    return json.loads(_core.loose_report_json(n, w))


def validate_report(report):
    """Re-check a report (dict or JSON text) and return it in canonical form."""
    text = report if isinstance(report, str) else json.dumps(report)
    return json.loads(_core.validate_report(text))


def census(tree, resolution=512, punctures=""):
    return json.loads(_core.census_json(tree, resolution, punctures))
