"""Artin group diagrams: spherical analysis, surface model checks and
trivial-center certificates.

Diagrams are given in the text file format::

    generators: a b c
    a b 3
    b c inf
"""

import json

from . import _core
from ._core import (
    DiagramError,
    NotSmallType,
    SchemaError,
    UnsupportedLabels,
    VerificationFailure,
    is_spherical,
    normalize,
)

__all__ = [
    "DiagramError",
    "NotSmallType",
    "SchemaError",
    "UnsupportedLabels",
    "VerificationFailure",
    "analyze",
    "certify",
    "coxeter_order",
    "is_spherical",
    "normalize",
    "replay",
    "surface_suite",
]


def analyze(text, assume_kpi1=False):
    """Components, factors, families, spherical dimension, K(pi,1) class and
    center rank."""
    return json.loads(_core.analyze(text, assume_kpi1))


def certify(text, assume_kpi1=False):
    """A proof trace, or a refusal object with a "refusal" key."""
    return json.loads(_core.certify(text, assume_kpi1))


def replay(trace):
    """Re-checks every premise of a trace given as a dict."""
    return _core.replay(json.dumps(trace))


def surface_suite(text):
    return json.loads(_core.surface_suite(text))


def coxeter_order(text, cap=20000):
    """{"order": n} or {"exceeded_cap": cap}."""
    return json.loads(_core.coxeter_order(text, cap))
