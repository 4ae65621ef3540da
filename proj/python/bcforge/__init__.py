"""Exact Bott-Chern, Aeppli, Dolbeault and de Rham cohomology of finite bigraded models.

The report functions return parsed report-v1 dictionaries; pass ``format="text"``
or ``format="csv"`` to get the rendered string instead.
"""

import json

from . import _core
from ._core import (
    Model,
    ModelError,
    ModelValidationError,
    UnknownPreset,
    UnresolvableGenerator,
    preset_json,
    preset_names,
    run_acceptance,
)

__all__ = [
    "Model",
    "ModelError",
    "ModelValidationError",
    "UnknownPreset",
    "UnresolvableGenerator",
    "compare",
    "ddbar",
    "preset_json",
    "preset_names",
    "run_acceptance",
    "table",
    "validate",
]


def _decode(text, format):
    return json.loads(text) if format == "json" else text


def validate(model, format="json"):
    return _decode(_core.validate(model, format), format)


def table(model, theories=None, representatives=False, format="json"):
    return _decode(_core.table(model, theories, representatives, format), format)


def ddbar(model, format="json"):
    return _decode(_core.ddbar(model, format), format)


def compare(sub, ambient, theories=None, format="json"):
    return _decode(_core.compare(sub, ambient, theories, format), format)
