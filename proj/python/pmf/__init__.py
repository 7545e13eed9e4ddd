"""Python bindings for the level 3 Picard modular forms toolkit."""

import json as _json

from ._core import (
    cusp_counts,
    eis_norm,
    graded_dims,
    group_orders,
    hilbert_fit,
    orbit_sizes,
    theta_coefficients,
    theta_identity,
)
from ._core import run as _run


def run(what, **kwargs):
    """Run one pipeline (group, heegner, qseries, relations, ideal, verify-all) and return the report."""
    return _json.loads(_run(what, **kwargs))


__all__ = [
    "cusp_counts",
    "eis_norm",
    "graded_dims",
    "group_orders",
    "hilbert_fit",
    "orbit_sizes",
    "run",
    "theta_coefficients",
    "theta_identity",
]
