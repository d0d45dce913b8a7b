"""Exact equivariant orbit classes of plane curves and point configurations."""

import json
from fractions import Fraction

from . import _core

__all__ = ["compute", "table", "verify", "canonical_poly", "poly_terms"]


def compute(curve_id, kazarian_file=None, flip_sign=False):
    """Orbit class record for a curve identifier such as "A6" or "points:2,1,1"."""
    return json.loads(_core.compute_json(curve_id, kazarian_file or "", flip_sign))


def table(which, kazarian_file=None):
    """Rows of the "quartics", "cubics" or "sections" table."""
    return json.loads(_core.table_json(which, kazarian_file or ""))["rows"]


def verify(suite="all", kazarian_file=None):
    """Run a verification suite; returns the JSON report as a dict."""
    return json.loads(_core.verify_json(suite, kazarian_file or ""))


def canonical_poly(symbols, text):
    """Canonical JSON form of a polynomial; symbols is a list of (name, degree)."""
    return json.loads(_core.canonical_poly(list(symbols), text))


def poly_terms(poly_json):
    """Map exponent tuples to Fractions for a canonical polynomial."""
    return {tuple(t["exps"]): Fraction(t["coeff"]) for t in poly_json["terms"]}
