"""Exact fixed-point computations on Laumon spaces.

Rational functions come back in the same JSON form as the command-line
tool: {"num": terms, "den": terms}, each term [exponents, "coefficient"]
with exponents of t_1..t_n and then v.
"""

import json

from . import _core
from ._core import DegeneracyError, UsageError, kostant_count, suite_names

__all__ = [
    "DegeneracyError",
    "UsageError",
    "characters",
    "enumerate_points",
    "kostant_count",
    "run_suite",
    "suite_names",
    "toda_calibration",
    "whittaker",
]


def enumerate_points(n, degree):
    """Fixed points of multidegree `degree` as lists of rows."""
    return [p["rows"] for p in json.loads(_core.enumerate_json(n, list(degree)))]


def characters(n, rows):
    """Tangent character at a fixed point, with the Hom-oracle value."""
    return json.loads(_core.characters_json(n, rows))


def run_suite(name, n, box, seed=1, trials=5, convention="A", i=None):
    return json.loads(_core.suite_json(name, n, box, seed, trials, convention, i))


def whittaker(n, degree, convention="A"):
    return json.loads(_core.whittaker_json(n, list(degree), convention))


def toda_calibration(n, box):
    return json.loads(_core.toda_calibration_json(n, box))
