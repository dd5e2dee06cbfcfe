"""Train track splitting sequences and layered veering triangulations.

Reports come back as dicts decoded from the same JSON the command-line tool
writes; exact values are strings next to their decimal renderings.
"""

import json

from ._veer import (
    SCHEMA,
    ParseError,
    VeerError,
    conjugacy_key,
    seed_torus,
    validate_track,
)
from . import _veer

__all__ = [
    "SCHEMA",
    "ParseError",
    "VeerError",
    "conjugacy_key",
    "conjugate",
    "run_track",
    "run_word",
    "seed_torus",
    "tetrahedra_bound",
    "validate_track",
]


def run_word(word, max_steps=10000, precision_bits=64, timing=False, triangulation=False):
    """Run report for the punctured-torus mapping class of an R/L word."""
    return json.loads(_veer.run_word_json(word, max_steps, precision_bits, timing, triangulation))


def run_track(text, max_steps=10000, precision_bits=64, timing=False, triangulation=False):
    """Run report for a measured track given as track-file text."""
    return json.loads(_veer.run_track_json(text, max_steps, precision_bits, timing, triangulation))


def conjugate(a, b):
    """Whether two run reports describe conjugate monodromies."""
    return a["conjugacy"]["key"] == b["conjugacy"]["key"]


def tetrahedra_bound():
    """floor(((2 + sqrt 3)^18 - 1) / 2) as an int."""
    return int(_veer.tetrahedra_bound_two_plus_sqrt3_squared())
