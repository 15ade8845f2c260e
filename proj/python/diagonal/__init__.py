"""Polynomial and integer solutions of diagonal quartic-type equations."""

import json as _json

from . import _core
from ._core import (
    Error,
    InvalidInput,
    Degenerate,
    genus_and_degree,
    pairing,
    five_squares,
    extremal_rays,
    mod3_obstruction,
    point_q,
    unirational_map,
)

__all__ = [
    "Error",
    "InvalidInput",
    "Degenerate",
    "families",
    "generate",
    "verify",
    "genus_and_degree",
    "pairing",
    "five_squares",
    "extremal_rays",
    "mod3_obstruction",
    "point_q",
    "unirational_map",
    "sextic_search",
    "surface_search",
    "selmer_check",
    "report",
]


def families():
    return list(_core.family_names())


def generate(family, a, b, m):
    """Solution record as a dict; a and b are ints or 'p/q' strings."""
    return _json.loads(_core.generate_json(family, str(a), str(b), int(m)))


def verify(record):
    """True when the record satisfies its equation identically."""
    if not isinstance(record, str):
        record = _json.dumps(record)
    return _core.verify_json(record)


def sextic_search(max_sum, threads=0):
    return [tuple(h) for h in _core.sextic_search(max_sum, threads)]


def surface_search(abcd, height, threads=0):
    return [tuple(h) for h in _core.surface_search(list(abcd), height, threads)]


def selmer_check(height, rhs=0):
    return [tuple(h) for h in _core.selmer_check(height, rhs)]


def report(fast=True):
    """List of dicts, one per acceptance and supplementary check."""
    return [_json.loads(line) for line in _core.report_json(fast).splitlines() if line.strip()]
