"""Named reference data: matrices, ideals and expected results.

The JSON documents under ``data/`` hold the catalogue of known-answer
examples; this module loads them and builds the associated objects.
"""

import json
from functools import lru_cache
from importlib import resources

from .grading import validate_grading
from .monomials import minimalize


@lru_cache(maxsize=None)
def _load(name):
    ref = resources.files("agraded").joinpath("data", f"{name}.json")
    return json.loads(ref.read_text(encoding="utf-8"))


def matrix_names():
    return sorted(_load("matrices"))


@lru_cache(maxsize=None)
def named_matrix(name):
    rows = _load("matrices").get(name)
    if rows is None:
        raise KeyError(f"unknown matrix {name!r}")
    return validate_grading(rows)


def ideal_names():
    return sorted(_load("ideals"))


@lru_cache(maxsize=None)
def named_ideal(name):
    """(matrix, ideal) for a named ideal fixture."""
    rec = _load("ideals").get(name)
    if rec is None:
        raise KeyError(f"unknown ideal {name!r}")
    matrix = named_matrix(rec["matrix"])
    ideal = minimalize(tuple(map(tuple, rec["generators"])))
    return matrix, ideal


def expected(name):
    rec = _load("expected").get(name)
    if rec is None:
        raise KeyError(f"unknown expectation {name!r}")
    return rec


def expectation_names():
    return sorted(_load("expected"))


def as_pairs(records):
    """JSON [[u, v], ...] into canonical exponent pairs."""
    out = set()
    for u, v in records:
        u, v = tuple(u), tuple(v)
        out.add((u, v) if u > v else (v, u))
    return out
