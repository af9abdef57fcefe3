"""Solver toolkit for x^2 + 5^a 11^b = y^n.

Report functions return the same dictionaries the ``lns`` command prints.
"""

import json

from . import _core
from ._core import (
    DomainError,
    Error,
    InputError,
    MathMismatch,
    config_sha256,
    hensel_digits,
    lucas_sequence,
    solutions,
)


def search(ymax, n, jobs=None):
    return _report(_core.search_json, ymax, list(n), jobs=jobs)


def descent3(case, verify_point=False):
    return json.loads(_core.descent3_json(case, verify_point))


def tm_reduce(round=None):
    return json.loads(_core.tm_reduce_json(round))


def sieve(case=None, bounds=None, jobs=None):
    return _report(_core.sieve_json, case, bounds, jobs=jobs)


def lucas(d, n):
    return json.loads(_core.lucas_json(d, n))


def n4():
    return json.loads(_core.n4_json())


def verify_theorem(n=(3, 4, 5, 6, 7), ymax=None, jobs=None):
    return _report(_core.verify_theorem_json, list(n), ymax, jobs=jobs)


def full(bounds=None, skip_reduction=False, jobs=None):
    return _report(_core.full_json, bounds, skip_reduction, jobs=jobs)


def _report(fn, *args, jobs=None):
    if jobs is None:
        return json.loads(fn(*args))
    return json.loads(fn(*args, jobs))


__all__ = [
    "DomainError", "Error", "InputError", "MathMismatch",
    "config_sha256", "descent3", "full", "hensel_digits", "lucas", "lucas_sequence",
    "n4", "search", "sieve", "solutions", "tm_reduce", "verify_theorem",
]
