"""Certificates that self-maps have no iterative roots, finite root search,
and constructions of certified non-iterates near a given map."""

import json as _json

from . import _core
from ._core import (
    AdmissibilityError,
    BudgetExceeded,
    ConstructionFailure,
    Indeterminate,
    InputError,
    verify_root,
)

__all__ = [
    "AdmissibilityError",
    "BudgetExceeded",
    "ConstructionFailure",
    "Indeterminate",
    "InputError",
    "certify",
    "chord",
    "construct",
    "ex4_report",
    "find_root",
    "ray_square_equals",
    "run_cli",
    "verify_paper",
    "verify_root",
]


def _text(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def certify(map_json):
    """Certify a finite, interval or circle map given as a dict or JSON text."""
    return _json.loads(_core.certify_json(_text(map_json)))


def find_root(table, order=2, budget=None, all=False):
    if budget is None:
        return _json.loads(_core.find_root_json(list(table), order, all=all))
    return _json.loads(_core.find_root_json(list(table), order, budget, all))


def construct(map_json, epsilon):
    """Certified non-iterate within epsilon ("p/q") of a circle or interval map."""
    return _json.loads(_core.construct_json(_text(map_json), str(epsilon)))


def ray_square_equals(f_json, g_json):
    """True iff g o g equals f as ray maps."""
    return _core.ray_square_equals(_text(f_json), _text(g_json))


def chord(angular_distance):
    """(exact value as "p/q" or None, float approximation) of 2 sin(pi d)."""
    return _core.chord(str(angular_distance))


def verify_paper(corpus, seed=None):
    if seed is None:
        return _json.loads(_core.verify_paper_json(corpus))
    return _json.loads(_core.verify_paper_json(corpus, seed))


def ex4_report():
    return _json.loads(_core.ex4_json())


def run_cli(args):
    """Run the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
