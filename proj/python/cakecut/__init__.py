"""Exact cake cutting: division rules, fairness checks and monotonicity tests.

Rationals are exact strings such as "3/2". Problems, enlargements and
divisions may be given as JSON text or as plain dicts/lists.
"""

import json
from fractions import Fraction

from . import _cakecut
from ._cakecut import (
    FormatError,
    RulePreconditionError,
    corpus_names,
    fixture_names,
    rule_names,
    run_fixture,
    to_decimal,
)

__all__ = [
    "FormatError",
    "RulePreconditionError",
    "check",
    "check_pm",
    "check_rm",
    "corpus_names",
    "corpus_problem",
    "fixture_names",
    "fraction",
    "rule_names",
    "run_fixture",
    "run_rule",
    "to_decimal",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def fraction(value):
    """Exact string from the engine -> fractions.Fraction."""
    return Fraction(value)


def corpus_problem(name):
    return json.loads(_cakecut.corpus_problem(name))


def run_rule(rule, problem, order=(), cutter=None, utility_mode=None):
    return _cakecut.run_rule(rule, _text(problem), list(order), cutter, utility_mode)


def check(problem, division, utility_mode="connected"):
    return _cakecut.check(_text(problem), _text(division), utility_mode)


def check_rm(rule, problem, enlargement, order=(), cutter=None):
    return _cakecut.check_rm(rule, _text(problem), _text(enlargement), list(order), cutter)


def check_pm(rule, problem, leaving, order=(), cutter=None):
    return _cakecut.check_pm(rule, _text(problem), leaving, list(order), cutter)
