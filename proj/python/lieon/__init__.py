"""Exact Lie algebra structures, compatibility and disassembling.

Algebras and schemes are passed as dicts in the JSON formats of the lieon command line tool.
"""

import json

from . import _core
from ._core import NotLieError, ParseError

__all__ = [
    "NotLieError",
    "ParseError",
    "is_lie",
    "classify",
    "compatible",
    "schouten",
    "lie_rank",
    "modular_vector",
    "modular_disassemble",
    "disassemble_solvable",
    "verify_scheme",
    "census",
    "build_algebra",
    "classical",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def is_lie(algebra):
    return _core.is_lie(_text(algebra))


def classify(algebra):
    return json.loads(_core.classify(_text(algebra)))


def compatible(a, b):
    return _core.compatible(_text(a), _text(b))


def schouten(a, b):
    """Schouten bracket of the linear Poisson bivectors, as text."""
    return _core.schouten(_text(a), _text(b))


def lie_rank(algebra):
    return _core.lie_rank(_text(algebra))


def modular_vector(algebra):
    return json.loads(_core.modular_vector(_text(algebra)))


def modular_disassemble(algebra):
    return json.loads(_core.modular_disassemble(_text(algebra)))


def disassemble_solvable(algebra):
    return json.loads(_core.disassemble_solvable(_text(algebra)))


def verify_scheme(scheme):
    return json.loads(_core.verify_scheme(_text(scheme)))


def census(scheme):
    return json.loads(_core.census(_text(scheme)))


def build_algebra(family, n, params=()):
    return json.loads(_core.build_algebra(family, n, [str(p) for p in params]))


def classical(family, n, params=()):
    return json.loads(_core.classical(family, n, [str(p) for p in params]))
