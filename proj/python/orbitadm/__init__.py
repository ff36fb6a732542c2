"""Spectral measure and admissibility of monomial representations.

Thin wrapper over the C++ core: JSON-returning entry points are decoded into
plain Python objects.
"""

import json

from ._core import (
    OrbitadmError,
    ParseError,
    PreconditionFailed,
    corpus,
    generic_rank,
    normalize,
    parse,
    run_cli,
    symbolic_rank,
    validate,
)
from . import _core

__all__ = [
    "OrbitadmError",
    "ParseError",
    "PreconditionFailed",
    "corpus",
    "generic_rank",
    "jacobian",
    "normalize",
    "parse",
    "run_cli",
    "stabilizer",
    "symbolic_rank",
    "validate",
    "verdict",
]


def verdict(text, trials=20, bound=10**6, seed=0, symbolic=False, assume_exponential=False):
    """Full report for a problem file, as a dict."""
    return json.loads(_core.verdict_json(text, trials, bound, seed, symbolic, assume_exponential))


def stabilizer(text, point):
    """Stabilizer report at chart coordinates ``point`` (strings or numbers)."""
    return json.loads(_core.stabilizer_json(text, [str(p) for p in point]))


def jacobian(text, point, step=1e-4, tol=1e-8):
    """Finite-difference Jacobian report at chart coordinates ``point``."""
    return json.loads(_core.jacobian_json(text, [str(p) for p in point], step, tol))
